#include "hopfhc/module_coalgebra.hpp"

#include "hopfhc/errors.hpp"

namespace hopfhc {

void x_add(XVector& v, XId i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

std::shared_ptr<const ModuleCoalgebra> ModuleCoalgebra::self(
    std::shared_ptr<const HopfPreset> B) {
    auto X = std::shared_ptr<ModuleCoalgebra>(new ModuleCoalgebra());
    X->B_ = std::move(B);
    X->self_ = true;
    return X;
}

std::shared_ptr<const ModuleCoalgebra> ModuleCoalgebra::quotient(
    std::shared_ptr<const HopfPreset> B, const SubspaceBasis& ideal_span) {
    auto X = std::shared_ptr<ModuleCoalgebra>(new ModuleCoalgebra());
    X->B_ = B;
    X->self_ = false;

    QuotientProjection qp = quotient_projection(B->dim(), ideal_span.vectors());
    X->proj_ = qp.projection;
    const auto& reps = qp.representatives;
    const std::size_t qdim = reps.size();

    auto project_word = [&](WordId w) {
        XVector out;
        SparseVector col = qp.projection.column(w);
        for (const auto& [i, c] : col.entries) x_add(out, static_cast<XId>(i), c);
        return out;
    };

    for (std::size_t i = 0; i < qdim; ++i)
        X->names_.push_back("[" + B->word_name(static_cast<WordId>(reps[i])) + "]");
    for (std::size_t i = 0; i < qdim; ++i) {
        WordId rep = static_cast<WordId>(reps[i]);
        if (rep == B->unit_word()) X->unit_ = static_cast<XId>(i);
        // induced coproduct: (pi (x) pi) Delta(rep)
        XXElement d;
        for (const auto& [k, c] : B->coproduct_word(rep).terms) {
            XVector l = project_word(k[0]);
            XVector r = project_word(k[1]);
            for (const auto& [li, lc] : l)
                for (const auto& [ri, rc] : r) {
                    auto key = std::make_pair(li, ri);
                    auto it = d.find(key);
                    Scalar add = c * lc * rc;
                    if (add.is_zero()) continue;
                    if (it == d.end())
                        d.emplace(key, add);
                    else {
                        it->second += add;
                        if (it->second.is_zero()) d.erase(it);
                    }
                }
        }
        X->comult_.push_back(std::move(d));
        X->counit_.push_back(B->counit_word(rep));
    }
    X->action_.resize(B->dim());
    for (WordId b = 0; b < B->dim(); ++b) {
        X->action_[b].resize(qdim);
        for (std::size_t i = 0; i < qdim; ++i) {
            AlgebraElement prod =
                B->multiply_words(b, static_cast<WordId>(reps[i]));
            XVector out;
            for (const auto& [w, c] : prod.terms)
                for (const auto& [xi, xc] : project_word(w)) x_add(out, xi, c * xc);
            X->action_[b][i] = std::move(out);
        }
    }
    return X;
}

std::size_t ModuleCoalgebra::dim() const { return self_ ? B_->dim() : names_.size(); }

XId ModuleCoalgebra::unit() const { return self_ ? B_->unit_word() : unit_; }

std::string ModuleCoalgebra::x_name(XId x) const {
    return self_ ? B_->word_name(x) : names_[x];
}

XXElement ModuleCoalgebra::comult(XId x) const {
    if (!self_) return comult_[x];
    XXElement d;
    for (const auto& [k, c] : B_->coproduct_word(x).terms) d.emplace(std::make_pair(k[0], k[1]), c);
    return d;
}

Scalar ModuleCoalgebra::counit(XId x) const {
    return self_ ? B_->counit_word(x) : counit_[x];
}

XVector ModuleCoalgebra::act_word(WordId b, XId x) const {
    if (!self_) return action_[b][x];
    XVector out;
    for (const auto& [w, c] : B_->multiply_words(b, x).terms) x_add(out, w, c);
    return out;
}

XVector ModuleCoalgebra::act(const AlgebraElement& b, const XVector& x) const {
    XVector out;
    for (const auto& [bw, bc] : b.terms)
        for (const auto& [xi, xc] : x)
            for (const auto& [ri, rc] : act_word(bw, xi)) x_add(out, ri, bc * xc * rc);
    return out;
}

XVector ModuleCoalgebra::project_element(const AlgebraElement& v) const {
    XVector out;
    if (self_) {
        for (const auto& [w, c] : v.terms) x_add(out, w, c);
        return out;
    }
    for (const auto& [w, c] : v.terms) {
        SparseVector col = proj_.column(w);
        for (const auto& [i, pc] : col.entries) x_add(out, static_cast<XId>(i), c * pc);
    }
    return out;
}

} // namespace hopfhc
