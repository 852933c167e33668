#include "hopfhc/coefficients.hpp"

#include "hopfhc/errors.hpp"
#include "hopfhc/sparse.hpp"

#include <sstream>

namespace hopfhc {

void y_add(YVector& v, int tag, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(tag);
    if (it == v.end()) {
        v.emplace(tag, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

void by_add(BYElement& v, WordId w, int tag, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, tag);
    auto it = v.find(key);
    if (it == v.end()) {
        v.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

YVector CoefficientModule::act_word(WordId b, int tag) const {
    return action_[b][static_cast<size_t>(tag)];
}

YVector CoefficientModule::act(const AlgebraElement& b, const YVector& y) const {
    YVector r;
    for (const auto& [w, cw] : b.terms)
        for (const auto& [tag, cy] : y)
            for (const auto& [t2, cv] : action_[w][static_cast<size_t>(tag)])
                y_add(r, t2, cw * cy * cv);
    return r;
}

// ---------------------------------------------------------------------------
// construction helpers

namespace {

std::vector<YVector> epsilon_action_column(const HopfPreset& B, WordId w, std::size_t ydim) {
    std::vector<YVector> col(ydim);
    Scalar e = B.counit_word(w);
    if (!e.is_zero())
        for (std::size_t t = 0; t < ydim; ++t) y_add(col[t], static_cast<int>(t), e);
    return col;
}

} // namespace

std::shared_ptr<const CoefficientModule> CoefficientModule::trivial(
    std::shared_ptr<const HopfPreset> B) {
    auto Y = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    Y->B_ = B;
    Y->name_ = "trivial";
    Y->y_names_ = {"1_Y"};
    Y->action_.resize(B->dim());
    for (WordId w = 0; w < B->dim(); ++w) Y->action_[w] = epsilon_action_column(*B, w, 1);
    BYElement c;
    by_add(c, B->unit_word(), 0, Scalar(1));
    Y->coaction_ = {c};
    Y->verify_axioms();
    return Y;
}

std::shared_ptr<const CoefficientModule> CoefficientModule::modular_pair(
    std::shared_ptr<const HopfPreset> B, const std::string& delta, const std::string& sigma) {
    auto sig = B->find_word(sigma);
    if (!sig) throw std::invalid_argument("modular_pair: unknown sigma word " + sigma);
    // grouplike: Delta(sigma) = sigma (x) sigma and epsilon(sigma) = 1
    TensorElement d = B->coproduct_word(*sig);
    TensorElement expect(B.get(), 2);
    expect.add({*sig, *sig}, Scalar(1));
    if (!(d == expect) || !(B->counit_word(*sig) == Scalar(1)))
        throw std::invalid_argument("modular_pair: sigma is not grouplike: " + sigma);

    // the character
    std::vector<Scalar> chi(B->dim());
    if (delta == "counit") {
        for (WordId w = 0; w < B->dim(); ++w) chi[w] = B->counit_word(w);
    } else if (delta == "sign" &&
               (B->kind() == PresetKind::GroupC2 || B->kind() == PresetKind::GroupS3)) {
        for (WordId w = 0; w < B->dim(); ++w) {
            // parity of the permutation / group element
            AlgebraElement sq = B->multiply_words(w, w);
            // for C2: nontrivial element has sign -1; for S3 read off the name
            std::string n = B->word_name(w);
            bool odd = (B->kind() == PresetKind::GroupC2 && w == 1) ||
                       (B->kind() == PresetKind::GroupS3 &&
                        (n == "(01)" || n == "(02)" || n == "(12)"));
            (void)sq;
            chi[w] = odd ? Scalar(-1) : Scalar(1);
        }
    } else {
        throw std::invalid_argument("modular_pair: unsupported delta " + delta);
    }
    // verify delta is a character: delta(ab) = delta(a) delta(b), delta(1) = 1
    for (WordId a = 0; a < B->dim(); ++a)
        for (WordId b = 0; b < B->dim(); ++b) {
            AlgebraElement ab = B->multiply_words(a, b);
            Scalar v;
            for (const auto& [w, c] : ab.terms) v += chi[w] * c;
            if (!(v == chi[a] * chi[b]))
                throw std::invalid_argument("modular_pair: delta is not a character");
        }

    auto Y = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    Y->B_ = B;
    Y->name_ = "modular_pair(" + delta + "," + sigma + ")";
    Y->y_names_ = {"1_Y"};
    Y->action_.resize(B->dim());
    for (WordId w = 0; w < B->dim(); ++w) {
        Y->action_[w].resize(1);
        y_add(Y->action_[w][0], 0, chi[w]);
    }
    BYElement c;
    by_add(c, *sig, 0, Scalar(1));
    Y->coaction_ = {c};
    Y->verify_axioms();
    return Y;
}

std::shared_ptr<const CoefficientModule> CoefficientModule::coalgebra_self(
    std::shared_ptr<const HopfPreset> B) {
    auto Y = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    Y->B_ = B;
    Y->name_ = "coalgebra_self";
    if (B->kind() == PresetKind::UqSl2) {
        // words of total generator degree <= cap; closed under coaction legs
        for (WordId w = 0; w < B->dim(); ++w)
            if (B->word_degree(w) <= B->degree_cap()) Y->y_words_.push_back(w);
    } else {
        for (WordId w = 0; w < B->dim(); ++w) Y->y_words_.push_back(w);
    }
    std::map<WordId, int> tag_of;
    for (std::size_t t = 0; t < Y->y_words_.size(); ++t) {
        Y->y_names_.push_back(B->word_name(Y->y_words_[t]));
        tag_of[Y->y_words_[t]] = static_cast<int>(t);
    }
    Y->action_.resize(B->dim());
    for (WordId w = 0; w < B->dim(); ++w)
        Y->action_[w] = epsilon_action_column(*B, w, Y->y_words_.size());
    Y->coaction_.resize(Y->y_words_.size());
    for (std::size_t t = 0; t < Y->y_words_.size(); ++t) {
        TensorElement d = B->coproduct_word(Y->y_words_[t]);
        for (const auto& [k, c] : d.terms) {
            auto it = tag_of.find(k[1]);
            if (it == tag_of.end())
                throw std::invalid_argument(
                    "coalgebra_self: coaction leaves the truncated basis at word " +
                    B->word_name(Y->y_words_[t]));
            by_add(Y->coaction_[t], k[0], it->second, c);
        }
    }
    Y->verify_axioms();
    return Y;
}

std::shared_ptr<const CoefficientModule> CoefficientModule::trivial_coaction(
    std::shared_ptr<const HopfPreset> B, const std::vector<std::string>& ideal_generators) {
    // span of the left ideal generated by the named words
    const Index dim = B->dim();
    SubspaceBasis span(dim);
    std::vector<SparseVector> frontier;
    for (const auto& name : ideal_generators) {
        auto w = B->find_word(name);
        if (!w) throw std::invalid_argument("trivial_coaction: unknown word " + name);
        SparseVector v(dim);
        v.set(*w, Scalar(1));
        if (span.insert(v)) frontier.push_back(v);
    }
    while (!frontier.empty()) {
        std::vector<SparseVector> next;
        for (const auto& v : frontier) {
            for (WordId b = 0; b < dim; ++b) {
                SparseVector image(dim);
                bool overflow = false;
                for (const auto& [w, c] : v.entries) {
                    try {
                        AlgebraElement prod =
                            B->multiply_words(b, static_cast<WordId>(w));
                        for (const auto& [pw, pc] : prod.terms) image.add(pw, c * pc);
                    } catch (const DegreeOverflow&) {
                        overflow = true;
                        break;
                    }
                }
                if (overflow) continue;
                if (span.insert(image)) next.push_back(image);
            }
        }
        frontier = std::move(next);
    }

    auto Y = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    Y->B_ = B;
    Y->name_ = "trivial_coaction";
    const std::size_t ydim = span.size();
    if (ydim == 0) throw std::invalid_argument("trivial_coaction: ideal is zero");
    for (std::size_t t = 0; t < ydim; ++t) {
        std::ostringstream os;
        os << "j" << t;
        Y->y_names_.push_back(os.str());
    }
    // action by left multiplication expressed in the ideal basis
    Y->action_.resize(B->dim());
    for (WordId b = 0; b < B->dim(); ++b) {
        Y->action_[b].resize(ydim);
        for (std::size_t t = 0; t < ydim; ++t) {
            SparseVector image(dim);
            for (const auto& [w, c] : span.vectors()[t].entries) {
                AlgebraElement prod = B->multiply_words(b, static_cast<WordId>(w));
                for (const auto& [pw, pc] : prod.terms) image.add(pw, c * pc);
            }
            auto coords = membership(image, span);
            if (!coords)
                throw std::invalid_argument("trivial_coaction: ideal closure incomplete");
            for (std::size_t k = 0; k < coords->size(); ++k)
                y_add(Y->action_[b][t], static_cast<int>(k), (*coords)[k]);
        }
    }
    Y->coaction_.resize(ydim);
    for (std::size_t t = 0; t < ydim; ++t)
        by_add(Y->coaction_[t], B->unit_word(), static_cast<int>(t), Scalar(1));
    Y->verify_axioms();
    return Y;
}

std::shared_ptr<const CoefficientModule> CoefficientModule::by_name(
    std::shared_ptr<const HopfPreset> B, const std::string& name, const std::string& delta,
    const std::string& sigma, const std::vector<std::string>& ideal_generators) {
    if (name == "trivial") return trivial(B);
    if (name == "modular_pair") return modular_pair(B, delta.empty() ? "counit" : delta, sigma);
    if (name == "coalgebra_self") return coalgebra_self(B);
    if (name == "trivial_coaction") return trivial_coaction(B, ideal_generators);
    throw std::invalid_argument("unknown coefficient preset: " + name);
}

// ---------------------------------------------------------------------------
// axiom verification

void CoefficientModule::verify_axioms() const {
    const std::size_t ydim = y_names_.size();
    // action of the unit is the identity
    for (std::size_t t = 0; t < ydim; ++t) {
        YVector e;
        y_add(e, static_cast<int>(t), Scalar(1));
        if (!(action_[B_->unit_word()][t] == e))
            throw std::invalid_argument(name_ + ": unit does not act as identity");
    }
    // multiplicativity on basis pairs (skip cap overflow on truncated presets)
    for (WordId a = 0; a < B_->dim(); ++a)
        for (WordId b = 0; b < B_->dim(); ++b) {
            AlgebraElement ab;
            try {
                ab = B_->multiply_words(a, b);
            } catch (const DegreeOverflow&) {
                continue;
            }
            for (std::size_t t = 0; t < ydim; ++t) {
                YVector via_product;
                for (const auto& [w, c] : ab.terms)
                    for (const auto& [t2, v] : action_[w][t])
                        y_add(via_product, t2, c * v);
                YVector composed;
                for (const auto& [t1, v1] : action_[b][t])
                    for (const auto& [t2, v2] : action_[a][static_cast<size_t>(t1)])
                        y_add(composed, t2, v1 * v2);
                if (!(via_product == composed))
                    throw std::invalid_argument(name_ + ": action is not multiplicative");
            }
        }
    // comodule axioms: (eps (x) id) rho = id and (Delta (x) id) rho = (id (x) rho) rho
    for (std::size_t t = 0; t < ydim; ++t) {
        YVector counital;
        for (const auto& [key, c] : coaction_[t])
            y_add(counital, key.second, c * B_->counit_word(key.first));
        YVector e;
        y_add(e, static_cast<int>(t), Scalar(1));
        if (!(counital == e))
            throw std::invalid_argument(name_ + ": coaction is not counital");

        std::map<std::tuple<WordId, WordId, int>, Scalar> lhs, rhs;
        for (const auto& [key, c] : coaction_[t]) {
            TensorElement d = B_->coproduct_word(key.first);
            for (const auto& [k, dc] : d.terms) {
                auto kk = std::make_tuple(k[0], k[1], key.second);
                auto it = lhs.find(kk);
                Scalar add = c * dc;
                if (it == lhs.end())
                    lhs.emplace(kk, add);
                else {
                    it->second += add;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
            for (const auto& [key2, c2] : coaction_[static_cast<size_t>(key.second)]) {
                auto kk = std::make_tuple(key.first, key2.first, key2.second);
                auto it = rhs.find(kk);
                Scalar add = c * c2;
                if (it == rhs.end())
                    rhs.emplace(kk, add);
                else {
                    it->second += add;
                    if (it->second.is_zero()) rhs.erase(it);
                }
            }
        }
        if (!(lhs == rhs))
            throw std::invalid_argument(name_ + ": coaction is not coassociative");
    }
}

// ---------------------------------------------------------------------------
// predicates

bool is_m_stable(const CoefficientModule& Y, int m) {
    const HopfPreset* B = Y.algebra();
    if (m != 0 && !B->is_hopf()) throw NotHopf("is_m_stable: preset has no antipode");
    for (std::size_t t = 0; t < Y.dim(); ++t) {
        YVector out;
        for (const auto& [key, c] : Y.coact(static_cast<int>(t))) {
            AlgebraElement sm = AlgebraElement::term(B, key.first);
            for (int i = 0; i < (m < 0 ? -m : m); ++i) sm = antipode(sm, m < 0 ? -1 : 1);
            YVector base;
            y_add(base, key.second, c);
            for (const auto& [t2, v] : Y.act(sm, base)) y_add(out, t2, v);
        }
        YVector e;
        y_add(e, static_cast<int>(t), Scalar(1));
        if (!(out == e)) return false;
    }
    return true;
}

AydResult is_aYD(const CoefficientModule& Y) {
    const HopfPreset* B = Y.algebra();
    if (!B->is_hopf()) throw NotHopf("is_aYD: preset has no antipode");
    AydResult res;
    for (WordId h = 0; h < B->dim(); ++h) {
        for (std::size_t t = 0; t < Y.dim(); ++t) {
            try {
                // lhs = rho(h . y)
                BYElement lhs;
                for (const auto& [t1, c1] : Y.act_word(h, static_cast<int>(t)))
                    for (const auto& [key, c2] : Y.coact(t1))
                        by_add(lhs, key.first, key.second, c1 * c2);
                // rhs = h_(1) y_(-1) S^-1(h_(3)) (x) h_(2) y_(0)
                BYElement rhs;
                TensorElement d2 = iterated_coproduct(AlgebraElement::term(B, h), 2);
                for (const auto& [legs, c] : d2.terms) {
                    AlgebraElement sinv = B->antipode_word(legs[2], -1);
                    for (const auto& [key, cy] : Y.coact(static_cast<int>(t))) {
                        AlgebraElement left = multiply(
                            multiply(AlgebraElement::term(B, legs[0]),
                                     AlgebraElement::term(B, key.first)),
                            sinv);
                        YVector mid = Y.act_word(legs[1], key.second);
                        for (const auto& [lw, lc] : left.terms)
                            for (const auto& [t2, mv] : mid)
                                by_add(rhs, lw, t2, c * cy * lc * mv);
                    }
                }
                ++res.checked;
                if (!(lhs == rhs)) {
                    if (res.ok) {
                        std::ostringstream os;
                        os << "h = " << B->word_name(h) << ", y = "
                           << Y.y_name(static_cast<int>(t));
                        res.witness = os.str();
                    }
                    res.ok = false;
                }
            } catch (const DegreeOverflow&) {
                ++res.skipped;
            }
        }
    }
    return res;
}

} // namespace hopfhc
