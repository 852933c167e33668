#include "hopfhc/presets.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hopfhc {

// ---------------------------------------------------------------------------
// element arithmetic

AlgebraElement AlgebraElement::term(const HopfPreset* p, WordId w, Scalar c) {
    AlgebraElement e(p);
    e.add(w, c);
    return e;
}

void AlgebraElement::add(WordId w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

void AlgebraElement::add(const AlgebraElement& o, const Scalar& c) {
    for (const auto& [w, v] : o.terms) add(w, v * c);
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(preset);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms) r.terms.emplace(w, v * c);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r.add(o);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r.add(o, Scalar(-1));
    return r;
}

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << (preset ? preset->word_name(w) : std::to_string(w));
    }
    return os.str();
}

void TensorElement::add(const std::vector<WordId>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

void TensorElement::add(const TensorElement& o, const Scalar& c) {
    for (const auto& [w, v] : o.terms) add(w, v * c);
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r(preset, slots);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms) r.terms.emplace(w, v * c);
    return r;
}

std::string TensorElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*(";
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (s) os << "(x)";
            os << (preset ? preset->word_name(w[s]) : std::to_string(w[s]));
        }
        os << ")";
    }
    return os.str();
}

AlgebraElement unit_element(const HopfPreset* p) {
    return AlgebraElement::term(p, p->unit_word());
}

// ---------------------------------------------------------------------------
// preset construction

namespace {

std::array<int, 3> perm_compose(const std::array<int, 3>& s, const std::array<int, 3>& t) {
    // (s . t)(i) = s(t(i))
    return {s[static_cast<size_t>(t[0])], s[static_cast<size_t>(t[1])],
            s[static_cast<size_t>(t[2])]};
}

std::array<int, 3> perm_inverse(const std::array<int, 3>& s) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[static_cast<size_t>(s[static_cast<size_t>(i)])] = i;
    return r;
}

} // namespace

std::shared_ptr<const HopfPreset> HopfPreset::trivial_k() {
    auto p = std::shared_ptr<HopfPreset>(new HopfPreset());
    p->kind_ = PresetKind::TrivialK;
    p->name_ = "k";
    p->cocommutative_ = true;
    p->dim_ = 1;
    return p;
}

std::shared_ptr<const HopfPreset> HopfPreset::group_c2() {
    auto p = std::shared_ptr<HopfPreset>(new HopfPreset());
    p->kind_ = PresetKind::GroupC2;
    p->name_ = "kC2";
    p->cocommutative_ = true;
    p->dim_ = 2;
    return p;
}

std::shared_ptr<const HopfPreset> HopfPreset::group_s3() {
    auto p = std::shared_ptr<HopfPreset>(new HopfPreset());
    p->kind_ = PresetKind::GroupS3;
    p->name_ = "kS3";
    p->cocommutative_ = true;
    p->dim_ = 6;
    std::array<int, 3> id{0, 1, 2};
    std::vector<std::array<int, 3>> all;
    std::array<int, 3> v = id;
    do {
        all.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    std::sort(all.begin(), all.end());
    p->perms_ = all;
    for (WordId i = 0; i < all.size(); ++i) p->perm_index_[all[i]] = i;
    p->unit_ = p->perm_index_[id];
    return p;
}

std::shared_ptr<const HopfPreset> HopfPreset::sweedler4() {
    auto p = std::shared_ptr<HopfPreset>(new HopfPreset());
    p->kind_ = PresetKind::Sweedler4;
    p->name_ = "sweedler4";
    p->cocommutative_ = false;
    p->dim_ = 4;
    return p;
}

std::shared_ptr<const HopfPreset> HopfPreset::uq_sl2(const Scalar& q, int degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("uq_sl2: degree_cap must be >= 1");
    if (q.is_zero() || q == Scalar(1) || q == Scalar(-1))
        throw std::invalid_argument("uq_sl2: q must avoid {0, 1, -1}");
    auto p = std::shared_ptr<HopfPreset>(new HopfPreset());
    p->kind_ = PresetKind::UqSl2;
    p->name_ = "uq_sl2";
    p->cocommutative_ = false;
    p->cap_ = degree_cap;
    p->q_ = q;
    const std::size_t k = static_cast<std::size_t>(degree_cap);
    p->dim_ = (k + 1) * (2 * k + 1) * (k + 1);
    p->unit_ = p->uq_encode(0, 0, 0);
    return p;
}

std::shared_ptr<const HopfPreset> HopfPreset::by_name(const std::string& name, const Scalar& q,
                                                      int degree_cap) {
    if (name == "k") return trivial_k();
    if (name == "kC2") return group_c2();
    if (name == "kS3") return group_s3();
    if (name == "sweedler4") return sweedler4();
    if (name == "uq_sl2") return uq_sl2(q, degree_cap);
    throw std::invalid_argument("unknown algebra preset: " + name);
}

// ---------------------------------------------------------------------------
// word coordinates and names

HopfPreset::UqWord HopfPreset::uq_decode(WordId w) const {
    const int span = 2 * cap_ + 1;
    const int cpart = static_cast<int>(w) % (cap_ + 1);
    const int rest = static_cast<int>(w) / (cap_ + 1);
    const int bpart = rest % span - cap_;
    const int apart = rest / span;
    return {apart, bpart, cpart};
}

WordId HopfPreset::uq_encode(int a, int b, int c) const {
    if (a < 0 || c < 0 || a > cap_ || c > cap_ || b < -cap_ || b > cap_) {
        std::ostringstream os;
        os << "uq_sl2 degree cap " << cap_ << " exceeded by X-^" << a << " K^" << b << " X+^"
           << c;
        throw DegreeOverflow(os.str());
    }
    const int span = 2 * cap_ + 1;
    return static_cast<WordId>((a * span + (b + cap_)) * (cap_ + 1) + c);
}

std::string HopfPreset::word_name(WordId w) const {
    switch (kind_) {
    case PresetKind::TrivialK:
        return "1";
    case PresetKind::GroupC2:
        return w == 0 ? "1" : "g";
    case PresetKind::GroupS3: {
        static const char* names[6] = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
        return names[w];
    }
    case PresetKind::Sweedler4: {
        static const char* names[4] = {"1", "g", "x", "gx"};
        return names[w];
    }
    case PresetKind::UqSl2: {
        auto [a, b, c] = uq_decode(w);
        if (a == 0 && b == 0 && c == 0) return "1";
        std::ostringstream os;
        if (a > 0) os << "Xm^" << a;
        if (b != 0) os << (os.tellp() > 0 ? "." : "") << "K^" << b;
        if (c > 0) os << (os.tellp() > 0 ? "." : "") << "Xp^" << c;
        return os.str();
    }
    }
    return "?";
}

std::optional<WordId> HopfPreset::find_word(const std::string& name) const {
    for (WordId w = 0; w < dim_; ++w)
        if (word_name(w) == name) return w;
    // convenient aliases for the uq generators
    if (kind_ == PresetKind::UqSl2) {
        if (name == "Xp" || name == "X+") return uq_encode(0, 0, 1);
        if (name == "Xm" || name == "X-") return uq_encode(1, 0, 0);
        if (name == "K" || name == "K+") return uq_encode(0, 1, 0);
        if (name == "K-") return uq_encode(0, -1, 0);
    }
    return std::nullopt;
}

int HopfPreset::word_degree(WordId w) const {
    if (kind_ == PresetKind::UqSl2) {
        auto [a, b, c] = uq_decode(w);
        return a + (b < 0 ? -b : b) + c;
    }
    return w == unit_ ? 0 : 1;
}

std::vector<WordId> HopfPreset::words_by_degree(std::size_t count) const {
    std::vector<WordId> ids(dim_);
    for (WordId w = 0; w < dim_; ++w) ids[w] = w;
    std::stable_sort(ids.begin(), ids.end(),
                     [this](WordId a, WordId b) { return word_degree(a) < word_degree(b); });
    if (ids.size() > count) ids.resize(count);
    return ids;
}

std::vector<WordId> HopfPreset::generator_words() const {
    switch (kind_) {
    case PresetKind::TrivialK:
        return {};
    case PresetKind::GroupC2:
        return {1};
    case PresetKind::GroupS3:
        return {*find_word("(01)"), *find_word("(012)")};
    case PresetKind::Sweedler4:
        return {1, 2}; // g, x
    case PresetKind::UqSl2:
        return {uq_encode(1, 0, 0), uq_encode(0, -1, 0), uq_encode(0, 1, 0), uq_encode(0, 0, 1)};
    }
    return {};
}

// ---------------------------------------------------------------------------
// structure maps

namespace {

// sweedler4 word ids: 0 = 1, 1 = g, 2 = x, 3 = gx; coordinates (ge, xe)
inline std::pair<int, int> sw_coords(WordId w) { return {static_cast<int>(w) & 1, static_cast<int>(w) >> 1}; }
inline WordId sw_id(int ge, int xe) { return static_cast<WordId>((xe << 1) | ge); }

} // namespace

AlgebraElement HopfPreset::multiply_words(WordId a, WordId b) const {
    AlgebraElement r(this);
    switch (kind_) {
    case PresetKind::TrivialK:
        r.add(0, Scalar(1));
        return r;
    case PresetKind::GroupC2:
        r.add(a ^ b, Scalar(1));
        return r;
    case PresetKind::GroupS3:
        r.add(perm_index_.at(perm_compose(perms_[a], perms_[b])), Scalar(1));
        return r;
    case PresetKind::Sweedler4: {
        auto [g1, x1] = sw_coords(a);
        auto [g2, x2] = sw_coords(b);
        if (x1 + x2 >= 2) return r; // x^2 = 0
        Scalar sign = (x1 && g2) ? Scalar(-1) : Scalar(1); // move x past g: xg = -gx
        r.add(sw_id(g1 ^ g2, x1 + x2), sign);
        return r;
    }
    case PresetKind::UqSl2: {
        AlgebraElement acc = AlgebraElement::term(this, a);
        auto [a2, b2, c2] = uq_decode(b);
        for (int i = 0; i < a2; ++i) acc = uq_mul_generator(acc, -2); // X-
        for (int i = 0; i < (b2 < 0 ? -b2 : b2); ++i) acc = uq_mul_generator(acc, b2 < 0 ? -1 : 1);
        for (int i = 0; i < c2; ++i) acc = uq_mul_generator(acc, 2);  // X+
        return acc;
    }
    }
    return r;
}

/// Right-multiply a normal-form combination by one generator.
/// generator: -2 = X-, -1 = K^-1, +1 = K, +2 = X+.
AlgebraElement HopfPreset::uq_mul_generator(const AlgebraElement& acc, int generator) const {
    AlgebraElement out(this);
    for (const auto& [w, coeff] : acc.terms) {
        auto [a, b, c] = uq_decode(w);
        switch (generator) {
        case 2: // w * X+
            out.add(uq_encode(a, b, c + 1), coeff);
            break;
        case 1:  // w * K:   X+^c K = q^{-2c} K X+^c
        case -1: // w * K^-1: X+^c K^-1 = q^{2c} K^-1 X+^c
            out.add(uq_encode(a, b + generator, c), coeff * q_.pow(-2L * c * generator));
            break;
        case -2: { // w * X-: move X- left through X+^c, then through K^b
            // X+^c X- = X- X+^c + sum_{i=1..c} q^{-2(i-1)} K X+^{c-1}/(q-q^-1)
            //                              - q^{2(i-1)} K^-1 X+^{c-1}/(q-q^-1)
            // derived by repeated [X+, X-] = (K - K^-1)/(q - q^-1)
            const Scalar inv = (q_ - q_.pow(-1)).inverse();
            // X- X+^c part: K^b X- = q^{2b} ... X- K^b uses X- K = q^2 K X-
            out.add(uq_encode(a + 1, b, c), coeff * q_.pow(-2L * b));
            for (int i = 1; i <= c; ++i) {
                // commutator term produced when X- crosses the i-th X+ from the right
                Scalar base = coeff * inv;
                out.add(uq_encode(a, b + 1, c - 1), base * q_.pow(-2L * (i - 1)));
                out.add(uq_encode(a, b - 1, c - 1), -(base * q_.pow(2L * (i - 1))));
            }
            break;
        }
        default:
            throw std::logic_error("uq_mul_generator: bad generator");
        }
    }
    return out;
}

TensorElement HopfPreset::coproduct_word(WordId w) const {
    TensorElement t(this, 2);
    switch (kind_) {
    case PresetKind::TrivialK:
        t.add(std::vector<WordId>{0, 0}, Scalar(1));
        return t;
    case PresetKind::GroupC2:
    case PresetKind::GroupS3:
        t.add(std::vector<WordId>{w, w}, Scalar(1)); // grouplike
        return t;
    case PresetKind::Sweedler4:
        switch (w) {
        case 0: t.add(std::vector<WordId>{0, 0}, Scalar(1)); return t;           // Delta(1)
        case 1: t.add(std::vector<WordId>{1, 1}, Scalar(1)); return t;           // Delta(g) = g(x)g
        case 2:                                               // Delta(x) = x(x)1 + g(x)x
            t.add(std::vector<WordId>{2, 0}, Scalar(1));
            t.add(std::vector<WordId>{1, 2}, Scalar(1));
            return t;
        case 3:                                               // Delta(gx) = gx(x)g + 1(x)gx
            t.add(std::vector<WordId>{3, 1}, Scalar(1));
            t.add(std::vector<WordId>{0, 3}, Scalar(1));
            return t;
        }
        return t;
    case PresetKind::UqSl2: {
        auto [a, b, c] = uq_decode(w);
        TensorElement acc(this, 2);
        acc.add(std::vector<WordId>{unit_, unit_}, Scalar(1));
        TensorElement dxm(this, 2); // Delta(X-) = K^-1 (x) X-  +  X- (x) 1
        if (a > 0) {
            dxm.add(std::vector<WordId>{uq_encode(0, -1, 0), uq_encode(1, 0, 0)}, Scalar(1));
            dxm.add(std::vector<WordId>{uq_encode(1, 0, 0), unit_}, Scalar(1));
        }
        for (int i = 0; i < a; ++i) acc = tensor_multiply(acc, dxm);
        if (b != 0) {
            TensorElement dk(this, 2); // Delta(K^{+-1}) is grouplike
            int s = b < 0 ? -1 : 1;
            dk.add(std::vector<WordId>{uq_encode(0, s, 0), uq_encode(0, s, 0)}, Scalar(1));
            for (int i = 0; i < (b < 0 ? -b : b); ++i) acc = tensor_multiply(acc, dk);
        }
        if (c > 0) {
            TensorElement dxp(this, 2); // Delta(X+) = 1 (x) X+  +  X+ (x) K
            dxp.add(std::vector<WordId>{unit_, uq_encode(0, 0, 1)}, Scalar(1));
            dxp.add(std::vector<WordId>{uq_encode(0, 0, 1), uq_encode(0, 1, 0)}, Scalar(1));
            for (int i = 0; i < c; ++i) acc = tensor_multiply(acc, dxp);
        }
        return acc;
    }
    }
    return t;
}

Scalar HopfPreset::counit_word(WordId w) const {
    switch (kind_) {
    case PresetKind::TrivialK:
    case PresetKind::GroupC2:
    case PresetKind::GroupS3:
        return Scalar(1);
    case PresetKind::Sweedler4:
        return sw_coords(w).second == 0 ? Scalar(1) : Scalar();
    case PresetKind::UqSl2: {
        auto [a, b, c] = uq_decode(w);
        (void)b;
        return (a == 0 && c == 0) ? Scalar(1) : Scalar();
    }
    }
    return Scalar();
}

AlgebraElement HopfPreset::antipode_word(WordId w, int power) const {
    if (power != 1 && power != -1)
        throw std::invalid_argument("antipode_word: power must be +1 or -1");
    AlgebraElement r(this);
    switch (kind_) {
    case PresetKind::TrivialK:
        r.add(0, Scalar(1));
        return r;
    case PresetKind::GroupC2:
        r.add(w, Scalar(1)); // g^-1 = g
        return r;
    case PresetKind::GroupS3:
        r.add(perm_index_.at(perm_inverse(perms_[w])), Scalar(1));
        return r;
    case PresetKind::Sweedler4:
        // S: 1, g, -gx, x   /   S^-1: 1, g, gx, -x
        switch (w) {
        case 0: r.add(0, Scalar(1)); return r;
        case 1: r.add(1, Scalar(1)); return r;
        case 2: r.add(3, Scalar(power == 1 ? -1 : 1)); return r;
        case 3: r.add(2, Scalar(power == 1 ? 1 : -1)); return r;
        }
        return r;
    case PresetKind::UqSl2: {
        // anti-homomorphism: S(X-^a K^b X+^c) = S(X+)^c S(K)^b S(X-)^a
        auto [a, b, c] = uq_decode(w);
        AlgebraElement acc = unit_element(this);
        AlgebraElement sxp(this), sxm(this), sk(this);
        if (power == 1) {
            // S(X+) = -X+ K^-1, S(X-) = -K X-, S(K) = K^-1
            sxp = multiply_words(uq_encode(0, 0, 1), uq_encode(0, -1, 0)).scaled(Scalar(-1));
            sxm = multiply_words(uq_encode(0, 1, 0), uq_encode(1, 0, 0)).scaled(Scalar(-1));
        } else {
            // S^-1(X+) = -K^-1 X+, S^-1(X-) = -X- K
            sxp = multiply_words(uq_encode(0, -1, 0), uq_encode(0, 0, 1)).scaled(Scalar(-1));
            sxm = multiply_words(uq_encode(1, 0, 0), uq_encode(0, 1, 0)).scaled(Scalar(-1));
        }
        for (int i = 0; i < c; ++i) acc = hopfhc::multiply(acc, sxp);
        for (int i = 0; i < (b < 0 ? -b : b); ++i) {
            AlgebraElement skb =
                AlgebraElement::term(this, uq_encode(0, b < 0 ? 1 : -1, 0));
            acc = hopfhc::multiply(acc, skb);
        }
        for (int i = 0; i < a; ++i) acc = hopfhc::multiply(acc, sxm);
        return acc;
    }
    }
    return r;
}

// ---------------------------------------------------------------------------
// bilinear extensions

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a.preset);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms)
            r.add(a.preset->multiply_words(wa, wb), ca * cb);
    return r;
}

TensorElement coproduct(const AlgebraElement& a) {
    TensorElement r(a.preset, 2);
    for (const auto& [w, c] : a.terms) r.add(a.preset->coproduct_word(w), c);
    return r;
}

TensorElement comultiply_slot(const TensorElement& t, int slot) {
    TensorElement r(t.preset, t.slots + 1);
    for (const auto& [w, c] : t.terms) {
        TensorElement d = t.preset->coproduct_word(w[static_cast<size_t>(slot)]);
        for (const auto& [dw, dc] : d.terms) {
            std::vector<WordId> key;
            key.reserve(w.size() + 1);
            key.insert(key.end(), w.begin(), w.begin() + slot);
            key.push_back(dw[0]);
            key.push_back(dw[1]);
            key.insert(key.end(), w.begin() + slot + 1, w.end());
            r.add(key, c * dc);
        }
    }
    return r;
}

TensorElement iterated_coproduct(const AlgebraElement& a, int n) {
    TensorElement r(a.preset, 1);
    for (const auto& [w, c] : a.terms) r.add(std::vector<WordId>{w}, c);
    for (int k = 0; k < n; ++k) r = comultiply_slot(r, 0);
    return r;
}

Scalar counit(const AlgebraElement& a) {
    Scalar r;
    for (const auto& [w, c] : a.terms) r += a.preset->counit_word(w) * c;
    return r;
}

AlgebraElement antipode(const AlgebraElement& a, int power) {
    AlgebraElement r(a.preset);
    for (const auto& [w, c] : a.terms) r.add(a.preset->antipode_word(w, power), c);
    return r;
}

TensorElement coadjoint_coaction(const AlgebraElement& h) {
    TensorElement r(h.preset, 2);
    TensorElement d2 = iterated_coproduct(h, 2);
    for (const auto& [w, c] : d2.terms) {
        AlgebraElement right =
            multiply(AlgebraElement::term(h.preset, w[2]), h.preset->antipode_word(w[0], 1));
        for (const auto& [rw, rc] : right.terms) r.add(std::vector<WordId>{w[1], rw}, c * rc);
    }
    return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    if (a.slots != b.slots) throw std::invalid_argument("tensor_multiply: slot mismatch");
    TensorElement r(a.preset, a.slots);
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            // expand the slotwise products
            std::vector<std::pair<std::vector<WordId>, Scalar>> partial{{{}, ca * cb}};
            for (int s = 0; s < a.slots; ++s) {
                AlgebraElement prod =
                    a.preset->multiply_words(wa[static_cast<size_t>(s)], wb[static_cast<size_t>(s)]);
                std::vector<std::pair<std::vector<WordId>, Scalar>> next;
                for (const auto& [key, coeff] : partial) {
                    for (const auto& [pw, pc] : prod.terms) {
                        auto k = key;
                        k.push_back(pw);
                        next.emplace_back(std::move(k), coeff * pc);
                    }
                }
                partial = std::move(next);
            }
            for (auto& [key, coeff] : partial) r.add(key, coeff);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// axiom checker

bool AxiomLedger::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

struct AxiomRun {
    const HopfPreset& H;
    AxiomLedger ledger;

    template <typename F>
    void axiom(const std::string& name, F&& body) {
        AxiomEntry e;
        e.name = name;
        body(e);
        ledger.entries.push_back(std::move(e));
    }
};

} // namespace

AxiomLedger check_hopf_axioms(const HopfPreset& preset, std::size_t sample_cap) {
    AxiomRun run{preset, {}};
    const auto words = preset.words_by_degree(sample_cap);
    const AlgebraElement one = unit_element(&preset);

    // memoized pair products; nullopt marks DegreeOverflow
    std::map<std::pair<WordId, WordId>, std::optional<AlgebraElement>> prod;
    auto product = [&](WordId a, WordId b) -> const std::optional<AlgebraElement>& {
        auto it = prod.find({a, b});
        if (it != prod.end()) return it->second;
        std::optional<AlgebraElement> r;
        try {
            r = preset.multiply_words(a, b);
        } catch (const DegreeOverflow&) {
            r = std::nullopt;
        }
        return prod.emplace(std::make_pair(a, b), std::move(r)).first->second;
    };

    run.axiom("unit_laws", [&](AxiomEntry& e) {
        for (WordId w : words) {
            ++e.checked;
            auto lw = product(preset.unit_word(), w);
            auto rw = product(w, preset.unit_word());
            AlgebraElement expect = AlgebraElement::term(&preset, w);
            if (!lw || !rw || !(*lw == expect) || !(*rw == expect)) {
                e.pass = false;
                e.witness = preset.word_name(w);
                return;
            }
        }
    });

    run.axiom("associativity", [&](AxiomEntry& e) {
        for (WordId a : words)
            for (WordId b : words) {
                const auto& ab = product(a, b);
                for (WordId c : words) {
                    const auto& bc = product(b, c);
                    try {
                        if (!ab || !bc) throw DegreeOverflow("pair");
                        AlgebraElement left =
                            multiply(*ab, AlgebraElement::term(&preset, c));
                        AlgebraElement right =
                            multiply(AlgebraElement::term(&preset, a), *bc);
                        ++e.checked;
                        if (!(left == right)) {
                            e.pass = false;
                            e.witness = preset.word_name(a) + ", " + preset.word_name(b) +
                                        ", " + preset.word_name(c);
                            return;
                        }
                    } catch (const DegreeOverflow&) {
                        ++e.skipped;
                    }
                }
            }
    });

    run.axiom("coassociativity", [&](AxiomEntry& e) {
        for (WordId w : words) {
            try {
                TensorElement d = preset.coproduct_word(w);
                TensorElement left = comultiply_slot(d, 0);
                TensorElement right = comultiply_slot(d, 1);
                ++e.checked;
                if (!(left == right)) {
                    e.pass = false;
                    e.witness = preset.word_name(w);
                    return;
                }
            } catch (const DegreeOverflow&) {
                ++e.skipped;
            }
        }
    });

    run.axiom("counit_laws", [&](AxiomEntry& e) {
        for (WordId w : words) {
            try {
                TensorElement d = preset.coproduct_word(w);
                AlgebraElement left(&preset), right(&preset);
                for (const auto& [k, c] : d.terms) {
                    left.add(k[1], c * preset.counit_word(k[0]));
                    right.add(k[0], c * preset.counit_word(k[1]));
                }
                AlgebraElement expect = AlgebraElement::term(&preset, w);
                ++e.checked;
                if (!(left == expect) || !(right == expect)) {
                    e.pass = false;
                    e.witness = preset.word_name(w);
                    return;
                }
            } catch (const DegreeOverflow&) {
                ++e.skipped;
            }
        }
    });

    run.axiom("coproduct_algebra_map", [&](AxiomEntry& e) {
        for (WordId a : words)
            for (WordId b : words) {
                try {
                    const auto& ab = product(a, b);
                    if (!ab) throw DegreeOverflow("pair");
                    TensorElement left = coproduct(*ab);
                    TensorElement right =
                        tensor_multiply(preset.coproduct_word(a), preset.coproduct_word(b));
                    ++e.checked;
                    if (!(left == right)) {
                        e.pass = false;
                        e.witness = preset.word_name(a) + ", " + preset.word_name(b);
                        return;
                    }
                } catch (const DegreeOverflow&) {
                    ++e.skipped;
                }
            }
    });

    run.axiom("counit_algebra_map", [&](AxiomEntry& e) {
        for (WordId a : words)
            for (WordId b : words) {
                const auto& ab = product(a, b);
                if (!ab) {
                    ++e.skipped;
                    continue;
                }
                ++e.checked;
                if (!(counit(*ab) == preset.counit_word(a) * preset.counit_word(b))) {
                    e.pass = false;
                    e.witness = preset.word_name(a) + ", " + preset.word_name(b);
                    return;
                }
            }
    });

    run.axiom("antipode_laws", [&](AxiomEntry& e) {
        for (WordId w : words) {
            try {
                TensorElement d = preset.coproduct_word(w);
                AlgebraElement left(&preset), right(&preset);
                for (const auto& [k, c] : d.terms) {
                    left.add(multiply(preset.antipode_word(k[0], 1),
                                      AlgebraElement::term(&preset, k[1])),
                             c);
                    right.add(multiply(AlgebraElement::term(&preset, k[0]),
                                       preset.antipode_word(k[1], 1)),
                              c);
                }
                AlgebraElement expect = one.scaled(preset.counit_word(w));
                ++e.checked;
                if (!(left == expect) || !(right == expect)) {
                    e.pass = false;
                    e.witness = preset.word_name(w);
                    return;
                }
            } catch (const DegreeOverflow&) {
                ++e.skipped;
            }
        }
    });

    run.axiom("antipode_inverse", [&](AxiomEntry& e) {
        for (WordId w : words) {
            try {
                AlgebraElement a = antipode(preset.antipode_word(w, 1), -1);
                AlgebraElement b = antipode(preset.antipode_word(w, -1), 1);
                AlgebraElement expect = AlgebraElement::term(&preset, w);
                ++e.checked;
                if (!(a == expect) || !(b == expect)) {
                    e.pass = false;
                    e.witness = preset.word_name(w);
                    return;
                }
            } catch (const DegreeOverflow&) {
                ++e.skipped;
            }
        }
    });

    run.axiom("cocommutativity_flag", [&](AxiomEntry& e) {
        bool sym = true;
        std::string first;
        for (WordId w : words) {
            try {
                TensorElement d = preset.coproduct_word(w);
                TensorElement flip(&preset, 2);
                for (const auto& [k, c] : d.terms) flip.add(std::vector<WordId>{k[1], k[0]}, c);
                ++e.checked;
                if (!(flip == d)) {
                    sym = false;
                    if (first.empty()) first = preset.word_name(w);
                }
            } catch (const DegreeOverflow&) {
                ++e.skipped;
            }
        }
        if (sym != preset.is_cocommutative()) {
            e.pass = false;
            e.witness = "flag disagrees with basis scan" + (first.empty() ? "" : ", " + first);
        }
    });

    return run.ledger;
}

} // namespace hopfhc
