#pragma once

#include "hopfhc/errors.hpp"
#include "hopfhc/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfhc {

/// Index of a canonical basis word inside a preset's enumerated basis.
using WordId = std::uint32_t;

class HopfPreset;

/// Finite linear combination of canonical basis words of one preset.
struct AlgebraElement {
    const HopfPreset* preset = nullptr;
    std::map<WordId, Scalar> terms;

    AlgebraElement() = default;
    explicit AlgebraElement(const HopfPreset* p) : preset(p) {}
    static AlgebraElement term(const HopfPreset* p, WordId w, Scalar c = Scalar(1));

    void add(WordId w, const Scalar& c);
    void add(const AlgebraElement& o, const Scalar& c = Scalar(1));
    AlgebraElement scaled(const Scalar& c) const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
    std::string str() const;
};

/// Linear combination of pure tensors of basis words, all slots from one preset.
struct TensorElement {
    const HopfPreset* preset = nullptr;
    int slots = 0;
    std::map<std::vector<WordId>, Scalar> terms;

    TensorElement() = default;
    TensorElement(const HopfPreset* p, int s) : preset(p), slots(s) {}

    void add(const std::vector<WordId>& w, const Scalar& c);
    void add(const TensorElement& o, const Scalar& c = Scalar(1));
    TensorElement scaled(const Scalar& c) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement& o) const { return slots == o.slots && terms == o.terms; }
    std::string str() const;
};

enum class PresetKind { TrivialK, GroupC2, GroupS3, Sweedler4, UqSl2 };

/// Canonical-basis presentation of a concrete bialgebra or Hopf algebra.
///
/// Basis conventions per preset:
///   k         - the one-dimensional Hopf algebra, basis {1}.
///   kC2       - group algebra of C2 = <g | g^2>, basis {1, g}.
///   kS3       - group algebra of S3 on points {0,1,2}; elements enumerated in
///               lexicographic one-line order: e, (12), (01), (012), (021), (02).
///   sweedler4 - Taft algebra H4 = <g, x | g^2 = 1, x^2 = 0, xg = -gx>, basis
///               {1, g, x, gx}, Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x,
///               S(x) = -gx.
///   uq_sl2    - U_q(sl2) truncated to PBW words X-^a K^b X+^c with
///               a, c, |b| <= degree_cap; relations K X+ K^-1 = q^2 X+,
///               K X- K^-1 = q^-2 X-, [X+, X-] = (K - K^-1)/(q - q^-1);
///               Delta(K) = K(x)K, Delta(X+) = 1(x)X+ + X+(x)K,
///               Delta(X-) = K^-1(x)X- + X-(x)1.
class HopfPreset {
public:
    static std::shared_ptr<const HopfPreset> trivial_k();
    static std::shared_ptr<const HopfPreset> group_c2();
    static std::shared_ptr<const HopfPreset> group_s3();
    static std::shared_ptr<const HopfPreset> sweedler4();
    /// q must be a rational not in {0, 1, -1}, or the symbolic indeterminate.
    static std::shared_ptr<const HopfPreset> uq_sl2(const Scalar& q, int degree_cap);
    static std::shared_ptr<const HopfPreset> by_name(const std::string& name,
                                                     const Scalar& q, int degree_cap);

    PresetKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_hopf() const { return true; } // every shipped preset carries an antipode
    bool is_cocommutative() const { return cocommutative_; }
    std::size_t dim() const { return dim_; }
    int degree_cap() const { return cap_; }  // 0 when untruncated
    const Scalar& q() const { return q_; }   // uq_sl2 only

    WordId unit_word() const { return unit_; }
    std::string word_name(WordId w) const;
    std::optional<WordId> find_word(const std::string& name) const;
    /// Total generator degree of a word (0 for the unit); drives deterministic
    /// small-words-first enumeration on truncated presets.
    int word_degree(WordId w) const;
    /// Ids ordered by (degree, id); at most `count` of them.
    std::vector<WordId> words_by_degree(std::size_t count) const;
    /// Documented algebra generator set (unit excluded).
    std::vector<WordId> generator_words() const;

    AlgebraElement multiply_words(WordId a, WordId b) const; // throws DegreeOverflow
    TensorElement coproduct_word(WordId w) const;            // two slots
    Scalar counit_word(WordId w) const;
    AlgebraElement antipode_word(WordId w, int power) const; // power in {+1, -1}

    // uq_sl2 word coordinates
    struct UqWord { int a; int b; int c; };
    UqWord uq_decode(WordId w) const;
    WordId uq_encode(int a, int b, int c) const; // throws DegreeOverflow

private:
    HopfPreset() = default;

    PresetKind kind_ = PresetKind::TrivialK;
    std::string name_;
    bool cocommutative_ = false;
    std::size_t dim_ = 1;
    int cap_ = 0;
    Scalar q_;
    WordId unit_ = 0;

    // kS3 permutation table (one-line notation), fixed enumeration order
    std::vector<std::array<int, 3>> perms_;
    std::map<std::array<int, 3>, WordId> perm_index_;

    AlgebraElement uq_mul_generator(const AlgebraElement& acc, int generator) const;
    friend struct UqOps;
};

// ----- bilinear operations ---------------------------------------------------

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
TensorElement coproduct(const AlgebraElement& a);
/// Delta^(n): n = 0 returns a as a one-slot tensor; result has n+1 slots.
TensorElement iterated_coproduct(const AlgebraElement& a, int n);
Scalar counit(const AlgebraElement& a);
AlgebraElement antipode(const AlgebraElement& a, int power);
/// rho_coad(h) = h_(2) (x) h_(3) S(h_(1)); H as a right comodule over itself.
TensorElement coadjoint_coaction(const AlgebraElement& h);

/// Slotwise product of tensors with equal slot counts (bilinear).
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
/// Apply Delta to one slot, yielding a tensor with one slot more.
TensorElement comultiply_slot(const TensorElement& t, int slot);

AlgebraElement unit_element(const HopfPreset* p);

// ----- axiom checker ---------------------------------------------------------

struct AxiomEntry {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0; // DegreeOverflow on truncated presets
    bool pass = true;
    std::string witness;     // first counterexample, empty when pass
};

struct AxiomLedger {
    std::vector<AxiomEntry> entries;
    bool all_pass() const;
};

/// Verify associativity, coassociativity, counit laws, Delta and epsilon being
/// algebra maps, both antipode laws, S and S^-1 being mutually inverse, and
/// agreement of the cocommutativity flag, on every basis word (pairs, triples)
/// up to sample_cap words taken smallest-degree-first.
AxiomLedger check_hopf_axioms(const HopfPreset& preset, std::size_t sample_cap);

} // namespace hopfhc
