#pragma once

#include "hopfhc/presets.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfhc {

/// Vector in the coefficient module, keyed by y-basis tag.
using YVector = std::map<int, Scalar>;
/// Element of B (x) Y.
using BYElement = std::map<std::pair<WordId, int>, Scalar>;

void y_add(YVector& v, int tag, const Scalar& c);
void by_add(BYElement& v, WordId w, int tag, const Scalar& c);

/// Coefficient module/comodule Y over a preset bialgebra B: a finite y-basis,
/// an action matrix per basis word of B, and a left coaction Y -> B (x) Y.
/// Module and comodule axioms are verified at construction.
class CoefficientModule {
public:
    static std::shared_ptr<const CoefficientModule> trivial(
        std::shared_ptr<const HopfPreset> B);
    /// delta in {"counit", "sign"} ("sign" on group presets only);
    /// sigma is the name of a grouplike basis word.
    static std::shared_ptr<const CoefficientModule> modular_pair(
        std::shared_ptr<const HopfPreset> B, const std::string& delta,
        const std::string& sigma);
    /// Y = the coalgebra underlying B itself, coaction Delta, action through
    /// the counit. On uq_sl2 the y-basis is the truncation-closed set of words
    /// of total generator degree <= degree_cap, so iterated coactions never
    /// leave the basis.
    static std::shared_ptr<const CoefficientModule> coalgebra_self(
        std::shared_ptr<const HopfPreset> B);
    /// Y = the left ideal generated by the named words, action by left
    /// multiplication, trivial coaction y -> 1 (x) y.
    static std::shared_ptr<const CoefficientModule> trivial_coaction(
        std::shared_ptr<const HopfPreset> B, const std::vector<std::string>& ideal_generators);

    static std::shared_ptr<const CoefficientModule> by_name(
        std::shared_ptr<const HopfPreset> B, const std::string& name,
        const std::string& delta, const std::string& sigma,
        const std::vector<std::string>& ideal_generators);

    const HopfPreset* algebra() const { return B_.get(); }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return y_names_.size(); }
    const std::string& y_name(int tag) const { return y_names_[static_cast<size_t>(tag)]; }

    YVector act_word(WordId b, int tag) const;
    YVector act(const AlgebraElement& b, const YVector& y) const;
    const BYElement& coact(int tag) const { return coaction_[static_cast<size_t>(tag)]; }
    /// Underlying algebra word of a tag, when Y is a sub-basis of B itself.
    std::optional<WordId> y_word(int tag) const {
        if (y_words_.empty()) return std::nullopt;
        return y_words_[static_cast<size_t>(tag)];
    }

private:
    CoefficientModule() = default;
    void verify_axioms() const;

    std::shared_ptr<const HopfPreset> B_;
    std::string name_;
    std::vector<std::string> y_names_;
    // action_[word][tag] = image of the tag-th basis vector under the word
    std::vector<std::vector<YVector>> action_;
    std::vector<BYElement> coaction_;
    std::vector<WordId> y_words_; // coalgebra_self: the underlying word per tag
};

/// S^m(y_(-1)) y_(0) = y on every y-basis tag. Negative m uses S^-1.
bool is_m_stable(const CoefficientModule& Y, int m);

struct AydResult {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t skipped = 0; // DegreeOverflow on truncated presets
    std::string witness;     // "h, y: lhs != rhs" for the first failure
};

/// rho(h y) = h_(1) y_(-1) S^-1(h_(3)) (x) h_(2) y_(0) on every pair of a
/// basis word and a y-basis tag.
AydResult is_aYD(const CoefficientModule& Y);

} // namespace hopfhc
