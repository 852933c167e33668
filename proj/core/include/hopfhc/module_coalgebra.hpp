#pragma once

#include "hopfhc/presets.hpp"
#include "hopfhc/sparse.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hopfhc {

/// Index of a basis vector of a module coalgebra X.
using XId = std::uint32_t;
/// Vector in X, keyed by basis index.
using XVector = std::map<XId, Scalar>;
/// Element of X (x) X.
using XXElement = std::map<std::pair<XId, XId>, Scalar>;

void x_add(XVector& v, XId i, const Scalar& c);

/// A left B-module coalgebra X with an enumerated basis: either B itself, or
/// a quotient B/J presented by projection matrices. Chain slots of the
/// (para-)cocyclic complexes live in such an X.
class ModuleCoalgebra {
public:
    /// X = B with its own coproduct/counit and left multiplication action.
    static std::shared_ptr<const ModuleCoalgebra> self(std::shared_ptr<const HopfPreset> B);
    /// X = B / span(J); J must already be left-ideal and coideal closed.
    /// The basis is indexed by the non-pivot words of the echelonized span.
    static std::shared_ptr<const ModuleCoalgebra> quotient(std::shared_ptr<const HopfPreset> B,
                                                           const SubspaceBasis& ideal_span);

    const HopfPreset* algebra() const { return B_.get(); }
    bool is_self() const { return self_; }
    std::size_t dim() const;
    XId unit() const;
    std::string x_name(XId x) const;

    XXElement comult(XId x) const;
    Scalar counit(XId x) const;
    /// Action of a basis word of B on a basis vector of X.
    XVector act_word(WordId b, XId x) const;
    XVector act(const AlgebraElement& b, const XVector& x) const;

    /// Projection of a B-vector into quotient coordinates (identity for self).
    XVector project_element(const AlgebraElement& v) const;

private:
    ModuleCoalgebra() = default;

    std::shared_ptr<const HopfPreset> B_;
    bool self_ = true;
    // quotient presentation
    std::vector<std::string> names_;
    std::vector<XXElement> comult_;
    std::vector<Scalar> counit_;
    std::vector<std::vector<XVector>> action_; // [word][xid]
    SparseMatrix proj_;                        // qdim x dim(B)
    XId unit_ = 0;
};

} // namespace hopfhc
