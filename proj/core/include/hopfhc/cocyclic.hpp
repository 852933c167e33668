#pragma once

#include "hopfhc/coefficients.hpp"
#include "hopfhc/module_coalgebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace hopfhc {

/// Basis chain of X^(x)slots (x) Y.
struct ChainKey {
    std::vector<XId> slots;
    int ytag = 0;
    auto operator<=>(const ChainKey&) const = default;
};

/// Element of X^(x)slots (x) Y. The same container carries
///   T-chains     of degree n  (slots = n+1),
///   CM-chains    of degree n  (slots = n),
///   cobar chains of degree n  (slots = n+1, slot 0 carrying coad(H)).
struct Chain {
    const ModuleCoalgebra* X = nullptr;
    const CoefficientModule* Y = nullptr;
    int slots = 0;
    std::map<ChainKey, Scalar> terms;

    Chain() = default;
    Chain(const ModuleCoalgebra* x, const CoefficientModule* y, int s) : X(x), Y(y), slots(s) {}
    static Chain unit_term(const ModuleCoalgebra* X, const CoefficientModule* Y,
                           const std::vector<XId>& slots, int ytag, Scalar c = Scalar(1));

    void add(const ChainKey& k, const Scalar& c);
    void add(const Chain& o, const Scalar& c = Scalar(1));
    Chain scaled(const Scalar& c) const;
    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r.add(o);
        return r;
    }
    Chain operator-(const Chain& o) const {
        Chain r = *this;
        r.add(o, Scalar(-1));
        return r;
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const Chain& o) const { return slots == o.slots && terms == o.terms; }
    std::string str() const;
};

/// Fixed coordinate system on X^(x)slots (x) Y with mixed-radix indexing,
/// slot 0 most significant and the y-tag least significant.
class ChainSpace {
public:
    ChainSpace(const ModuleCoalgebra* X, const CoefficientModule* Y, int slots);
    Index dim() const { return dim_; }
    int slots() const { return slots_; }
    Index index_of(const ChainKey& k) const;
    ChainKey key_of(Index i) const;
    SparseVector to_vector(const Chain& c) const;
    Chain from_vector(const SparseVector& v) const;
    const ModuleCoalgebra* X() const { return X_; }
    const CoefficientModule* Y() const { return Y_; }

private:
    const ModuleCoalgebra* X_;
    const CoefficientModule* Y_;
    int slots_;
    Index dim_;
};

/// Matrix of a degree-homogeneous chain operator in the two coordinate systems.
SparseMatrix operator_matrix(const ChainSpace& from, const ChainSpace& to,
                             const std::function<Chain(const Chain&)>& op);

// ----- the T-complex (bialgebra-ready) ---------------------------------------

/// Cosimplicial face on T_n = X^(x)(n+1) (x) Y:
///   0 <= j <= n : comultiply slot j;
///   j = n+1     : x0_(2) (x) x1 ... xn (x) y_(-1) x0_(1) (x) y_(0).
Chain face_T(int j, const Chain& v);

/// direction -1: tau^-1 (x0 ... xn (x) y) = (x1 ... xn (x) y_(-1) x0 (x) y_(0));
/// direction +1: tau     (h0 ... hn (x) y) = (S^-1(y_(-1)) hn (x) h0 ... (x) y_(0)),
/// which needs the antipode.
Chain cyclic_T(int direction, const Chain& v);

/// Diagonal left action L_b through Delta^(n+1), last leg acting on Y.
Chain act_T(const AlgebraElement& b, const Chain& v);

// ----- the cobar complex B(coad H, H, Y) (Hopf, X = H) ------------------------

Chain cobar_face(int j, const Chain& v);
/// +1 : T_n(H,Y) -> B_n(coad H, H, Y); -1 : inverse.
Chain phi(int direction, const Chain& v);
/// t_n^-1 = Phi tau^-1 Phi^-1, computed as the composite.
Chain cobar_cyclic_inv(const Chain& v);

// ----- the Connes-Moscovici complex CM_n = H^(x)n (x) Y (Hopf, X = H) ---------

/// p_n: T_n -> CM_n; p_0(h (x) y) = S(h) y, in general
/// (S(h^n_(n+1)) y_(-n) h^0 (x) ... (x) S(h^n_(2)) y_(-1) h^{n-1} (x) S(h^n_(1)) y_(0)).
Chain cm_project(const Chain& v);
/// i_n: CM_n -> T_n, appending the coaction legs of y.
Chain cm_include(const Chain& w);
/// Closed formula for t_n^-1 on CM_n (t_0 = id):
/// (S(h^0_(n+1)) h^1 (x) ... (x) S(h^0_(2)) y_(-1) (x) S(h^0_(1)) y_(0)).
Chain cm_cyclic_inv(const Chain& w);
/// t_n, computed as the exact inverse of the closed-formula matrix on the
/// enumerated CM coordinate space. Requires a 1-stable Y.
Chain cm_cyclic(int direction, const Chain& w);

enum class CmFaceVariant { Derived, Classical }; // the paper's d_j versus d~_j
Chain cm_face(CmFaceVariant variant, int j, const Chain& w);

// ----- kappa endomorphisms (Hopf, X = H) --------------------------------------

/// Closed formula:
/// kappa_x(v) = (S^-1(y_(-1)) x h^0 (x) h^1 ... (x) y_(0))
///   - (x_(n+1) S^-1(y_(-1)) h^0 (x) x_(n+2) S(x_(n)) h^1 (x) ...
///      (x) x_(2n+1) S(x_(1)) h^n (x) y_(0)).
Chain kappa(const AlgebraElement& x, const Chain& v);
/// Definitional composite [tau, L_{x_(n+1)}] tau^-1 (twisted argument); every
/// summand is a commutator [tau, L_b] image, so the output visibly lies in
/// the commutator subspace I.
Chain kappa_definitional(const AlgebraElement& x, const Chain& v);
/// tau^j kappa_x tau^-j.
Chain kappa_conjugated(const AlgebraElement& x, int j, const Chain& v);
/// Insertion form (h^0 (x) ... (x) [S^-1(y_(-1)), x] h^j (x) ... (x) y_(0)),
/// valid when Y is a cocommutative comodule with counit action and x is
/// cocentral.
Chain kappa_insertion(const AlgebraElement& x, int j, const Chain& v);

} // namespace hopfhc
