#pragma once

#include "hopfhc/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace hopfhc {

using Index = std::size_t;

/// Sparse vector over the scalar field. Stored entries are nonzero.
struct SparseVector {
    Index dim = 0;
    std::map<Index, Scalar> entries;

    SparseVector() = default;
    explicit SparseVector(Index d) : dim(d) {}

    void set(Index i, const Scalar& v);
    void add(Index i, const Scalar& v); // drops the entry if the sum is zero
    Scalar get(Index i) const;
    bool is_zero() const { return entries.empty(); }
    std::optional<Index> leading_index() const; // lowest index with nonzero entry

    SparseVector operator+(const SparseVector& o) const;
    SparseVector operator-(const SparseVector& o) const;
    SparseVector scaled(const Scalar& c) const;
    bool operator==(const SparseVector& o) const = default;
};

/// Sparse matrix over the scalar field; entries keyed by (row, col).
struct SparseMatrix {
    Index rows = 0, cols = 0;
    std::map<std::pair<Index, Index>, Scalar> entries;

    SparseMatrix() = default;
    SparseMatrix(Index r, Index c) : rows(r), cols(c) {}
    static SparseMatrix identity(Index n);

    void set(Index r, Index c, const Scalar& v);
    void add(Index r, Index c, const Scalar& v);
    Scalar get(Index r, Index c) const;
    void set_column(Index c, const SparseVector& v);
    SparseVector column(Index c) const;

    SparseVector apply(const SparseVector& v) const;      // matrix * vector
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& c) const;
    bool is_zero() const { return entries.empty(); }
    bool operator==(const SparseMatrix& o) const = default;
};

/// Reduced row-echelon basis of a subspace. Rows have strictly increasing
/// pivot indices, each pivot entry is 1, and pivot columns are cleared in the
/// other rows. Separate insertion orders of the same spanning set produce the
/// identical object.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(Index ambient) : ambient_(ambient) {}

    Index ambient_dim() const { return ambient_; }
    Index size() const { return rows_.size(); }
    const std::vector<SparseVector>& vectors() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    /// Reduce v against the basis; if independent, insert the residual
    /// (normalized) and return true.
    bool insert(SparseVector v);
    /// Residual of v after elimination against the basis.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
    bool operator==(const SubspaceBasis& o) const;

private:
    Index ambient_ = 0;
    std::vector<SparseVector> rows_; // sorted by pivot index
    std::vector<Index> pivots_;
};

Index rank(const SparseMatrix& m);
SubspaceBasis row_space(const SparseMatrix& m);

/// Echelonized basis of the right kernel {v : m v = 0}.
SubspaceBasis kernel_basis(const SparseMatrix& m);

/// Quotient of k^ambient_dim by the span of the generators.
///
/// representatives lists the non-pivot coordinate indices; projection maps an
/// ambient vector to its coset coordinates and satisfies
/// projection * inclusion = identity on the representatives.
struct QuotientProjection {
    std::vector<Index> representatives;
    SparseMatrix projection; // (ambient - rank) x ambient
    SubspaceBasis span;      // echelonized span of the generators
};
QuotientProjection quotient_projection(Index ambient_dim,
                                       const std::vector<SparseVector>& generators);

/// Coefficients of v in the given echelonized basis, or nullopt if v is
/// outside the span. Coefficients are listed in basis-row order.
std::optional<std::vector<Scalar>> membership(const SparseVector& v,
                                              const SubspaceBasis& basis);

/// Solve m x = rhs exactly; nullopt when inconsistent. Free coordinates are 0.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs);

/// Exact inverse; nullopt when singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

/// Coefficients [c1, ..., cn] of det(xI - A) = x^n + c1 x^{n-1} + ... + cn,
/// computed by the Faddeev-LeVerrier recursion (exact over characteristic 0).
std::vector<Scalar> char_poly(const SparseMatrix& a);

} // namespace hopfhc
