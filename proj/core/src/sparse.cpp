#include "hopfhc/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfhc {

// ---------------------------------------------------------------------------
// SparseVector

void SparseVector::set(Index i, const Scalar& v) {
    if (i >= dim) throw std::out_of_range("SparseVector::set index");
    if (v.is_zero())
        entries.erase(i);
    else
        entries[i] = v;
}

void SparseVector::add(Index i, const Scalar& v) {
    if (i >= dim) throw std::out_of_range("SparseVector::add index");
    if (v.is_zero()) return;
    auto it = entries.find(i);
    if (it == entries.end()) {
        entries.emplace(i, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
}

Scalar SparseVector::get(Index i) const {
    auto it = entries.find(i);
    return it == entries.end() ? Scalar() : it->second;
}

std::optional<Index> SparseVector::leading_index() const {
    if (entries.empty()) return std::nullopt;
    return entries.begin()->first;
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
    SparseVector r = *this;
    for (const auto& [i, v] : o.entries) r.add(i, v);
    return r;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
    SparseVector r = *this;
    for (const auto& [i, v] : o.entries) r.add(i, -v);
    return r;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
    SparseVector r(dim);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : entries) r.entries.emplace(i, v * c);
    return r;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::identity(Index n) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.entries.emplace(std::make_pair(i, i), Scalar(1));
    return m;
}

void SparseMatrix::set(Index r, Index c, const Scalar& v) {
    if (r >= rows || c >= cols) throw std::out_of_range("SparseMatrix::set index");
    if (v.is_zero())
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

void SparseMatrix::add(Index r, Index c, const Scalar& v) {
    if (r >= rows || c >= cols) throw std::out_of_range("SparseMatrix::add index");
    if (v.is_zero()) return;
    auto it = entries.find({r, c});
    if (it == entries.end()) {
        entries.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
}

Scalar SparseMatrix::get(Index r, Index c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Scalar() : it->second;
}

void SparseMatrix::set_column(Index c, const SparseVector& v) {
    for (const auto& [i, s] : v.entries) set(i, c, s);
}

SparseVector SparseMatrix::column(Index c) const {
    SparseVector v(rows);
    for (Index r = 0; r < rows; ++r) {
        Scalar s = get(r, c);
        if (!s.is_zero()) v.entries.emplace(r, s);
    }
    return v;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.dim != cols) throw std::invalid_argument("SparseMatrix::apply dimension mismatch");
    SparseVector r(rows);
    for (const auto& [rc, s] : entries) {
        auto it = v.entries.find(rc.second);
        if (it != v.entries.end()) r.add(rc.first, s * it->second);
    }
    return r;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("SparseMatrix::operator* dimension mismatch");
    SparseMatrix r(rows, o.cols);
    // group o's entries by row for the inner loop
    for (const auto& [rc, a] : entries) {
        auto lo = o.entries.lower_bound({rc.second, 0});
        auto hi = o.entries.upper_bound({rc.second, o.cols});
        for (auto it = lo; it != hi; ++it) r.add(rc.first, it->first.second, a * it->second);
    }
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("SparseMatrix::operator+ dimension mismatch");
    SparseMatrix r = *this;
    for (const auto& [rc, v] : o.entries) r.add(rc.first, rc.second, v);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    return *this + o.scaled(Scalar(-1));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix r(rows, cols);
    if (c.is_zero()) return r;
    for (const auto& [rc, v] : entries) r.entries.emplace(rc, v * c);
    return r;
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SparseVector SubspaceBasis::reduce(const SparseVector& v) const {
    if (v.dim != ambient_) throw std::invalid_argument("SubspaceBasis::reduce dimension mismatch");
    SparseVector r = v;
    for (size_t k = 0; k < rows_.size() && !r.is_zero(); ++k) {
        Scalar c = r.get(pivots_[k]);
        if (!c.is_zero()) r = r - rows_[k].scaled(c);
    }
    return r;
}

bool SubspaceBasis::insert(SparseVector v) {
    SparseVector r = reduce(v);
    auto lead = r.leading_index();
    if (!lead) return false;
    r = r.scaled(r.get(*lead).inverse());
    // clear the new pivot column from existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = rows_[k].get(*lead);
        if (!c.is_zero()) rows_[k] = rows_[k] - r.scaled(c);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *lead);
    size_t at = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, *lead);
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(r));
    return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

// ---------------------------------------------------------------------------
// elimination front-ends

SubspaceBasis row_space(const SparseMatrix& m) {
    SubspaceBasis b(m.cols);
    // rows visited in increasing row index: pivot choice is first nonzero
    // entry column-wise, ties broken by lowest row, matching incremental RREF
    for (Index r = 0; r < m.rows; ++r) {
        SparseVector row(m.cols);
        auto lo = m.entries.lower_bound({r, 0});
        auto hi = m.entries.upper_bound({r, m.cols});
        for (auto it = lo; it != hi; ++it) row.entries.emplace(it->first.second, it->second);
        b.insert(std::move(row));
    }
    return b;
}

Index rank(const SparseMatrix& m) { return row_space(m).size(); }

SubspaceBasis kernel_basis(const SparseMatrix& m) {
    SubspaceBasis rs = row_space(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (Index p : rs.pivots()) is_pivot[p] = true;

    SubspaceBasis out(m.cols);
    for (Index free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        SparseVector v(m.cols);
        v.set(free, Scalar(1));
        for (size_t k = 0; k < rs.vectors().size(); ++k) {
            Scalar c = rs.vectors()[k].get(free);
            if (!c.is_zero()) v.set(rs.pivots()[k], -c);
        }
        out.insert(std::move(v));
    }
    return out;
}

QuotientProjection quotient_projection(Index ambient_dim,
                                       const std::vector<SparseVector>& generators) {
    SubspaceBasis span(ambient_dim);
    for (const auto& g : generators) {
        if (g.dim != ambient_dim)
            throw std::invalid_argument("quotient_projection: generator dimension mismatch");
        span.insert(g);
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (Index p : span.pivots()) is_pivot[p] = true;

    QuotientProjection out;
    out.span = span;
    for (Index i = 0; i < ambient_dim; ++i)
        if (!is_pivot[i]) out.representatives.push_back(i);

    out.projection = SparseMatrix(out.representatives.size(), ambient_dim);
    std::map<Index, Index> rep_row;
    for (Index k = 0; k < out.representatives.size(); ++k)
        rep_row[out.representatives[k]] = k;
    // column j of the projection is the coset coordinate vector of e_j
    for (Index j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) {
            out.projection.set(rep_row[j], j, Scalar(1));
            continue;
        }
        // e_j reduces to e_j - (row with pivot j); coset coords are minus the
        // representative entries of that row
        const auto& pivots = span.pivots();
        size_t k = static_cast<size_t>(
            std::lower_bound(pivots.begin(), pivots.end(), j) - pivots.begin());
        for (const auto& [i, c] : span.vectors()[k].entries) {
            if (i == j) continue;
            auto it = rep_row.find(i);
            if (it != rep_row.end()) out.projection.set(it->second, j, -c);
        }
    }
    return out;
}

std::optional<std::vector<Scalar>> membership(const SparseVector& v, const SubspaceBasis& basis) {
    if (v.dim != basis.ambient_dim())
        throw std::invalid_argument("membership: dimension mismatch");
    std::vector<Scalar> coeffs(basis.size(), Scalar());
    SparseVector r = v;
    for (size_t k = 0; k < basis.size() && !r.is_zero(); ++k) {
        Scalar c = r.get(basis.pivots()[k]);
        if (!c.is_zero()) {
            coeffs[k] = c;
            r = r - basis.vectors()[k].scaled(c);
        }
    }
    if (!r.is_zero()) return std::nullopt;
    return coeffs;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs) {
    if (rhs.dim != m.rows) throw std::invalid_argument("solve: dimension mismatch");
    // echelonize augmented columns [col_j | e_j]; the bookkeeping block tracks
    // which combination of columns reproduces the reduced part
    const Index n = m.cols;
    SubspaceBasis b(m.rows + n);
    for (Index j = 0; j < n; ++j) {
        SparseVector aug(m.rows + n);
        SparseVector col = m.column(j);
        for (const auto& [i, v] : col.entries) aug.entries.emplace(i, v);
        aug.set(m.rows + j, Scalar(1));
        b.insert(std::move(aug));
    }
    // reduce rhs against the basis; residual must vanish on the first block
    SparseVector target(m.rows + n);
    for (const auto& [i, v] : rhs.entries) target.entries.emplace(i, v);
    std::vector<Scalar> combo(n, Scalar());
    SparseVector r = target;
    for (size_t k = 0; k < b.size() && !r.is_zero(); ++k) {
        Index p = b.pivots()[k];
        if (p >= m.rows) break; // rows pivoting in the bookkeeping block cannot help
        Scalar c = r.get(p);
        if (!c.is_zero()) r = r - b.vectors()[k].scaled(c);
    }
    SparseVector x(n);
    for (const auto& [i, v] : r.entries) {
        if (i < m.rows) return std::nullopt; // inconsistent
        x.add(i - m.rows, -v);
    }
    // r = target - sum c_k row_k; bookkeeping block of the rows carries the
    // combination of original columns, so x solves m x = rhs
    return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    SparseMatrix inv(m.rows, m.cols);
    for (Index j = 0; j < m.cols; ++j) {
        SparseVector e(m.rows);
        e.set(j, Scalar(1));
        auto x = solve(m, e);
        if (!x) return std::nullopt;
        inv.set_column(j, *x);
    }
    return inv;
}

std::vector<Scalar> char_poly(const SparseMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("char_poly: square matrix required");
    const Index n = a.rows;
    std::vector<Scalar> c(n, Scalar());
    SparseMatrix m = a;
    for (Index k = 1; k <= n; ++k) {
        if (k > 1) {
            SparseMatrix shifted = m;
            for (Index i = 0; i < n; ++i) shifted.add(i, i, c[k - 2]);
            m = a * shifted;
        }
        Scalar tr;
        for (Index i = 0; i < n; ++i) tr += m.get(i, i);
        c[k - 1] = -(tr * Scalar(1, static_cast<unsigned long>(k)));
    }
    return c;
}

} // namespace hopfhc
