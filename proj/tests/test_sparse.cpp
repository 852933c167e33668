#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfhc/sparse.hpp"

using namespace hopfhc;

namespace {

SparseMatrix from_rows(std::vector<std::vector<Scalar>> rows) {
    SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (Index r = 0; r < rows.size(); ++r)
        for (Index c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    return m;
}

SparseVector vec(std::vector<Scalar> entries) {
    SparseVector v(entries.size());
    for (Index i = 0; i < entries.size(); ++i) v.set(i, entries[i]);
    return v;
}

} // namespace

TEST_CASE("rank: identity, zero, q-dependent") {
    CHECK(rank(SparseMatrix::identity(2)) == 2);
    CHECK(rank(SparseMatrix(3, 4)) == 0);
    // [[1, q], [q, q^2]] over Q(q): second row is q times the first
    Scalar q = Scalar::q();
    auto m = from_rows({{Scalar(1), q}, {q, q * q}});
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(SparseMatrix::identity(2)).size() == 0);
    CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);
    auto m = from_rows({{Scalar(1), Scalar(1)}});
    SubspaceBasis k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k.vectors()[0] == vec({Scalar(1), Scalar(-1)}));
}

TEST_CASE("rank-nullity on random-ish matrices") {
    for (int seed = 1; seed <= 40; ++seed) {
        SparseMatrix m(4, 5);
        unsigned s = static_cast<unsigned>(seed);
        for (Index r = 0; r < 4; ++r)
            for (Index c = 0; c < 5; ++c) {
                s = s * 1103515245u + 12345u;
                long v = static_cast<long>((s >> 16) % 5) - 2;
                m.set(r, c, Scalar(v));
            }
        CHECK(rank(m) + kernel_basis(m).size() == m.cols);
    }
}

TEST_CASE("quotient projection") {
    SUBCASE("dim 2 by span{(1,-1)}") {
        auto qp = quotient_projection(2, {vec({Scalar(1), Scalar(-1)})});
        REQUIRE(qp.representatives == std::vector<Index>{1});
        // projection sends (a, b) to a+b in the representative coordinate
        SparseVector ab = vec({Scalar(3), Scalar(4)});
        SparseVector img = qp.projection.apply(ab);
        CHECK(img.get(0) == Scalar(7));
    }
    SUBCASE("no generators") {
        auto qp = quotient_projection(3, {});
        CHECK(qp.representatives.size() == 3);
        CHECK(qp.projection == SparseMatrix::identity(3));
    }
    SUBCASE("full span") {
        auto qp = quotient_projection(2, {vec({Scalar(1), Scalar(0)}), vec({Scalar(0), Scalar(1)})});
        CHECK(qp.representatives.empty());
    }
    SUBCASE("projection o inclusion = id") {
        auto qp = quotient_projection(4, {vec({Scalar(1), Scalar(2), Scalar(0), Scalar(1)}),
                                          vec({Scalar(0), Scalar(1), Scalar(1), Scalar(0)})});
        SparseMatrix incl(4, qp.representatives.size());
        for (Index k = 0; k < qp.representatives.size(); ++k)
            incl.set(qp.representatives[k], k, Scalar(1));
        CHECK(qp.projection * incl == SparseMatrix::identity(qp.representatives.size()));
        // full row rank = ambient - rank(generators)
        CHECK(rank(qp.projection) == qp.representatives.size());
    }
}

TEST_CASE("membership") {
    SubspaceBasis b(2);
    b.insert(vec({Scalar(1), Scalar(-1)}));
    SUBCASE("zero vector is a member with empty coefficients") {
        auto c = membership(SparseVector(2), b);
        REQUIRE(c);
        CHECK((*c)[0] == Scalar(0));
    }
    SUBCASE("basis vector") {
        auto c = membership(vec({Scalar(1), Scalar(-1)}), b);
        REQUIRE(c);
        CHECK((*c)[0] == Scalar(1));
    }
    SUBCASE("outside the span") {
        CHECK_FALSE(membership(vec({Scalar(1), Scalar(1)}), b));
    }
}

TEST_CASE("echelonization is deterministic") {
    auto build = [](std::vector<SparseVector> gens) {
        SubspaceBasis b(3);
        for (auto& g : gens) b.insert(g);
        return b;
    };
    auto v1 = vec({Scalar(1), Scalar(2), Scalar(3)});
    auto v2 = vec({Scalar(0), Scalar(1), Scalar(1)});
    auto v3 = v1 + v2.scaled(Scalar(5));
    CHECK(build({v1, v2, v3}) == build({v3, v2, v1}));
}

TEST_CASE("solve and inverse") {
    auto m = from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}});
    auto x = solve(m, vec({Scalar(3), Scalar(2)}));
    REQUIRE(x);
    CHECK(m.apply(*x) == vec({Scalar(3), Scalar(2)}));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((*inv) * m == SparseMatrix::identity(2));
    // singular
    auto s = from_rows({{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}});
    CHECK_FALSE(inverse(s));
    CHECK_FALSE(solve(s, vec({Scalar(1), Scalar(0)})));
}

TEST_CASE("char_poly matches hand examples") {
    // [[0, 1], [1, 0]]: x^2 - 1
    auto m = from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
    auto cp = char_poly(m);
    REQUIRE(cp.size() == 2);
    CHECK(cp[0] == Scalar(0));
    CHECK(cp[1] == Scalar(-1));
    // diag(2, 3): x^2 - 5x + 6
    auto d = from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(3)}});
    auto cd = char_poly(d);
    CHECK(cd[0] == Scalar(-5));
    CHECK(cd[1] == Scalar(6));
}
