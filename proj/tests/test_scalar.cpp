#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfhc/scalar.hpp"

#include <cstdint>

using namespace hopfhc;

namespace {

// deterministic xorshift generator for the randomized exact identities
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Scalar rational() {
        long num = small(-20, 20);
        long den = small(1, 12);
        return Scalar(num, static_cast<unsigned long>(den));
    }
    Scalar ratfun() {
        // (a q + b) / (q + c) style small fractions, c != 0 avoided implicitly
        Poly num = Poly::monomial(small(-5, 5), 1) + Poly(mpq_class(small(-5, 5)));
        Poly den = Poly::monomial(1, 1) + Poly(mpq_class(small(1, 7)));
        if (num.is_zero()) num = Poly(mpq_class(1));
        return Scalar(num, den);
    }
};

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(-2, 4).str() == "-1/2");
    CHECK(Scalar(0, 7) == Scalar(0));
    CHECK(Scalar(6).str() == "6");
}

TEST_CASE("ratfun reduction and demotion") {
    Scalar q = Scalar::q();
    // (q^2 - 1)/(q - 1) = q + 1
    Scalar top = q * q - Scalar(1);
    Scalar bottom = q - Scalar(1);
    Scalar reduced = top / bottom;
    CHECK(reduced == q + Scalar(1));
    CHECK_FALSE(reduced.is_rational());
    // q / q demotes back to the rational 1
    Scalar one = q / q;
    CHECK(one.is_rational());
    CHECK(one == Scalar(1));
    // denominator is kept monic: 1 / (2q) = (1/2) / q
    Scalar inv2q = (q + q).inverse();
    CHECK(inv2q.den().leading() == 1);
    CHECK(inv2q * (q + q) == Scalar(1));
}

TEST_CASE("q powers") {
    Scalar q = Scalar::q();
    CHECK(Scalar::q_power(3) == q * q * q);
    CHECK(Scalar::q_power(-2) * q * q == Scalar(1));
    CHECK(Scalar::q_power(0) == Scalar(1));
}

TEST_CASE("field identities, randomized exact") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Scalar a = (i % 2) ? rng.rational() : rng.ratfun();
        Scalar b = (i % 3) ? rng.rational() : rng.ratfun();
        Scalar c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("mixed-mode arithmetic stays exact") {
    Scalar q = Scalar::q();
    Scalar half(1, 2);
    Scalar v = half * q + half * q; // = q
    CHECK(v == q);
    Scalar w = (q + half) - q;
    CHECK(w.is_rational());
    CHECK(w == half);
}

TEST_CASE("from_string parses rational literals") {
    CHECK(Scalar::from_string("2") == Scalar(2));
    CHECK(Scalar::from_string("-7/3") == Scalar(-7, 3));
    CHECK_THROWS(Scalar::from_string("q"));
}
