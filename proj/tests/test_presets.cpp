#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfhc/presets.hpp"

#include <cstdlib>

using namespace hopfhc;

namespace {

AlgebraElement word(const std::shared_ptr<const HopfPreset>& p, const std::string& name,
                    Scalar c = Scalar(1)) {
    auto w = p->find_word(name);
    REQUIRE(w);
    return AlgebraElement::term(p.get(), *w, c);
}

TensorElement tensor(const std::shared_ptr<const HopfPreset>& p,
                     std::vector<std::pair<std::vector<std::string>, Scalar>> terms) {
    TensorElement t(p.get(), static_cast<int>(terms[0].first.size()));
    for (auto& [names, c] : terms) {
        std::vector<WordId> ids;
        for (auto& n : names) {
            auto w = p->find_word(n);
            REQUIRE(w);
            ids.push_back(*w);
        }
        t.add(ids, c);
    }
    return t;
}

} // namespace

TEST_CASE("uq_sl2 relations") {
    auto H = HopfPreset::uq_sl2(Scalar(2), 3);
    Scalar q = H->q();
    SUBCASE("K X+ K^-1 = q^2 X+") {
        auto lhs = multiply(multiply(word(H, "K+"), word(H, "Xp")), word(H, "K-"));
        CHECK(lhs == word(H, "Xp", q * q));
    }
    SUBCASE("[X+, X-] = (K - K^-1)/(q - q^-1)") {
        auto comm = multiply(word(H, "Xp"), word(H, "Xm")) -
                    multiply(word(H, "Xm"), word(H, "Xp"));
        Scalar inv = (q - q.inverse()).inverse();
        AlgebraElement expect = word(H, "K+", inv) - word(H, "K-", inv);
        CHECK(comm == expect);
    }
    SUBCASE("K K^-1 = 1") {
        CHECK(multiply(word(H, "K+"), word(H, "K-")) == unit_element(H.get()));
    }
    SUBCASE("PBW normal form of a scrambled product") {
        auto v = multiply(multiply(word(H, "Xp"), word(H, "Xm")), word(H, "K+"));
        CHECK_FALSE(v.is_zero());
        for (const auto& [w, c] : v.terms) {
            (void)c;
            auto [a, b, cc] = H->uq_decode(w);
            CHECK(a >= 0);
            CHECK(cc >= 0);
            CHECK(std::abs(b) <= 3);
        }
    }
}

TEST_CASE("uq_sl2 coalgebra structure") {
    auto H = HopfPreset::uq_sl2(Scalar(2), 3);
    SUBCASE("Delta(X+) = 1 (x) X+ + X+ (x) K") {
        CHECK(coproduct(word(H, "Xp")) ==
              tensor(H, {{{"1", "Xp"}, Scalar(1)}, {{"Xp", "K+"}, Scalar(1)}}));
    }
    SUBCASE("Delta(X-) = K^-1 (x) X- + X- (x) 1") {
        CHECK(coproduct(word(H, "Xm")) ==
              tensor(H, {{{"K-", "Xm"}, Scalar(1)}, {{"Xm", "1"}, Scalar(1)}}));
    }
    SUBCASE("Delta^2(X+) = 1(x)1(x)X+ + 1(x)X+(x)K + X+(x)K(x)K") {
        CHECK(iterated_coproduct(word(H, "Xp"), 2) ==
              tensor(H, {{{"1", "1", "Xp"}, Scalar(1)},
                         {{"1", "Xp", "K+"}, Scalar(1)},
                         {{"Xp", "K+", "K+"}, Scalar(1)}}));
    }
    SUBCASE("counit on generators") {
        CHECK(counit(word(H, "Xp")) == Scalar(0));
        CHECK(counit(word(H, "Xm")) == Scalar(0));
        CHECK(counit(word(H, "K+")) == Scalar(1));
        CHECK(counit(word(H, "K-")) == Scalar(1));
    }
    SUBCASE("antipode on generators") {
        CHECK(antipode(word(H, "Xp"), 1) == multiply(word(H, "Xp", Scalar(-1)), word(H, "K-")));
        CHECK(antipode(word(H, "Xm"), 1) == multiply(word(H, "K+", Scalar(-1)), word(H, "Xm")));
        CHECK(antipode(word(H, "K+"), 1) == word(H, "K-"));
        CHECK(antipode(antipode(word(H, "Xp"), 1), -1) == word(H, "Xp"));
    }
    SUBCASE("degree cap overflow raises") {
        auto H1 = HopfPreset::uq_sl2(Scalar(2), 1);
        auto xp = word(H1, "Xp");
        CHECK_THROWS_AS((void)multiply(xp, xp), DegreeOverflow);
    }
    SUBCASE("q is forbidden at roots of unity") {
        CHECK_THROWS(HopfPreset::uq_sl2(Scalar(1), 2));
        CHECK_THROWS(HopfPreset::uq_sl2(Scalar(-1), 2));
        CHECK_THROWS(HopfPreset::uq_sl2(Scalar(0), 2));
    }
}

TEST_CASE("sweedler4 structure") {
    auto H = HopfPreset::sweedler4();
    SUBCASE("x g = -g x") {
        CHECK(multiply(word(H, "x"), word(H, "g")) == word(H, "gx", Scalar(-1)));
        CHECK(multiply(word(H, "g"), word(H, "x")) == word(H, "gx"));
    }
    SUBCASE("g^2 = 1, x^2 = 0") {
        CHECK(multiply(word(H, "g"), word(H, "g")) == unit_element(H.get()));
        CHECK(multiply(word(H, "x"), word(H, "x")).is_zero());
    }
    SUBCASE("Delta(g) grouplike") {
        CHECK(coproduct(word(H, "g")) == tensor(H, {{{"g", "g"}, Scalar(1)}}));
    }
    SUBCASE("Delta^2(x) = x(x)1(x)1 + g(x)x(x)1 + g(x)g(x)x") {
        CHECK(iterated_coproduct(word(H, "x"), 2) ==
              tensor(H, {{{"x", "1", "1"}, Scalar(1)},
                         {{"g", "x", "1"}, Scalar(1)},
                         {{"g", "g", "x"}, Scalar(1)}}));
    }
    SUBCASE("counit values") {
        CHECK(counit(word(H, "gx")) == Scalar(0));
        CHECK(counit(word(H, "g")) == Scalar(1));
    }
    SUBCASE("antipode order four") {
        CHECK(antipode(word(H, "x"), 1) == word(H, "gx", Scalar(-1)));
        CHECK(antipode(word(H, "x"), -1) == word(H, "gx"));
        auto s2 = antipode(antipode(word(H, "x"), 1), 1);
        CHECK(s2 == word(H, "x", Scalar(-1)));
        auto s4 = antipode(antipode(s2, 1), 1);
        CHECK(s4 == word(H, "x"));
        for (WordId w = 0; w < H->dim(); ++w) {
            auto a = AlgebraElement::term(H.get(), w);
            CHECK(antipode(antipode(a, 1), -1) == a);
        }
    }
    SUBCASE("coadjoint coaction") {
        CHECK(coadjoint_coaction(unit_element(H.get())) == tensor(H, {{{"1", "1"}, Scalar(1)}}));
        CHECK(coadjoint_coaction(word(H, "g")) == tensor(H, {{{"g", "1"}, Scalar(1)}}));
        CHECK(coadjoint_coaction(word(H, "x")) ==
              tensor(H, {{{"x", "g"}, Scalar(1)},
                         {{"1", "gx"}, Scalar(-1)},
                         {{"g", "gx"}, Scalar(-1)}}));
    }
}

TEST_CASE("group algebras") {
    auto C2 = HopfPreset::group_c2();
    CHECK(coproduct(word(C2, "g")) == tensor(C2, {{{"g", "g"}, Scalar(1)}}));
    CHECK(antipode(word(C2, "g"), 1) == word(C2, "g"));
    CHECK(multiply(word(C2, "g"), word(C2, "g")) == unit_element(C2.get()));

    auto S3 = HopfPreset::group_s3();
    CHECK(S3->dim() == 6);
    auto ab = multiply(word(S3, "(01)"), word(S3, "(12)"));
    auto ba = multiply(word(S3, "(12)"), word(S3, "(01)"));
    CHECK_FALSE(ab == ba);
    for (WordId w = 0; w < S3->dim(); ++w) {
        auto prod = multiply(AlgebraElement::term(S3.get(), w), S3->antipode_word(w, 1));
        CHECK(prod == unit_element(S3.get()));
    }
    for (WordId w = 0; w < S3->dim(); ++w) {
        TensorElement d = S3->coproduct_word(w);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms.begin()->first == std::vector<WordId>{w, w});
    }
}

TEST_CASE("iterated coproduct basics") {
    for (auto H : {HopfPreset::trivial_k(), HopfPreset::group_c2(), HopfPreset::sweedler4()}) {
        auto one = unit_element(H.get());
        TensorElement d3 = iterated_coproduct(one, 3);
        REQUIRE(d3.terms.size() == 1);
        CHECK(d3.terms.begin()->first == std::vector<WordId>(4, H->unit_word()));
        for (WordId w = 0; w < H->dim(); ++w) {
            TensorElement d = H->coproduct_word(w);
            CHECK(comultiply_slot(d, 0) == comultiply_slot(d, 1));
        }
    }
}

TEST_CASE("axiom checker") {
    SUBCASE("finite presets pass everything") {
        for (auto H : {HopfPreset::trivial_k(), HopfPreset::group_c2(), HopfPreset::group_s3(),
                       HopfPreset::sweedler4()}) {
            AxiomLedger lg = check_hopf_axioms(*H, static_cast<std::size_t>(-1));
            for (const auto& e : lg.entries) {
                INFO(H->name(), "/", e.name, ": ", e.witness);
                CHECK(e.pass);
            }
        }
    }
    SUBCASE("uq_sl2 cap 2 passes on in-cap words") {
        auto H = HopfPreset::uq_sl2(Scalar(2), 2);
        AxiomLedger lg = check_hopf_axioms(*H, static_cast<std::size_t>(-1));
        for (const auto& e : lg.entries) {
            INFO(e.name, ": ", e.witness);
            CHECK(e.pass);
            CHECK(e.checked > 0);
        }
    }
    SUBCASE("cocommutativity flags agree with the basis scan") {
        CHECK(HopfPreset::group_c2()->is_cocommutative());
        CHECK(HopfPreset::group_s3()->is_cocommutative());
        CHECK_FALSE(HopfPreset::sweedler4()->is_cocommutative());
    }
}

TEST_CASE("epsilon multiplicative on all pairs") {
    for (auto H : {HopfPreset::group_s3(), HopfPreset::sweedler4()}) {
        for (WordId a = 0; a < H->dim(); ++a)
            for (WordId b = 0; b < H->dim(); ++b) {
                auto ab = H->multiply_words(a, b);
                CHECK(counit(ab) == H->counit_word(a) * H->counit_word(b));
            }
    }
}

TEST_CASE("symbolic q mode") {
    auto H = HopfPreset::uq_sl2(Scalar::q(), 2);
    Scalar q = Scalar::q();
    auto comm = multiply(word(H, "Xp"), word(H, "Xm")) - multiply(word(H, "Xm"), word(H, "Xp"));
    Scalar inv = (q - q.inverse()).inverse();
    CHECK(comm == word(H, "K+", inv) - word(H, "K-", inv));
    AxiomLedger lg = check_hopf_axioms(*H, 30); // a small-degree sample keeps Q(q) gcds cheap
    for (const auto& e : lg.entries) {
        INFO(e.name, ": ", e.witness);
        CHECK(e.pass);
    }
}
