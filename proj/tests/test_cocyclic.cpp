#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfhc/cocyclic.hpp"

using namespace hopfhc;

namespace {

struct Setup {
    std::shared_ptr<const HopfPreset> B;
    std::shared_ptr<const ModuleCoalgebra> X;
    std::shared_ptr<const CoefficientModule> Y;

    Setup(std::shared_ptr<const HopfPreset> b, std::shared_ptr<const CoefficientModule> y)
        : B(std::move(b)), X(ModuleCoalgebra::self(B)), Y(std::move(y)) {}

    WordId w(const std::string& name) const { return *B->find_word(name); }
    int ytag(const std::string& name) const {
        for (std::size_t t = 0; t < Y->dim(); ++t)
            if (Y->y_name(static_cast<int>(t)) == name) return static_cast<int>(t);
        REQUIRE(false);
        return -1;
    }
    Chain chain(std::vector<std::string> slots, int tag = 0, Scalar c = Scalar(1)) const {
        std::vector<XId> ids;
        for (auto& s : slots) ids.push_back(w(s));
        return Chain::unit_term(X.get(), Y.get(), ids, tag, c);
    }
};

template <typename F>
void all_chains(const Setup& s, int slots, F&& f) {
    ChainSpace sp(s.X.get(), s.Y.get(), slots);
    for (Index i = 0; i < sp.dim(); ++i) {
        Chain v(s.X.get(), s.Y.get(), slots);
        v.add(sp.key_of(i), Scalar(1));
        f(v);
    }
}

} // namespace

TEST_CASE("faces on the T-complex") {
    SUBCASE("grouplike comultiplication, kC2 trivial") {
        Setup s(HopfPreset::group_c2(), CoefficientModule::trivial(HopfPreset::group_c2()));
        CHECK(face_T(0, s.chain({"g"})) == s.chain({"g", "g"}));
    }
    SUBCASE("middle and last face on sweedler4, modular_pair(eps, g)") {
        auto B = HopfPreset::sweedler4();
        Setup s(B, CoefficientModule::modular_pair(B, "counit", "g"));
        Chain v = s.chain({"1", "x"});
        CHECK(face_T(1, v) == s.chain({"1", "x", "1"}) + s.chain({"1", "g", "x"}));
        CHECK(face_T(2, v) == s.chain({"1", "x", "g"}));
    }
}

TEST_CASE("cyclic operator on the T-complex") {
    auto B = HopfPreset::sweedler4();
    SUBCASE("trivial coaction rotates slots") {
        Setup s(B, CoefficientModule::trivial(B));
        CHECK(cyclic_T(-1, s.chain({"x", "g"})) == s.chain({"g", "x"}));
    }
    SUBCASE("modular pair twists slot 0") {
        Setup s(B, CoefficientModule::modular_pair(B, "counit", "g"));
        CHECK(cyclic_T(-1, s.chain({"x", "1"})) == s.chain({"1", "gx"}));
        CHECK(cyclic_T(1, s.chain({"1", "x"})) == s.chain({"gx", "1"}));
    }
    SUBCASE("tau tau^-1 = id on every basis chain, n <= 2") {
        for (auto Y : {CoefficientModule::trivial(B),
                       CoefficientModule::modular_pair(B, "counit", "g"),
                       CoefficientModule::coalgebra_self(B)}) {
            Setup s(B, Y);
            for (int n = 0; n <= 2; ++n)
                all_chains(s, n + 1, [&](const Chain& v) {
                    CHECK(cyclic_T(1, cyclic_T(-1, v)) == v);
                    CHECK(cyclic_T(-1, cyclic_T(1, v)) == v);
                });
        }
    }
}

TEST_CASE("para-cocyclic relations, sweedler4 x coalgebra_self, n <= 2") {
    auto B = HopfPreset::sweedler4();
    Setup s(B, CoefficientModule::coalgebra_self(B));
    for (int n = 0; n <= 2; ++n) {
        all_chains(s, n + 1, [&](const Chain& v) {
            for (int j = 0; j <= n; ++j)
                CHECK(cyclic_T(1, face_T(j, v)) == face_T(j + 1, cyclic_T(1, v)));
            CHECK(cyclic_T(1, face_T(n + 1, v)) == face_T(0, v));
            for (int j = 0; j <= n + 1; ++j)
                for (int i = 0; i <= j; ++i)
                    CHECK(face_T(i, face_T(j, v)) == face_T(j + 1, face_T(i, v)));
        });
    }
}

TEST_CASE("cobar complex and Phi") {
    auto B = HopfPreset::sweedler4();
    Setup s(B, CoefficientModule::trivial(B));
    SUBCASE("cobar face 0 applies the coadjoint coaction") {
        CHECK(cobar_face(0, s.chain({"1"})) == s.chain({"1", "1"}));
        CHECK(cobar_face(0, s.chain({"g"})) == s.chain({"g", "1"}));
    }
    SUBCASE("last cobar face inserts the trivial coaction leg") {
        CHECK(cobar_face(1, s.chain({"g"})) == s.chain({"g", "1"}));
    }
    SUBCASE("Phi_0 is the identity") {
        for (auto name : {"1", "g", "x", "gx"})
            CHECK(phi(1, s.chain({name})) == s.chain({name}));
    }
    SUBCASE("Phi_1(g (x) x (x) y) = -(g (x) gx (x) y)") {
        CHECK(phi(1, s.chain({"g", "x"})) == s.chain({"g", "gx"}, 0, Scalar(-1)));
    }
    SUBCASE("Phi_1 on grouplikes divides out the first leg") {
        Setup c2(HopfPreset::group_c2(), CoefficientModule::trivial(HopfPreset::group_c2()));
        CHECK(phi(1, c2.chain({"g", "g"})) == c2.chain({"g", "1"}));
    }
    SUBCASE("Phi and Phi^-1 are mutually inverse, n <= 2") {
        for (int n = 0; n <= 2; ++n)
            all_chains(s, n + 1, [&](const Chain& v) {
                CHECK(phi(-1, phi(1, v)) == v);
                CHECK(phi(1, phi(-1, v)) == v);
            });
    }
    SUBCASE("Phi intertwines the faces, n <= 2") {
        for (int n = 0; n <= 2; ++n)
            all_chains(s, n + 1, [&](const Chain& v) {
                for (int j = 0; j <= n + 1; ++j)
                    CHECK(phi(1, face_T(j, v)) == cobar_face(j, phi(1, v)));
            });
    }
    SUBCASE("transported cyclic operator fixes degree-0 trivial-coaction chains") {
        CHECK(cobar_cyclic_inv(s.chain({"gx"})) == s.chain({"gx"}));
    }
}

TEST_CASE("projection p and inclusion i") {
    SUBCASE("p_0 on kC2 trivial applies eps after the antipode") {
        Setup s(HopfPreset::group_c2(), CoefficientModule::trivial(HopfPreset::group_c2()));
        CHECK(cm_project(s.chain({"g"})) == Chain::unit_term(s.X.get(), s.Y.get(), {}, 0));
        CHECK(cm_project(s.chain({"g", "g"})) == s.chain({"1"}));
    }
    SUBCASE("p i = id for 1-stable coefficients, n <= 3") {
        auto B = HopfPreset::sweedler4();
        for (auto Y : {CoefficientModule::trivial(B),
                       CoefficientModule::modular_pair(B, "counit", "g")}) {
            Setup s(B, Y);
            for (int n = 0; n <= 3; ++n)
                all_chains(s, n, [&](const Chain& w) { CHECK(cm_project(cm_include(w)) == w); });
        }
    }
    SUBCASE("inclusion examples") {
        auto B = HopfPreset::sweedler4();
        Setup tr(B, CoefficientModule::trivial(B));
        CHECK(cm_include(tr.chain({"g"})) == tr.chain({"g", "1"}));
        Setup mp(B, CoefficientModule::modular_pair(B, "counit", "g"));
        CHECK(cm_include(Chain::unit_term(mp.X.get(), mp.Y.get(), {}, 0)) == mp.chain({"g"}));
        Setup cs(B, CoefficientModule::coalgebra_self(B));
        Chain i0 = cm_include(Chain::unit_term(cs.X.get(), cs.Y.get(), {}, cs.ytag("x")));
        CHECK(i0 == cs.chain({"x"}, cs.ytag("1")) + cs.chain({"g"}, cs.ytag("x")));
    }
}

TEST_CASE("cyclic operator on CM") {
    SUBCASE("kC2 trivial fixes g at degree 1") {
        Setup s(HopfPreset::group_c2(), CoefficientModule::trivial(HopfPreset::group_c2()));
        CHECK(cm_cyclic_inv(s.chain({"g"})) == s.chain({"g"}));
    }
    SUBCASE("t t^-1 = id on basis chains, n <= 2") {
        auto B = HopfPreset::sweedler4();
        Setup s(B, CoefficientModule::trivial(B));
        for (int n = 1; n <= 2; ++n)
            all_chains(s, n, [&](const Chain& w) {
                CHECK(cm_cyclic(1, cm_cyclic(-1, w)) == w);
            });
    }
    SUBCASE("order n+1 on stable coefficients: t_2^3 = id") {
        auto B = HopfPreset::sweedler4();
        Setup s(B, CoefficientModule::trivial(B));
        all_chains(s, 2, [&](const Chain& w) {
            Chain r = cm_cyclic_inv(cm_cyclic_inv(cm_cyclic_inv(w)));
            CHECK(r == w);
        });
    }
    SUBCASE("refuses coefficients that are not 1-stable") {
        auto C2 = HopfPreset::group_c2();
        Setup s(C2, CoefficientModule::modular_pair(C2, "sign", "g"));
        CHECK_THROWS_AS((void)cm_cyclic(-1, s.chain({"g"})), NotStable);
    }
}

TEST_CASE("CM faces") {
    auto B = HopfPreset::sweedler4();
    SUBCASE("classical face 0 inserts the unit") {
        Setup s(B, CoefficientModule::trivial(B));
        CHECK(cm_face(CmFaceVariant::Classical, 0, s.chain({"x"})) == s.chain({"1", "x"}));
    }
    SUBCASE("derived faces at degree 0") {
        Setup s(B, CoefficientModule::modular_pair(B, "counit", "g"));
        Chain y0 = Chain::unit_term(s.X.get(), s.Y.get(), {}, 0);
        CHECK(cm_face(CmFaceVariant::Derived, 0, y0) == s.chain({"g"}));
        CHECK(cm_face(CmFaceVariant::Derived, 1, y0) == s.chain({"1"}));
    }
}

TEST_CASE("kappa endomorphisms") {
    SUBCASE("commutative preset kills kappa at degree 0") {
        auto C2 = HopfPreset::group_c2();
        Setup s(C2, CoefficientModule::coalgebra_self(C2));
        AlgebraElement g = AlgebraElement::term(C2.get(), *C2->find_word("g"));
        for (std::size_t t = 0; t < s.Y->dim(); ++t)
            CHECK(kappa(g, s.chain({"g"}, static_cast<int>(t))).is_zero());
    }
    SUBCASE("sweedler4 modular pair: kappa_x(1 (x) 1_Y) = 2 gx (x) 1_Y") {
        auto B = HopfPreset::sweedler4();
        Setup s(B, CoefficientModule::modular_pair(B, "counit", "g"));
        AlgebraElement x = AlgebraElement::term(B.get(), *B->find_word("x"));
        Chain k = kappa(x, s.chain({"1"}));
        CHECK(k == s.chain({"gx"}, 0, Scalar(2)));
        CHECK(cm_project(k).is_zero());
    }
    SUBCASE("closed formula matches the definitional composite, n <= 2") {
        auto B = HopfPreset::sweedler4();
        for (auto Y : {CoefficientModule::modular_pair(B, "counit", "g"),
                       CoefficientModule::coalgebra_self(B)}) {
            Setup s(B, Y);
            for (int n = 0; n <= 2; ++n) {
                for (auto xn : {"g", "x"}) {
                    AlgebraElement x = AlgebraElement::term(B.get(), *B->find_word(xn));
                    all_chains(s, n + 1, [&](const Chain& v) {
                        CHECK(kappa(x, v) == kappa_definitional(x, v));
                    });
                }
            }
        }
    }
    SUBCASE("conjugation with j = 0 is kappa itself") {
        auto B = HopfPreset::sweedler4();
        Setup s(B, CoefficientModule::modular_pair(B, "counit", "g"));
        AlgebraElement x = AlgebraElement::term(B.get(), *B->find_word("x"));
        all_chains(s, 2, [&](const Chain& v) {
            CHECK(kappa_conjugated(x, 0, v) == kappa(x, v));
        });
    }
    SUBCASE("insertion formula on kC2 self-coalgebra vanishes") {
        auto C2 = HopfPreset::group_c2();
        Setup s(C2, CoefficientModule::coalgebra_self(C2));
        AlgebraElement g = AlgebraElement::term(C2.get(), *C2->find_word("g"));
        for (int j = 0; j <= 1; ++j)
            all_chains(s, 2, [&](const Chain& v) {
                CHECK(kappa_conjugated(g, j, v).is_zero());
                CHECK(kappa_insertion(g, j, v).is_zero());
            });
    }
    SUBCASE("insertion formula with a central class sum on kS3") {
        auto S3 = HopfPreset::group_s3();
        Setup s(S3, CoefficientModule::coalgebra_self(S3));
        // class sum of the three transpositions: cocentral and central
        AlgebraElement cs(S3.get());
        cs.add(*S3->find_word("(01)"), Scalar(1));
        cs.add(*S3->find_word("(02)"), Scalar(1));
        cs.add(*S3->find_word("(12)"), Scalar(1));
        Chain v = s.chain({"(012)", "(01)"}, s.ytag("(12)"));
        Chain general = kappa_conjugated(cs, 1, v);
        Chain reduced = kappa_insertion(cs, 1, v);
        CHECK(general == reduced);
        CHECK(general.is_zero()); // central element: the commutator insertion dies
    }
    SUBCASE("noncentral single elements agree with the insertion form on kS3") {
        auto S3 = HopfPreset::group_s3();
        Setup s(S3, CoefficientModule::coalgebra_self(S3));
        AlgebraElement g = AlgebraElement::term(S3.get(), *S3->find_word("(01)"));
        Chain v = s.chain({"(012)", "e"}, s.ytag("(12)"));
        CHECK(kappa_conjugated(g, 1, v) == kappa_insertion(g, 1, v));
        CHECK_FALSE(kappa_conjugated(g, 1, v).is_zero());
    }
}
