#include "doctest.h"

#include "helpers.hpp"
#include "hhgap/hochschild.hpp"

using namespace hhgap;
using namespace hhgap::test;

namespace {

HomologyOptions opts() {
    HomologyOptions o;
    o.internal_cap = 12;
    return o;
}

PresentationPtr zsqrt2() {
    return make_pres(
        "ring = \"Z\"\nvars = [\"t\"]\nrelations = [\"t^2 - 2\"]\n");
}

PresentationPtr dual_f5() {
    return make_pres(
        "ring = \"Fp:5\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n");
}

ModulePresentation s_module(PresentationPtr p) {
    return ModulePresentation::free_rank_one(p);
}

std::vector<int64_t> factors_of(const ModuleDescriptor& d) {
    ModuleDescriptor c = ModuleDescriptor::from_factors(d.factors);
    return c.factors;
}

}  // namespace

TEST_CASE("enveloping presentations") {
    SUBCASE("polynomial ring") {
        auto env = enveloping(rationals_in("x"));
        CHECK(env.env->nvars() == 2);
        CHECK(env.env->relations().empty());
        REQUIRE(env.diagonal_gens.size() == 1);
        CHECK(env.diagonal_gens[0] == env.env->parse_poly("x - x'"));
    }
    SUBCASE("Z[sqrt 2] doubles to a rank-4 order") {
        auto env = enveloping(zsqrt2());
        CHECK(env.env->nvars() == 2);
        CHECK(env.env->relations().size() == 2);
        CHECK(env.env->monomial_basis().size() == 4);
        REQUIRE(env.diagonal_gens.size() == 1);
        CHECK(env.diagonal_gens[0] == env.env->parse_poly("t - t'"));
    }
    SUBCASE("dual numbers over F5") {
        auto env = enveloping(dual_f5());
        CHECK(env.env->relations().size() == 2);
        CHECK(env.env->is_graded());
        CHECK(env.env->monomial_basis().size() == 4);
    }
    SUBCASE("section splits the multiplication") {
        auto s = rationals_in("x", "x^2");
        auto env = enveloping(s);
        // mult(section(x)) = x
        Polynomial img = env.mult.apply(env.section.images[0]);
        CHECK(img == Polynomial::variable(0, 1));
    }
    SUBCASE("diagonal generators span the kernel degreewise") {
        // quotient by the diagonal ideal has the Hilbert function of S
        auto s = rationals_in("x,y", "x^2;x*y");
        auto env = enveloping(s);
        std::vector<Polynomial> all = env.env->relations();
        for (const auto& g : env.diagonal_gens) all.push_back(g);
        AlgebraPresentation quot(env.env->ring(), env.env->vars(),
                                 env.env->degrees(), all);
        for (int64_t d = 0; d <= 6; ++d)
            CHECK(graded_piece_basis(quot, d).size() ==
                  graded_piece_basis(*s, d).size());
    }
}

TEST_CASE("periodic diagonal resolutions") {
    SUBCASE("Z[sqrt 2]: maps t - t' and t + t'") {
        auto env = enveloping(zsqrt2());
        DiagonalResolution res =
            diagonal_resolution(env, Strategy::Periodic, 6, opts());
        CHECK(res.complex.diff.at(1).at(0, 0) ==
              env.env->parse_poly("t - t'"));
        CHECK(res.complex.diff.at(2).at(0, 0) ==
              env.env->parse_poly("t + t'"));
        CHECK(res.complex.diff.at(3).at(0, 0) ==
              env.env->parse_poly("t - t'"));
    }
    SUBCASE("dual numbers: cofactor is x + x'") {
        auto env = enveloping(dual_f5());
        DiagonalResolution res =
            diagonal_resolution(env, Strategy::Periodic, 6, opts());
        CHECK(res.complex.diff.at(2).at(0, 0) ==
              env.env->parse_poly("x + x'"));
    }
    SUBCASE("etale: cofactor is e + e' - 1") {
        auto env = enveloping(rationals_in("e", "e^2 - e"));
        DiagonalResolution res =
            diagonal_resolution(env, Strategy::Periodic, 6, opts());
        CHECK(res.complex.diff.at(2).at(0, 0) ==
              env.env->parse_poly("e + e' - 1"));
    }
    SUBCASE("tensored down to S the maps become 0 and 2t") {
        auto s = zsqrt2();
        auto env = enveloping(s);
        DiagonalResolution res =
            diagonal_resolution(env, Strategy::Periodic, 4, opts());
        FreeComplex over_s = tensor_over_base(res.complex, env.mult);
        CHECK(over_s.diff.at(1).at(0, 0).is_zero());
        CHECK(over_s.diff.at(2).at(0, 0) == s->parse_poly("2*t"));
        CHECK(over_s.diff.at(3).at(0, 0).is_zero());
        CHECK(over_s.diff.at(4).at(0, 0) == s->parse_poly("2*t"));
    }
    SUBCASE("polynomial rings have no periodic strategy") {
        auto env = enveloping(rationals_in("x"));
        CHECK_THROWS_AS(
            diagonal_resolution(env, Strategy::Periodic, 4, opts()),
            StrategyInapplicable);
        DiagonalResolution res =
            diagonal_resolution(env, Strategy::Auto, 4, opts());
        CHECK(res.used == Strategy::Koszul);
    }
}

TEST_CASE("Hochschild homology of Z[sqrt 2] reproduces the periodic table") {
    auto s = zsqrt2();
    HochschildTable t =
        hochschild_homology(s, s_module(s), 5, Strategy::Auto, opts());
    CHECK(t.used == Strategy::Periodic);
    CHECK(factors_of(t.at(0)) == std::vector<int64_t>{0, 0});
    for (int n : {1, 3, 5})
        CHECK(factors_of(t.at(n)) == std::vector<int64_t>{2, 4});
    for (int n : {2, 4}) CHECK(t.at(n).is_zero());
    for (int n : {0, 1, 3, 5}) CHECK(t.at(n).nu == 1);
}

TEST_CASE("Hochschild cohomology of Z[sqrt 2] swaps the parities") {
    auto s = zsqrt2();
    HochschildTable t =
        hochschild_cohomology(s, s_module(s), 4, Strategy::Auto, opts());
    CHECK(factors_of(t.at(0)) == std::vector<int64_t>{0, 0});
    for (int n : {1, 3}) CHECK(t.at(n).is_zero());
    for (int n : {2, 4})
        CHECK(factors_of(t.at(n)) == std::vector<int64_t>{2, 4});
}

TEST_CASE("polynomial ring tables: HKR shape") {
    auto s = rationals_in("x");
    HochschildTable t =
        hochschild_homology(s, s_module(s), 3, Strategy::Auto, opts());
    CHECK(t.used == Strategy::Koszul);
    // HH_0 = S, HH_1 = Omega = S dx, HH_2 = HH_3 = 0
    KahlerModule km = kahler(s);
    CHECK(t.at(1).equals(module_descriptor(km.omega, opts())));
    CHECK(t.at(2).is_zero());
    CHECK(t.at(3).is_zero());
    CHECK(t.at(0).nu == 1);
    CHECK(t.at(1).nu == 1);

    HochschildTable tc =
        hochschild_cohomology(s, s_module(s), 2, Strategy::Auto, opts());
    CHECK_FALSE(tc.at(0).is_zero());
    CHECK_FALSE(tc.at(1).is_zero());
    CHECK(tc.at(2).is_zero());
}

TEST_CASE("dual numbers over F5: k-dimensions 2,1,1,1,1") {
    auto s = dual_f5();
    HochschildTable t =
        hochschild_homology(s, s_module(s), 4, Strategy::Auto, opts());
    std::vector<int64_t> want{2, 1, 1, 1, 1};
    for (int n = 0; n <= 4; ++n) CHECK(t.at(n).total_dim() == want[n]);
    HochschildTable tc =
        hochschild_cohomology(s, s_module(s), 4, Strategy::Auto, opts());
    for (int n = 0; n <= 4; ++n) CHECK(tc.at(n).total_dim() == want[n]);
}

TEST_CASE("bar oracle") {
    SUBCASE("the base field itself") {
        auto k = make_pres("ring = \"Q\"\nvars = []\nrelations = []\n");
        auto dims = bar_oracle(k, s_module(k), 2, false);
        CHECK(dims == std::vector<int64_t>{1, 0, 0});
    }
    SUBCASE("etale algebra vanishes in positive degrees") {
        auto e = rationals_in("e", "e^2 - e");
        auto dims = bar_oracle(e, s_module(e), 3, false);
        CHECK(dims == std::vector<int64_t>{2, 0, 0, 0});
    }
    SUBCASE("dual numbers over F5") {
        auto s = dual_f5();
        auto dims = bar_oracle(s, s_module(s), 2, false);
        CHECK(dims == std::vector<int64_t>{2, 1, 1});
    }
    SUBCASE("infinite dimensional input is rejected") {
        auto s = rationals_in("x");
        CHECK_THROWS_AS(bar_oracle(s, s_module(s), 2, false),
                        InfiniteDimensional);
    }
    SUBCASE("Z coefficients are rejected") {
        auto s = zsqrt2();
        CHECK_THROWS_AS(bar_oracle(s, s_module(s), 2, false), UnsupportedRing);
    }
}

TEST_CASE("oracle agreement with the resolution strategies") {
    for (const char* text :
         {"ring = \"Q\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n",
          "ring = \"Fp:5\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n",
          "ring = \"Q\"\nvars = [\"e\"]\nrelations = [\"e^2 - e\"]\n",
          "ring = \"Q\"\nvars = [\"x\"]\nrelations = [\"x^2 - 2\"]\n"}) {
        auto s = make_pres(text);
        for (bool coh : {false, true}) {
            HochschildTable t = coh ? hochschild_cohomology(s, s_module(s), 6,
                                                            Strategy::Auto,
                                                            opts())
                                    : hochschild_homology(s, s_module(s), 6,
                                                          Strategy::Auto,
                                                          opts());
            auto dims = bar_oracle(s, s_module(s), 6, coh);
            for (int n = 0; n <= 6; ++n)
                CHECK(t.at(n).total_dim() == dims[n]);
        }
    }
}

TEST_CASE("strategy independence where two strategies apply") {
    SUBCASE("dual numbers: periodic vs tate") {
        auto s = dual_f5();
        HochschildTable a = hochschild_homology(s, s_module(s), 5,
                                                Strategy::Periodic, opts());
        HochschildTable b =
            hochschild_homology(s, s_module(s), 5, Strategy::Tate, opts());
        for (int n = 0; n <= 5; ++n) CHECK(a.at(n).equals(b.at(n)));
    }
    SUBCASE("polynomial ring: koszul vs tate") {
        auto s = rationals_in("x");
        HochschildTable a =
            hochschild_homology(s, s_module(s), 4, Strategy::Koszul, opts());
        HochschildTable b =
            hochschild_homology(s, s_module(s), 4, Strategy::Tate, opts());
        for (int n = 0; n <= 4; ++n) CHECK(a.at(n).equals(b.at(n)));
    }
}

TEST_CASE("periodicity for monogenic algebras") {
    auto s = zsqrt2();
    HochschildTable t =
        hochschild_homology(s, s_module(s), 7, Strategy::Auto, opts());
    for (int n = 1; n + 2 <= 7; ++n)
        CHECK(factors_of(t.at(n)) == factors_of(t.at(n + 2)));
    auto d = dual_f5();
    HochschildTable td =
        hochschild_homology(d, s_module(d), 7, Strategy::Auto, opts());
    for (int n = 1; n + 2 <= 7; ++n)
        CHECK(td.at(n).total_dim() == td.at(n + 2).total_dim());
}

TEST_CASE("Kaehler differentials") {
    SUBCASE("free of rank one for Q[x]") {
        auto s = rationals_in("x");
        KahlerModule km = kahler(s);
        CHECK(km.omega.ngens() == 1);
        CHECK(km.omega.relations.cols() == 0);
    }
    SUBCASE("Z[sqrt 2]: S/(2t), matching HH_1") {
        auto s = zsqrt2();
        KahlerModule km = kahler(s);
        REQUIRE(km.omega.relations.cols() == 1);
        CHECK(km.omega.relations.at(0, 0) == s->parse_poly("2*t"));
        ModuleDescriptor omega = module_descriptor(km.omega, opts());
        HochschildTable t =
            hochschild_homology(s, s_module(s), 1, Strategy::Auto, opts());
        CHECK(omega.equals(t.at(1)));
    }
    SUBCASE("Jacobian of the campillo ring") {
        auto s = rationals_in("x,y", "x^2;x*y");
        KahlerModule km = kahler(s);
        // stored relation order is the reduced basis order: x*y then x^2
        CHECK(km.omega.relations.at(0, 0) == s->parse_poly("y"));
        CHECK(km.omega.relations.at(1, 0) == s->parse_poly("x"));
        CHECK(km.omega.relations.at(0, 1) == s->parse_poly("2*x"));
        CHECK(km.omega.relations.at(1, 1).is_zero());
    }
    SUBCASE("exterior powers") {
        auto s = rationals_in("x,y");
        KahlerModule km = kahler(s);
        ModulePresentation l2 = km.exterior_power(2);
        CHECK(l2.ngens() == 1);
        CHECK(l2.relations.cols() == 0);
        ModulePresentation l3 = km.exterior_power(3);
        CHECK(l3.ngens() == 0);
    }
}

TEST_CASE("comparison maps") {
    SUBCASE("smooth cases are bijective") {
        auto s = rationals_in("x");
        LambdaReport r1 =
            hkr_lambda(s, s_module(s), 1, false, Strategy::Auto, opts());
        CHECK(r1.bijective());
        auto s2 = rationals_in("x,y");
        LambdaReport r2 =
            hkr_lambda(s2, s_module(s2), 2, false, Strategy::Auto, opts());
        CHECK(r2.bijective());
    }
    SUBCASE("lambda_0 is always bijective") {
        for (auto s : {zsqrt2(), dual_f5()}) {
            LambdaReport r =
                hkr_lambda(s, s_module(s), 0, false, Strategy::Auto, opts());
            CHECK(r.bijective());
        }
    }
    SUBCASE("HH_1 identification with Omega") {
        auto s = zsqrt2();
        LambdaReport r =
            hkr_lambda(s, s_module(s), 1, false, Strategy::Auto, opts());
        CHECK(r.bijective());
    }
    SUBCASE("dual numbers fail beyond the embedding dimension") {
        auto s = dual_f5();
        LambdaReport r =
            hkr_lambda(s, s_module(s), 2, false, Strategy::Auto, opts());
        CHECK(r.flag == "injective-only");
        CHECK(r.domain.is_zero());
        CHECK(r.codomain.total_dim() == 1);
    }
    SUBCASE("cohomological direction at degree zero") {
        auto s = dual_f5();
        LambdaReport r =
            hkr_lambda(s, s_module(s), 0, true, Strategy::Auto, opts());
        CHECK(r.bijective());
        CHECK(r.domain.total_dim() == 2);
        CHECK(r.codomain.total_dim() == 2);
    }
}

TEST_CASE("module coefficients in tables") {
    // HH_*(S, k) over the dual numbers: every degree is 1-dimensional;
    // cross-checked against the bar oracle with the same module
    auto s = rationals_in("x", "x^2");
    ModulePresentation k;
    k.base = s;
    k.gen_degrees = {0};
    k.relations = PolyMatrix(1, 1);
    k.relations.at(0, 0) = s->parse_poly("x");
    HochschildTable t = hochschild_homology(s, k, 4, Strategy::Auto, opts());
    auto dims = bar_oracle(s, k, 4, false);
    for (int n = 0; n <= 4; ++n) CHECK(t.at(n).total_dim() == dims[n]);
}
