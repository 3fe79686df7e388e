#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "hhgap/criteria.hpp"

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

ModulePresentation s_module(PresentationPtr p) {
    return ModulePresentation::free_rank_one(p);
}

// synthetic table from a zero/nonzero pattern (1 = vanishes)
HochschildTable synthetic(const std::vector<int>& zero_pattern) {
    HochschildTable t;
    for (size_t n = 0; n < zero_pattern.size(); ++n) {
        ModuleDescriptor d;
        d.kind = ModuleDescriptor::Kind::FieldDims;
        if (!zero_pattern[n]) d.dims[0] = 1;
        t.entries.push_back({static_cast<int>(n), d});
    }
    return t;
}

GapQuery query_for(const HochschildTable& t, int64_t dim, int64_t depth) {
    GapQuery q;
    q.table = &t;
    q.dim_s = dim;
    q.depth_m = depth;
    q.dim_supp_m = dim;
    q.diagonal = true;
    return q;
}

Surjection diagonal_of(PresentationPtr s) {
    EnvelopingPresentation env = enveloping(s);
    return Surjection::make(env.env, env.diagonal_gens);
}

HomologyOptions opts_for_diagonal(PresentationPtr s) {
    HomologyOptions o = opts();
    if (s->nvars() == 1 && s->relations().size() == 1) {
        const Polynomial& f = s->relations().front();
        std::vector<Rat> coeffs(f.degree_in(0) + 1, Rat(0));
        for (const auto& t : f.terms()) coeffs[t.mono[0]] = t.coeff;
        o.action = MonogenicAction{Polynomial::variable(0, 2), coeffs};
    }
    return o;
}

}  // namespace

TEST_CASE("homological gap check") {
    SUBCASE("zeros of both parities certify") {
        HochschildTable t = synthetic({0, 0, 1, 1});
        GapVerdict v = check_homological_gaps(query_for(t, 1, 1));
        CHECK(v.outcome == "smooth-certified");
        CHECK(v.t == 2);
        CHECK(v.u == 3);
    }
    SUBCASE("zeros at even degrees only do not certify") {
        auto s = zsqrt2();
        HochschildTable t =
            hochschild_homology(s, s_module(s), 8, Strategy::Auto, opts());
        GapVerdict v = check_homological_gaps(query_for(t, 1, 1));
        CHECK(v.outcome == "criterion-not-met");
    }
    SUBCASE("no zeros at all") {
        HochschildTable t = synthetic({0, 0, 0, 0, 0});
        GapVerdict v = check_homological_gaps(query_for(t, 0, 0));
        CHECK(v.outcome == "criterion-not-met");
    }
    SUBCASE("non-diagonal surjections get ci verdicts") {
        HochschildTable t = synthetic({0, 1, 1});
        GapQuery q = query_for(t, 0, 0);
        q.diagonal = false;
        CHECK(check_homological_gaps(q).outcome == "ci-certified");
    }
}

TEST_CASE("cohomological gap check") {
    SUBCASE("etale in dimension zero") {
        auto e = rationals_in("e", "e^2 - e");
        HochschildTable t =
            hochschild_cohomology(e, s_module(e), 3, Strategy::Auto, opts());
        GapVerdict v = check_cohomological_gaps(query_for(t, 0, 0));
        CHECK(v.outcome == "smooth-certified");
        CHECK(v.t == 1);
        CHECK(v.u == 2);
        CHECK(v.interval_length == 1);
    }
    SUBCASE("single-degree gaps are insufficient in dimension one") {
        auto s = zsqrt2();
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 8, Strategy::Auto, opts());
        GapVerdict v = check_cohomological_gaps(query_for(t, 1, 1));
        CHECK(v.outcome == "criterion-not-met");
        CHECK(v.interval_length == 2);
    }
    SUBCASE("polynomial ring in dimension one") {
        auto s = rationals_in("x");
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 4, Strategy::Auto, opts());
        GapVerdict v = check_cohomological_gaps(query_for(t, 1, 1));
        CHECK(v.outcome == "smooth-certified");
        CHECK(v.t == 2);
        CHECK(v.u == 3);
    }
    SUBCASE("inconclusive when the table is too short") {
        HochschildTable t = synthetic({0, 0});
        GapVerdict v = check_cohomological_gaps(query_for(t, 3, 0));
        CHECK(v.outcome == "inconclusive-cutoff");
    }
    SUBCASE("experimental override never certifies silently") {
        auto s = zsqrt2();
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 8, Strategy::Auto, opts());
        GapVerdict v = check_cohomological_gaps(query_for(t, 1, 1), 1);
        bool flagged = false;
        for (const auto& c : v.caveats)
            if (c.find("experimental") != std::string::npos) flagged = true;
        CHECK(flagged);
    }
}

TEST_CASE("consecutive-run rule agrees with the interval rule") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> dims(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int64_t dim = dims(rng);
        std::vector<int> pattern(10);
        for (auto& b : pattern) b = bit(rng);
        HochschildTable t = synthetic(pattern);
        // a run of dim+2 zeros contains interval starts of both parities
        int run = 0, best = 0;
        for (int b : pattern) {
            run = b ? run + 1 : 0;
            best = std::max(best, run);
        }
        GapVerdict v = check_cohomological_gaps(query_for(t, dim, 0));
        if (best >= dim + 2) {
            CHECK(v.outcome == "smooth-certified");
            CHECK(v.criterion == "iii_star_cohomology");
        }
    }
}

TEST_CASE("gap checks never certify the negative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> pattern(8);
        for (auto& b : pattern) b = bit(rng);
        HochschildTable t = synthetic(pattern);
        for (int64_t dim : {0, 1, 2}) {
            GapVerdict h = check_homological_gaps(query_for(t, dim, dim));
            GapVerdict c = check_cohomological_gaps(query_for(t, dim, dim));
            for (const auto& v : {h, c})
                CHECK((v.outcome == "smooth-certified" ||
                       v.outcome == "criterion-not-met" ||
                       v.outcome == "inconclusive-cutoff"));
        }
    }
}

TEST_CASE("lower bound suite") {
    SUBCASE("Z[sqrt 2] diagonal: c = 1, d = 1, all bounds hold") {
        auto s = zsqrt2();
        Surjection phi = diagonal_of(s);
        Deviations devs = deviations(phi, opts_for_diagonal(s));
        CHECK(devs.eps2 == 1);
        CHECK(devs.eps3 == 1);
        HochschildTable t =
            hochschild_homology(s, s_module(s), 8, Strategy::Auto, opts());
        LowerBoundReport rep = check_tor_lower_bounds(t, devs.eps2, devs.eps3,
                                                     0, 1);
        CHECK(rep.all_known);
        CHECK(rep.all_hold);
    }
    SUBCASE("identity-style c = 0 degenerates to nu >= m") {
        HochschildTable t = synthetic({0});
        t.entries[0].descriptor.nu = 1;
        LowerBoundReport rep = check_tor_lower_bounds(t, 0, 0, 0, 1);
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].bound == 1);
        CHECK(rep.checks[0].holds);
    }
    SUBCASE("dual numbers over F5: nu bounds at degrees 0 and 1") {
        auto s = make_pres(
            "ring = \"Fp:5\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n");
        Surjection phi = diagonal_of(s);
        Deviations devs = deviations(phi, opts());
        CHECK(devs.eps2 == 1);
        CHECK(devs.eps3 == 1);
        HochschildTable t =
            hochschild_homology(s, s_module(s), 6, Strategy::Auto, opts());
        LowerBoundReport rep =
            check_tor_lower_bounds(t, devs.eps2, devs.eps3, 0, 1);
        CHECK(rep.all_hold);
        CHECK(rep.checks.at(0).nu == 1);
        CHECK(rep.checks.at(1).nu == 1);
    }
    SUBCASE("polynomial rings attain the first family with equality") {
        for (const char* vars : {"x", "x,y"}) {
            auto s = rationals_in(vars);
            Surjection phi = diagonal_of(s);
            Deviations devs = deviations(phi, opts());
            CHECK(devs.eps3 == 0);
            HochschildTable t =
                hochschild_homology(s, s_module(s), 6, Strategy::Auto, opts());
            LowerBoundReport rep =
                check_tor_lower_bounds(t, devs.eps2, devs.eps3, 0, 1);
            CHECK(rep.all_hold);
            for (const auto& ch : rep.checks)
                if (ch.family == "exterior") {
                    CHECK(ch.nu == ch.bound);
                }
        }
    }
}

TEST_CASE("separability corollary") {
    SUBCASE("Q[x]/(x^2 - 2) is separable") {
        auto s = rationals_in("x", "x^2 - 2");
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 4, Strategy::Auto, opts());
        GapVerdict v = corollary_separability(s, t);
        CHECK(v.outcome == "smooth-certified");
        bool says_separable = false;
        for (const auto& c : v.caveats)
            if (c.find("separable") != std::string::npos) says_separable = true;
        CHECK(says_separable);
        CHECK(separability_direct(*s) == std::optional<bool>(true));
    }
    SUBCASE("etale idempotents are separable") {
        auto s = rationals_in("e", "e^2 - e");
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 4, Strategy::Auto, opts());
        CHECK(corollary_separability(s, t).outcome == "smooth-certified");
        CHECK(separability_direct(*s) == std::optional<bool>(true));
    }
    SUBCASE("dual numbers are not") {
        auto s = make_pres(
            "ring = \"Fp:5\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n");
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 6, Strategy::Auto, opts());
        GapVerdict v = corollary_separability(s, t);
        CHECK(v.outcome == "criterion-not-met");
        CHECK(separability_direct(*s) == std::optional<bool>(false));
    }
    SUBCASE("infinite dimensional input is rejected") {
        auto s = rationals_in("x");
        HochschildTable t =
            hochschild_cohomology(s, s_module(s), 3, Strategy::Auto, opts());
        CHECK_THROWS_AS(corollary_separability(s, t), UnsupportedBase);
    }
}

TEST_CASE("ci certificates") {
    SUBCASE("complete intersection surjection") {
        auto r = rationals_in("x");
        CiVerdict v =
            ci_certificate(Surjection::make(r, {r->parse_poly("x^2")}), opts());
        CHECK(v.ci);
    }
    SUBCASE("campillo quotient is not ci") {
        auto r = rationals_in("x,y", "x^2;x*y");
        CiVerdict v =
            ci_certificate(Surjection::make(r, {r->parse_poly("y^2")}), opts());
        CHECK_FALSE(v.ci);
        CHECK(v.devs.eps3 == 1);
    }
    SUBCASE("diagonal of a polynomial ring") {
        CiVerdict v = ci_certificate(diagonal_of(rationals_in("x")), opts());
        CHECK(v.ci);
    }
    SUBCASE("diagonal of Z[sqrt 2] is not ci") {
        auto s = zsqrt2();
        CiVerdict v =
            ci_certificate(diagonal_of(s), opts_for_diagonal(s));
        CHECK_FALSE(v.ci);
    }
    SUBCASE("split diagonals of etale algebras are ci") {
        for (const char* rel : {"e^2 - e", "e^2 - 2"}) {
            auto s = rationals_in("e", rel);
            CiVerdict v = ci_certificate(diagonal_of(s), opts());
            CHECK(v.ci);
            CHECK(v.devs.kernel_idempotent_split);
        }
    }
}

TEST_CASE("soundness triangle on the corpus") {
    struct Entry {
        const char* text;
        bool graded_field;
    };
    for (const char* text :
         {"ring = \"Q\"\nvars = [\"x\"]\nrelations = []\n",
          "ring = \"Q\"\nvars = [\"x\", \"y\"]\nrelations = []\n",
          "ring = \"Q\"\nvars = [\"e\"]\nrelations = [\"e^2 - e\"]\n",
          "ring = \"Q\"\nvars = [\"x\"]\nrelations = [\"x^2 - 2\"]\n",
          "ring = \"Z\"\nvars = [\"t\"]\nrelations = [\"t^2 - 2\"]\n",
          "ring = \"Q\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n",
          "ring = \"Fp:5\"\nvars = [\"x\"]\nrelations = [\"x^2\"]\n"}) {
        auto s = make_pres(text);
        int64_t dim = ring_dimension(*s);
        int64_t depth = ring_depth(s, opts());
        HochschildTable hh =
            hochschild_homology(s, s_module(s), 8, Strategy::Auto, opts());
        HochschildTable hc =
            hochschild_cohomology(s, s_module(s), 8, Strategy::Auto, opts());
        GapQuery qh = query_for(hh, dim, depth);
        GapQuery qc = query_for(hc, dim, depth);
        GapVerdict vh = check_homological_gaps(qh);
        GapVerdict vc = check_cohomological_gaps(qc);
        bool certified = vh.certified() || vc.certified();
        if (certified) {
            CiVerdict ci =
                ci_certificate(diagonal_of(s), opts_for_diagonal(s));
            CHECK(ci.ci);
            for (int n = 0; n <= 4; ++n) {
                LambdaReport lam = hkr_lambda(s, s_module(s), n, false,
                                              Strategy::Auto, opts());
                CHECK(lam.bijective());
            }
        }
    }
}

TEST_CASE("maps with a section are 2-closed") {
    // the diagonal surjection splits via s -> 1 (x) s
    auto s = rationals_in("x", "x^2");
    Surjection phi = diagonal_of(s);
    ClosednessCertificate cert = is_p_closed(phi, 2, 6, opts());
    CHECK(cert.closed);
    CHECK(is_p_closed(phi, 1, 6, opts()).closed);
}

TEST_CASE("dimension and depth helpers") {
    CHECK(ring_dimension(*rationals_in("x")) == 1);
    CHECK(ring_dimension(*rationals_in("x,y")) == 2);
    CHECK(ring_dimension(*rationals_in("x", "x^2")) == 0);
    CHECK(ring_dimension(*zsqrt2()) == 1);
    CHECK(ring_depth(rationals_in("x"), opts()) == 1);
    CHECK(ring_depth(rationals_in("x,y"), opts()) == 2);
    CHECK(ring_depth(rationals_in("x", "x^2"), opts()) == 0);
    CHECK(ring_depth(rationals_in("x,y", "x^2;x*y"), opts()) == 0);
    CHECK(ring_depth(zsqrt2(), opts()) == 1);
    CHECK(ring_depth(rationals_in("e", "e^2 - e"), opts()) == 0);
}
