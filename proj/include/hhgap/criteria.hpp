#pragma once

#include "hhgap/hochschild.hpp"

namespace hhgap {

struct GapQuery {
    const HochschildTable* table = nullptr;
    int64_t dim_s = 0;
    int64_t depth_m = 0;     // depth_S M
    int64_t dim_supp_m = 0;  // dim Supp_S M
    bool diagonal = true;    // table comes from the diagonal surjection
};

struct GapVerdict {
    std::string outcome;  // smooth-certified | ci-certified |
                          // criterion-not-met | inconclusive-cutoff
    std::string criterion;
    int t = -1, u = -1;
    int interval_length = 1;
    std::vector<std::string> caveats;
    bool certified() const {
        return outcome == "smooth-certified" || outcome == "ci-certified";
    }
};

// Two vanishing degrees of different parity (module-case thresholds).
GapVerdict check_homological_gaps(const GapQuery& q);

// Two vanishing intervals of length dim Supp M + 1 starting at degrees of
// different parity >= depth - dim; also reports when the stronger
// consecutive-run condition (dim S + 2 zeros in a row) holds.
GapVerdict check_cohomological_gaps(const GapQuery& q,
                                    int interval_override = -1);

struct BoundCheck {
    int degree = 0;
    int64_t nu = -1;
    int64_t bound = 0;
    bool known = false;  // nu was computable
    bool holds = false;
    std::string family;  // "exterior" (binom(c,n)) | "divided-power"
};

struct LowerBoundReport {
    int64_t c = 0, d = 0, i = 0, m = 1;
    std::vector<BoundCheck> checks;
    bool all_hold = true;
    bool all_known = true;
    // degrees where the first family is attained with equality (c.i. case)
    std::vector<int> equalities;
};

// Lower bounds on minimal generator counts of the table entries for a
// 2-closed surjection with eps2 = c, eps3 = d, inf H(M) = i, nu(H_i M) = m.
LowerBoundReport check_tor_lower_bounds(const HochschildTable& table, int64_t c,
                                       int64_t d, int64_t i, int64_t m);

// Finite-dimensional algebras over a field: two cohomology zeros of
// different parity certify a product of separable field extensions.
GapVerdict corollary_separability(PresentationPtr s,
                                  const HochschildTable& cohomology);

// Direct square-free test gcd(f, f') = 1 for monogenic algebras over a
// field; nullopt when the presentation is not monogenic.
std::optional<bool> separability_direct(const AlgebraPresentation& s);

struct CiVerdict {
    bool ci = false;
    Deviations devs;
    std::string note;
};

// eps3 = 0 (or an idempotent-split kernel) certifies complete intersection;
// the direct, non-gap oracle.
CiVerdict ci_certificate(const Surjection& phi, const HomologyOptions& opts);

int64_t ring_dimension(const AlgebraPresentation& s);
int64_t ring_depth(PresentationPtr s, const HomologyOptions& opts);

}  // namespace hhgap
