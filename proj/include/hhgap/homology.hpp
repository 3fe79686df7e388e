#pragma once

#include <optional>

#include "hhgap/descriptor.hpp"
#include "hhgap/modules.hpp"

namespace hhgap {

// When homology is a module over a monogenic quotient of the complex base
// (e.g. Koszul homology over an enveloping algebra, annihilated by the
// diagonal ideal), nu can be computed against that action: `var` acts on the
// homology and satisfies the monic `min_poly`.
struct MonogenicAction {
    Polynomial var;              // over the complex base
    std::vector<Rat> min_poly;   // monic coefficient list, degree <= 2 factored
};

struct HomologyOptions {
    // Graded computations report dimensions for internal degrees <= cap.
    int64_t internal_cap = 12;
    bool want_nu = true;
    std::optional<MonogenicAction> action;
};

// H_n(C ⊗ M) as a canonical descriptor. Strategies, in order of preference:
// graded field base (per internal degree), module-finite field base
// (restriction of scalars), module-finite Z base (Smith normal form).
ModuleDescriptor homology_at(const FreeComplex& c, int n,
                             const ModulePresentation& m,
                             const HomologyOptions& opts);

inline ModuleDescriptor homology_at(const FreeComplex& c, int n,
                                    const HomologyOptions& opts) {
    return homology_at(c, n, ModulePresentation::free_rank_one(c.base), opts);
}

// Descriptor of a presented module (homology of its two-term complex).
ModuleDescriptor module_descriptor(const ModulePresentation& m,
                                   const HomologyOptions& opts);

// Minimal generator count; -1 when no exact rule applies in this regime.
int64_t minimal_generator_count(const ModulePresentation& m,
                                const HomologyOptions& opts);

}  // namespace hhgap
