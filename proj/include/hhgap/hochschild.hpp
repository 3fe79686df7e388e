#pragma once

#include "hhgap/resolutions.hpp"

namespace hhgap {

// S ⊗_K S presented with doubled variables, the multiplication map back to
// S, its canonical section, and generators of the diagonal ideal.
struct EnvelopingPresentation {
    PresentationPtr algebra;  // S
    PresentationPtr env;      // S ⊗_K S
    RingMap mult;             // x_i, x_i' -> x_i
    RingMap section;          // x_i -> x_i'
    std::vector<Polynomial> diagonal_gens;  // x_i - x_i'
};

EnvelopingPresentation enveloping(PresentationPtr pres);

enum class Strategy { Auto, Periodic, Koszul, Tate, Bar };
std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct DiagonalResolution {
    FreeComplex complex;  // over the enveloping algebra, degrees 0..cutoff
    Strategy used = Strategy::Auto;
    std::vector<std::string> caveats;
};

// Free resolution of S over S⊗S up to the cutoff. Strategies: periodic
// (monogenic S = K[t]/(f): alternating t-t' and (f(t)-f(t'))/(t-t')),
// koszul (diagonal generators form a regular sequence), tate (second
// acyclic-closure stage; verified exact up to the cutoff).
DiagonalResolution diagonal_resolution(const EnvelopingPresentation& env,
                                       Strategy strategy, int cutoff,
                                       const HomologyOptions& opts);

struct HochschildEntry {
    int degree = 0;
    ModuleDescriptor descriptor;
};

struct HochschildTable {
    bool cohomology = false;
    Strategy used = Strategy::Auto;
    std::vector<HochschildEntry> entries;  // degrees 0..N
    std::vector<std::string> caveats;

    const ModuleDescriptor& at(int n) const { return entries.at(n).descriptor; }
};

HochschildTable hochschild_homology(PresentationPtr s,
                                    const ModulePresentation& m, int max_degree,
                                    Strategy strategy,
                                    const HomologyOptions& opts);
HochschildTable hochschild_cohomology(PresentationPtr s,
                                      const ModulePresentation& m,
                                      int max_degree, Strategy strategy,
                                      const HomologyOptions& opts);

// Independent cross-check: k-dimensions of HH_n / HH^n from the normalized
// bar complex; finite-dimensional algebras over a field only.
std::vector<int64_t> bar_oracle(PresentationPtr s, const ModulePresentation& m,
                                int max_degree, bool cohomology);

// Kaehler differentials as the cokernel of the transposed Jacobian, with
// minors-based exterior powers.
struct KahlerModule {
    PresentationPtr base;
    ModulePresentation omega;
    ModulePresentation exterior_power(int n) const;
};

KahlerModule kahler(PresentationPtr s);

// Tensor product of presented modules (cokernel of the combined relations).
ModulePresentation tensor_modules(const ModulePresentation& a,
                                  const ModulePresentation& b);

struct LambdaReport {
    int degree = 0;
    bool cohomology = false;
    ModuleDescriptor domain;    // Λ^n Ω ⊗ M (homology) or HH^n (cohomology)
    ModuleDescriptor codomain;  // HH_n (homology) or Hom(Λ^n Ω, M)
    std::string flag;           // bijective | injective-only | neither
    std::string reason;
    bool bijective() const { return flag == "bijective"; }
};

LambdaReport hkr_lambda(PresentationPtr s, const ModulePresentation& m, int n,
                        bool cohomology, Strategy strategy,
                        const HomologyOptions& opts);

}  // namespace hhgap
