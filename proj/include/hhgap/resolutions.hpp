#pragma once

#include "hhgap/homology.hpp"

namespace hhgap {

// A surjection R -> R/(kernel_gens); the kernel ideal is given by explicit
// generators inside the source presentation.
struct Surjection {
    PresentationPtr source;
    std::vector<Polynomial> kernel_gens;  // normal forms, zero entries dropped

    static Surjection make(PresentationPtr source,
                           std::vector<Polynomial> kernel_gens);
    PresentationPtr target() const;
    bool is_identity() const { return kernel_gens.empty(); }
};

// Exterior-algebra complex on the given ring elements: rank binom(c, n) in
// degree n with the alternating-sign differential.
FreeComplex koszul_complex(PresentationPtr pres,
                           const std::vector<Polynomial>& elements);

// Minimal homogeneous generators of the ideal spanned by `gens`; graded
// Nakayama, degreewise greedy, deterministic.
std::vector<Polynomial> minimal_ideal_generators(
    const AlgebraPresentation& pres, const std::vector<Polynomial>& gens);

struct Deviations {
    int64_t eps2 = 0;
    int64_t eps3 = 0;
    // Ker = Ker^2: kernel locally generated by an idempotent, so the map is
    // c.i. at every prime of the target; both deviations vanish locally.
    bool kernel_idempotent_split = false;
    int64_t internal_cap = -1;  // graded eps3 evidence cap
};

Deviations deviations(const Surjection& phi, const HomologyOptions& opts);

// Minimal free resolution of a presented module, built degreewise by taking
// minimal homogeneous generators of successive kernels. Graded field case.
FreeComplex minimal_free_resolution(const ModulePresentation& m, int cutoff,
                                    const HomologyOptions& opts);

struct DPVariable {
    std::string name;
    int hom_degree;        // 1 for exterior, 2 for divided-power here
    int64_t internal_degree;
    int stage;
};

// Second stage of an acyclic closure: the Koszul complex on minimal kernel
// generators with divided-power variables adjoined against minimal
// generators of its first homology. Words x_I y_J with |I| + 2|J| = n.
struct TateStage {
    Surjection phi;
    int p = 1;
    int cutoff = 0;
    FreeComplex complex;  // over the source, graded bases

    std::vector<Polynomial> koszul_elements;        // d(x_i)
    std::vector<std::vector<Polynomial>> cycles;    // z_j = sum_i b_ij x_i
    std::vector<DPVariable> variables;

    struct Word {
        std::vector<int> xs;  // ascending subset of [0, c)
        std::vector<int> js;  // divided-power exponents, size d
    };
    std::map<int, std::vector<Word>> words;

    int64_t eps2() const { return static_cast<int64_t>(koszul_elements.size()); }
    int64_t eps3() const { return static_cast<int64_t>(cycles.size()); }
};

TateStage tate_stage(const Surjection& phi, int p, int cutoff,
                     const HomologyOptions& opts);

// Product of two basis words in the divided-power DG algebra (exterior sign
// and binomial divided-power coefficients); zero when exterior parts meet.
std::pair<Rat, TateStage::Word> word_product(const TateStage::Word& a,
                                             const TateStage::Word& b);

// Chain map lifting the identity of H_0, solved degreewise; deterministic
// (free parameters are set to zero).
std::vector<PolyMatrix> comparison_morphism(const FreeComplex& g,
                                            const FreeComplex& f, int cutoff);

struct ClosednessCertificate {
    int p = 1;
    int cutoff = 0;
    int64_t c = 0;  // eps2
    bool minimal = false;
    bool socle_shortcut_used = false;
    bool socle_cutoff_insufficient = false;
    bool closed = false;  // up to the cutoff
    // per degree: rank of k⊗G_n, rank of Tor_n(k, S), injectivity of k⊗γ_n
    struct DegreeRow {
        int degree;
        int64_t g_rank;
        int64_t tor_rank;
        bool injective;
    };
    std::vector<DegreeRow> rows;
};

ClosednessCertificate is_p_closed(const Surjection& phi, int p, int cutoff,
                                  const HomologyOptions& opts);

}  // namespace hhgap
