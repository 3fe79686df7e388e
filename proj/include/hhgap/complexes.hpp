#pragma once

#include <map>
#include <vector>

#include "hhgap/presentation.hpp"

namespace hhgap {

// Matrix of ring elements (entries kept in normal form by the owners).
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Polynomial& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Polynomial& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    PolyMatrix transpose() const;

  private:
    size_t rows_, cols_;
    std::vector<Polynomial> a_;
};

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b,
                        const AlgebraPresentation& pres);
bool poly_mat_is_zero(const PolyMatrix& m);

// A ring homomorphism between presented algebras, given on generators.
struct RingMap {
    PresentationPtr source;
    PresentationPtr target;
    std::vector<Polynomial> images;  // one per source variable, over target

    // Checks every source relation maps to zero; throws NotAHomomorphism.
    void validate() const;
    Polynomial apply(const Polynomial& p) const;
    static RingMap identity(PresentationPtr pres);
};

// Bounded complex of finite free modules. diff[n] is the matrix of
// d_n : C_n -> C_{n-1} with rank(n-1) rows and rank(n) columns. gen_degrees
// carries internal degrees of the chosen bases in the graded case.
struct FreeComplex {
    PresentationPtr base;
    std::map<int, int> ranks;
    std::map<int, PolyMatrix> diff;
    std::map<int, std::vector<int64_t>> gen_degrees;
    bool cohomological = false;

    int rank(int n) const {
        auto it = ranks.find(n);
        return it == ranks.end() ? 0 : it->second;
    }
    const std::vector<int64_t>& degrees_at(int n) const;
    int min_degree() const;
    int max_degree() const;

    // d∘d = 0, entries in normal form, entry homogeneity in the graded case.
    void validate() const;
};

// Degree shift with the sign rule d^{shift(j)}_n = (-1)^{|j|} d_{n-j}.
FreeComplex shift_complex(const FreeComplex& c, int j);

// Applies a ring map to every entry; re-verifies d∘d = 0.
FreeComplex tensor_over_base(const FreeComplex& c, const RingMap& map);

// Hom(-, R): reindexes Hom(C_n, R) to homological degree -n with transposed
// differentials and flags the result cohomological.
FreeComplex hom_dual(const FreeComplex& c);

// True when every differential entry lies in the (irrelevant) maximal ideal.
bool is_minimal(const FreeComplex& c);

// Zero-differential complex with the given ranks (test/diagnostic helper).
FreeComplex zero_complex(PresentationPtr base, const std::map<int, int>& ranks);

}  // namespace hhgap
