#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hhgap/coeff.hpp"

namespace hhgap {

// Dense matrix over a field (Q or F_p via CoeffRing).
class KMat {
  public:
    KMat() : rows_(0), cols_(0) {}
    KMat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static KMat identity(size_t n);
    KMat transpose() const;
    // horizontal concatenation [this | other]
    KMat hcat(const KMat& other) const;

  private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

size_t k_rank(KMat m, const CoeffRing& ring);
// Columns form a basis of the right kernel {x : Ax = 0}.
KMat k_kernel(const KMat& m, const CoeffRing& ring);
// One solution of A x = b, or nullopt; free variables are set to zero, which
// makes the lift deterministic.
std::optional<std::vector<Rat>> k_solve(const KMat& a, const std::vector<Rat>& b,
                                        const CoeffRing& ring);
// Row-reduces in place; returns pivot column indices.
std::vector<size_t> k_rref(KMat& m, const CoeffRing& ring);

// Dense integer matrix with overflow-checked arithmetic.
class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int64_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    int64_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static ZMat identity(size_t n);
    ZMat transpose() const;
    ZMat hcat(const ZMat& other) const;

  private:
    size_t rows_, cols_;
    std::vector<int64_t> a_;
};

// Invariant factors d_1 | d_2 | ... (nonnegative; zeros trail) of the integer
// matrix, padded to min(rows, cols).
std::vector<int64_t> smith_invariant_factors(ZMat m);

// Basis (columns) of the integer kernel {x in Z^c : Ax = 0}.
ZMat z_kernel(const ZMat& a);

// Column-style Hermite form of the lattice spanned by the columns; the
// result's columns are a canonical basis (zero columns dropped).
ZMat z_lattice_basis(const ZMat& gens);

// Integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<int64_t>> z_solve(const ZMat& a,
                                            const std::vector<int64_t>& b);

bool z_lattice_contains(const ZMat& basis, const std::vector<int64_t>& v);
bool z_lattice_equal(const ZMat& a, const ZMat& b);

}  // namespace hhgap
