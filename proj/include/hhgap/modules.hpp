#pragma once

#include <map>

#include "hhgap/complexes.hpp"
#include "hhgap/linalg.hpp"

namespace hhgap {

// Finitely presented module over a presented algebra: coker of `relations`
// acting on a free module with generators of the given internal degrees.
struct ModulePresentation {
    PresentationPtr base;
    std::vector<int64_t> gen_degrees;
    PolyMatrix relations;  // ngens x nrels

    size_t ngens() const { return gen_degrees.size(); }
    static ModulePresentation free_rank_one(PresentationPtr base);
    // Internal degrees of the relation columns (graded case).
    std::vector<int64_t> relation_degrees() const;
};

// Basis of the degree-d piece of a free module ⊕_i A(-gen_deg[i]) over a
// graded presentation: pairs (component, standard monomial).
struct PieceBasis {
    std::vector<std::pair<size_t, Monomial>> elems;
    std::map<std::pair<size_t, Monomial>, size_t> index;
    size_t dim() const { return elems.size(); }
};

PieceBasis free_piece_basis(const AlgebraPresentation& pres,
                            const std::vector<int64_t>& gen_degrees,
                            int64_t degree);

// Coordinates of a homogeneous column vector (one polynomial per component).
std::vector<Rat> piece_coords(const AlgebraPresentation& pres,
                              const std::vector<Polynomial>& column,
                              const PieceBasis& pb);

std::vector<Polynomial> column_from_coords(const AlgebraPresentation& pres,
                                           const PieceBasis& pb,
                                           const std::vector<Rat>& coords,
                                           size_t ncomponents);

// Matrix of a PolyMatrix map restricted to degree-d pieces.
KMat piece_matrix(const AlgebraPresentation& pres, const PolyMatrix& m,
                  const std::vector<int64_t>& src_degrees,
                  const std::vector<int64_t>& dst_degrees, int64_t degree);

}  // namespace hhgap
