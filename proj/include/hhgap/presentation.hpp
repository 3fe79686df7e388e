#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhgap/polynomial.hpp"

namespace hhgap {

// A finitely presented commutative algebra S = K[x_1..x_v]/I together with
// the data needed for normal forms: a reduced Groebner basis when K is a
// field, or a monic triangular relation set over Z (each relation monic
// univariate in a distinct variable).
class AlgebraPresentation {
  public:
    AlgebraPresentation() = default;
    AlgebraPresentation(CoeffRing ring, std::vector<std::string> vars,
                        std::vector<int> degrees,
                        std::vector<Polynomial> relations);

    const CoeffRing& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& degrees() const { return degrees_; }
    size_t nvars() const { return vars_.size(); }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }
    PolyOps ops() const { return PolyOps{ring_, degrees_}; }

    bool is_graded() const { return graded_; }
    bool is_monogenic_over_z() const { return monogenic_z_; }
    bool is_monic_triangular_z() const { return monic_triangular_z_; }
    bool supports_normal_forms() const {
        return ring_.is_field() || monic_triangular_z_;
    }

    // True when the quotient is a finite free module over the coefficient
    // ring (finite dimensional over a field / finite free over Z).
    bool is_module_finite() const;
    // Monomial basis of the quotient; requires is_module_finite().
    std::vector<Monomial> monomial_basis() const;
    // Krull dimension: combinatorial on leading terms (field case) or the
    // dimension of a Z-order.
    int krull_dimension() const;

    Polynomial parse_poly(const std::string& text) const;
    std::string poly_str(const Polynomial& p) const {
        return polynomial_to_string(p, vars_);
    }

  private:
    CoeffRing ring_;
    std::vector<std::string> vars_;
    std::vector<int> degrees_;
    std::vector<Polynomial> relations_;
    std::vector<Polynomial> gb_;
    bool graded_ = false;
    bool monogenic_z_ = false;
    bool monic_triangular_z_ = false;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

// Full multivariate division by the presentation's basis; unique reduced
// representative, idempotent.
Polynomial normal_form(const Polynomial& p, const AlgebraPresentation& pres);

// Reduced Groebner basis (Buchberger, sugar-degree pair selection); field
// coefficients only. Output sorted ascending by leading monomial.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens,
                                       const PolyOps& ops);

// Monomial basis of the degree-d component of the quotient.
std::vector<Monomial> graded_piece_basis(const AlgebraPresentation& pres,
                                         int64_t degree);

// All monomials of weighted degree d in the free polynomial ring.
std::vector<Monomial> free_monomials_of_degree(const std::vector<int>& degrees,
                                               int64_t d);

}  // namespace hhgap
