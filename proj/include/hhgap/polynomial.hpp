#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhgap/coeff.hpp"

namespace hhgap {

// Exponent vector; length equals the variable count of the ambient ring.
using Monomial = std::vector<int32_t>;

int64_t weighted_degree(const Monomial& m, const std::vector<int>& degrees);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, caller checks
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order, weighted by the declared variable
// degrees. Returns true when a < b.
bool grevlex_less(const Monomial& a, const Monomial& b,
                  const std::vector<int>& degrees);

struct Term {
    Monomial mono;
    Rat coeff;
};

// Terms strictly descending in grevlex; no zero coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rat& c, size_t nvars);
    static Polynomial variable(size_t idx, size_t nvars);
    static Polynomial monomial(Monomial m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }  // largest term

    // Degree in a single variable (0 for the zero polynomial).
    int32_t degree_in(size_t var) const;
    int64_t weighted_degree_max(const std::vector<int>& degrees) const;
    bool is_homogeneous(const std::vector<int>& degrees) const;
    Rat constant_term() const;

    // Builds a polynomial from unsorted term data, combining duplicates.
    static Polynomial from_terms(std::vector<Term> ts, const CoeffRing& ring,
                                 const std::vector<int>& degrees);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

  private:
    friend struct PolyOps;
    std::vector<Term> terms_;
};

// Arithmetic needs the ring (for coefficient canonicalization) and the
// grading (for term order), so it lives in a context object.
struct PolyOps {
    CoeffRing ring;
    std::vector<int> degrees;

    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial sub(const Polynomial& a, const Polynomial& b) const;
    Polynomial neg(const Polynomial& a) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial scale(const Rat& c, const Polynomial& a) const;
    Polynomial mono_scale(const Monomial& m, const Rat& c,
                          const Polynomial& a) const;
    Polynomial power(const Polynomial& a, int e) const;
    // Partial derivative with respect to variable idx.
    Polynomial derivative(const Polynomial& a, size_t idx) const;
    // Substitutes images[i] for variable i; images live in a possibly
    // different ring context `target`.
    Polynomial substitute(const Polynomial& a,
                          const std::vector<Polynomial>& images,
                          const PolyOps& target) const;
    Polynomial normalize(std::vector<Term> ts) const {
        return Polynomial::from_terms(std::move(ts), ring, degrees);
    }
};

std::string polynomial_to_string(const Polynomial& p,
                                 const std::vector<std::string>& vars);

}  // namespace hhgap
