#include "hhgap/polynomial.hpp"

#include <algorithm>
#include <map>

namespace hhgap {

int64_t weighted_degree(const Monomial& m, const std::vector<int>& degrees) {
    int64_t d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += int64_t(m[i]) * degrees[i];
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b,
                  const std::vector<int>& degrees) {
    int64_t da = weighted_degree(a, degrees), db = weighted_degree(b, degrees);
    if (da != db) return da < db;
    // same degree: a < b iff the last position where they differ has a
    // strictly larger exponent in a
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

Polynomial Polynomial::constant(const Rat& c, size_t nvars) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars, 0), c});
    return p;
}

Polynomial Polynomial::variable(size_t idx, size_t nvars) {
    Polynomial p;
    Monomial m(nvars, 0);
    m[idx] = 1;
    p.terms_.push_back({m, Rat(1)});
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rat& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}


int32_t Polynomial::degree_in(size_t var) const {
    int32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

int64_t Polynomial::weighted_degree_max(const std::vector<int>& degrees) const {
    int64_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, weighted_degree(t.mono, degrees));
    return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& degrees) const {
    if (terms_.empty()) return true;
    int64_t d = weighted_degree(terms_.front().mono, degrees);
    for (const auto& t : terms_)
        if (weighted_degree(t.mono, degrees) != d) return false;
    return true;
}

Rat Polynomial::constant_term() const {
    for (const auto& t : terms_) {
        bool z = true;
        for (int32_t e : t.mono)
            if (e != 0) z = false;
        if (z) return t.coeff;
    }
    return Rat(0);
}

Polynomial Polynomial::from_terms(std::vector<Term> ts, const CoeffRing& ring,
                                  const std::vector<int>& degrees) {
    std::map<Monomial, Rat> acc;
    for (auto& t : ts) {
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(std::move(t.mono), ring.canon(t.coeff));
        else
            it->second = ring.add(it->second, t.coeff);
    }
    Polynomial p;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) {
                  return grevlex_less(b.mono, a.mono, degrees);
              });
    return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono ||
            a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial PolyOps::add(const Polynomial& a, const Polynomial& b) const {
    std::vector<Term> ts = a.terms();
    ts.insert(ts.end(), b.terms().begin(), b.terms().end());
    return normalize(std::move(ts));
}

Polynomial PolyOps::sub(const Polynomial& a, const Polynomial& b) const {
    return add(a, neg(b));
}

Polynomial PolyOps::neg(const Polynomial& a) const {
    std::vector<Term> ts = a.terms();
    for (auto& t : ts) t.coeff = ring.neg(t.coeff);
    return normalize(std::move(ts));
}

Polynomial PolyOps::mul(const Polynomial& a, const Polynomial& b) const {
    std::vector<Term> ts;
    ts.reserve(a.nterms() * b.nterms());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            ts.push_back({mono_mul(ta.mono, tb.mono),
                          ring.mul(ta.coeff, tb.coeff)});
    return normalize(std::move(ts));
}

Polynomial PolyOps::scale(const Rat& c, const Polynomial& a) const {
    if (c.is_zero()) return Polynomial::zero();
    std::vector<Term> ts = a.terms();
    for (auto& t : ts) t.coeff = ring.mul(c, t.coeff);
    return normalize(std::move(ts));
}

Polynomial PolyOps::mono_scale(const Monomial& m, const Rat& c,
                               const Polynomial& a) const {
    std::vector<Term> ts = a.terms();
    for (auto& t : ts) {
        t.mono = mono_mul(m, t.mono);
        t.coeff = ring.mul(c, t.coeff);
    }
    return normalize(std::move(ts));
}

Polynomial PolyOps::power(const Polynomial& a, int e) const {
    Polynomial r = Polynomial::constant(Rat(1), degrees.size());
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

Polynomial PolyOps::derivative(const Polynomial& a, size_t idx) const {
    std::vector<Term> ts;
    for (const auto& t : a.terms()) {
        if (t.mono[idx] == 0) continue;
        Term d = t;
        d.coeff = ring.mul(Rat(t.mono[idx]), t.coeff);
        d.mono[idx] -= 1;
        ts.push_back(std::move(d));
    }
    return normalize(std::move(ts));
}

Polynomial PolyOps::substitute(const Polynomial& a,
                               const std::vector<Polynomial>& images,
                               const PolyOps& target) const {
    size_t tn = target.degrees.size();
    Polynomial out;
    for (const auto& t : a.terms()) {
        Polynomial prod = Polynomial::constant(t.coeff, tn);
        for (size_t v = 0; v < t.mono.size(); ++v)
            for (int32_t e = 0; e < t.mono[v]; ++e)
                prod = target.mul(prod, images[v]);
        out = target.add(out, prod);
    }
    return out;
}

std::string polynomial_to_string(const Polynomial& p,
                                 const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        bool neg = c < Rat(0);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        bool has_vars = false;
        for (int32_t e : t.mono)
            if (e > 0) has_vars = true;
        std::string mono;
        bool firstv = true;
        for (size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (!firstv) mono += "*";
            mono += vars[v];
            if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
            firstv = false;
        }
        if (!has_vars) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += c.to_string() + "*" + mono;
        }
        first = false;
    }
    return out;
}

}  // namespace hhgap
