#include "hhgap/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hhgap/errors.hpp"
#include "hhgap/io.hpp"

namespace hhgap {

namespace {

// One full division step sweep: returns the remainder of p modulo basis.
// Every basis leading coefficient must be a unit.
Polynomial divide_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const PolyOps& ops) {
    Polynomial work = p;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.terms().front();
        bool reduced = false;
        for (const auto& g : basis) {
            const Term& glt = g.terms().front();
            if (mono_divides(glt.mono, lt.mono)) {
                Rat factor = ops.ring.mul(lt.coeff, ops.ring.inv(glt.coeff));
                Monomial shift = mono_div(lt.mono, glt.mono);
                work = ops.sub(work, ops.mono_scale(shift, factor, g));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(work.terms().front());
            std::vector<Term> rest(work.terms().begin() + 1,
                                   work.terms().end());
            work = ops.normalize(std::move(rest));
        }
    }
    return ops.normalize(std::move(remainder));
}

bool is_monic_univariate(const Polynomial& f, size_t& var_out) {
    if (f.is_zero()) return false;
    // exactly one variable present
    std::set<size_t> used;
    for (const auto& t : f.terms())
        for (size_t v = 0; v < t.mono.size(); ++v)
            if (t.mono[v] > 0) used.insert(v);
    if (used.size() != 1) return false;
    size_t v = *used.begin();
    int32_t deg = f.degree_in(v);
    for (const auto& t : f.terms())
        if (t.mono[v] == deg) {
            if (t.coeff != Rat(1)) return false;
            var_out = v;
            return true;
        }
    return false;
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(CoeffRing ring,
                                         std::vector<std::string> vars,
                                         std::vector<int> degrees,
                                         std::vector<Polynomial> relations)
    : ring_(ring),
      vars_(std::move(vars)),
      degrees_(std::move(degrees)),
      relations_(std::move(relations)) {
    if (degrees_.empty()) degrees_.assign(vars_.size(), 1);
    if (degrees_.size() != vars_.size())
        throw ParseError("degrees/vars length mismatch");
    for (int d : degrees_)
        if (d <= 0) throw ParseError("variable degrees must be positive");

    relations_.erase(std::remove_if(relations_.begin(), relations_.end(),
                                    [](const Polynomial& r) {
                                        return r.is_zero();
                                    }),
                     relations_.end());

    if (ring_.is_field()) {
        gb_ = groebner_basis(relations_, ops());
        // keep the stored relations reduced against each other
        relations_ = gb_;
    } else {
        // Z: monic triangular only (one monic univariate relation per
        // variable, at most one per variable)
        std::set<size_t> seen;
        for (const auto& f : relations_) {
            size_t v = 0;
            if (!is_monic_univariate(f, v) || seen.count(v))
                throw UnsupportedRing(
                    "Z coefficients require monic univariate relations in "
                    "distinct variables");
            seen.insert(v);
        }
        monic_triangular_z_ = !relations_.empty() || vars_.empty();
        if (!monic_triangular_z_ && !vars_.empty())
            throw UnsupportedRing(
                "Z polynomial rings without monic relations are unsupported");
        monogenic_z_ = (vars_.size() == 1 && relations_.size() == 1);
        gb_ = relations_;
    }

    graded_ = true;
    for (const auto& r : relations_)
        if (!r.is_homogeneous(degrees_)) graded_ = false;
    if (ring_.kind == CoeffRing::Kind::Z) graded_ = false;
}

bool AlgebraPresentation::is_module_finite() const {
    if (!supports_normal_forms()) return false;
    if (ring_.kind == CoeffRing::Kind::Z)
        return relations_.size() == vars_.size();  // monic triangular, all vars
    // field: finite iff every variable has a pure power among the leading
    // monomials of the Groebner basis
    for (size_t v = 0; v < vars_.size(); ++v) {
        bool found = false;
        for (const auto& g : gb_) {
            const Monomial& lm = g.terms().front().mono;
            bool pure = lm[v] > 0;
            for (size_t w = 0; w < vars_.size() && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure) found = true;
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Monomial> AlgebraPresentation::monomial_basis() const {
    if (!is_module_finite())
        throw InfiniteDimensional("quotient is not module-finite");
    // bounds per variable from pure-power leading terms
    std::vector<int32_t> bound(vars_.size(), 1);
    for (size_t v = 0; v < vars_.size(); ++v) {
        for (const auto& g : gb_) {
            const Monomial& lm = g.terms().front().mono;
            bool pure = lm[v] > 0;
            for (size_t w = 0; w < vars_.size() && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure) bound[v] = std::max(bound[v], lm[v]);
        }
    }
    std::vector<Monomial> out;
    Monomial cur(vars_.size(), 0);
    // enumerate the box, keep monomials outside the leading-term ideal
    while (true) {
        bool standard = true;
        for (const auto& g : gb_)
            if (mono_divides(g.terms().front().mono, cur)) standard = false;
        if (standard) out.push_back(cur);
        size_t v = 0;
        while (v < vars_.size()) {
            if (++cur[v] < bound[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == vars_.size()) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return grevlex_less(a, b, degrees_);
    });
    return out;
}

int AlgebraPresentation::krull_dimension() const {
    if (ring_.kind == CoeffRing::Kind::Z)
        return is_module_finite() ? 1 : -1;
    // max cardinality of a variable subset T with no leading monomial
    // supported inside T
    size_t n = vars_.size();
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& g : gb_) {
            const Monomial& lm = g.terms().front().mono;
            bool inside = true;
            bool nonconst = false;
            for (size_t v = 0; v < n; ++v) {
                if (lm[v] > 0) {
                    nonconst = true;
                    if (!(mask & (1u << v))) inside = false;
                }
            }
            if (nonconst && inside) ok = false;
        }
        if (ok) best = std::max<int>(best, __builtin_popcount(mask));
    }
    return best;
}

Polynomial AlgebraPresentation::parse_poly(const std::string& text) const {
    return parse_polynomial(text, vars_, ring_, degrees_);
}

Polynomial normal_form(const Polynomial& p, const AlgebraPresentation& pres) {
    if (!pres.supports_normal_forms())
        throw UnsupportedRing(
            "normal forms need a field or a monic triangular presentation "
            "over Z");
    return divide_full(p, pres.groebner(), pres.ops());
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens,
                                       const PolyOps& ops) {
    if (!ops.ring.is_field())
        throw UnsupportedRing("Groebner bases are computed over fields only");
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    struct Pair {
        int64_t sugar;
        size_t i, j;
        bool operator<(const Pair& o) const {
            if (sugar != o.sugar) return sugar < o.sugar;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    auto sugar_of = [&](size_t i, size_t j) {
        Monomial l = mono_lcm(basis[i].terms().front().mono,
                              basis[j].terms().front().mono);
        return weighted_degree(l, ops.degrees);
    };
    std::set<Pair> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            queue.insert({sugar_of(i, j), i, j});

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        const Monomial& lf = f.terms().front().mono;
        const Monomial& lg = g.terms().front().mono;
        // Buchberger's coprimality criterion
        Monomial l = mono_lcm(lf, lg);
        bool coprime = true;
        for (size_t v = 0; v < l.size(); ++v)
            if (lf[v] > 0 && lg[v] > 0) coprime = false;
        if (coprime) continue;
        Rat cf = ops.ring.inv(f.terms().front().coeff);
        Rat cg = ops.ring.inv(g.terms().front().coeff);
        Polynomial spoly =
            ops.sub(ops.mono_scale(mono_div(l, lf), cf, f),
                    ops.mono_scale(mono_div(l, lg), cg, g));
        Polynomial r = divide_full(spoly, basis, ops);
        if (!r.is_zero()) {
            size_t idx = basis.size();
            basis.push_back(r);
            for (size_t i = 0; i < idx; ++i)
                queue.insert({sugar_of(i, idx), i, idx});
        }
    }

    // interreduce to the reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = divide_full(basis[i], others, ops);
            if (r != basis[i]) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + i);
                    --i;
                } else {
                    basis[i] = r;
                }
            }
        }
    }
    for (auto& g : basis)
        g = ops.scale(ops.ring.inv(g.terms().front().coeff), g);
    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return grevlex_less(a.terms().front().mono,
                                      b.terms().front().mono, ops.degrees);
              });
    return basis;
}

std::vector<Monomial> free_monomials_of_degree(const std::vector<int>& degrees,
                                               int64_t d) {
    std::vector<Monomial> out;
    Monomial cur(degrees.size(), 0);
    // depth-first over exponents with remaining-degree bookkeeping
    std::function<void(size_t, int64_t)> rec = [&](size_t v, int64_t rem) {
        if (v + 1 == degrees.size()) {
            if (rem % degrees[v] == 0) {
                cur[v] = static_cast<int32_t>(rem / degrees[v]);
                out.push_back(cur);
                cur[v] = 0;
            }
            return;
        }
        for (int64_t e = 0; e * degrees[v] <= rem; ++e) {
            cur[v] = static_cast<int32_t>(e);
            rec(v + 1, rem - e * degrees[v]);
        }
        cur[v] = 0;
    };
    if (degrees.empty()) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return grevlex_less(a, b, degrees);
    });
    return out;
}

std::vector<Monomial> graded_piece_basis(const AlgebraPresentation& pres,
                                         int64_t degree) {
    if (!pres.is_graded()) throw NotGraded("presentation is not graded");
    std::vector<Monomial> out;
    for (auto& m : free_monomials_of_degree(pres.degrees(), degree)) {
        bool standard = true;
        for (const auto& g : pres.groebner())
            if (mono_divides(g.terms().front().mono, m)) standard = false;
        if (standard) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace hhgap
