#include "hhgap/complexes.hpp"

#include <algorithm>

#include "hhgap/errors.hpp"

namespace hhgap {

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b,
                        const AlgebraPresentation& pres) {
    PolyOps ops = pres.ops();
    PolyMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) {
            Polynomial acc;
            for (size_t k = 0; k < a.cols(); ++k)
                acc = ops.add(acc, ops.mul(a.at(r, k), b.at(k, c)));
            out.at(r, c) = normal_form(acc, pres);
        }
    return out;
}

bool poly_mat_is_zero(const PolyMatrix& m) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) return false;
    return true;
}

void RingMap::validate() const {
    if (images.size() != source->nvars())
        throw NotAHomomorphism("image count does not match variable count");
    for (const auto& rel : source->relations()) {
        Polynomial img = apply(rel);
        if (!img.is_zero())
            throw NotAHomomorphism("relation " + source->poly_str(rel) +
                                   " does not map to zero");
    }
}

Polynomial RingMap::apply(const Polynomial& p) const {
    Polynomial img = source->ops().substitute(p, images, target->ops());
    return normal_form(img, *target);
}

RingMap RingMap::identity(PresentationPtr pres) {
    RingMap m;
    m.source = pres;
    m.target = pres;
    for (size_t v = 0; v < pres->nvars(); ++v)
        m.images.push_back(Polynomial::variable(v, pres->nvars()));
    return m;
}

const std::vector<int64_t>& FreeComplex::degrees_at(int n) const {
    static const std::vector<int64_t> empty;
    auto it = gen_degrees.find(n);
    return it == gen_degrees.end() ? empty : it->second;
}

int FreeComplex::min_degree() const {
    return ranks.empty() ? 0 : ranks.begin()->first;
}

int FreeComplex::max_degree() const {
    return ranks.empty() ? 0 : ranks.rbegin()->first;
}

void FreeComplex::validate() const {
    for (const auto& [n, m] : diff) {
        if (static_cast<int>(m.cols()) != rank(n) ||
            static_cast<int>(m.rows()) != rank(n - 1))
            throw Error("BadComplex", "differential shape mismatch at degree " +
                                          std::to_string(n));
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) {
                Polynomial nf = normal_form(m.at(r, c), *base);
                if (nf != m.at(r, c))
                    throw Error("BadComplex", "entry not in normal form");
            }
    }
    for (const auto& [n, m] : diff) {
        auto next = diff.find(n + 1);
        if (next == diff.end()) continue;
        if (!poly_mat_is_zero(poly_mat_mul(m, next->second, *base)))
            throw Error("BadComplex",
                        "d∘d != 0 at degree " + std::to_string(n + 1));
    }
    if (base->is_graded()) {
        for (const auto& [n, m] : diff) {
            const auto& src = degrees_at(n);
            const auto& dst = degrees_at(n - 1);
            if (src.size() != m.cols() || dst.size() != m.rows()) continue;
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c) {
                    const Polynomial& e = m.at(r, c);
                    if (e.is_zero()) continue;
                    if (!e.is_homogeneous(base->degrees()))
                        throw Error("BadComplex", "inhomogeneous entry");
                    int64_t got = weighted_degree(e.terms().front().mono,
                                                  base->degrees());
                    if (got != src[c] - dst[r])
                        throw Error("BadComplex",
                                    "entry degree violates basis grading");
                }
        }
    }
}

FreeComplex shift_complex(const FreeComplex& c, int j) {
    FreeComplex out;
    out.base = c.base;
    out.cohomological = c.cohomological;
    int sign = (std::abs(j) % 2 == 1) ? -1 : 1;
    for (const auto& [n, r] : c.ranks) out.ranks[n + j] = r;
    for (const auto& [n, d] : c.gen_degrees) out.gen_degrees[n + j] = d;
    PolyOps ops = c.base->ops();
    for (const auto& [n, m] : c.diff) {
        PolyMatrix s = m;
        if (sign < 0)
            for (size_t r = 0; r < s.rows(); ++r)
                for (size_t cc = 0; cc < s.cols(); ++cc)
                    s.at(r, cc) = ops.neg(s.at(r, cc));
        out.diff[n + j] = std::move(s);
    }
    return out;
}

FreeComplex tensor_over_base(const FreeComplex& c, const RingMap& map) {
    map.validate();
    FreeComplex out;
    out.base = map.target;
    out.cohomological = c.cohomological;
    out.ranks = c.ranks;
    out.gen_degrees = c.gen_degrees;
    for (const auto& [n, m] : c.diff) {
        PolyMatrix t(m.rows(), m.cols());
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t cc = 0; cc < m.cols(); ++cc)
                t.at(r, cc) = map.apply(m.at(r, cc));
        out.diff[n] = std::move(t);
    }
    for (const auto& [n, m] : out.diff) {
        auto next = out.diff.find(n + 1);
        if (next != out.diff.end() &&
            !poly_mat_is_zero(poly_mat_mul(m, next->second, *out.base)))
            throw Error("BadComplex", "tensored differentials do not compose to zero");
    }
    return out;
}

FreeComplex hom_dual(const FreeComplex& c) {
    FreeComplex out;
    out.base = c.base;
    out.cohomological = true;
    for (const auto& [n, r] : c.ranks) out.ranks[-n] = r;
    for (const auto& [n, d] : c.gen_degrees) {
        std::vector<int64_t> neg;
        for (int64_t x : d) neg.push_back(-x);
        out.gen_degrees[-n] = std::move(neg);
    }
    // d^out_{-n} : C^out_{-n} = Hom(C_n) -> C^out_{-n-1} = Hom(C_{n+1})
    for (const auto& [n, m] : c.diff) out.diff[-(n - 1)] = m.transpose();
    return out;
}

bool is_minimal(const FreeComplex& c) {
    if (!c.base->is_graded())
        throw NoMaximalIdeal(
            "minimality needs a graded base with irrelevant maximal ideal");
    for (const auto& [n, m] : c.diff)
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t cc = 0; cc < m.cols(); ++cc)
                if (!m.at(r, cc).constant_term().is_zero()) return false;
    return true;
}

FreeComplex zero_complex(PresentationPtr base, const std::map<int, int>& ranks) {
    FreeComplex c;
    c.base = base;
    c.ranks = ranks;
    for (auto it = ranks.begin(); it != ranks.end(); ++it) {
        auto prev = ranks.find(it->first - 1);
        if (prev != ranks.end())
            c.diff[it->first] = PolyMatrix(prev->second, it->second);
        if (base->is_graded())
            c.gen_degrees[it->first] =
                std::vector<int64_t>(it->second, 0);
    }
    return c;
}

}  // namespace hhgap
