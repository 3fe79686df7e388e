#include "hhgap/homology.hpp"

#include <algorithm>
#include <cmath>

#include "hhgap/errors.hpp"

namespace hhgap {

namespace {

// ---------------------------------------------------------------------------
// graded engine
// ---------------------------------------------------------------------------

// Per-degree quotient realization of a graded presented module: a basis of
// surviving free-cover coordinates plus a projector along the row-reduced
// relation space.
class GradedPieces {
  public:
    explicit GradedPieces(const ModulePresentation& m)
        : m_(m), rel_degs_(m.relation_degrees()) {}

    struct Piece {
        PieceBasis cover;
        KMat rel_rref;                // rows reduced, pivot = 1
        std::vector<size_t> pivots;   // pivot cover coordinates
        std::vector<size_t> qcoords;  // quotient basis (non-pivot coords)
        std::map<size_t, size_t> qindex;
    };

    const Piece& piece(int64_t d) {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        Piece p;
        p.cover = free_piece_basis(*m_.base, m_.gen_degrees, d);
        KMat rel = piece_matrix(*m_.base, m_.relations, rel_degs_,
                                m_.gen_degrees, d);
        KMat rows = rel.transpose();
        std::vector<size_t> piv = k_rref(rows, m_.base->ring());
        p.pivots = piv;
        size_t nrows = piv.size();
        p.rel_rref = KMat(nrows, p.cover.dim());
        for (size_t r = 0; r < nrows; ++r)
            for (size_t c = 0; c < p.cover.dim(); ++c)
                p.rel_rref.at(r, c) = rows.at(r, c);
        std::vector<bool> is_piv(p.cover.dim(), false);
        for (size_t c : piv) is_piv[c] = true;
        for (size_t c = 0; c < p.cover.dim(); ++c)
            if (!is_piv[c]) {
                p.qindex[c] = p.qcoords.size();
                p.qcoords.push_back(c);
            }
        return cache_.emplace(d, std::move(p)).first->second;
    }

    std::vector<Rat> project(const Piece& p, std::vector<Rat> v) const {
        const CoeffRing& ring = m_.base->ring();
        for (size_t r = 0; r < p.rel_rref.rows(); ++r) {
            size_t pc = p.pivots[r];
            if (v[pc].is_zero()) continue;
            Rat f = v[pc];
            for (size_t c = 0; c < p.rel_rref.cols(); ++c)
                v[c] = ring.sub(v[c], ring.mul(f, p.rel_rref.at(r, c)));
        }
        std::vector<Rat> q(p.qcoords.size(), Rat(0));
        for (size_t i = 0; i < p.qcoords.size(); ++i) q[i] = v[p.qcoords[i]];
        return q;
    }

    // Multiplication by a homogeneous polynomial as a map of quotient pieces.
    KMat mult_map(int64_t src_degree, const Polynomial& p) {
        if (p.is_zero()) {
            const Piece& src = piece(src_degree);
            return KMat(0, src.qcoords.size());
        }
        int64_t dp = weighted_degree(p.terms().front().mono,
                                     m_.base->degrees());
        const Piece& src = piece(src_degree);
        const Piece& dst = piece(src_degree + dp);
        KMat out(dst.qcoords.size(), src.qcoords.size());
        PolyOps ops = m_.base->ops();
        for (size_t j = 0; j < src.qcoords.size(); ++j) {
            const auto& [gen, mono] = src.cover.elems[src.qcoords[j]];
            Polynomial img =
                normal_form(ops.mono_scale(mono, Rat(1), p), *m_.base);
            std::vector<Rat> cov(dst.cover.dim(), Rat(0));
            for (const auto& t : img.terms()) {
                auto it = dst.cover.index.find({gen, t.mono});
                if (it == dst.cover.index.end())
                    throw Error("BadPiece", "product left the expected piece");
                cov[it->second] = t.coeff;
            }
            std::vector<Rat> q = project(dst, std::move(cov));
            for (size_t r = 0; r < q.size(); ++r) out.at(r, j) = q[r];
        }
        return out;
    }

  private:
    ModulePresentation m_;
    std::vector<int64_t> rel_degs_;
    std::map<int64_t, Piece> cache_;
};

struct GradedChainSpace {
    std::vector<size_t> offsets;  // per complex component
    size_t dim = 0;
};

GradedChainSpace chain_space(GradedPieces& pieces,
                             const std::vector<int64_t>& cdegs, int64_t d) {
    GradedChainSpace s;
    for (int64_t cd : cdegs) {
        s.offsets.push_back(s.dim);
        s.dim += pieces.piece(d - cd).qcoords.size();
    }
    return s;
}

// Matrix of the differential on the degree-d slices of C_n ⊗ M.
KMat graded_chain_map(GradedPieces& pieces, const FreeComplex& c,
                      const PolyMatrix& m, const std::vector<int64_t>& src_degs,
                      const std::vector<int64_t>& dst_degs, int64_t d) {
    GradedChainSpace src = chain_space(pieces, src_degs, d);
    GradedChainSpace dst = chain_space(pieces, dst_degs, d);
    KMat out(dst.dim, src.dim);
    for (size_t i = 0; i < src_degs.size(); ++i) {
        for (size_t r = 0; r < dst_degs.size(); ++r) {
            const Polynomial& e = m.at(r, i);
            if (e.is_zero()) continue;
            KMat block = pieces.mult_map(d - src_degs[i], e);
            for (size_t rr = 0; rr < block.rows(); ++rr)
                for (size_t cc = 0; cc < block.cols(); ++cc)
                    out.at(dst.offsets[r] + rr, src.offsets[i] + cc) =
                        c.base->ring().add(
                            out.at(dst.offsets[r] + rr, src.offsets[i] + cc),
                            block.at(rr, cc));
        }
    }
    return out;
}

// Multiplication by x_v on the degree-(d - dv) slice of C_n ⊗ M, into the
// degree-d slice (block diagonal over complex components).
KMat graded_var_map(GradedPieces& pieces, const FreeComplex& c,
                    const std::vector<int64_t>& cdegs, size_t var, int64_t d) {
    int64_t dv = c.base->degrees()[var];
    Polynomial xv = Polynomial::variable(var, c.base->nvars());
    GradedChainSpace src = chain_space(pieces, cdegs, d - dv);
    GradedChainSpace dst = chain_space(pieces, cdegs, d);
    KMat out(dst.dim, src.dim);
    for (size_t i = 0; i < cdegs.size(); ++i) {
        KMat block = pieces.mult_map(d - dv - cdegs[i], xv);
        for (size_t rr = 0; rr < block.rows(); ++rr)
            for (size_t cc = 0; cc < block.cols(); ++cc)
                out.at(dst.offsets[i] + rr, src.offsets[i] + cc) =
                    block.at(rr, cc);
    }
    return out;
}

ModuleDescriptor graded_homology(const FreeComplex& c, int n,
                                 const ModulePresentation& m,
                                 const HomologyOptions& opts) {
    const AlgebraPresentation& base = *c.base;
    const CoeffRing& ring = base.ring();
    if (c.rank(n) == 0) {
        ModuleDescriptor d = ModuleDescriptor::zero_field();
        d.graded = true;
        d.cap = opts.internal_cap;
        d.truncated = false;
        return d;
    }
    std::vector<int64_t> cdegs = c.degrees_at(n);
    std::vector<int64_t> up_degs = c.degrees_at(n + 1);
    std::vector<int64_t> down_degs = c.degrees_at(n - 1);
    if (static_cast<int>(cdegs.size()) != c.rank(n))
        throw NotGraded("complex lacks basis degrees for the graded engine");

    GradedPieces pieces(m);

    int64_t mg_min = m.gen_degrees.empty()
                         ? 0
                         : *std::min_element(m.gen_degrees.begin(),
                                             m.gen_degrees.end());
    int64_t dlow = *std::min_element(cdegs.begin(), cdegs.end()) + mg_min;
    int64_t cap = opts.internal_cap;
    bool finite_base = base.is_module_finite();
    if (finite_base) {
        // exact: raise the cap so every possibly-nonzero degree is covered
        int64_t alg_max = 0;
        for (const auto& mono : base.monomial_basis())
            alg_max = std::max(alg_max, weighted_degree(mono, base.degrees()));
        int64_t mg_max = m.gen_degrees.empty()
                             ? 0
                             : *std::max_element(m.gen_degrees.begin(),
                                                 m.gen_degrees.end());
        int64_t cd_max = *std::max_element(cdegs.begin(), cdegs.end());
        cap = std::max(cap, cd_max + mg_max + alg_max);
    }

    ModuleDescriptor out;
    out.kind = ModuleDescriptor::Kind::FieldDims;
    out.graded = true;
    out.cap = cap;
    out.truncated = !finite_base;
    int64_t nu_total = 0;

    const PolyMatrix* dn = nullptr;
    const PolyMatrix* dnext = nullptr;
    auto it = c.diff.find(n);
    if (it != c.diff.end() && c.rank(n - 1) > 0) dn = &it->second;
    auto it2 = c.diff.find(n + 1);
    if (it2 != c.diff.end() && c.rank(n + 1) > 0) dnext = &it2->second;

    std::map<int64_t, KMat> cycle_cache;
    for (int64_t d = dlow; d <= cap; ++d) {
        GradedChainSpace here = chain_space(pieces, cdegs, d);
        if (here.dim == 0) continue;
        KMat cycles;
        if (dn) {
            KMat a = graded_chain_map(pieces, c, *dn, cdegs, down_degs, d);
            cycles = k_kernel(a, ring);
        } else {
            cycles = KMat::identity(here.dim);
        }
        size_t zdim = cycles.cols();
        KMat bmat(here.dim, 0);
        if (dnext)
            bmat = graded_chain_map(pieces, c, *dnext, up_degs, cdegs, d);
        size_t brank = k_rank(bmat, ring);
        int64_t h = static_cast<int64_t>(zdim) - static_cast<int64_t>(brank);
        if (h > 0) out.dims[d] = h;

        if (opts.want_nu) {
            // span of boundaries plus the maximal ideal acting on cycles
            KMat w = bmat;
            for (size_t v = 0; v < base.nvars(); ++v) {
                int64_t dv = base.degrees()[v];
                auto cit = cycle_cache.find(d - dv);
                if (cit == cycle_cache.end()) continue;
                KMat mv = graded_var_map(pieces, c, cdegs, v, d);
                // mv * cycles at (d - dv)
                const KMat& zprev = cit->second;
                KMat img(here.dim, zprev.cols());
                for (size_t r = 0; r < here.dim; ++r)
                    for (size_t cc = 0; cc < zprev.cols(); ++cc) {
                        Rat acc(0);
                        for (size_t k = 0; k < mv.cols(); ++k)
                            acc = ring.add(
                                acc, ring.mul(mv.at(r, k), zprev.at(k, cc)));
                        img.at(r, cc) = acc;
                    }
                w = w.hcat(img);
            }
            size_t wrank = k_rank(w, ring);
            nu_total += static_cast<int64_t>(zdim) - static_cast<int64_t>(wrank);
        }
        cycle_cache.emplace(d, std::move(cycles));
    }
    if (opts.want_nu) out.nu = nu_total;
    return out;
}

// ---------------------------------------------------------------------------
// module-finite engines (restriction of scalars)
// ---------------------------------------------------------------------------

struct FiniteAlgebra {
    std::vector<Monomial> basis;
    std::map<Monomial, size_t> index;

    explicit FiniteAlgebra(const AlgebraPresentation& pres) {
        basis = pres.monomial_basis();
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    }
    size_t dim() const { return basis.size(); }
};

// Coordinates of nf(p * basis[j]) in the monomial basis, as column j.
KMat mult_matrix(const AlgebraPresentation& pres, const FiniteAlgebra& fa,
                 const Polynomial& p) {
    KMat out(fa.dim(), fa.dim());
    PolyOps ops = pres.ops();
    for (size_t j = 0; j < fa.dim(); ++j) {
        Polynomial img =
            normal_form(ops.mono_scale(fa.basis[j], Rat(1), p), pres);
        for (const auto& t : img.terms()) {
            auto it = fa.index.find(t.mono);
            if (it == fa.index.end())
                throw Error("BadBasis", "normal form left the monomial basis");
            out.at(it->second, j) = t.coeff;
        }
    }
    return out;
}

// Cover coordinates of the module M: (generator, algebra basis monomial).
struct FiniteCover {
    size_t gens;
    size_t alg_dim;
    size_t dim() const { return gens * alg_dim; }
    size_t coord(size_t gen, size_t b) const { return gen * alg_dim + b; }
};

// Columns spanning the relation subspace/sublattice of the cover.
KMat relation_columns(const AlgebraPresentation& pres, const FiniteAlgebra& fa,
                      const ModulePresentation& m, const FiniteCover& cov) {
    KMat out(cov.dim(), m.relations.cols() * fa.dim());
    PolyOps ops = pres.ops();
    size_t col = 0;
    for (size_t c = 0; c < m.relations.cols(); ++c)
        for (size_t b = 0; b < fa.dim(); ++b, ++col)
            for (size_t g = 0; g < m.ngens(); ++g) {
                const Polynomial& e = m.relations.at(g, c);
                if (e.is_zero()) continue;
                Polynomial img = normal_form(
                    ops.mono_scale(fa.basis[b], Rat(1), e), pres);
                for (const auto& t : img.terms())
                    out.at(cov.coord(g, fa.index.at(t.mono)), col) = t.coeff;
            }
    return out;
}

// Block-expands a PolyMatrix to cover coordinates: entry (r,i) acts by
// multiplication on the algebra part, preserving the module generator index.
KMat expand_chain_map(const AlgebraPresentation& pres, const FiniteAlgebra& fa,
                      const PolyMatrix& m, const FiniteCover& cov) {
    size_t s = cov.dim();
    KMat out(m.rows() * s, m.cols() * s);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t i = 0; i < m.cols(); ++i) {
            const Polynomial& e = m.at(r, i);
            if (e.is_zero()) continue;
            KMat mm = mult_matrix(pres, fa, e);
            for (size_t g = 0; g < cov.gens; ++g)
                for (size_t rr = 0; rr < fa.dim(); ++rr)
                    for (size_t cc = 0; cc < fa.dim(); ++cc)
                        out.at(r * s + cov.coord(g, rr),
                               i * s + cov.coord(g, cc)) = mm.at(rr, cc);
        }
    return out;
}

ZMat to_zmat(const KMat& m) {
    ZMat out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            const Rat& v = m.at(r, c);
            if (!v.is_integer())
                throw UnsupportedRing("non-integer value over Z");
            out.at(r, c) = v.num();
        }
    return out;
}

// Distinct irreducible factors of a monic univariate polynomial over Q or
// F_p, enumerating the maximal ideals of K[t]/(f). Roots are stripped first;
// a quadratic tail is split by the discriminant. Returns empty when beyond
// these cases (nu is then reported unknown).
struct UnivariateFactor {
    std::vector<Rat> coeffs;  // g = sum coeffs[i] t^i, monic
    int degree;
};

std::vector<Rat> evaluate_and_deflate(std::vector<Rat>& f, const Rat& root,
                                      const CoeffRing& ring) {
    // synthetic division by (t - root); caller checked f(root) = 0
    std::vector<Rat> q(f.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = f.size(); i-- > 1;) {
        carry = ring.add(f[i], ring.mul(root, carry));
        q[i - 1] = carry;
    }
    return q;
}

Rat eval_poly(const std::vector<Rat>& f, const Rat& x, const CoeffRing& ring) {
    Rat acc(0);
    for (size_t i = f.size(); i-- > 0;)
        acc = ring.add(ring.mul(acc, x), f[i]);
    return acc;
}

std::vector<UnivariateFactor> factor_univariate(std::vector<Rat> f,
                                                const CoeffRing& ring) {
    std::vector<UnivariateFactor> out;
    for (Rat& c : f) c = ring.canon(c);
    auto add_root = [&](const Rat& r) {
        out.push_back({{ring.neg(r), Rat(1)}, 1});
        while (f.size() > 1 && eval_poly(f, r, ring).is_zero())
            f = evaluate_and_deflate(f, r, ring);
    };

    // root search: full scan over F_p, rational-root candidates over Q
    if (ring.kind == CoeffRing::Kind::Fp) {
        for (int64_t r = 0; r < ring.p && f.size() > 1; ++r)
            if (eval_poly(f, Rat(r), ring).is_zero()) add_root(Rat(r));
    } else {
        if (f.size() > 1 && eval_poly(f, Rat(0), ring).is_zero())
            add_root(Rat(0));
        // rational-root candidates p/q with p | a0 and q | lead, after
        // clearing denominators
        int64_t lcm = 1;
        for (const Rat& c : f) lcm = lcm_i64(lcm, c.den());
        std::vector<int64_t> zi;
        for (const Rat& c : f) zi.push_back((c * Rat(lcm)).num());
        if (zi.size() > 1) {
            int64_t a0 = std::llabs(zi.front());
            int64_t an = std::llabs(zi.back());
            if (a0 > 1000000 || an > 1000000) return {};  // give up
            for (int64_t p = 1; p <= a0 && f.size() > 1; ++p) {
                if (a0 % p != 0) continue;
                for (int64_t q = 1; q <= an && f.size() > 1; ++q) {
                    if (an % q != 0) continue;
                    for (int sign : {1, -1}) {
                        Rat cand(sign * p, q);
                        if (f.size() > 1 &&
                            eval_poly(f, cand, ring).is_zero())
                            add_root(cand);
                    }
                }
            }
        }
    }

    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return out;
    if (deg == 2) {
        // root-free monic quadratic tail: irreducible
        Rat inv = ring.inv(f[2]);
        out.push_back({{ring.mul(inv, f[0]), ring.mul(inv, f[1]), Rat(1)}, 2});
        return out;
    }
    return {};  // tail of degree >= 3: unsupported, nu stays unknown
}

// Monic coefficient list of the single relation of a monogenic presentation.
std::vector<Rat> monogenic_coeffs(const AlgebraPresentation& pres) {
    const Polynomial& f = pres.relations().front();
    int deg = f.degree_in(0);
    std::vector<Rat> coeffs(deg + 1, Rat(0));
    for (const auto& t : f.terms()) coeffs[t.mono[0]] = t.coeff;
    return coeffs;
}

bool is_monogenic(const AlgebraPresentation& pres) {
    return pres.nvars() == 1 && pres.relations().size() == 1 &&
           !pres.relations().front().is_zero();
}

// evaluate g at a square matrix over a field
KMat evaluate_poly_at(const std::vector<Rat>& g, const KMat& t,
                      const CoeffRing& ring) {
    size_t n = t.rows();
    KMat acc(n, n);
    KMat power = KMat::identity(n);
    for (size_t i = 0; i < g.size(); ++i) {
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                acc.at(r, c) =
                    ring.add(acc.at(r, c), ring.mul(g[i], power.at(r, c)));
        if (i + 1 < g.size()) {
            KMat next(n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) {
                    Rat s(0);
                    for (size_t k = 0; k < n; ++k)
                        s = ring.add(s,
                                     ring.mul(power.at(r, k), t.at(k, c)));
                    next.at(r, c) = s;
                }
            power = next;
        }
    }
    return acc;
}

ModuleDescriptor field_finite_homology(const FreeComplex& c, int n,
                                       const ModulePresentation& m,
                                       const HomologyOptions& opts) {
    const AlgebraPresentation& base = *c.base;
    const CoeffRing& ring = base.ring();
    FiniteAlgebra fa(base);
    FiniteCover cov{m.ngens(), fa.dim()};
    if (c.rank(n) == 0) {
        ModuleDescriptor d = ModuleDescriptor::zero_field();
        d.nu = 0;
        return d;
    }

    // quotient realization of M
    KMat rel = relation_columns(base, fa, m, cov);
    KMat rel_rows = rel.transpose();
    std::vector<size_t> piv = k_rref(rel_rows, ring);
    std::vector<bool> is_piv(cov.dim(), false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> qcoords;
    for (size_t i = 0; i < cov.dim(); ++i)
        if (!is_piv[i]) qcoords.push_back(i);
    auto project = [&](std::vector<Rat> v) {
        for (size_t r = 0; r < piv.size(); ++r) {
            if (v[piv[r]].is_zero()) continue;
            Rat fcoef = v[piv[r]];
            for (size_t cc = 0; cc < cov.dim(); ++cc)
                v[cc] = ring.sub(v[cc], ring.mul(fcoef, rel_rows.at(r, cc)));
        }
        std::vector<Rat> q(qcoords.size());
        for (size_t i = 0; i < qcoords.size(); ++i) q[i] = v[qcoords[i]];
        return q;
    };
    size_t mq = qcoords.size();

    // chain map on quotient coordinates
    auto chain_matrix = [&](const PolyMatrix& pm) {
        KMat cover_map = expand_chain_map(base, fa, pm, cov);
        KMat out(pm.rows() * mq, pm.cols() * mq);
        for (size_t i = 0; i < pm.cols(); ++i)
            for (size_t j = 0; j < mq; ++j) {
                std::vector<Rat> v(cover_map.rows(), Rat(0));
                size_t src = i * cov.dim() + qcoords[j];
                for (size_t r = 0; r < cover_map.rows(); ++r)
                    v[r] = cover_map.at(r, src);
                for (size_t blk = 0; blk < pm.rows(); ++blk) {
                    std::vector<Rat> part(cov.dim());
                    for (size_t k = 0; k < cov.dim(); ++k)
                        part[k] = v[blk * cov.dim() + k];
                    std::vector<Rat> q = project(std::move(part));
                    for (size_t k = 0; k < mq; ++k)
                        out.at(blk * mq + k, i * mq + j) = q[k];
                }
            }
        return out;
    };

    size_t xdim = c.rank(n) * mq;
    KMat cycles;
    auto it = c.diff.find(n);
    if (it != c.diff.end() && c.rank(n - 1) > 0)
        cycles = k_kernel(chain_matrix(it->second), ring);
    else
        cycles = KMat::identity(xdim);
    KMat bmat(xdim, 0);
    auto it2 = c.diff.find(n + 1);
    if (it2 != c.diff.end() && c.rank(n + 1) > 0)
        bmat = chain_matrix(it2->second);

    // homology coordinates: quotient of cycle coords by boundary coords
    // (express boundaries in the cycle basis)
    size_t zdim = cycles.cols();
    KMat bz(zdim, bmat.cols());
    for (size_t cb = 0; cb < bmat.cols(); ++cb) {
        std::vector<Rat> b(xdim);
        for (size_t r = 0; r < xdim; ++r) b[r] = bmat.at(r, cb);
        auto sol = k_solve(cycles, b, ring);
        if (!sol) throw Error("BadComplex", "boundary is not a cycle");
        for (size_t r = 0; r < zdim; ++r) bz.at(r, cb) = (*sol)[r];
    }
    KMat brows = bz.transpose();
    std::vector<size_t> bpiv = k_rref(brows, ring);
    std::vector<bool> is_bpiv(zdim, false);
    for (size_t p : bpiv) is_bpiv[p] = true;
    std::vector<size_t> hcoords;
    for (size_t i = 0; i < zdim; ++i)
        if (!is_bpiv[i]) hcoords.push_back(i);
    size_t hdim = hcoords.size();

    ModuleDescriptor out;
    out.kind = ModuleDescriptor::Kind::FieldDims;
    out.graded = false;
    out.truncated = false;
    if (hdim > 0) out.dims[0] = static_cast<int64_t>(hdim);

    std::optional<MonogenicAction> action = opts.action;
    if (!action && is_monogenic(base))
        action = MonogenicAction{Polynomial::variable(0, base.nvars()),
                                 monogenic_coeffs(base)};

    if (opts.want_nu) {
        if (hdim == 0) {
            out.nu = 0;
        } else if (action) {
            // T action on homology coordinates
            auto project_h = [&](std::vector<Rat> v) {
                for (size_t r = 0; r < bpiv.size(); ++r) {
                    if (v[bpiv[r]].is_zero()) continue;
                    Rat fc = v[bpiv[r]];
                    for (size_t cc = 0; cc < zdim; ++cc)
                        v[cc] = ring.sub(v[cc], ring.mul(fc, brows.at(r, cc)));
                }
                std::vector<Rat> h(hdim);
                for (size_t i = 0; i < hdim; ++i) h[i] = v[hcoords[i]];
                return h;
            };
            KMat tmap = chain_matrix([&] {
                PolyMatrix d(c.rank(n), c.rank(n));
                for (int i = 0; i < c.rank(n); ++i) d.at(i, i) = action->var;
                return d;
            }());
            KMat t_on_h(hdim, hdim);
            for (size_t j = 0; j < hdim; ++j) {
                // homology basis vector = cycle column hcoords[j]
                std::vector<Rat> v(xdim, Rat(0));
                for (size_t r = 0; r < xdim; ++r)
                    v[r] = cycles.at(r, hcoords[j]);
                std::vector<Rat> tv(xdim, Rat(0));
                for (size_t r = 0; r < xdim; ++r) {
                    Rat acc(0);
                    for (size_t k = 0; k < xdim; ++k)
                        acc = ring.add(acc, ring.mul(tmap.at(r, k), v[k]));
                    tv[r] = acc;
                }
                auto sol = k_solve(cycles, tv, ring);
                if (!sol) throw Error("BadComplex", "t-action left the cycles");
                std::vector<Rat> h = project_h(std::move(*sol));
                for (size_t r = 0; r < hdim; ++r) t_on_h.at(r, j) = h[r];
            }
            out.nu = -1;
            auto factors = factor_univariate(action->min_poly, ring);
            if (!factors.empty()) {
                int64_t best = 0;
                for (const auto& g : factors) {
                    KMat gt = evaluate_poly_at(g.coeffs, t_on_h, ring);
                    size_t r = k_rank(gt, ring);
                    best = std::max(best, (static_cast<int64_t>(hdim) -
                                           static_cast<int64_t>(r)) /
                                              g.degree);
                }
                out.nu = best;
            }
        } else {
            out.nu = -1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Z-finite engine
// ---------------------------------------------------------------------------

ModuleDescriptor z_finite_homology(const FreeComplex& c, int n,
                                   const ModulePresentation& m,
                                   const HomologyOptions& opts) {
    const AlgebraPresentation& base = *c.base;
    FiniteAlgebra fa(base);
    FiniteCover cov{m.ngens(), fa.dim()};
    if (c.rank(n) == 0) {
        ModuleDescriptor zero = ModuleDescriptor::from_factors({});
        zero.nu = 0;
        return zero;
    }

    ZMat rel = to_zmat(relation_columns(base, fa, m, cov));
    size_t s = cov.dim();

    auto block_rel = [&](int deg) {
        size_t blocks = static_cast<size_t>(c.rank(deg));
        ZMat out(blocks * s, blocks * rel.cols());
        for (size_t b = 0; b < blocks; ++b)
            for (size_t r = 0; r < s; ++r)
                for (size_t cc = 0; cc < rel.cols(); ++cc)
                    out.at(b * s + r, b * rel.cols() + cc) = rel.at(r, cc);
        return out;
    };
    auto chain_map = [&](const PolyMatrix& pm) {
        return to_zmat(expand_chain_map(base, fa, pm, cov));
    };

    size_t xdim = static_cast<size_t>(c.rank(n)) * s;

    // cycles: v with d_n(v) in the relation lattice below
    ZMat kb;
    auto it = c.diff.find(n);
    if (it != c.diff.end() && c.rank(n - 1) > 0) {
        ZMat dmat = chain_map(it->second);
        ZMat relbelow = block_rel(n - 1);
        ZMat stacked = dmat.hcat(relbelow);
        ZMat ker = z_kernel(stacked);
        ZMat top(xdim, ker.cols());
        for (size_t r = 0; r < xdim; ++r)
            for (size_t cc = 0; cc < ker.cols(); ++cc)
                top.at(r, cc) = ker.at(r, cc);
        kb = z_lattice_basis(top);
    } else {
        kb = ZMat::identity(xdim);
    }
    size_t k = kb.cols();
    if (k == 0) {
        ModuleDescriptor zero = ModuleDescriptor::from_factors({});
        zero.nu = 0;
        return zero;
    }

    // boundaries + relations inside the cycle lattice
    std::vector<std::vector<int64_t>> denom_cols;
    ZMat relhere = block_rel(n);
    for (size_t cc = 0; cc < relhere.cols(); ++cc) {
        std::vector<int64_t> v(xdim);
        for (size_t r = 0; r < xdim; ++r) v[r] = relhere.at(r, cc);
        denom_cols.push_back(std::move(v));
    }
    auto it2 = c.diff.find(n + 1);
    if (it2 != c.diff.end() && c.rank(n + 1) > 0) {
        ZMat dmat = chain_map(it2->second);
        for (size_t cc = 0; cc < dmat.cols(); ++cc) {
            std::vector<int64_t> v(xdim);
            for (size_t r = 0; r < xdim; ++r) v[r] = dmat.at(r, cc);
            denom_cols.push_back(std::move(v));
        }
    }
    ZMat q(k, denom_cols.size());
    for (size_t cc = 0; cc < denom_cols.size(); ++cc) {
        auto sol = z_solve(kb, denom_cols[cc]);
        if (!sol)
            throw Error("BadComplex", "boundary not inside the cycle lattice");
        for (size_t r = 0; r < k; ++r) q.at(r, cc) = (*sol)[r];
    }
    std::vector<int64_t> snf = smith_invariant_factors(q);
    size_t nonzero = 0;
    for (int64_t f : snf)
        if (f != 0) ++nonzero;
    std::vector<int64_t> factors;
    for (int64_t f : snf)
        if (f > 1) factors.push_back(f);
    for (size_t i = 0; i < k - nonzero; ++i) factors.push_back(0);
    ModuleDescriptor out = ModuleDescriptor::from_factors(factors);

    std::optional<MonogenicAction> action = opts.action;
    if (!action && is_monogenic(base))
        action = MonogenicAction{Polynomial::variable(0, base.nvars()),
                                 monogenic_coeffs(base)};

    if (opts.want_nu) {
        if (out.is_zero()) {
            out.nu = 0;
        } else if (action) {
            // action variable on cycle coordinates
            ZMat tmult = to_zmat(mult_matrix(base, fa, action->var));
            ZMat t_on_k(k, k);
            for (size_t j = 0; j < k; ++j) {
                std::vector<int64_t> v(xdim, 0);
                for (size_t blk = 0; blk < static_cast<size_t>(c.rank(n)); ++blk)
                    for (size_t g = 0; g < cov.gens; ++g)
                        for (size_t r = 0; r < fa.dim(); ++r)
                            for (size_t cc = 0; cc < fa.dim(); ++cc) {
                                size_t row = blk * s + cov.coord(g, r);
                                size_t colc = blk * s + cov.coord(g, cc);
                                v[row] = checked_add(
                                    v[row], checked_mul(tmult.at(r, cc),
                                                        kb.at(colc, j)));
                            }
                auto sol = z_solve(kb, v);
                if (!sol)
                    throw Error("BadComplex", "t-action left the cycle lattice");
                for (size_t r = 0; r < k; ++r) t_on_k.at(r, j) = (*sol)[r];
            }
            // nu = max over maximal ideals (p, g(t)) of
            // dim_{F_p} Z^k / (Q, p, g(T)) / deg g
            std::vector<Rat> f = action->min_poly;
            std::vector<int64_t> primes = {2, 3, 5, 7, 11, 13};
            auto is_prime = [](int64_t v) {
                if (v < 2) return false;
                for (int64_t d = 2; d * d <= v; ++d)
                    if (v % d == 0) return false;
                return true;
            };
            for (int64_t fac : snf)
                for (int64_t p = 2; p <= fac; ++p)
                    if (fac % p == 0 && is_prime(p) &&
                        std::find(primes.begin(), primes.end(), p) ==
                            primes.end())
                        primes.push_back(p);
            int64_t best = 0;
            for (int64_t p : primes) {
                CoeffRing fp = CoeffRing::prime_field(p);
                std::vector<Rat> fmodp;
                for (const Rat& cfr : f) fmodp.push_back(fp.canon(cfr));
                auto facs = factor_univariate(fmodp, fp);
                KMat tk(k, k);
                for (size_t r = 0; r < k; ++r)
                    for (size_t cc = 0; cc < k; ++cc)
                        tk.at(r, cc) = fp.canon(Rat(t_on_k.at(r, cc)));
                for (const auto& g : facs) {
                    std::vector<Rat> gc;
                    for (const Rat& cf : g.coeffs) gc.push_back(fp.canon(cf));
                    KMat gt = evaluate_poly_at(gc, tk, fp);
                    // columns: Q mod p and g(T) columns
                    KMat w(k, q.cols() + k);
                    for (size_t r = 0; r < k; ++r) {
                        for (size_t cc = 0; cc < q.cols(); ++cc)
                            w.at(r, cc) = fp.canon(Rat(q.at(r, cc)));
                        for (size_t cc = 0; cc < k; ++cc)
                            w.at(r, q.cols() + cc) = gt.at(r, cc);
                    }
                    int64_t dim =
                        (static_cast<int64_t>(k) -
                         static_cast<int64_t>(k_rank(w, fp))) /
                        g.degree;
                    best = std::max(best, dim);
                }
            }
            out.nu = best;
        } else {
            out.nu = -1;
        }
    }
    return out;
}

}  // namespace

ModuleDescriptor homology_at(const FreeComplex& c, int n,
                             const ModulePresentation& m,
                             const HomologyOptions& opts) {
    const AlgebraPresentation& base = *c.base;
    if (base.ring().is_field()) {
        if (base.is_graded() &&
            (c.rank(n) == 0 || c.gen_degrees.count(n) > 0))
            return graded_homology(c, n, m, opts);
        if (base.is_module_finite())
            return field_finite_homology(c, n, m, opts);
        throw UnsupportedBase(
            "field base must be graded or module-finite for homology");
    }
    if (base.is_monic_triangular_z() && base.is_module_finite())
        return z_finite_homology(c, n, m, opts);
    throw UnsupportedBase("no homology strategy applies to this base");
}

ModuleDescriptor module_descriptor(const ModulePresentation& m,
                                   const HomologyOptions& opts) {
    FreeComplex c;
    c.base = m.base;
    c.ranks[0] = static_cast<int>(m.ngens());
    if (m.relations.cols() > 0) {
        c.ranks[1] = static_cast<int>(m.relations.cols());
        c.diff[1] = m.relations;
    }
    if (m.base->is_graded()) {
        c.gen_degrees[0] = m.gen_degrees;
        if (m.relations.cols() > 0) c.gen_degrees[1] = m.relation_degrees();
    }
    return homology_at(c, 0, ModulePresentation::free_rank_one(m.base), opts);
}

int64_t minimal_generator_count(const ModulePresentation& m,
                                const HomologyOptions& opts) {
    HomologyOptions o = opts;
    o.want_nu = true;
    return module_descriptor(m, o).nu;
}

}  // namespace hhgap
