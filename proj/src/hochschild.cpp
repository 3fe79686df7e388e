#include "hhgap/hochschild.hpp"

#include <algorithm>
#include <functional>

#include "hhgap/errors.hpp"

namespace hhgap {

namespace {

bool is_free_rank_one(const ModulePresentation& m) {
    return m.ngens() == 1 && m.relations.cols() == 0 && m.gen_degrees[0] == 0;
}

ModulePresentation transport_module(const ModulePresentation& m,
                                    PresentationPtr target) {
    // same variables, possibly finer quotient; entries re-normalized
    ModulePresentation out;
    out.base = target;
    out.gen_degrees = m.gen_degrees;
    out.relations = PolyMatrix(m.relations.rows(), m.relations.cols());
    for (size_t r = 0; r < m.relations.rows(); ++r)
        for (size_t c = 0; c < m.relations.cols(); ++c)
            out.relations.at(r, c) = normal_form(m.relations.at(r, c), *target);
    return out;
}

}  // namespace

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Periodic: return "periodic";
        case Strategy::Koszul: return "koszul";
        case Strategy::Tate: return "tate";
        case Strategy::Bar: return "bar";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "periodic") return Strategy::Periodic;
    if (name == "koszul") return Strategy::Koszul;
    if (name == "tate") return Strategy::Tate;
    if (name == "bar") return Strategy::Bar;
    throw ParseError("unknown strategy '" + name + "'");
}

EnvelopingPresentation enveloping(PresentationPtr pres) {
    const AlgebraPresentation& s = *pres;
    size_t v = s.nvars();
    std::vector<std::string> vars = s.vars();
    for (const auto& name : s.vars()) vars.push_back(name + "'");
    std::vector<int> degrees = s.degrees();
    degrees.insert(degrees.end(), s.degrees().begin(), s.degrees().end());

    PolyOps ops{s.ring(), degrees};
    std::vector<Polynomial> relations;
    for (const auto& rel : s.relations()) {
        std::vector<Term> left, right;
        for (const auto& t : rel.terms()) {
            Monomial ml(2 * v, 0), mr(2 * v, 0);
            for (size_t i = 0; i < v; ++i) {
                ml[i] = t.mono[i];
                mr[i + v] = t.mono[i];
            }
            left.push_back({std::move(ml), t.coeff});
            right.push_back({std::move(mr), t.coeff});
        }
        relations.push_back(ops.normalize(std::move(left)));
        relations.push_back(ops.normalize(std::move(right)));
    }

    EnvelopingPresentation out;
    out.algebra = pres;
    out.env = std::make_shared<AlgebraPresentation>(s.ring(), vars, degrees,
                                                    std::move(relations));
    PolyOps eops = out.env->ops();
    for (size_t i = 0; i < v; ++i) {
        Polynomial diag = eops.sub(Polynomial::variable(i, 2 * v),
                                   Polynomial::variable(i + v, 2 * v));
        Polynomial nf = normal_form(diag, *out.env);
        if (!nf.is_zero()) out.diagonal_gens.push_back(std::move(nf));
    }

    out.mult.source = out.env;
    out.mult.target = pres;
    for (size_t i = 0; i < v; ++i)
        out.mult.images.push_back(Polynomial::variable(i, v));
    for (size_t i = 0; i < v; ++i)
        out.mult.images.push_back(Polynomial::variable(i, v));
    out.mult.validate();

    out.section.source = pres;
    out.section.target = out.env;
    for (size_t i = 0; i < v; ++i)
        out.section.images.push_back(Polynomial::variable(i + v, 2 * v));
    out.section.validate();
    return out;
}

namespace {

// (f(t) - f(t')) / (t - t') expanded without division:
// sum_k c_k sum_{i<k} t^i t'^{k-1-i}
Polynomial cofactor_polynomial(const Polynomial& f, const PolyOps& env_ops) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        int k = t.mono[0];
        for (int i = 0; i < k; ++i) {
            Monomial m(2, 0);
            m[0] = i;
            m[1] = k - 1 - i;
            ts.push_back({std::move(m), t.coeff});
        }
    }
    return env_ops.normalize(std::move(ts));
}

DiagonalResolution periodic_resolution(const EnvelopingPresentation& env,
                                       int cutoff,
                                       const HomologyOptions& opts) {
    const AlgebraPresentation& s = *env.algebra;
    if (s.nvars() != 1 || s.relations().size() != 1)
        throw StrategyInapplicable(
            "periodic resolution needs a monogenic algebra K[t]/(f)");
    const Polynomial& f = s.relations().front();
    PolyOps ops = env.env->ops();
    Polynomial delta = env.diagonal_gens.at(0);
    Polynomial fstar = normal_form(cofactor_polynomial(f, ops), *env.env);

    DiagonalResolution out;
    out.used = Strategy::Periodic;
    FreeComplex& c = out.complex;
    c.base = env.env;
    bool graded = env.env->is_graded();
    int64_t ddeg = 1, fdeg = 0;
    if (graded) {
        ddeg = weighted_degree(delta.terms().front().mono, env.env->degrees());
        fdeg = fstar.is_zero()
                   ? 0
                   : weighted_degree(fstar.terms().front().mono,
                                     env.env->degrees());
    }
    int64_t gdeg = 0;
    for (int n = 0; n <= cutoff; ++n) {
        c.ranks[n] = 1;
        if (graded) c.gen_degrees[n] = {gdeg};
        gdeg += (n % 2 == 0) ? ddeg : fdeg;
        if (n == 0) continue;
        PolyMatrix m(1, 1);
        m.at(0, 0) = (n % 2 == 1) ? delta : fstar;
        c.diff[n] = std::move(m);
    }
    c.validate();

    HomologyOptions ho = opts;
    ho.want_nu = false;
    for (int i = 1; i < cutoff; ++i) {
        ModuleDescriptor h = homology_at(c, i, ho);
        if (!h.is_zero())
            throw StrategyInapplicable(
                "periodic complex is not exact at degree " + std::to_string(i));
    }
    return out;
}

DiagonalResolution koszul_resolution(const EnvelopingPresentation& env,
                                     const HomologyOptions& opts) {
    DiagonalResolution out;
    out.used = Strategy::Koszul;
    out.complex = koszul_complex(env.env, env.diagonal_gens);
    HomologyOptions ho = opts;
    ho.want_nu = false;
    ModuleDescriptor h1 = homology_at(out.complex, 1, ho);
    if (!h1.is_zero())
        throw StrategyInapplicable(
            "diagonal generators are not a regular sequence (H_1 != 0)");
    if (out.complex.base->is_graded() && !out.complex.base->is_module_finite())
        out.caveats.push_back(
            "koszul regularity checked through internal degree " +
            std::to_string(opts.internal_cap));
    return out;
}

DiagonalResolution tate_resolution(const EnvelopingPresentation& env,
                                   int cutoff, const HomologyOptions& opts) {
    Surjection phi = Surjection::make(env.env, env.diagonal_gens);
    TateStage st = tate_stage(phi, 2, cutoff, opts);
    DiagonalResolution out;
    out.used = Strategy::Tate;
    out.complex = st.complex;
    HomologyOptions ho = opts;
    ho.want_nu = false;
    for (int i = 2; i < cutoff; ++i) {
        ModuleDescriptor h = homology_at(out.complex, i, ho);
        if (!h.is_zero())
            throw StrategyInapplicable(
                "second acyclic-closure stage is not exact at degree " +
                std::to_string(i));
    }
    out.caveats.push_back("tate stage exactness checked through degree " +
                          std::to_string(cutoff - 1));
    return out;
}

}  // namespace

DiagonalResolution diagonal_resolution(const EnvelopingPresentation& env,
                                       Strategy strategy, int cutoff,
                                       const HomologyOptions& opts) {
    switch (strategy) {
        case Strategy::Periodic: return periodic_resolution(env, cutoff, opts);
        case Strategy::Koszul: return koszul_resolution(env, opts);
        case Strategy::Tate: return tate_resolution(env, cutoff, opts);
        case Strategy::Bar:
            throw StrategyInapplicable(
                "the bar complex is an oracle, not a resolution strategy");
        case Strategy::Auto: break;
    }
    std::vector<std::string> reasons;
    if (env.algebra->nvars() == 1 && env.algebra->relations().size() == 1) {
        try {
            return periodic_resolution(env, cutoff, opts);
        } catch (const StrategyInapplicable& e) {
            reasons.push_back(e.what());
        }
    }
    try {
        return koszul_resolution(env, opts);
    } catch (const StrategyInapplicable& e) {
        reasons.push_back(e.what());
    }
    if (env.env->is_graded()) {
        try {
            return tate_resolution(env, cutoff, opts);
        } catch (const StrategyInapplicable& e) {
            reasons.push_back(e.what());
        }
    }
    std::string all;
    for (const auto& r : reasons) all += (all.empty() ? "" : "; ") + r;
    throw StrategyInapplicable("no diagonal resolution strategy applies: " +
                               all);
}

namespace {

std::optional<MonogenicAction> table_action(const AlgebraPresentation& s) {
    if (s.nvars() == 1 && s.relations().size() == 1) {
        const Polynomial& f = s.relations().front();
        int deg = f.degree_in(0);
        std::vector<Rat> coeffs(deg + 1, Rat(0));
        for (const auto& t : f.terms()) coeffs[t.mono[0]] = t.coeff;
        return MonogenicAction{Polynomial::variable(0, 1), coeffs};
    }
    return std::nullopt;
}

HochschildTable table_from_bar(PresentationPtr s, const ModulePresentation& m,
                               int max_degree, bool cohomology) {
    HochschildTable t;
    t.cohomology = cohomology;
    t.used = Strategy::Bar;
    std::vector<int64_t> dims = bar_oracle(s, m, max_degree, cohomology);
    for (int n = 0; n <= max_degree; ++n) {
        ModuleDescriptor d;
        d.kind = ModuleDescriptor::Kind::FieldDims;
        d.graded = false;
        d.truncated = false;
        if (dims[n] > 0) d.dims[0] = dims[n];
        t.entries.push_back({n, std::move(d)});
    }
    t.caveats.push_back(
        "bar oracle dimensions only (no module structure, nu not computed)");
    return t;
}

HochschildTable hochschild_table(PresentationPtr s,
                                 const ModulePresentation& m, int max_degree,
                                 Strategy strategy, bool cohomology,
                                 const HomologyOptions& opts) {
    if (strategy == Strategy::Bar)
        return table_from_bar(s, m, max_degree, cohomology);

    EnvelopingPresentation env = enveloping(s);
    DiagonalResolution res =
        diagonal_resolution(env, strategy, max_degree + 1, opts);

    FreeComplex over_s = tensor_over_base(res.complex, env.mult);
    if (cohomology) over_s = hom_dual(over_s);

    HomologyOptions ho = opts;
    if (!ho.action) ho.action = table_action(*s);

    ModulePresentation coeff = m;
    if (coeff.base.get() != s.get()) coeff = transport_module(m, s);

    HochschildTable t;
    t.cohomology = cohomology;
    t.used = res.used;
    t.caveats = res.caveats;
    for (int n = 0; n <= max_degree; ++n) {
        int idx = cohomology ? -n : n;
        ModuleDescriptor d = homology_at(over_s, idx, coeff, ho);
        t.entries.push_back({n, std::move(d)});
    }
    if (s->is_graded() && !s->is_module_finite())
        t.caveats.push_back(
            "graded dimensions reported through internal degree " +
            std::to_string(opts.internal_cap));
    if (res.used != Strategy::Koszul)
        t.caveats.push_back("resolution truncated at homological degree " +
                            std::to_string(max_degree + 1));
    return t;
}

}  // namespace

HochschildTable hochschild_homology(PresentationPtr s,
                                    const ModulePresentation& m, int max_degree,
                                    Strategy strategy,
                                    const HomologyOptions& opts) {
    return hochschild_table(s, m, max_degree, strategy, false, opts);
}

HochschildTable hochschild_cohomology(PresentationPtr s,
                                      const ModulePresentation& m,
                                      int max_degree, Strategy strategy,
                                      const HomologyOptions& opts) {
    return hochschild_table(s, m, max_degree, strategy, true, opts);
}

// ---------------------------------------------------------------------------
// bar complex oracle
// ---------------------------------------------------------------------------

namespace {

struct BarSetup {
    std::vector<Monomial> basis;  // algebra basis, basis[0] = 1
    std::map<Monomial, size_t> index;
    size_t sbar = 0;  // reduced basis size
    // structure constants: prod[i][j] = coordinates of basis[i]*basis[j]
    std::vector<std::vector<std::vector<Rat>>> prod;
    size_t mdim = 0;
    std::vector<KMat> action;  // action[b]: mdim x mdim for basis[b]
};

BarSetup bar_setup(const AlgebraPresentation& s, const ModulePresentation& m) {
    if (!s.ring().is_field())
        throw UnsupportedRing("bar oracle needs field coefficients");
    if (!s.is_module_finite())
        throw InfiniteDimensional("bar oracle needs dim_K S finite");
    BarSetup b;
    b.basis = s.monomial_basis();
    std::sort(b.basis.begin(), b.basis.end(),
              [&](const Monomial& a, const Monomial& bb) {
                  return grevlex_less(a, bb, s.degrees());
              });
    for (size_t i = 0; i < b.basis.size(); ++i) b.index[b.basis[i]] = i;
    bool has_one = true;
    for (int32_t e : b.basis[0])
        if (e != 0) has_one = false;
    if (!has_one) throw Error("BadBasis", "algebra basis does not contain 1");
    b.sbar = b.basis.size() - 1;

    PolyOps ops = s.ops();
    b.prod.assign(
        b.basis.size(),
        std::vector<std::vector<Rat>>(b.basis.size(),
                                      std::vector<Rat>(b.basis.size(), Rat(0))));
    for (size_t i = 0; i < b.basis.size(); ++i)
        for (size_t j = 0; j < b.basis.size(); ++j) {
            Polynomial p =
                normal_form(ops.mul(Polynomial::monomial(b.basis[i], Rat(1)),
                                    Polynomial::monomial(b.basis[j], Rat(1))),
                            s);
            for (const auto& t : p.terms())
                b.prod[i][j][b.index.at(t.mono)] = t.coeff;
        }

    // realize M as a quotient of (generator x basis) coordinates
    size_t g = m.ngens();
    size_t cover = g * b.basis.size();
    std::vector<std::vector<Rat>> rel_rows;
    for (size_t c = 0; c < m.relations.cols(); ++c)
        for (size_t bi = 0; bi < b.basis.size(); ++bi) {
            std::vector<Rat> v(cover, Rat(0));
            for (size_t gg = 0; gg < g; ++gg) {
                const Polynomial& e = m.relations.at(gg, c);
                if (e.is_zero()) continue;
                Polynomial p =
                    normal_form(ops.mono_scale(b.basis[bi], Rat(1), e), s);
                for (const auto& t : p.terms())
                    v[gg * b.basis.size() + b.index.at(t.mono)] = t.coeff;
            }
            rel_rows.push_back(std::move(v));
        }
    KMat rel(rel_rows.size(), cover);
    for (size_t r = 0; r < rel_rows.size(); ++r)
        for (size_t c = 0; c < cover; ++c) rel.at(r, c) = rel_rows[r][c];
    std::vector<size_t> piv = k_rref(rel, s.ring());
    std::vector<bool> is_piv(cover, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> qcoords;
    for (size_t i = 0; i < cover; ++i)
        if (!is_piv[i]) qcoords.push_back(i);
    b.mdim = qcoords.size();

    auto project = [&](std::vector<Rat> v) {
        for (size_t r = 0; r < piv.size(); ++r) {
            if (v[piv[r]].is_zero()) continue;
            Rat f = v[piv[r]];
            for (size_t c = 0; c < cover; ++c)
                v[c] = s.ring().sub(v[c], s.ring().mul(f, rel.at(r, c)));
        }
        std::vector<Rat> q(b.mdim);
        for (size_t i = 0; i < b.mdim; ++i) q[i] = v[qcoords[i]];
        return q;
    };

    b.action.assign(b.basis.size(), KMat(b.mdim, b.mdim));
    for (size_t bi = 0; bi < b.basis.size(); ++bi)
        for (size_t j = 0; j < b.mdim; ++j) {
            size_t gen = qcoords[j] / b.basis.size();
            size_t bj = qcoords[j] % b.basis.size();
            std::vector<Rat> v(cover, Rat(0));
            for (size_t k = 0; k < b.basis.size(); ++k)
                v[gen * b.basis.size() + k] = b.prod[bi][bj][k];
            std::vector<Rat> q = project(std::move(v));
            for (size_t r = 0; r < b.mdim; ++r) b.action[bi].at(r, j) = q[r];
        }
    return b;
}

size_t pow_size(size_t base, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<int64_t> bar_oracle(PresentationPtr s, const ModulePresentation& m,
                                int max_degree, bool cohomology) {
    const AlgebraPresentation& alg = *s;
    BarSetup b = bar_setup(alg, m);
    const CoeffRing& ring = alg.ring();
    size_t sb = b.sbar;

    if (pow_size(std::max<size_t>(sb, 1), max_degree + 1) * std::max<size_t>(b.mdim, 1) >
        2000000)
        throw InfiniteDimensional("bar complex too large at this degree");

    auto tuple_count = [&](int n) { return b.mdim * pow_size(sb, n); };
    auto decode = [&](size_t idx, int n, std::vector<size_t>& tuple) {
        tuple.resize(n);
        for (int k = n - 1; k >= 0; --k) {
            tuple[k] = idx % sb + 1;
            idx /= sb;
        }
        return idx;  // module coordinate
    };
    auto encode = [&](size_t mu, const std::vector<size_t>& tuple) {
        size_t idx = mu;
        for (size_t t : tuple) idx = idx * sb + (t - 1);
        return idx;
    };

    auto homology_diff = [&](int n) {
        KMat d(tuple_count(n - 1), tuple_count(n));
        std::vector<size_t> tuple;
        for (size_t col = 0; col < tuple_count(n); ++col) {
            size_t mu = decode(col, n, tuple);
            {
                std::vector<size_t> rest(tuple.begin() + 1, tuple.end());
                const KMat& act = b.action[tuple[0]];
                for (size_t r = 0; r < b.mdim; ++r) {
                    if (act.at(r, mu).is_zero()) continue;
                    size_t row = encode(r, rest);
                    d.at(row, col) = ring.add(d.at(row, col), act.at(r, mu));
                }
            }
            for (int k = 0; k + 1 < n; ++k) {
                const auto& pr = b.prod[tuple[k]][tuple[k + 1]];
                Rat sign = (k % 2 == 0) ? Rat(-1) : Rat(1);
                for (size_t u = 1; u < b.basis.size(); ++u) {
                    if (pr[u].is_zero()) continue;
                    std::vector<size_t> merged;
                    for (int q = 0; q < n; ++q) {
                        if (q == k)
                            merged.push_back(u);
                        else if (q != k + 1)
                            merged.push_back(tuple[q]);
                    }
                    size_t row = encode(mu, merged);
                    d.at(row, col) =
                        ring.add(d.at(row, col), ring.mul(sign, pr[u]));
                }
            }
            {
                std::vector<size_t> prefix(tuple.begin(), tuple.end() - 1);
                const KMat& act = b.action[tuple[n - 1]];
                Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
                for (size_t r = 0; r < b.mdim; ++r) {
                    if (act.at(r, mu).is_zero()) continue;
                    size_t row = encode(r, prefix);
                    d.at(row, col) = ring.add(d.at(row, col),
                                              ring.mul(sign, act.at(r, mu)));
                }
            }
        }
        return d;
    };

    auto cohomology_diff = [&](int n) {
        KMat d(tuple_count(n + 1), tuple_count(n));
        for (size_t row_t = 0; row_t < pow_size(sb, n + 1); ++row_t) {
            std::vector<size_t> bigt(n + 1);
            size_t idx = row_t;
            for (int k = n; k >= 0; --k) {
                bigt[k] = idx % sb + 1;
                idx /= sb;
            }
            {
                std::vector<size_t> rest(bigt.begin() + 1, bigt.end());
                const KMat& act = b.action[bigt[0]];
                for (size_t mu = 0; mu < b.mdim; ++mu) {
                    size_t col = encode(mu, rest);
                    for (size_t r = 0; r < b.mdim; ++r) {
                        if (act.at(r, mu).is_zero()) continue;
                        size_t row = r * pow_size(sb, n + 1) + row_t;
                        d.at(row, col) =
                            ring.add(d.at(row, col), act.at(r, mu));
                    }
                }
            }
            for (int k = 1; k <= n; ++k) {
                const auto& pr = b.prod[bigt[k - 1]][bigt[k]];
                Rat sign = (k % 2 == 1) ? Rat(-1) : Rat(1);
                for (size_t u = 1; u < b.basis.size(); ++u) {
                    if (pr[u].is_zero()) continue;
                    std::vector<size_t> merged;
                    for (int q = 0; q <= n; ++q) {
                        if (q == k - 1)
                            merged.push_back(u);
                        else if (q != k)
                            merged.push_back(bigt[q]);
                    }
                    for (size_t mu = 0; mu < b.mdim; ++mu) {
                        size_t col = encode(mu, merged);
                        size_t row = mu * pow_size(sb, n + 1) + row_t;
                        d.at(row, col) = ring.add(d.at(row, col),
                                                  ring.mul(sign, pr[u]));
                    }
                }
            }
            {
                std::vector<size_t> prefix(bigt.begin(), bigt.end() - 1);
                const KMat& act = b.action[bigt[n]];
                Rat sign = ((n + 1) % 2 == 0) ? Rat(1) : Rat(-1);
                for (size_t mu = 0; mu < b.mdim; ++mu) {
                    size_t col = encode(mu, prefix);
                    for (size_t r = 0; r < b.mdim; ++r) {
                        if (act.at(r, mu).is_zero()) continue;
                        size_t row = r * pow_size(sb, n + 1) + row_t;
                        d.at(row, col) = ring.add(
                            d.at(row, col), ring.mul(sign, act.at(r, mu)));
                    }
                }
            }
        }
        return d;
    };

    std::vector<int64_t> out;
    if (!cohomology) {
        std::map<int, KMat> diffs;
        for (int n = 1; n <= max_degree + 1; ++n)
            diffs.emplace(n, homology_diff(n));
        for (int n = 0; n <= max_degree; ++n) {
            size_t zdim = n == 0 ? tuple_count(0)
                                 : k_kernel(diffs.at(n), ring).cols();
            size_t brank = k_rank(diffs.at(n + 1), ring);
            out.push_back(static_cast<int64_t>(zdim) -
                          static_cast<int64_t>(brank));
        }
    } else {
        std::map<int, KMat> diffs;
        for (int n = 0; n <= max_degree; ++n)
            diffs.emplace(n, cohomology_diff(n));
        for (int n = 0; n <= max_degree; ++n) {
            size_t zdim = k_kernel(diffs.at(n), ring).cols();
            size_t brank = n == 0 ? 0 : k_rank(diffs.at(n - 1), ring);
            out.push_back(static_cast<int64_t>(zdim) -
                          static_cast<int64_t>(brank));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kaehler differentials and the comparison maps
// ---------------------------------------------------------------------------

KahlerModule kahler(PresentationPtr s) {
    KahlerModule km;
    km.base = s;
    km.omega.base = s;
    PolyOps ops = s->ops();
    size_t v = s->nvars();
    const auto& rels = s->relations();
    for (size_t i = 0; i < v; ++i)
        km.omega.gen_degrees.push_back(s->degrees()[i]);
    km.omega.relations = PolyMatrix(v, rels.size());
    for (size_t j = 0; j < rels.size(); ++j)
        for (size_t i = 0; i < v; ++i)
            km.omega.relations.at(i, j) =
                normal_form(ops.derivative(rels[j], i), *s);
    return km;
}

ModulePresentation KahlerModule::exterior_power(int n) const {
    const AlgebraPresentation& s = *base;
    size_t v = s.nvars();
    ModulePresentation out;
    out.base = base;
    if (n < 0 || static_cast<size_t>(n) > v) {
        out.gen_degrees = {};
        out.relations = PolyMatrix(0, 0);
        return out;
    }
    if (n == 0) return ModulePresentation::free_rank_one(base);
    if (n == 1) return omega;

    std::vector<std::vector<int>> gens;
    {
        std::vector<int> cur(n);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == n) {
                gens.push_back(cur);
                return;
            }
            for (int i = start; i < static_cast<int>(v); ++i) {
                cur[k] = i;
                rec(i + 1, k + 1);
            }
        };
        rec(0, 0);
    }
    std::map<std::vector<int>, size_t> gidx;
    for (size_t i = 0; i < gens.size(); ++i) gidx[gens[i]] = i;
    for (const auto& g : gens) {
        int64_t d = 0;
        for (int i : g) d += s.degrees()[i];
        out.gen_degrees.push_back(d);
    }

    std::vector<std::vector<int>> subs;
    {
        std::vector<int> cur(n - 1);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == n - 1) {
                subs.push_back(cur);
                return;
            }
            for (int i = start; i < static_cast<int>(v); ++i) {
                cur[k] = i;
                rec(i + 1, k + 1);
            }
        };
        rec(0, 0);
    }

    PolyOps ops = s.ops();
    size_t ncols = subs.size() * omega.relations.cols();
    out.relations = PolyMatrix(gens.size(), ncols);
    size_t col = 0;
    for (const auto& u : subs)
        for (size_t j = 0; j < omega.relations.cols(); ++j, ++col)
            for (size_t w = 0; w < v; ++w) {
                if (std::find(u.begin(), u.end(), static_cast<int>(w)) !=
                    u.end())
                    continue;
                const Polynomial& jac = omega.relations.at(w, j);
                if (jac.is_zero()) continue;
                std::vector<int> merged = u;
                merged.push_back(static_cast<int>(w));
                std::sort(merged.begin(), merged.end());
                int above = 0;
                for (int x : u)
                    if (x > static_cast<int>(w)) ++above;
                size_t row = gidx.at(merged);
                Polynomial coeff = (above % 2 == 0) ? jac : ops.neg(jac);
                out.relations.at(row, col) =
                    normal_form(ops.add(out.relations.at(row, col), coeff), s);
            }
    return out;
}

ModulePresentation tensor_modules(const ModulePresentation& a,
                                  const ModulePresentation& b) {
    ModulePresentation out;
    out.base = a.base;
    size_t ga = a.ngens(), gb = b.ngens();
    for (size_t i = 0; i < ga; ++i)
        for (size_t j = 0; j < gb; ++j)
            out.gen_degrees.push_back(a.gen_degrees[i] + b.gen_degrees[j]);
    size_t cols = a.relations.cols() * gb + ga * b.relations.cols();
    out.relations = PolyMatrix(ga * gb, cols);
    size_t col = 0;
    for (size_t c = 0; c < a.relations.cols(); ++c)
        for (size_t j = 0; j < gb; ++j, ++col)
            for (size_t i = 0; i < ga; ++i)
                out.relations.at(i * gb + j, col) = a.relations.at(i, c);
    for (size_t i = 0; i < ga; ++i)
        for (size_t c = 0; c < b.relations.cols(); ++c, ++col)
            for (size_t j = 0; j < gb; ++j)
                out.relations.at(i * gb + j, col) = b.relations.at(j, c);
    return out;
}

namespace {

// Hom_S(N, M) as the degree-0 homology of 0 -> M^g -> M^r.
ModuleDescriptor hom_descriptor(const ModulePresentation& n,
                                const ModulePresentation& m,
                                const HomologyOptions& opts) {
    FreeComplex c;
    c.base = n.base;
    c.ranks[0] = static_cast<int>(n.ngens());
    if (n.relations.cols() > 0) {
        c.ranks[-1] = static_cast<int>(n.relations.cols());
        c.diff[0] = n.relations.transpose();
    }
    if (n.base->is_graded()) {
        std::vector<int64_t> neg;
        for (int64_t d : n.gen_degrees) neg.push_back(-d);
        c.gen_degrees[0] = neg;
        if (n.relations.cols() > 0) {
            std::vector<int64_t> rneg;
            for (int64_t d : n.relation_degrees()) rneg.push_back(-d);
            c.gen_degrees[-1] = rneg;
        }
    }
    return homology_at(c, 0, m, opts);
}

}  // namespace

LambdaReport hkr_lambda(PresentationPtr s, const ModulePresentation& m, int n,
                        bool cohomology, Strategy strategy,
                        const HomologyOptions& opts) {
    LambdaReport rep;
    rep.degree = n;
    rep.cohomology = cohomology;

    KahlerModule km = kahler(s);
    ModulePresentation lambda_n = km.exterior_power(n);

    HochschildTable t = cohomology
                            ? hochschild_cohomology(s, m, n, strategy, opts)
                            : hochschild_homology(s, m, n, strategy, opts);
    const ModuleDescriptor& hh = t.at(n);

    if (!cohomology) {
        ModulePresentation src =
            is_free_rank_one(m) ? lambda_n : tensor_modules(lambda_n, m);
        rep.domain = module_descriptor(src, opts);
        rep.codomain = hh;
    } else {
        rep.domain = hh;
        rep.codomain = hom_descriptor(lambda_n, m, opts);
    }

    bool equal = rep.domain.equals(rep.codomain);
    bool dom_zero = rep.domain.is_zero();
    bool cod_zero = rep.codomain.is_zero();
    if (dom_zero && cod_zero) {
        rep.flag = "bijective";
        rep.reason = "both sides vanish";
    } else if (n == 0 && equal) {
        rep.flag = "bijective";
        rep.reason = "degree-zero identity";
    } else if (equal && !cohomology && t.used == Strategy::Koszul) {
        rep.flag = "bijective";
        rep.reason = "free Koszul identification";
    } else if (equal && n == 1 && !cohomology && is_free_rank_one(m)) {
        rep.flag = "bijective";
        rep.reason = "HH_1 is the module of differentials";
    } else if (equal) {
        rep.flag = "bijective";
        rep.reason = "descriptor equality";
    } else if (dom_zero) {
        rep.flag = "injective-only";
        rep.reason = "domain vanishes, codomain does not";
    } else {
        rep.flag = "neither";
        rep.reason = "descriptors differ";
    }
    return rep;
}

}  // namespace hhgap
