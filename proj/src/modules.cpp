#include "hhgap/modules.hpp"

#include "hhgap/errors.hpp"

namespace hhgap {

ModulePresentation ModulePresentation::free_rank_one(PresentationPtr base) {
    ModulePresentation m;
    m.base = std::move(base);
    m.gen_degrees = {0};
    m.relations = PolyMatrix(1, 0);
    return m;
}

std::vector<int64_t> ModulePresentation::relation_degrees() const {
    std::vector<int64_t> out;
    const auto& degs = base->degrees();
    for (size_t c = 0; c < relations.cols(); ++c) {
        int64_t d = 0;
        bool found = false;
        for (size_t r = 0; r < relations.rows(); ++r) {
            const Polynomial& e = relations.at(r, c);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous(degs))
                throw NotGraded("module relation entry is not homogeneous");
            int64_t cand =
                gen_degrees[r] + weighted_degree(e.terms().front().mono, degs);
            if (found && cand != d)
                throw NotGraded("module relation column is not homogeneous");
            d = cand;
            found = true;
        }
        out.push_back(d);
    }
    return out;
}

PieceBasis free_piece_basis(const AlgebraPresentation& pres,
                            const std::vector<int64_t>& gen_degrees,
                            int64_t degree) {
    PieceBasis pb;
    for (size_t i = 0; i < gen_degrees.size(); ++i) {
        int64_t d = degree - gen_degrees[i];
        if (d < 0) continue;
        for (auto& m : graded_piece_basis(pres, d)) {
            pb.index[{i, m}] = pb.elems.size();
            pb.elems.push_back({i, std::move(m)});
        }
    }
    return pb;
}

std::vector<Rat> piece_coords(const AlgebraPresentation& pres,
                              const std::vector<Polynomial>& column,
                              const PieceBasis& pb) {
    std::vector<Rat> out(pb.dim(), Rat(0));
    for (size_t i = 0; i < column.size(); ++i) {
        Polynomial nf = normal_form(column[i], pres);
        for (const auto& t : nf.terms()) {
            auto it = pb.index.find({i, t.mono});
            if (it == pb.index.end())
                throw Error("BadPiece", "vector does not live in the piece");
            out[it->second] = t.coeff;
        }
    }
    return out;
}

std::vector<Polynomial> column_from_coords(const AlgebraPresentation& pres,
                                           const PieceBasis& pb,
                                           const std::vector<Rat>& coords,
                                           size_t ncomponents) {
    std::vector<Polynomial> col(ncomponents);
    PolyOps ops = pres.ops();
    for (size_t k = 0; k < pb.dim(); ++k) {
        if (coords[k].is_zero()) continue;
        const auto& [comp, mono] = pb.elems[k];
        col[comp] =
            ops.add(col[comp], Polynomial::monomial(mono, coords[k]));
    }
    return col;
}

KMat piece_matrix(const AlgebraPresentation& pres, const PolyMatrix& m,
                  const std::vector<int64_t>& src_degrees,
                  const std::vector<int64_t>& dst_degrees, int64_t degree) {
    PieceBasis src = free_piece_basis(pres, src_degrees, degree);
    PieceBasis dst = free_piece_basis(pres, dst_degrees, degree);
    KMat out(dst.dim(), src.dim());
    PolyOps ops = pres.ops();
    for (size_t j = 0; j < src.dim(); ++j) {
        const auto& [comp, mono] = src.elems[j];
        for (size_t r = 0; r < m.rows(); ++r) {
            const Polynomial& e = m.at(r, comp);
            if (e.is_zero()) continue;
            Polynomial img = normal_form(
                ops.mono_scale(mono, Rat(1), e), pres);
            for (const auto& t : img.terms()) {
                auto it = dst.index.find({r, t.mono});
                if (it == dst.index.end())
                    throw Error("BadPiece", "image leaves the piece");
                out.at(it->second, j) = t.coeff;
            }
        }
    }
    return out;
}

}  // namespace hhgap
