#include "hhgap/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace hhgap {

KMat KMat::identity(size_t n) {
    KMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

KMat KMat::transpose() const {
    KMat t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

KMat KMat::hcat(const KMat& other) const {
    KMat m(rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (size_t c = 0; c < other.cols_; ++c)
            m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

std::vector<size_t> k_rref(KMat& m, const CoeffRing& ring) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(pr, c), m.at(row, c));
        Rat inv = ring.inv(m.at(row, col));
        for (size_t c = col; c < m.cols(); ++c)
            m.at(row, c) = ring.mul(inv, m.at(row, c));
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = ring.sub(m.at(r, c), ring.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t k_rank(KMat m, const CoeffRing& ring) { return k_rref(m, ring).size(); }

KMat k_kernel(const KMat& a, const CoeffRing& ring) {
    KMat m = a;
    std::vector<size_t> pivots = k_rref(m, ring);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    KMat k(a.cols(), free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        size_t fc = free_cols[j];
        k.at(fc, j) = Rat(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            k.at(pivots[i], j) = ring.neg(m.at(i, fc));
    }
    return k;
}

std::optional<std::vector<Rat>> k_solve(const KMat& a, const std::vector<Rat>& b,
                                        const CoeffRing& ring) {
    KMat aug(a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<size_t> pivots = k_rref(aug, ring);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

ZMat ZMat::identity(size_t n) {
    ZMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ZMat ZMat::hcat(const ZMat& other) const {
    ZMat m(rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (size_t c = 0; c < other.cols_; ++c)
            m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

namespace {

void col_addmul(ZMat& m, size_t dst, size_t src, int64_t f) {
    for (size_t r = 0; r < m.rows(); ++r)
        m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(f, m.at(r, src)));
}
void col_swap(ZMat& m, size_t i, size_t j) {
    for (size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
void col_neg(ZMat& m, size_t i) {
    for (size_t r = 0; r < m.rows(); ++r) m.at(r, i) = -m.at(r, i);
}

// Column Hermite reduction of [A; tracker]: after the call, columns of A are
// in column echelon form and the same unimodular operations were applied to
// the tracker (which may have zero rows).
void hermite_columns(ZMat& a, ZMat& tracker) {
    size_t row = 0, col = 0;
    while (row < a.rows() && col < a.cols()) {
        // gcd-out the row segment [col..end)
        while (true) {
            size_t best = a.cols();
            int64_t bestval = 0;
            for (size_t c = col; c < a.cols(); ++c) {
                int64_t v = std::llabs(a.at(row, c));
                if (v != 0 && (best == a.cols() || v < bestval)) {
                    best = c;
                    bestval = v;
                }
            }
            if (best == a.cols()) break;  // all zero
            if (best != col) {
                col_swap(a, col, best);
                col_swap(tracker, col, best);
            }
            if (a.at(row, col) < 0) {
                col_neg(a, col);
                col_neg(tracker, col);
            }
            bool done = true;
            for (size_t c = col + 1; c < a.cols(); ++c) {
                int64_t q = a.at(row, c) / a.at(row, col);
                if (q != 0) {
                    col_addmul(a, c, col, -q);
                    col_addmul(tracker, c, col, -q);
                }
                if (a.at(row, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a.at(row, col) != 0) {
            // reduce the columns to the left for canonicity
            for (size_t c = 0; c < col; ++c) {
                int64_t q = a.at(row, c) / a.at(row, col);
                // floor division keeps residues in [0, pivot)
                int64_t r = a.at(row, c) - q * a.at(row, col);
                if (r < 0) q -= 1;
                if (q != 0) {
                    col_addmul(a, c, col, -q);
                    col_addmul(tracker, c, col, -q);
                }
            }
            ++col;
        }
        ++row;
    }
}

}  // namespace

ZMat z_lattice_basis(const ZMat& gens) {
    ZMat a = gens;
    ZMat tracker(0, a.cols());
    hermite_columns(a, tracker);
    // drop zero columns
    std::vector<size_t> keep;
    for (size_t c = 0; c < a.cols(); ++c) {
        bool nz = false;
        for (size_t r = 0; r < a.rows(); ++r)
            if (a.at(r, c) != 0) nz = true;
        if (nz) keep.push_back(c);
    }
    ZMat out(a.rows(), keep.size());
    for (size_t j = 0; j < keep.size(); ++j)
        for (size_t r = 0; r < a.rows(); ++r) out.at(r, j) = a.at(r, keep[j]);
    return out;
}

ZMat z_kernel(const ZMat& a) {
    ZMat work = a;
    ZMat tracker = ZMat::identity(a.cols());
    hermite_columns(work, tracker);
    std::vector<size_t> zero_cols;
    for (size_t c = 0; c < work.cols(); ++c) {
        bool nz = false;
        for (size_t r = 0; r < work.rows(); ++r)
            if (work.at(r, c) != 0) nz = true;
        if (!nz) zero_cols.push_back(c);
    }
    ZMat k(a.cols(), zero_cols.size());
    for (size_t j = 0; j < zero_cols.size(); ++j)
        for (size_t r = 0; r < a.cols(); ++r)
            k.at(r, j) = tracker.at(r, zero_cols[j]);
    return k;
}

std::optional<std::vector<int64_t>> z_solve(const ZMat& a,
                                            const std::vector<int64_t>& b) {
    ZMat work = a;
    ZMat tracker = ZMat::identity(a.cols());
    hermite_columns(work, tracker);
    // forward-substitute through the echelon columns
    std::vector<int64_t> residual = b;
    std::vector<int64_t> y(work.cols(), 0);
    size_t col = 0;
    for (size_t row = 0; row < work.rows() && col < work.cols(); ++row) {
        if (work.at(row, col) == 0) continue;
        int64_t q = residual[row] / work.at(row, col);
        if (residual[row] % work.at(row, col) != 0) {
            // pivot does not divide: no integer solution through this pivot
            // unless the residual entry is matched exactly
            return std::nullopt;
        }
        y[col] = q;
        for (size_t r = 0; r < work.rows(); ++r)
            residual[r] =
                checked_add(residual[r], -checked_mul(q, work.at(r, col)));
        ++col;
    }
    for (int64_t v : residual)
        if (v != 0) return std::nullopt;
    std::vector<int64_t> x(a.cols(), 0);
    for (size_t c = 0; c < work.cols(); ++c)
        if (y[c] != 0)
            for (size_t r = 0; r < a.cols(); ++r)
                x[r] = checked_add(x[r], checked_mul(y[c], tracker.at(r, c)));
    return x;
}

bool z_lattice_contains(const ZMat& basis, const std::vector<int64_t>& v) {
    return z_solve(basis, v).has_value();
}

bool z_lattice_equal(const ZMat& a, const ZMat& b) {
    ZMat ha = z_lattice_basis(a);
    ZMat hb = z_lattice_basis(b);
    if (ha.rows() != hb.rows() || ha.cols() != hb.cols()) return false;
    for (size_t r = 0; r < ha.rows(); ++r)
        for (size_t c = 0; c < ha.cols(); ++c)
            if (ha.at(r, c) != hb.at(r, c)) return false;
    return true;
}

std::vector<int64_t> smith_invariant_factors(ZMat m) {
    size_t n = std::min(m.rows(), m.cols());
    std::vector<int64_t> d(n, 0);
    size_t t = 0;  // current corner
    while (t < n) {
        // find the nonzero entry of least magnitude in the trailing block
        size_t br = m.rows(), bc = m.cols();
        int64_t bv = 0;
        for (size_t r = t; r < m.rows(); ++r)
            for (size_t c = t; c < m.cols(); ++c) {
                int64_t v = std::llabs(m.at(r, c));
                if (v != 0 && (br == m.rows() || v < bv)) {
                    br = r;
                    bc = c;
                    bv = v;
                }
            }
        if (br == m.rows()) break;  // trailing block is zero
        for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(t, c), m.at(br, c));
        for (size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, t), m.at(r, bc));
        if (m.at(t, t) < 0)
            for (size_t c = 0; c < m.cols(); ++c) m.at(t, c) = -m.at(t, c);

        bool clean = true;
        for (size_t r = t + 1; r < m.rows(); ++r) {
            int64_t q = m.at(r, t) / m.at(t, t);
            if (q != 0)
                for (size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = checked_add(m.at(r, c),
                                             -checked_mul(q, m.at(t, c)));
            if (m.at(r, t) != 0) clean = false;
        }
        for (size_t c = t + 1; c < m.cols(); ++c) {
            int64_t q = m.at(t, c) / m.at(t, t);
            if (q != 0)
                for (size_t r = 0; r < m.rows(); ++r)
                    m.at(r, c) = checked_add(m.at(r, c),
                                             -checked_mul(q, m.at(r, t)));
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot may now exist; redo this corner

        // ensure the pivot divides the rest of the block
        bool divides_all = true;
        for (size_t r = t + 1; r < m.rows() && divides_all; ++r)
            for (size_t c = t + 1; c < m.cols() && divides_all; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    for (size_t cc = 0; cc < m.cols(); ++cc)
                        m.at(t, cc) = checked_add(m.at(t, cc), m.at(r, cc));
                    divides_all = false;
                }
        if (!divides_all) continue;
        ++t;
    }
    // read the diagonal
    for (size_t i = 0; i < t; ++i) d[i] = std::llabs(m.at(i, i));
    // canonical order: nontrivial factors ascending by divisibility,
    // zeros (free ranks) already trail
    return d;
}

}  // namespace hhgap
