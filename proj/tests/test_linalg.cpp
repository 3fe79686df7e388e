#include <functional>
#include <random>

#include "doctest.h"

#include "hhgap/linalg.hpp"

using namespace hhgap;

namespace {

// Independent oracle: d_1 ... d_k = gcd of all k x k minors.
int64_t minor_gcd(const ZMat& m, size_t k) {
    std::vector<std::vector<size_t>> row_sets, col_sets;
    std::vector<size_t> cur;
    std::function<void(size_t, size_t, size_t, std::vector<std::vector<size_t>>&)>
        rec = [&](size_t start, size_t left, size_t limit,
                  std::vector<std::vector<size_t>>& out) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (size_t i = start; i + left <= limit + 1 && i < limit; ++i) {
                cur.push_back(i);
                rec(i + 1, left - 1, limit, out);
                cur.pop_back();
            }
        };
    rec(0, k, m.rows(), row_sets);
    rec(0, k, m.cols(), col_sets);

    std::function<int64_t(const std::vector<size_t>&, const std::vector<size_t>&)>
        det = [&](const std::vector<size_t>& rows,
                  const std::vector<size_t>& cols) -> int64_t {
        size_t n = rows.size();
        if (n == 1) return m.at(rows[0], cols[0]);
        int64_t acc = 0;
        for (size_t i = 0; i < n; ++i) {
            std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<size_t> sub_cols;
            for (size_t j = 0; j < n; ++j)
                if (j != i) sub_cols.push_back(cols[j]);
            int64_t minor = det(sub_rows, sub_cols);
            int64_t term = m.at(rows[0], cols[i]) * minor;
            acc += (i % 2 == 0) ? term : -term;
        }
        return acc;
    };

    int64_t g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) g = gcd_i64(g, det(rs, cs));
    return g;
}

std::vector<int64_t> snf_oracle(const ZMat& m) {
    size_t n = std::min(m.rows(), m.cols());
    std::vector<int64_t> out(n, 0);
    int64_t prev = 1;
    for (size_t k = 1; k <= n; ++k) {
        int64_t g = minor_gcd(m, k);
        if (g == 0) break;  // all later factors are zero
        out[k - 1] = g / prev;
        prev = g;
    }
    return out;
}

}  // namespace

TEST_CASE("smith normal form matches the minors oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        ZMat m(dim(rng), dim(rng));
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = val(rng);
        std::vector<int64_t> got = smith_invariant_factors(m);
        std::vector<int64_t> want = snf_oracle(m);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
        // divisibility chain
        for (size_t i = 0; i + 1 < got.size(); ++i) {
            if (got[i + 1] == 0) continue;
            REQUIRE(got[i] != 0);
            CHECK(got[i + 1] % got[i] == 0);
        }
    }
}

TEST_CASE("known smith forms") {
    ZMat m(2, 2);
    m.at(0, 0) = 0;
    m.at(0, 1) = 4;
    m.at(1, 0) = 2;
    m.at(1, 1) = 0;
    auto f = smith_invariant_factors(m);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 4);
}

TEST_CASE("integer kernels annihilate and are saturated") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        ZMat m(2, 3);
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = val(rng);
        ZMat k = z_kernel(m);
        for (size_t j = 0; j < k.cols(); ++j)
            for (size_t r = 0; r < m.rows(); ++r) {
                int64_t acc = 0;
                for (size_t c = 0; c < m.cols(); ++c)
                    acc += m.at(r, c) * k.at(c, j);
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("integer solve") {
    ZMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 0;
    m.at(1, 0) = 0;
    m.at(1, 1) = 3;
    CHECK(z_solve(m, {4, 9}).has_value());
    CHECK_FALSE(z_solve(m, {1, 0}).has_value());
    auto sol = z_solve(m, {4, 9});
    REQUIRE(sol);
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
}

TEST_CASE("lattice equality is basis independent") {
    ZMat a(2, 2), b(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 2;
    // same lattice, sheared basis
    b.at(0, 0) = 1;
    b.at(1, 0) = 2;
    b.at(0, 1) = 1;
    b.at(1, 1) = 4;
    CHECK(z_lattice_equal(a, b));
    b.at(1, 1) = 3;
    CHECK_FALSE(z_lattice_equal(a, b));
}

TEST_CASE("field kernel and solve") {
    CoeffRing q = CoeffRing::rationals();
    KMat m(2, 3);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(0, 2) = Rat(3);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(4);
    m.at(1, 2) = Rat(6);
    CHECK(k_rank(m, q) == 1);
    KMat k = k_kernel(m, q);
    CHECK(k.cols() == 2);
    for (size_t j = 0; j < k.cols(); ++j) {
        Rat acc(0);
        for (size_t c = 0; c < 3; ++c) acc += m.at(0, c) * k.at(c, j);
        CHECK(acc.is_zero());
    }
    auto sol = k_solve(m, {Rat(6), Rat(12)}, q);
    REQUIRE(sol);
    Rat acc(0);
    for (size_t c = 0; c < 3; ++c) acc += m.at(0, c) * (*sol)[c];
    CHECK(acc == Rat(6));
    CHECK_FALSE(k_solve(m, {Rat(1), Rat(0)}, q).has_value());
}
