#pragma once

// Shared helpers for the test binaries: seeded generators and a naive dense oracle.

#include <cstdint>
#include <random>
#include <vector>

#include "superhomology/graded_matrix.hpp"

namespace testsupport {

using namespace shom;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

inline Elt rand_elt(const Field& F) { return std::uniform_int_distribution<Elt>(0, F.p() - 1)(rng()); }
inline Elt rand_nonzero(const Field& F) { return std::uniform_int_distribution<Elt>(1, F.p() - 1)(rng()); }
inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }
inline bool coin(double prob) { return std::bernoulli_distribution(prob)(rng()); }

inline SparseMatrix random_matrix(const Field& F, std::size_t r, std::size_t c, double density) {
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        SparseVec col;
        for (std::uint32_t i = 0; i < r; ++i)
            if (coin(density)) col.push_back({i, rand_nonzero(F)});
        m.set_col(j, std::move(col));
    }
    return m;
}

// Low-rank matrices exercise kernels with many free columns.
inline SparseMatrix random_low_rank(const Field& F, std::size_t r, std::size_t c, std::size_t k, double density) {
    return mat_mul(F, random_matrix(F, r, k, density), random_matrix(F, k, c, density));
}

inline GradedMatrix random_graded(const Field& F, const SuperSpace& dom, const SuperSpace& cod, int parity,
                                  double density = 0.7) {
    SparseMatrix m(cod.dim(), dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        SparseVec col;
        for (std::uint32_t i = 0; i < cod.dim(); ++i)
            if ((cod.parity(i) ^ dom.parity(j)) == parity && coin(density)) col.push_back({i, rand_nonzero(F)});
        m.set_col(j, std::move(col));
    }
    return GradedMatrix(dom, cod, parity, std::move(m));
}

inline SparseVec random_vec(const Field& F, std::size_t n, double density) {
    SparseVec v;
    for (std::uint32_t i = 0; i < n; ++i)
        if (coin(density)) v.push_back({i, rand_nonzero(F)});
    return v;
}

using Dense = std::vector<std::vector<long long>>;

inline Dense to_dense(const SparseMatrix& m) {
    Dense d(m.rows(), std::vector<long long>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.col(j)) d[e.idx][j] = e.val;
    return d;
}

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inv_mod(long long a, long long p) {
    long long r = 1, e = p - 2;
    a = mod(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Textbook elimination on a copy; independent of the library's reduction code.
inline std::size_t naive_rank(Dense a, long long p) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && mod(a[piv][c], p) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        long long inv = inv_mod(a[rank][c], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            long long f = mod(a[i][c], p) * inv % p;
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k) a[i][k] = mod(a[i][k] - f * a[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

inline Dense naive_mul(const Dense& a, const Dense& b, long long p) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t])
                for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
    return c;
}

}  // namespace testsupport
