#include "superhomology/bar.hpp"

#include "superhomology/errors.hpp"
#include "superhomology/rref.hpp"

namespace shom {

AugmentedAlgebra enveloping_structure(const EnvelopingAlgebra& V) {
    AugmentedAlgebra A;
    std::vector<std::string> labels;
    std::vector<int> par;
    for (std::size_t m = 0; m < V.dim(); ++m) {
        labels.push_back(V.label(m));
        par.push_back(V.parity(m));
    }
    A.space = SuperSpace(std::move(labels), std::move(par));
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < V.dim(); ++j) A.mult.push_back(V.mul_mono(i, j));
    return A;
}

AugmentedAlgebra truncated_polynomial(std::size_t n) {
    if (n == 0) throw InvalidInput("k[x]/x^0 is the zero ring");
    AugmentedAlgebra A;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    A.space = SuperSpace(std::move(labels), std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.mult.push_back(i + j < n ? SparseVec{{static_cast<std::uint32_t>(i + j), 1}} : SparseVec{});
    return A;
}

std::vector<std::string> check_augmented(const Field& F, const AugmentedAlgebra& A) {
    std::vector<std::string> bad;
    const std::size_t n = A.dim();
    auto m = [&](std::size_t i, std::size_t j) -> const SparseVec& { return A.mult[i * n + j]; };
    if (A.mult.size() != n * n) return {"multiplication table has the wrong size"};
    auto times = [&](const SparseVec& u, std::size_t k, bool left) {
        SparseAccumulator acc(F);
        for (const auto& t : u) acc.add_vec(left ? m(k, t.idx) : m(t.idx, k), t.val);
        return acc.take();
    };
    for (std::size_t i = 0; i < n; ++i) {
        const SparseVec e{{static_cast<std::uint32_t>(i), 1}};
        if (m(0, i) != e || m(i, 0) != e) bad.push_back("b_0 is not a unit at b_" + std::to_string(i));
        for (std::size_t j = 1; j < n && i > 0; ++j) {
            if (sv_get(m(i, j), 0)) bad.push_back("ideal not closed at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (const auto& t : m(i, j))
                if (A.space.parity(t.idx) != (A.space.parity(i) ^ A.space.parity(j))) {
                    bad.push_back("product parity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    break;
                }
            for (std::size_t k = 1; k < n; ++k)
                if (times(m(i, j), k, false) != times(m(j, k), i, true))
                    bad.push_back("associativity at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
        }
    }
    return bad;
}

namespace {

constexpr std::size_t kOracleCap = 161051;  // 11^5

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

SparseMatrix bar_differential(const Field& F, const AugmentedAlgebra& A, int i) {
    const std::size_t nb = A.dim() - 1;
    const std::size_t cols = ipow(nb, i), rows = i > 0 ? ipow(nb, i - 1) : 0;
    // The oracle has its own cap (dim A <= 12, degree <= 5 here); the global budget guards the rest.
    if (cols > kOracleCap) check_budget("bar complex degree " + std::to_string(i), cols);
    SparseMatrix M(rows, cols);
    if (i < 2) return M;
    std::vector<std::size_t> letters(i);
    for (std::size_t c = 0; c < cols; ++c) {
        // Letters of the ideal basis, 1-based in A, first letter most significant.
        std::size_t rem = c;
        for (int k = i - 1; k >= 0; --k) {
            letters[k] = rem % nb + 1;
            rem /= nb;
        }
        SparseAccumulator acc(F);
        int eps = 0;
        for (int j = 0; j + 1 < i; ++j) {
            eps ^= (A.space.parity(letters[j]) ^ 1);
            std::size_t head = 0, tail = 0;
            for (int k = 0; k < j; ++k) head = head * nb + (letters[k] - 1);
            for (int k = j + 2; k < i; ++k) tail = tail * nb + (letters[k] - 1);
            const std::size_t tail_size = ipow(nb, i - j - 2);
            for (const auto& t : A.mult[letters[j] * A.dim() + letters[j + 1]]) {
                if (t.idx == 0) throw InvalidInput("augmentation ideal is not closed under products");
                const std::size_t row = (head * nb + (t.idx - 1)) * tail_size + tail;
                acc.add(static_cast<std::uint32_t>(row), eps ? F.neg(t.val) : t.val);
            }
        }
        M.set_col(c, acc.take());
    }
    return M;
}

std::vector<std::size_t> bar_ext(const Field& F, const AugmentedAlgebra& A, int max_degree) {
    if (A.dim() == 0 || A.dim() > 12) throw InvalidInput("bar_ext needs 1 <= dim A <= 12");
    if (max_degree < 0 || max_degree > 4) throw InvalidInput("bar_ext needs 0 <= max_degree <= 4");
    const std::size_t nb = A.dim() - 1;
    std::vector<std::size_t> rank(max_degree + 2, 0);
    for (int i = 2; i <= max_degree + 1; ++i) rank[i] = rank_of(F, bar_differential(F, A, i));
    std::vector<std::size_t> dims;
    for (int i = 0; i <= max_degree; ++i) dims.push_back(ipow(nb, i) - rank[i] - rank[i + 1]);
    return dims;
}

}  // namespace shom
