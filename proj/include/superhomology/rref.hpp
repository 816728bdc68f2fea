#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "superhomology/simd.hpp"
#include "superhomology/sparse.hpp"

namespace shom {

enum class Backend { Auto, Sparse, Dense };

struct RrefOptions {
    Backend backend = Backend::Auto;
    // Auto picks the dense path when nnz / (rows * cols) reaches this threshold.
    double density_threshold = 0.2;
    // Auto never densifies matrices with more cells than this.
    std::size_t dense_cell_limit = std::size_t{1} << 23;
    // Row kernel for the dense path; nullopt selects at runtime.
    std::optional<simd::Kernel> kernel;
};

// Reduced row echelon form: every row has leading coefficient 1 at pivots[k],
// pivots strictly increase, and each pivot column is zero in every other row.
struct Rref {
    std::size_t ncols = 0;
    std::vector<SparseVec> rows;
    std::vector<std::uint32_t> pivots;
};

Rref rref_rows(const Field& F, std::vector<SparseVec> rows, std::size_t ncols,
               const RrefOptions& opt = {});

struct GaussianData {
    std::size_t rank = 0;
    std::vector<SparseVec> kernel_basis;  // vectors in the domain
    std::vector<SparseVec> image_basis;   // vectors in the codomain
    std::vector<std::uint32_t> pivot_columns;
};

// Rank, a canonical kernel basis (one vector per free column) and the pivot columns of M
// as an image basis.
GaussianData gaussian_data(const Field& F, const SparseMatrix& M, const RrefOptions& opt = {});
std::size_t rank_of(const Field& F, const SparseMatrix& M, const RrefOptions& opt = {});

// A subspace of F^n held as a canonical RREF basis.
class Subspace {
public:
    Subspace(const Field& F, std::size_t ambient) : F_(&F), rref_{ambient, {}, {}} {}
    static Subspace span(const Field& F, std::size_t ambient, std::vector<SparseVec> vecs,
                         const RrefOptions& opt = {});
    static Subspace column_space(const Field& F, const SparseMatrix& M, const RrefOptions& opt = {});

    std::size_t dim() const { return rref_.rows.size(); }
    std::size_t ambient() const { return rref_.ncols; }
    const std::vector<SparseVec>& basis() const { return rref_.rows; }
    const std::vector<std::uint32_t>& pivots() const { return rref_.pivots; }

    // Canonical representative of v modulo the subspace (all pivot coordinates zero).
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // Coordinates with respect to basis(), or nullopt when v is outside the subspace.
    std::optional<std::vector<Elt>> coords(const SparseVec& v) const;

private:
    const Field* F_;
    Rref rref_;
    std::vector<std::int32_t> pivot_row_;
    void index();
};

// Solves A x = b for many right-hand sides b.
class LinearSolver {
public:
    LinearSolver(const Field& F, const SparseMatrix& A, const RrefOptions& opt = {});
    // A particular solution, or nullopt when b is outside the column space.
    std::optional<SparseVec> solve(const SparseVec& b) const;
    std::size_t rank() const { return basis_.size(); }

private:
    const Field* F_;
    std::size_t m_, n_;
    std::vector<SparseVec> basis_;       // reduced columns (first part)
    std::vector<SparseVec> provenance_;  // matching combinations of A's columns
    std::vector<std::uint32_t> pivots_;
};

}  // namespace shom
