#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "superhomology/field.hpp"

namespace shom {

struct Entry {
    std::uint32_t idx;
    Elt val;
    bool operator==(const Entry& o) const { return idx == o.idx && val == o.val; }
};

// Sparse vector over F_p: entries sorted by index, no explicit zeros.
using SparseVec = std::vector<Entry>;

SparseVec sv_axpy(const Field& F, const SparseVec& y, Elt a, const SparseVec& x);  // y + a*x
SparseVec sv_scale(const Field& F, const SparseVec& x, Elt a);
SparseVec sv_from_dense(const std::vector<Elt>& d);
std::vector<Elt> sv_to_dense(const SparseVec& v, std::size_t n);
Elt sv_get(const SparseVec& v, std::uint32_t idx);

// Accumulates scaled contributions at arbitrary indices, then emits a SparseVec.
class SparseAccumulator {
public:
    explicit SparseAccumulator(const Field& F) : F_(F) {}
    void add(std::uint32_t idx, Elt v);
    void add_vec(const SparseVec& v, Elt scale);
    SparseVec take();
    bool empty() const { return touched_.empty(); }

private:
    const Field& F_;
    std::vector<std::pair<std::uint32_t, Elt>> touched_;
};

// Column-compressed sparse matrix over F_p.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& col(std::size_t j) const { return col_[j]; }
    void set_col(std::size_t j, SparseVec v);
    Elt get(std::size_t i, std::size_t j) const { return sv_get(col_[j], static_cast<std::uint32_t>(i)); }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    static SparseMatrix identity(std::size_t n);
    // Builds from (row, col, value) triples; repeated positions are summed.
    static SparseMatrix from_triples(const Field& F, std::size_t rows, std::size_t cols,
                                     const std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>>& t);

    SparseMatrix transpose() const;
    // Row-major view: rows as sparse vectors over the column index.
    std::vector<SparseVec> row_vectors() const;

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> col_;
};

SparseMatrix mat_mul(const Field& F, const SparseMatrix& A, const SparseMatrix& B);  // A*B
SparseMatrix mat_add(const Field& F, const SparseMatrix& A, const SparseMatrix& B, Elt b_scale = 1);
SparseMatrix mat_scale(const Field& F, const SparseMatrix& A, Elt s);
SparseVec mat_apply(const Field& F, const SparseMatrix& A, const SparseVec& x);

}  // namespace shom
