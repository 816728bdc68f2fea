#include "superhomology/rref.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "superhomology/errors.hpp"

namespace shom {

namespace {

// Dense scratch row with a record of the touched positions.
class Scratch {
public:
    explicit Scratch(std::size_t n) : w_(n, 0), mark_(n, 0) {}
    Elt get(std::uint32_t i) const { return w_[i]; }
    // Returns true when i was untouched before.
    bool add(const Field& F, std::uint32_t i, Elt v) {
        w_[i] = F.add(w_[i], v);
        if (!mark_[i]) {
            mark_[i] = 1;
            touched_.push_back(i);
            return true;
        }
        return false;
    }
    SparseVec drain(std::uint32_t from = 0) {
        std::sort(touched_.begin(), touched_.end());
        SparseVec out;
        for (std::uint32_t i : touched_) {
            if (i >= from && w_[i]) out.push_back({i, w_[i]});
            w_[i] = 0;
            mark_[i] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    std::vector<Elt> w_;
    std::vector<std::uint8_t> mark_;
    std::vector<std::uint32_t> touched_;
};

Rref rref_sparse(const Field& F, std::vector<SparseVec> input, std::size_t ncols) {
    std::vector<SparseVec> rows;
    std::vector<std::int32_t> pivot_row(ncols, -1);
    Scratch w(ncols);
    using MinHeap = std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>>;

    for (auto& v : input) {
        if (v.empty()) continue;
        MinHeap heap;
        for (const auto& e : v) {
            w.add(F, e.idx, e.val);
            heap.push(e.idx);
        }
        bool inserted = false;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top() == c) heap.pop();
            Elt a = w.get(c);
            if (!a) continue;
            if (pivot_row[c] >= 0) {
                Elt s = F.neg(a);
                for (const auto& e : rows[pivot_row[c]]) {
                    w.add(F, e.idx, F.mul(s, e.val));
                    if (e.idx != c) heap.push(e.idx);
                }
                continue;
            }
            SparseVec r = w.drain(c);
            Elt inv = F.inv(a);
            for (auto& e : r) e.val = F.mul(e.val, inv);
            pivot_row[c] = static_cast<std::int32_t>(rows.size());
            rows.push_back(std::move(r));
            inserted = true;
            break;
        }
        if (!inserted) w.drain();
        v.clear();
        v.shrink_to_fit();
    }

    // Back-substitution from the largest pivot down. A finished row carries no other
    // pivot column, so subtracting it never reintroduces one.
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (pivot_row[c] >= 0) order.push_back(c);
    Rref out;
    out.ncols = ncols;
    out.pivots = order;
    out.rows.resize(order.size());
    std::vector<SparseVec> fin(rows.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SparseVec& row = rows[pivot_row[*it]];
        bool needs = false;
        for (const auto& e : row)
            if (e.idx != *it && pivot_row[e.idx] >= 0) needs = true;
        if (needs) {
            for (const auto& e : row) w.add(F, e.idx, e.val);
            for (const auto& e : row) {
                if (e.idx == *it || pivot_row[e.idx] < 0) continue;
                Elt s = F.neg(e.val);
                for (const auto& f : fin[pivot_row[e.idx]]) w.add(F, f.idx, F.mul(s, f.val));
            }
            row = w.drain();
        }
        fin[pivot_row[*it]] = std::move(row);
    }
    for (std::size_t k = 0; k < order.size(); ++k) out.rows[k] = std::move(fin[pivot_row[order[k]]]);
    return out;
}

Rref rref_dense(const Field& F, const std::vector<SparseVec>& input, std::size_t ncols,
                simd::Kernel kernel) {
    const std::uint32_t p = F.p();
    simd::RowAxpyFn axpy = simd::kernel_fn(kernel);
    std::vector<std::vector<Elt>> m;
    m.reserve(input.size());
    for (const auto& v : input)
        if (!v.empty()) m.push_back(sv_to_dense(v, ncols));
    std::size_t r = 0;
    Rref out;
    out.ncols = ncols;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Elt inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < ncols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            axpy(m[i].data() + c, m[r].data() + c, p - m[i][c], p, ncols - c);
        }
        out.pivots.push_back(static_cast<std::uint32_t>(c));
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i) out.rows.push_back(sv_from_dense(m[i]));
    return out;
}

}  // namespace

Rref rref_rows(const Field& F, std::vector<SparseVec> rows, std::size_t ncols, const RrefOptions& opt) {
    for (const auto& v : rows)
        if (!v.empty() && v.back().idx >= ncols) throw InvalidInput("row entry beyond column count");
    Backend b = opt.backend;
    if (b == Backend::Auto) {
        std::size_t nnz = 0;
        for (const auto& v : rows) nnz += v.size();
        std::size_t cells = rows.size() * ncols;
        bool dense = cells > 0 && cells <= opt.dense_cell_limit &&
                     static_cast<double>(nnz) >= opt.density_threshold * static_cast<double>(cells);
        b = dense ? Backend::Dense : Backend::Sparse;
    }
    if (b == Backend::Dense) {
        simd::Kernel k = opt.kernel ? *opt.kernel : simd::select_kernel(F.p());
        if (k != simd::Kernel::Scalar && F.p() >= simd::kVectorModulusLimit) k = simd::Kernel::Scalar;
        return rref_dense(F, rows, ncols, k);
    }
    return rref_sparse(F, std::move(rows), ncols);
}

GaussianData gaussian_data(const Field& F, const SparseMatrix& M, const RrefOptions& opt) {
    Rref R = rref_rows(F, M.row_vectors(), M.cols(), opt);
    GaussianData g;
    g.rank = R.rows.size();
    g.pivot_columns = R.pivots;
    std::vector<std::int32_t> prow(M.cols(), -1);
    for (std::size_t k = 0; k < R.pivots.size(); ++k) prow[R.pivots[k]] = static_cast<std::int32_t>(k);
    // Column f of R, read off the rows, gives x_pivot = -R[k][f].
    std::vector<SparseVec> rcols(M.cols());
    for (std::size_t k = 0; k < R.rows.size(); ++k)
        for (const auto& e : R.rows[k])
            if (prow[e.idx] < 0) rcols[e.idx].push_back({R.pivots[k], F.neg(e.val)});
    for (std::uint32_t f = 0; f < M.cols(); ++f) {
        if (prow[f] >= 0) continue;
        SparseVec v = std::move(rcols[f]);
        v.push_back({f, 1});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
        g.kernel_basis.push_back(std::move(v));
    }
    for (std::uint32_t c : R.pivots) g.image_basis.push_back(M.col(c));
    return g;
}

std::size_t rank_of(const Field& F, const SparseMatrix& M, const RrefOptions& opt) {
    // Row reduction of the narrower orientation is cheaper; rank is the same.
    if (M.rows() < M.cols()) return rref_rows(F, M.transpose().row_vectors(), M.rows(), opt).rows.size();
    return rref_rows(F, M.row_vectors(), M.cols(), opt).rows.size();
}

Subspace Subspace::span(const Field& F, std::size_t ambient, std::vector<SparseVec> vecs,
                        const RrefOptions& opt) {
    Subspace s(F, ambient);
    s.rref_ = rref_rows(F, std::move(vecs), ambient, opt);
    s.index();
    return s;
}

Subspace Subspace::column_space(const Field& F, const SparseMatrix& M, const RrefOptions& opt) {
    std::vector<SparseVec> cols;
    cols.reserve(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) cols.push_back(M.col(j));
    return span(F, M.rows(), std::move(cols), opt);
}

void Subspace::index() {
    pivot_row_.assign(rref_.ncols, -1);
    for (std::size_t k = 0; k < rref_.pivots.size(); ++k)
        pivot_row_[rref_.pivots[k]] = static_cast<std::int32_t>(k);
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    if (!v.empty() && v.back().idx >= rref_.ncols) throw InvalidInput("vector outside ambient space");
    // Rows are fully reduced, so each pivot coordinate of v is cleared by exactly one row
    // and no row touches another pivot.
    SparseAccumulator acc(*F_);
    acc.add_vec(v, 1);
    for (const auto& e : v) {
        std::int32_t k = e.idx < pivot_row_.size() ? pivot_row_[e.idx] : -1;
        if (k >= 0) acc.add_vec(rref_.rows[k], F_->neg(e.val));
    }
    return acc.take();
}

std::optional<std::vector<Elt>> Subspace::coords(const SparseVec& v) const {
    if (!reduce(v).empty()) return std::nullopt;
    std::vector<Elt> c(dim(), 0);
    for (const auto& e : v) {
        std::int32_t k = pivot_row_[e.idx];
        if (k >= 0) c[k] = e.val;
    }
    return c;
}

LinearSolver::LinearSolver(const Field& F, const SparseMatrix& A, const RrefOptions& opt)
    : F_(&F), m_(A.rows()), n_(A.cols()) {
    // Rows [column_j(A) | e_j]; after reduction rows with a pivot in the first block give a
    // basis of the column space together with the combination producing each one.
    std::vector<SparseVec> rows;
    rows.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        SparseVec r = A.col(j);
        r.push_back({static_cast<std::uint32_t>(m_ + j), 1});
        rows.push_back(std::move(r));
    }
    Rref R = rref_rows(F, std::move(rows), m_ + n_, opt);
    for (std::size_t k = 0; k < R.rows.size(); ++k) {
        if (R.pivots[k] >= m_) break;
        SparseVec head, tail;
        for (const auto& e : R.rows[k]) {
            if (e.idx < m_) head.push_back(e);
            else tail.push_back({static_cast<std::uint32_t>(e.idx - m_), e.val});
        }
        pivots_.push_back(R.pivots[k]);
        basis_.push_back(std::move(head));
        provenance_.push_back(std::move(tail));
    }
}

std::optional<SparseVec> LinearSolver::solve(const SparseVec& b) const {
    if (!b.empty() && b.back().idx >= m_) throw InvalidInput("right-hand side outside codomain");
    SparseAccumulator resid(*F_), x(*F_);
    resid.add_vec(b, 1);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Elt c = sv_get(b, pivots_[k]);
        if (!c) continue;
        resid.add_vec(basis_[k], F_->neg(c));
        x.add_vec(provenance_[k], c);
    }
    if (!resid.take().empty()) return std::nullopt;
    return x.take();
}

}  // namespace shom
