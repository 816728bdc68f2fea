#include "superhomology/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace shom {

SparseVec sv_axpy(const Field& F, const SparseVec& y, Elt a, const SparseVec& x) {
    if (a == 0) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].idx < x[j].idx)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].idx < y[i].idx) {
            out.push_back({x[j].idx, F.mul(a, x[j].val)});
            ++j;
        } else {
            Elt v = F.add(y[i].val, F.mul(a, x[j].val));
            if (v) out.push_back({y[i].idx, v});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const Field& F, const SparseVec& x, Elt a) {
    if (a == 0) return {};
    SparseVec out(x);
    for (auto& e : out) e.val = F.mul(e.val, a);
    return out;
}

SparseVec sv_from_dense(const std::vector<Elt>& d) {
    SparseVec out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) out.push_back({static_cast<std::uint32_t>(i), d[i]});
    return out;
}

std::vector<Elt> sv_to_dense(const SparseVec& v, std::size_t n) {
    std::vector<Elt> d(n, 0);
    for (const auto& e : v) d.at(e.idx) = e.val;
    return d;
}

Elt sv_get(const SparseVec& v, std::uint32_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const Entry& e, std::uint32_t i) { return e.idx < i; });
    return (it != v.end() && it->idx == idx) ? it->val : 0;
}

void SparseAccumulator::add(std::uint32_t idx, Elt v) {
    if (v) touched_.push_back({idx, v});
}

void SparseAccumulator::add_vec(const SparseVec& v, Elt scale) {
    if (!scale) return;
    for (const auto& e : v) touched_.push_back({e.idx, F_.mul(e.val, scale)});
}

SparseVec SparseAccumulator::take() {
    std::sort(touched_.begin(), touched_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (std::size_t i = 0; i < touched_.size();) {
        std::uint32_t idx = touched_[i].first;
        Elt s = 0;
        for (; i < touched_.size() && touched_[i].first == idx; ++i) s = F_.add(s, touched_[i].second);
        if (s) out.push_back({idx, s});
    }
    touched_.clear();
    return out;
}

void SparseMatrix::set_col(std::size_t j, SparseVec v) {
    if (!v.empty() && v.back().idx >= rows_) throw std::out_of_range("row index out of range");
    col_.at(j) = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.col_[i] = {{static_cast<std::uint32_t>(i), 1}};
    return m;
}

SparseMatrix SparseMatrix::from_triples(const Field& F, std::size_t rows, std::size_t cols,
                                        const std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>>& t) {
    std::vector<std::vector<std::pair<std::uint32_t, Elt>>> bycol(cols);
    for (const auto& [r, c, v] : t) {
        if (r >= rows || c >= cols) throw std::out_of_range("triple outside matrix bounds");
        bycol[c].push_back({r, v});
    }
    SparseMatrix m(rows, cols);
    SparseAccumulator acc(F);
    for (std::size_t c = 0; c < cols; ++c) {
        for (auto [r, v] : bycol[c]) acc.add(r, v);
        m.col_[c] = acc.take();
    }
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : col_[j]) t.col_[e.idx].push_back({static_cast<std::uint32_t>(j), e.val});
    return t;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const { return transpose().col_; }

SparseVec mat_apply(const Field& F, const SparseMatrix& A, const SparseVec& x) {
    SparseAccumulator acc(F);
    for (const auto& e : x) {
        if (e.idx >= A.cols()) throw std::out_of_range("vector longer than matrix domain");
        acc.add_vec(A.col(e.idx), e.val);
    }
    return acc.take();
}

SparseMatrix mat_mul(const Field& F, const SparseMatrix& A, const SparseMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    SparseMatrix C(A.rows(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) C.set_col(j, mat_apply(F, A, B.col(j)));
    return C;
}

SparseMatrix mat_add(const Field& F, const SparseMatrix& A, const SparseMatrix& B, Elt b_scale) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    SparseMatrix C(A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) C.set_col(j, sv_axpy(F, A.col(j), b_scale, B.col(j)));
    return C;
}

SparseMatrix mat_scale(const Field& F, const SparseMatrix& A, Elt s) {
    SparseMatrix C(A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) C.set_col(j, sv_scale(F, A.col(j), s));
    return C;
}

}  // namespace shom
