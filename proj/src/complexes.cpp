#include "superhomology/complexes.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "superhomology/errors.hpp"

namespace shom {

DeRhamBidegree de_rham_bidegree(const SuperSpace& V, int n, int i) {
    if (n < 0 || i < 0 || i > n) throw InvalidInput("bidegree out of range");
    auto S = functor_basis(Algebra::S, V, n - i);
    auto A = functor_basis(Algebra::A, V, i);
    const std::string name = "Omega_" + std::to_string(n) + "^" + std::to_string(i);
    check_budget(name, S->size() * A->size());
    return {n, i, tensor(S->space(), A->space())};
}

namespace {

// S^{n-i} ⊗ A^i -> S^{n-i-1} ⊗ (S^1 = A^1) ⊗ A^i -> S^{n-i-1} ⊗ A^{i+1}.
SparseMatrix de_rham_block(const Field& F, const SuperSpace& V, int n, int i) {
    auto A = functor_basis(Algebra::A, V, i);
    auto S1 = functor_basis(Algebra::S, V, n - i - 1);
    GradedMatrix split = tensor_of_maps(F, coproduct_matrix(F, Algebra::S, V, n - i - 1, 1),
                                        GradedMatrix::identity(A->space()));
    GradedMatrix join = tensor_of_maps(F, GradedMatrix::identity(S1->space()),
                                       product_matrix(F, Algebra::A, V, 1, i));
    return mat_mul(F, join.matrix(), split.matrix());
}

// S^{n-i} ⊗ A^i -> S^{n-i} ⊗ (A^1 = S^1) ⊗ A^{i-1} -> S^{n-i+1} ⊗ A^{i-1}.
SparseMatrix koszul_block(const Field& F, const SuperSpace& V, int n, int i) {
    auto S = functor_basis(Algebra::S, V, n - i);
    auto A1 = functor_basis(Algebra::A, V, i - 1);
    GradedMatrix split = tensor_of_maps(F, GradedMatrix::identity(S->space()),
                                        coproduct_matrix(F, Algebra::A, V, 1, i - 1));
    GradedMatrix join = tensor_of_maps(F, product_matrix(F, Algebra::S, V, n - i, 1),
                                       GradedMatrix::identity(A1->space()));
    return mat_mul(F, join.matrix(), split.matrix());
}

std::string bidegree_text(int n, int i) { return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")"; }

}  // namespace

DeRhamComplexes build_de_rham(const Field& F, const SuperSpace& V, int n) {
    if (n < 0) throw InvalidInput("negative total degree");
    DeRhamComplexes out;
    out.V = V;
    out.n = n;
    for (int i = 0; i <= n; ++i) out.spaces.push_back(de_rham_bidegree(V, n, i).space);

    // Bidegrees are independent; results are collected in index order.
    std::vector<std::future<SparseMatrix>> dfut, kfut;
    for (int i = 0; i < n; ++i)
        dfut.push_back(std::async(std::launch::async, [&F, &V, n, i] { return de_rham_block(F, V, n, i); }));
    for (int i = 1; i <= n; ++i)
        kfut.push_back(std::async(std::launch::async, [&F, &V, n, i] { return koszul_block(F, V, n, i); }));

    std::vector<GradedMatrix> ds, ks(n);
    for (int i = 0; i < n; ++i) ds.emplace_back(out.spaces[i], out.spaces[i + 1], 0, dfut[i].get());
    for (int i = 1; i <= n; ++i) ks[n - i] = GradedMatrix(out.spaces[i], out.spaces[i - 1], 0, kfut[i - 1].get());

    try {
        out.de_rham = CochainComplex(F, 0, out.spaces, std::move(ds));
    } catch (const ComplexError& e) {
        throw ComplexError(e.degree, "d∘d is nonzero starting at bidegree " + bidegree_text(n, e.degree));
    }
    std::vector<SuperSpace> rev(out.spaces.rbegin(), out.spaces.rend());
    try {
        out.koszul = CochainComplex(F, 0, std::move(rev), std::move(ks));
    } catch (const ComplexError& e) {
        throw ComplexError(n - e.degree, "κ∘κ is nonzero starting at bidegree " + bidegree_text(n, n - e.degree));
    }
    return out;
}

HomotopyReport verify_homotopy(const Field& F, const DeRhamComplexes& C) {
    HomotopyReport r;
    r.n = C.n;
    const Elt nn = F.from_int(C.n);
    for (int i = 0; i <= C.n && r.ok; ++i) {
        const std::size_t dim = C.spaces[i].dim();
        SparseMatrix sum(dim, dim);
        if (i < C.n) sum = mat_add(F, sum, mat_mul(F, C.kappa(i + 1).matrix(), C.d(i).matrix()));
        if (i > 0) sum = mat_add(F, sum, mat_mul(F, C.d(i - 1).matrix(), C.kappa(i).matrix()));
        SparseMatrix diff = mat_add(F, sum, mat_scale(F, SparseMatrix::identity(dim), nn), F.p() - 1);
        for (std::size_t c = 0; c < dim && r.ok; ++c) {
            if (diff.col(c).empty()) continue;
            const std::size_t row = diff.col(c).front().idx;
            r.ok = false;
            r.bad_i = i;
            r.row = row;
            r.col = c;
            r.got = sum.get(row, c);
            r.expected = row == c ? nn : 0;
            r.message = "dκ+κd differs from " + std::to_string(C.n) + "·id at bidegree " + bidegree_text(C.n, i) +
                        ", entry (" + std::to_string(row) + ", " + std::to_string(c) + ")";
        }
    }
    return r;
}

namespace {

// Kernel basis of a map with c columns; each vector has a 1 at its own free column and 0 at the others.
struct Kernel {
    std::vector<SparseVec> basis;
    std::vector<std::uint32_t> free;
};

Kernel kernel_of(const Field& F, const SparseMatrix& M) {
    GaussianData g = gaussian_data(F, M);
    Kernel k;
    k.basis = std::move(g.kernel_basis);
    std::vector<bool> piv(M.cols(), false);
    for (auto c : g.pivot_columns) piv[c] = true;
    for (std::uint32_t c = 0; c < M.cols(); ++c)
        if (!piv[c]) k.free.push_back(c);
    if (k.free.size() != k.basis.size()) throw std::logic_error("kernel basis does not match free columns");
    return k;
}

}  // namespace

std::vector<std::vector<SparseVec>> koszul_kernel_basis(const Field& F, const DeRhamComplexes& C) {
    std::vector<std::vector<SparseVec>> out;
    for (int i = 0; i <= C.n; ++i)
        out.push_back(kernel_of(F, i == 0 ? SparseMatrix(0, C.spaces[i].dim()) : C.kappa(i).matrix()).basis);
    return out;
}

KoszulKernel koszul_kernel_complex(const Field& F, const DeRhamComplexes& C) {
    if (C.n % static_cast<int>(F.p()) != 0)
        throw InvalidInput("the Koszul kernel is a subcomplex only when p divides the total degree");
    KoszulKernel out;
    std::vector<Kernel> ks;
    std::vector<SuperSpace> spaces;
    for (int i = 0; i <= C.n; ++i) {
        const SuperSpace& Om = C.spaces[i];
        Kernel k = kernel_of(F, i == 0 ? SparseMatrix(0, Om.dim()) : C.kappa(i).matrix());
        std::vector<std::string> labels;
        std::vector<int> par;
        for (std::size_t j = 0; j < k.basis.size(); ++j) {
            const int p0 = Om.parity(k.free[j]);
            for (const auto& e : k.basis[j])
                if (Om.parity(e.idx) != p0) throw std::logic_error("inhomogeneous Koszul kernel vector");
            labels.push_back("k" + std::to_string(i) + "_" + std::to_string(j));
            par.push_back(p0);
        }
        spaces.emplace_back(std::move(labels), std::move(par));
        out.basis.push_back(k.basis);
        ks.push_back(std::move(k));
    }
    std::vector<GradedMatrix> diffs;
    for (int i = 0; i < C.n; ++i) {
        SparseMatrix m(ks[i + 1].basis.size(), ks[i].basis.size());
        for (std::size_t j = 0; j < ks[i].basis.size(); ++j) {
            SparseVec dv = apply(F, C.d(i), ks[i].basis[j]);
            SparseAccumulator coords(F), check(F);
            for (std::size_t k = 0; k < ks[i + 1].free.size(); ++k) {
                const Elt c = sv_get(dv, ks[i + 1].free[k]);
                if (!c) continue;
                coords.add(static_cast<std::uint32_t>(k), c);
                check.add_vec(ks[i + 1].basis[k], c);
            }
            if (check.take() != dv)
                throw std::logic_error("d does not preserve the Koszul kernel at bidegree " +
                                       bidegree_text(C.n, i));
            m.set_col(j, coords.take());
        }
        diffs.emplace_back(spaces[i], spaces[i + 1], 0, std::move(m));
    }
    out.complex = CochainComplex(F, 0, std::move(spaces), std::move(diffs));
    return out;
}

OmegaTotal omega_total(const SuperSpace& V, int n) {
    OmegaTotal t;
    std::vector<std::string> labels;
    std::vector<int> par;
    for (int i = 0; i <= n; ++i) {
        SuperSpace s = de_rham_bidegree(V, n, i).space;
        t.offsets.push_back(labels.size());
        labels.insert(labels.end(), s.labels().begin(), s.labels().end());
        par.insert(par.end(), s.parities().begin(), s.parities().end());
    }
    t.space = SuperSpace(std::move(labels), std::move(par));
    return t;
}

int OmegaTotal::degree_of(std::size_t idx) const {
    return static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), idx) - offsets.begin()) - 1;
}

KernelInjectionReport kernel_injection(const Field& F, const DeRhamComplexes& C, const KoszulKernel& K) {
    KernelInjectionReport r;
    const auto hk = cohomology(F, K.complex);
    for (int t = 0; t <= C.n; ++t) {
        Subspace B = t > 0 ? Subspace::column_space(F, C.d(t - 1).matrix()) : Subspace(F, C.spaces[t].dim());
        std::vector<SparseVec> vs = B.basis();
        for (const auto& rep : hk[t].representatives) {
            SparseAccumulator acc(F);
            for (const auto& e : rep) acc.add_vec(K.basis[t][e.idx], e.val);
            vs.push_back(acc.take());
        }
        r.kernel_h_dims.push_back(hk[t].dim);
        r.image_ranks.push_back(Subspace::span(F, C.spaces[t].dim(), vs).dim() - B.dim());
    }
    return r;
}

}  // namespace shom
