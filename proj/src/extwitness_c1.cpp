#include "superhomology/complexes.hpp"
#include "superhomology/errors.hpp"
#include "superhomology/extwitness.hpp"
#include "superhomology/rref.hpp"

namespace shom {

namespace {

// Σ_j 1^{⊗j} ⊗ z ⊗ 1^{⊗(k-j-1)} on W^{⊗k}.
GradedMatrix derivation_on_power(const Field& F, const GradedMatrix& z, int k) {
    const SuperSpace& W = z.domain();
    GradedMatrix total;
    for (int j = 0; j < k; ++j) {
        GradedMatrix term = j == 0 ? z : tensor_of_maps(F, GradedMatrix::identity(tensor_power(W, j)), z);
        if (k - j - 1 > 0) term = tensor_of_maps(F, term, GradedMatrix::identity(tensor_power(W, k - j - 1)));
        total = j == 0 ? term : add(F, total, term);
    }
    return total;
}

// z.(s ⊗ a) = z.s ⊗ a + (-1)^{|s|} s ⊗ z.a on Ω_n^i.
GradedMatrix omega_action(const Field& F, const GradedMatrix& z, int n, int i) {
    GradedMatrix zs = derivation_action(F, Algebra::S, z, n - i);
    GradedMatrix za = derivation_action(F, Algebra::A, z, i);
    return add(F, tensor_of_maps(F, zs, GradedMatrix::identity(za.domain())),
               tensor_of_maps(F, GradedMatrix::identity(zs.domain()), za));
}

// Coordinates in a subspace given by basis vectors, via one solver per subspace.
struct Coordinates {
    Coordinates(const Field& F, const std::vector<SparseVec>& basis, std::size_t ambient)
        : solver(F, columns(basis, ambient)) {}
    static SparseMatrix columns(const std::vector<SparseVec>& basis, std::size_t ambient) {
        SparseMatrix M(ambient, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) M.set_col(j, basis[j]);
        return M;
    }
    SparseVec of(const SparseVec& v, const std::string& what) const {
        auto c = solver.solve(v);
        if (!c) throw std::logic_error(what + " is not in the Koszul kernel");
        return *c;
    }
    LinearSolver solver;
};

SuperSpace twisted_part(const SuperSpace& W, bool odd) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < W.dim(); ++k)
        if (W.parity(k) == static_cast<int>(odd)) labels.push_back(W.label(k) + "(1)");
    const std::size_t n = labels.size();
    return SuperSpace(std::move(labels), std::vector<int>(n, odd ? 1 : 0));
}

// Index of s ⊗ a in Ω_n^i from exponent vectors.
std::uint32_t omega_index(const SuperSpace& W, int n, int i, const Exponents& s, const Exponents& a) {
    auto S = functor_basis(Algebra::S, W, n - i);
    auto A = functor_basis(Algebra::A, W, i);
    const long si = S->index_of(s), ai = A->index_of(a);
    if (si < 0 || ai < 0) throw std::logic_error("not a basis monomial");
    return static_cast<std::uint32_t>(si * static_cast<long>(A->size()) + ai);
}

}  // namespace

GradedMatrix derivation_action(const Field& F, Algebra alg, const GradedMatrix& z, int k) {
    auto B = functor_basis(alg, z.domain(), k);
    if (k == 0) return GradedMatrix::zero(B->space(), B->space(), z.parity());
    return induced_from_tensor_map(F, alg, z.domain(), z.domain(), k, derivation_on_power(F, z, k));
}

AugmentedAlgebra odd_exterior() {
    AugmentedAlgebra L;
    L.space = SuperSpace({"1", "z"}, {0, 1});
    L.mult = {{{0, 1}}, {{1, 1}}, {{1, 1}}, {}};
    return L;
}

C1Report c1_witness(const Field& F, std::size_t m, std::size_t n, bool transpose) {
    if (m < 1 || n < 1) throw InvalidInput("c1_witness needs m, n >= 1");
    const int p = static_cast<int>(F.p());
    if (p < 3) throw InvalidInput("c1_witness needs p >= 3");
    C1Report r;
    r.m = m;
    r.n = n;
    r.transpose = transpose;

    // z sends the odd basis vector `src` to the even basis vector `dst`.
    const SuperSpace W = transpose ? SuperSpace::standard(n, m) : SuperSpace::standard(m, n);
    const std::size_t E = W.even_dim(), O = W.odd_dim();
    const std::size_t dst = transpose ? 0 : E - 1;
    const std::size_t src = transpose ? E + O - 1 : E;
    const GradedMatrix z = GradedMatrix::from_triples(F, W, W, 1, {{static_cast<std::uint32_t>(dst),
                                                                    static_cast<std::uint32_t>(src), 1}});

    const DeRhamComplexes om = build_de_rham(F, W, p);
    const KoszulKernel kk = koszul_kernel_complex(F, om);
    std::vector<Coordinates> coords;
    for (int i = 0; i <= p; ++i) {
        r.kernel_dims.push_back(kk.basis[i].size());
        coords.emplace_back(F, kk.basis[i], om.spaces[i].dim());
    }
    r.kernel_dims.pop_back();
    if (!kk.basis[p].empty()) r.failures.push_back("K_p^p is nonzero");

    // z on K^i, in kernel coordinates.
    std::vector<SparseMatrix> zk;
    for (int i = 0; i < p; ++i) {
        const GradedMatrix zo = omega_action(F, z, p, i);
        SparseMatrix M(kk.basis[i].size(), kk.basis[i].size());
        for (std::size_t j = 0; j < kk.basis[i].size(); ++j)
            M.set_col(j, coords[i].of(apply(F, zo, kk.basis[i][j]), "z-image"));
        zk.push_back(std::move(M));
    }

    const SuperSpace I0 = twisted_part(W, false), I1 = twisted_part(W, true);
    const Exponents none(W.dim(), 0);
    auto theta = [&](std::size_t y) {
        Exponents s = none, a = none;
        s[y] = 1;
        a[y] = p - 1;
        return coords[p - 1].of({{omega_index(W, p, p - 1, s, a), 1}}, "y⊗γ_{p-1}(y)");
    };

    // K' homologically: C_q = K^{p-1-q} for q < p, C_p = I_0^{(1)}; interior boundaries are -d.
    ModuleComplex& K = r.K;
    for (int q = 0; q < p; ++q) K.spaces.push_back(kk.complex.space(p - 1 - q));
    K.spaces.push_back(I0);
    for (int q = 1; q < p; ++q)
        K.boundary.push_back(scale(F, kk.complex.d(p - 1 - q), F.neg(1)));
    {
        SparseMatrix iota(kk.basis[0].size(), E);
        for (std::size_t k = 0; k < E; ++k) {
            Exponents s = none;
            s[k] = p;
            iota.set_col(k, coords[0].of({{omega_index(W, p, 0, s, none), 1}}, "x^p"));
        }
        K.boundary.emplace_back(I0, K.spaces[p - 1], 0, std::move(iota));
    }
    {
        // K^{p-1} = im d ⊕ span{θ_j}; the augmentation reads the θ coordinates.
        const std::size_t top = kk.basis[p - 1].size();
        std::vector<SparseVec> cols;
        if (p >= 2)
            for (std::size_t c = 0; c < kk.complex.d(p - 2).cols(); ++c) cols.push_back(kk.complex.d(p - 2).matrix().col(c));
        Subspace B = Subspace::span(F, top, cols);
        std::vector<SparseVec> q = B.basis();
        for (std::size_t j = 0; j < O; ++j) q.push_back(theta(E + j));
        if (q.size() != top || rank_of(F, Coordinates::columns(q, top)) != top)
            r.failures.push_back("im d and the θ_j do not form a basis of K_p^{p-1}");
        LinearSolver solve(F, Coordinates::columns(q, top));
        SparseMatrix aug(O, top);
        for (std::size_t k = 0; k < top; ++k) {
            auto c = solve.solve({{static_cast<std::uint32_t>(k), 1}});
            SparseVec col;
            if (c)
                for (const auto& e : *c)
                    if (e.idx >= B.dim()) col.push_back({static_cast<std::uint32_t>(e.idx - B.dim()), e.val});
            aug.set_col(k, std::move(col));
        }
        K.augmentation = GradedMatrix(K.spaces[0], I1, 0, std::move(aug));
    }
    K.act = [zk, p, F](int q, std::size_t a, const SparseVec& c) -> SparseVec {
        if (a != 1 || q >= p) return {};
        SparseAccumulator acc(F);
        for (const auto& t : c) acc.add_vec(zk[p - 1 - q].col(t.idx), t.val);
        return acc.take();
    };

    // P_i = Λ(z) ⊗ I_1^{(1)}, ∂(1 ⊗ g) = z ⊗ g.
    FreeResolution& P = r.P;
    P.algebra_dim = 2;
    std::vector<std::string> glabels;
    for (std::size_t j = 0; j < O; ++j) glabels.push_back("1⊗" + I1.label(j));
    const SuperSpace G(glabels, std::vector<int>(O, 1));
    for (int i = 0; i <= p; ++i) {
        P.generators.push_back(G);
        std::vector<SparseVec> b;
        if (i > 0)
            for (std::size_t j = 0; j < O; ++j) b.push_back({{static_cast<std::uint32_t>(j * 2 + 1), 1}});
        P.boundary.push_back(std::move(b));
    }
    P.augmentation = GradedMatrix(G, I1, 0, SparseMatrix::identity(O));

    // φ_i(1⊗y_j) = δ_{j,src} (1/i!) x_dst^i y_src ⊗ γ_{p-i-1}(y_src) for i < p; φ_p = -δ_{j,src} x_dst.
    // For j ≠ src, φ_0 is y_j ⊗ γ_{p-1}(y_j) so that the augmentation square lifts the identity.
    for (int i = 0; i <= p; ++i) {
        std::vector<SparseVec> imgs(O);
        for (std::size_t j = 0; j < O; ++j) {
            const std::size_t y = E + j;
            if (i == p) {
                if (y == src) imgs[j] = {{static_cast<std::uint32_t>(dst), F.neg(1)}};
            } else if (y == src) {
                Exponents s = none, a = none;
                s[dst] = i;
                s[src] = 1;
                a[src] = p - i - 1;
                const SparseVec v{{omega_index(W, p, p - 1 - i, s, a), F.inv_factorial(i)}};
                imgs[j] = coords[p - 1 - i].of(v, "φ_" + std::to_string(i));
            } else if (i == 0) {
                imgs[j] = theta(y);
            }
        }
        r.phi.images.push_back(std::move(imgs));
    }

    const std::vector<std::string> bad = chain_map_residuals(F, P, K, GradedMatrix::identity(I1), r.phi);
    r.failures.insert(r.failures.end(), bad.begin(), bad.end());
    r.squares_checked = static_cast<std::size_t>(p + 1) * O;
    r.squares_commute = bad.empty() && r.failures.empty();

    r.phi_top = SparseMatrix(E, O);
    for (std::size_t j = 0; j < O; ++j) r.phi_top.set_col(j, r.phi.images[p][j]);
    r.phi_top_nonzero = !r.phi_top.is_zero();
    if (!r.phi_top_nonzero) r.failures.push_back("φ_p is zero");

    // g acts trivially on I_0^{(1)}, so every Hom differential should vanish.
    auto trivial = [](std::size_t, const SparseVec&) { return SparseVec{}; };
    r.hom_differential_zero = true;
    for (int i = 0; i < p; ++i)
        if (!hom_differential(F, P, I0, trivial, i).is_zero()) {
            r.hom_differential_zero = false;
            r.failures.push_back("Hom differential nonzero in degree " + std::to_string(i));
        }
    return r;
}

C1LiftReport c1_lift_check(const Field& F, const C1Report& r) {
    C1LiftReport out;
    const int p = static_cast<int>(F.p());
    const SuperSpace I1 = r.P.augmentation.codomain();
    const SuperSpace I0 = r.K.spaces.back();
    ChainMap lifted;
    try {
        lifted = lift_chain_map(F, r.P, r.K, GradedMatrix::identity(I1), p);
    } catch (const LiftError& e) {
        out.failures.push_back(e.what());
        return out;
    }
    out.lifted = chain_map_residuals(F, r.P, r.K, GradedMatrix::identity(I1), lifted).empty();
    if (!out.lifted) out.failures.push_back("lifted map has failing squares");

    // Hom(P_p, I_0^{(1)}) has coordinates g * dim I_0 + i.
    auto flatten = [&](const std::vector<SparseVec>& images) {
        SparseVec v;
        for (std::size_t g = 0; g < images.size(); ++g)
            for (const auto& e : images[g]) v.push_back({static_cast<std::uint32_t>(g * I0.dim() + e.idx), e.val});
        return v;
    };
    auto trivial = [](std::size_t, const SparseVec&) { return SparseVec{}; };
    const Subspace B = Subspace::column_space(F, hom_differential(F, r.P, I0, trivial, p - 1));
    const SparseVec ours = B.reduce(flatten(lifted.images[p]));
    const SparseVec theirs = B.reduce(flatten(r.phi.images[p]));
    out.nonzero = !ours.empty();
    out.matches = ours == theirs;
    if (!out.nonzero) out.failures.push_back("lifted class is zero");
    if (!out.matches) out.failures.push_back("lifted class differs from the explicit one");
    return out;
}

}  // namespace shom
