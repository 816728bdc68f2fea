#include <algorithm>

#include "superhomology/errors.hpp"
#include "superhomology/extwitness.hpp"
#include "superhomology/liecohom.hpp"

namespace shom {

E1ChainReport verify_e1_chain_map(const Field& F, std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw InvalidInput("verify_e1_chain_map needs m, n >= 1");
    const int p = static_cast<int>(F.p());
    E1ChainReport r;
    r.m = m;
    r.n = n;
    const std::size_t N = m + n;
    const RestrictedLieSuperalgebra g = lie_gl(F, m, n);
    const XgComplex X = build_X(F, g, 2);
    const auto V = X.V;
    const std::size_t dimV = V->dim();
    const SuperSpace W = SuperSpace::standard(m, n);

    const E1Report e1 = verify_e1(F, W);
    for (const auto& f : e1.failures) r.failures.push_back("e1 sequence: " + f);
    const SuperSpace I0 = e1.p_power.domain();

    // e_ij acts on W by v_j ↦ v_i; on S^p and Γ^p by derivations.
    std::vector<GradedMatrix> on_s, on_gamma;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const std::size_t i = k / N, j = k % N;
        const GradedMatrix e = GradedMatrix::from_triples(
            F, W, W, W.parity(i) ^ W.parity(j), {{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 1}});
        on_s.push_back(derivation_action(F, Algebra::S, e, p));
        on_gamma.push_back(derivation_action(F, Algebra::Gamma, e, p));
    }

    ModuleComplex& E = r.E;
    E.spaces = {e1.alpha.codomain(), e1.alpha.domain(), I0};
    E.boundary = {e1.alpha, e1.p_power};
    E.augmentation = e1.frobenius;
    // A PBW monomial acts through its word, rightmost letter first; g acts trivially on I_0^{(1)}.
    E.act = [V, on_s, on_gamma](int i, std::size_t a, const SparseVec& c) -> SparseVec {
        if (i == 2) return {};
        const Field& F = V->field();
        const auto w = V->word(a);
        SparseVec out = c;
        for (auto it = w.rbegin(); it != w.rend() && !out.empty(); ++it)
            out = apply(F, i == 0 ? on_gamma[*it] : on_s[*it], out);
        return out;
    };

    // X(g) ⊗ k^{m(1)}: generator (gen, s) has index gen * m + s.
    FreeResolution& P = r.P;
    P.algebra_dim = dimV;
    for (int i = 0; i <= 2; ++i) {
        std::vector<std::string> labels;
        std::vector<int> par;
        std::vector<SparseVec> bd;
        for (std::size_t k = 0; k < X.rank(i); ++k) {
            const XGenerator& x = X.generators[i][k];
            const int gp = functor_basis(Algebra::A, g.space, x.a_degree)->parity(x.a_index);
            for (std::size_t s = 0; s < m; ++s) {
                labels.push_back("(" + X.generator_label(i, k) + ")⊗" + I0.label(s));
                par.push_back(gp);
                if (i == 0) continue;
                SparseVec b;
                for (const auto& t : X.d[i][k]) {
                    const std::size_t gen = t.idx / dimV, v = t.idx % dimV;
                    b.push_back({static_cast<std::uint32_t>((gen * m + s) * dimV + v), t.val});
                }
                std::sort(b.begin(), b.end(), [](const Entry& u, const Entry& w) { return u.idx < w.idx; });
                bd.push_back(std::move(b));
            }
        }
        P.generators.emplace_back(std::move(labels), std::move(par));
        P.boundary.push_back(std::move(bd));
    }
    if (X.rank(0) != 1) throw std::logic_error("X_0 should have one generator");
    P.augmentation = GradedMatrix(P.generators[0], I0, 0, SparseMatrix::identity(m));

    auto sp = functor_basis(Algebra::S, W, p);
    auto gp = functor_basis(Algebra::Gamma, W, p);
    const Elt inv_fact = F.inv_factorial(p - 1);
    r.phi.images.resize(3);
    for (std::size_t s = 0; s < m; ++s) {
        // φ_0 on 1⊗1⊗1 ⊗ x_s: γ_p(x_s).
        Exponents e(N, 0);
        e[s] = p;
        r.phi.images[0].push_back({{static_cast<std::uint32_t>(gp->index_of(e)), 1}});
    }
    for (std::size_t k = 0; k < X.rank(1); ++k) {
        const Exponents& a = functor_basis(Algebra::A, g.space, 1)->monomial(X.generators[1][k].a_index);
        const std::size_t l = std::find(a.begin(), a.end(), 1) - a.begin();
        const std::size_t i = l / N, j = l % N;
        for (std::size_t s = 0; s < m; ++s) {
            // φ_1 on 1⊗e_ij⊗1 ⊗ x_s: δ_{j,s} x_i x_s^{p-1} / (p-1)!.
            SparseVec v;
            if (j == s) {
                Exponents e(N, 0);
                e[i] += 1;
                e[s] += p - 1;
                v = {{static_cast<std::uint32_t>(sp->index_of(e)), inv_fact}};
            }
            r.phi.images[1].push_back(std::move(v));
        }
    }
    for (std::size_t k = 0; k < X.rank(2); ++k) {
        const XGenerator& x = X.generators[2][k];
        std::size_t l = g.dim();
        if (x.gamma_degree == 1) {
            const Exponents& c = functor_basis(Algebra::Gamma, X.g0, 1)->monomial(x.gamma_index);
            l = X.g0_to_g[std::find(c.begin(), c.end(), 1) - c.begin()];
        }
        for (std::size_t s = 0; s < m; ++s) {
            // φ_2 on 1⊗1⊗e_ij ⊗ x_s: δ_{j,s} x_i; zero on A^2(g).
            SparseVec v;
            if (l < g.dim() && l % N == s) v = {{static_cast<std::uint32_t>(l / N), 1}};
            r.phi.images[2].push_back(std::move(v));
        }
    }

    const auto bad = chain_map_residuals(F, P, E, GradedMatrix::identity(I0), r.phi);
    r.failures.insert(r.failures.end(), bad.begin(), bad.end());
    r.squares_checked = P.generators[0].dim() + P.generators[1].dim() + P.generators[2].dim();
    return r;
}

}  // namespace shom
