#include <algorithm>

#include "superhomology/errors.hpp"
#include "superhomology/extwitness.hpp"
#include "superhomology/rref.hpp"

namespace shom {

namespace {

// Σ c · a.images[g] over the terms (g, a, c) of x, the images living in C_degree.
SparseVec extend_linearly(const Field& F, std::size_t dimA, const ModuleComplex& C, int degree,
                          const std::vector<SparseVec>& images, const SparseVec& x) {
    SparseAccumulator acc(F);
    for (const auto& t : x) {
        const std::size_t g = t.idx / dimA, a = t.idx % dimA;
        if (g >= images.size()) throw InvalidInput("element names a generator beyond the map");
        if (images[g].empty()) continue;
        acc.add_vec(a == 0 ? images[g] : C.act(degree, a, images[g]), t.val);
    }
    return acc.take();
}

std::string vec_text(const SparseVec& v) {
    std::string s = "{";
    for (const auto& e : v) s += (s.size() > 1 ? ", " : "") + std::to_string(e.idx) + ":" + std::to_string(e.val);
    return s + "}";
}

// The resolution's boundary may be odd (multiplication by an odd element).
GradedMatrix with_inferred_parity(const SuperSpace& dom, const SuperSpace& cod, SparseMatrix M) {
    int parity = 0;
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (!M.col(c).empty()) {
            parity = dom.parity(c) ^ cod.parity(M.col(c).front().idx);
            break;
        }
    return GradedMatrix(dom, cod, parity, std::move(M));
}

void check_shapes(const FreeResolution& P, const ModuleComplex& C) {
    if (P.boundary.size() != P.generators.size()) throw InvalidInput("resolution needs one boundary list per degree");
    if (C.boundary.size() + 1 != C.spaces.size()) throw InvalidInput("module complex needs top boundary maps");
    if (!C.act) throw InvalidInput("module complex has no action");
}

}  // namespace

SparseVec apply_chain_map(const Field& F, const FreeResolution& P, const ModuleComplex& C, const ChainMap& phi,
                          int i, const SparseVec& x) {
    return extend_linearly(F, P.algebra_dim, C, i, phi.images.at(i), x);
}

std::vector<std::string> chain_map_residuals(const Field& F, const FreeResolution& P, const ModuleComplex& C,
                                             const GradedMatrix& f, const ChainMap& phi) {
    check_shapes(P, C);
    std::vector<std::string> bad;
    const int top = static_cast<int>(phi.images.size()) - 1;
    if (top > P.top() || top > C.top()) throw InvalidInput("chain map is longer than its complexes");
    for (int i = 0; i <= top; ++i) {
        const SuperSpace& G = P.generators[i];
        if (phi.images[i].size() != G.dim()) throw InvalidInput("chain map has the wrong number of generators");
        for (std::size_t g = 0; g < G.dim(); ++g) {
            SparseVec lhs, rhs;
            if (i == 0) {
                lhs = apply(F, C.augmentation, phi.images[0][g]);
                rhs = apply(F, f, P.augmentation.matrix().col(g));
            } else {
                lhs = apply(F, C.boundary[i - 1], phi.images[i][g]);
                rhs = apply_chain_map(F, P, C, phi, i - 1, P.boundary[i][g]);
            }
            if (lhs != rhs)
                bad.push_back("square " + std::to_string(i) + " fails on generator " + G.label(g) + ": " +
                              vec_text(lhs) + " vs " + vec_text(rhs));
        }
    }
    return bad;
}

ChainMap lift_chain_map(const Field& F, const FreeResolution& P, const ModuleComplex& C, const GradedMatrix& f,
                        int top) {
    check_shapes(P, C);
    if (top < 0 || top > P.top() || top > C.top()) throw InvalidInput("lift degree outside both complexes");
    ChainMap phi;
    for (int i = 0; i <= top; ++i) {
        const SparseMatrix& M = i == 0 ? C.augmentation.matrix() : C.boundary[i - 1].matrix();
        LinearSolver solver(F, M);
        std::vector<SparseVec> images;
        for (std::size_t g = 0; g < P.generators[i].dim(); ++g) {
            const SparseVec rhs = i == 0 ? apply(F, f, P.augmentation.matrix().col(g))
                                         : apply_chain_map(F, P, C, phi, i - 1, P.boundary[i][g]);
            auto x = solver.solve(rhs);
            if (!x) throw LiftError(i, "target of generator " + P.generators[i].label(g) + " is not a boundary");
            images.push_back(std::move(*x));
        }
        phi.images.push_back(std::move(images));
        // Residual check: the solved square must hold exactly.
        for (std::size_t g = 0; g < P.generators[i].dim(); ++g) {
            const SparseVec lhs = mat_apply(F, M, phi.images[i][g]);
            const SparseVec rhs = i == 0 ? apply(F, f, P.augmentation.matrix().col(g))
                                         : apply_chain_map(F, P, C, phi, i - 1, P.boundary[i][g]);
            if (lhs != rhs) throw std::logic_error("linear solver returned a non-solution");
        }
    }
    return phi;
}

std::optional<ChainMap> find_homotopy(const Field& F, const FreeResolution& P, const ModuleComplex& C,
                                      const ChainMap& phi, const ChainMap& psi) {
    check_shapes(P, C);
    const int top = static_cast<int>(std::min(phi.images.size(), psi.images.size())) - 1;
    ChainMap h;
    for (int i = 0; i < top && i + 1 <= C.top(); ++i) {
        LinearSolver solver(F, C.boundary[i].matrix());
        std::vector<SparseVec> images;
        for (std::size_t g = 0; g < P.generators[i].dim(); ++g) {
            SparseVec rhs = sv_axpy(F, phi.images[i][g], F.neg(1), psi.images[i][g]);
            if (i > 0) rhs = sv_axpy(F, rhs, F.neg(1), extend_linearly(F, P.algebra_dim, C, i, h.images[i - 1], P.boundary[i][g]));
            auto x = solver.solve(rhs);
            if (!x) return std::nullopt;
            images.push_back(std::move(*x));
        }
        h.images.push_back(std::move(images));
    }
    return h;
}

ModuleComplex as_module_complex(const Field& F, const FreeResolution& P, const AugmentedAlgebra& A) {
    if (A.dim() != P.algebra_dim) throw InvalidInput("algebra does not match the resolution");
    ModuleComplex C;
    const std::size_t n = A.dim();
    for (const SuperSpace& G : P.generators) C.spaces.push_back(tensor(G, A.space));
    // Left multiplication a·(b ⊗ g) = ab ⊗ g.
    C.act = [F, A](int, std::size_t a, const SparseVec& c) {
        SparseAccumulator acc(F);
        const std::size_t n = A.dim();
        for (const auto& t : c)
            for (const auto& e : A.mult[a * n + t.idx % n])
                acc.add(static_cast<std::uint32_t>((t.idx / n) * n + e.idx), F.mul(t.val, e.val));
        return acc.take();
    };
    for (int i = 1; i <= P.top(); ++i) {
        SparseMatrix M(C.spaces[i - 1].dim(), C.spaces[i].dim());
        for (std::size_t g = 0; g < P.generators[i].dim(); ++g)
            for (std::size_t a = 0; a < n; ++a)
                M.set_col(g * n + a, a == 0 ? P.boundary[i][g] : C.act(i - 1, a, P.boundary[i][g]));
        C.boundary.push_back(with_inferred_parity(C.spaces[i], C.spaces[i - 1], std::move(M)));
    }
    SparseMatrix eps(P.augmentation.rows(), C.spaces[0].dim());
    for (std::size_t g = 0; g < P.generators[0].dim(); ++g) eps.set_col(g * n, P.augmentation.matrix().col(g));
    C.augmentation = GradedMatrix(C.spaces[0], P.augmentation.codomain(), 0, std::move(eps));
    return C;
}

SparseMatrix hom_differential(const Field& F, const FreeResolution& P, const SuperSpace& N,
                              const std::function<SparseVec(std::size_t a, const SparseVec& v)>& act, int i) {
    if (i < 0 || i + 1 > P.top()) throw InvalidInput("hom differential degree outside the resolution");
    const std::size_t dn = N.dim(), dimA = P.algebra_dim;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>> t;
    for (std::size_t g1 = 0; g1 < P.generators[i + 1].dim(); ++g1)
        for (const auto& term : P.boundary[i + 1][g1]) {
            const std::size_t g = term.idx / dimA, a = term.idx % dimA;
            for (std::size_t v = 0; v < dn; ++v) {
                const SparseVec e{{static_cast<std::uint32_t>(v), 1}};
                for (const auto& img : a == 0 ? e : act(a, e))
                    t.emplace_back(static_cast<std::uint32_t>(g1 * dn + img.idx), static_cast<std::uint32_t>(g * dn + v),
                                   F.mul(term.val, img.val));
            }
        }
    return SparseMatrix::from_triples(F, P.generators[i + 1].dim() * dn, P.generators[i].dim() * dn, t);
}

}  // namespace shom
