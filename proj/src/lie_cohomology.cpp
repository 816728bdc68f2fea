#include "superhomology/liecohom.hpp"

#include "superhomology/errors.hpp"

namespace shom {

namespace {

std::string dual_label(const SuperSpace& g, const SuperSpace& g0, const Exponents& a, const Exponents& gamma) {
    std::string s;
    auto put = [&s](const std::string& t) { s += (s.empty() ? "" : " ") + t; };
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k]) continue;
        const std::string star = g.label(k) + "*";
        if (g.parity(k) == 0) put("<" + star + ">");
        else put(a[k] > 1 ? star + "^" + std::to_string(a[k]) : star);
    }
    bool bar = false;
    for (std::size_t r = 0; r < gamma.size(); ++r) {
        if (!gamma[r]) continue;
        if (!bar) put("|");
        bar = true;
        const std::string star = g0.label(r) + "*";
        put(gamma[r] > 1 ? star + "^" + std::to_string(gamma[r]) : star);
    }
    return s.empty() ? "1" : s;
}

Elt model_sign(const Field& F, const SuperSpace& g, const Exponents& a) {
    long c = 0, k = 0;
    for (std::size_t l = 0; l < a.size(); ++l) (g.parity(l) ? k : c) += a[l];
    return F.sign(((k * (k + 1) / 2) + (c * (c - 1) / 2) + c * (k + 1)) % 2 != 0);
}

}  // namespace

CochainComplex hom_complex(const Field& F, const XgComplex& X) {
    const auto& g = X.V->lie();
    const std::size_t dimV = X.V->dim();
    std::vector<SuperSpace> spaces;
    std::vector<std::vector<Elt>> signs;
    for (int i = 0; i <= X.max_degree; ++i) {
        std::vector<std::string> labels;
        std::vector<int> par;
        std::vector<Elt> sg;
        for (const auto& gen : X.generators[i]) {
            const Exponents& a = functor_basis(Algebra::A, g.space, gen.a_degree)->monomial(gen.a_index);
            const Exponents& gm = functor_basis(Algebra::Gamma, X.g0, gen.gamma_degree)->monomial(gen.gamma_index);
            labels.push_back(dual_label(g.space, X.g0, a, gm));
            par.push_back(monomial_parity(g.space, a));
            sg.push_back(model_sign(F, g.space, a));
        }
        spaces.emplace_back(std::move(labels), std::move(par));
        signs.push_back(std::move(sg));
    }
    std::vector<GradedMatrix> diffs;
    for (int i = 0; i < X.max_degree; ++i) {
        // (d* f)(g) = f(ε-part of d g) for generators g of X_{i+1}.
        std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>> trip;
        for (std::size_t gen = 0; gen < X.generators[i + 1].size(); ++gen)
            for (const auto& t : X.d[i + 1][gen]) {
                if (t.idx % dimV) continue;
                const std::size_t src = t.idx / dimV;
                trip.emplace_back(static_cast<std::uint32_t>(gen), static_cast<std::uint32_t>(src),
                                  F.mul(t.val, F.mul(signs[i + 1][gen], signs[i][src])));
            }
        diffs.emplace_back(spaces[i], spaces[i + 1], 0,
                           SparseMatrix::from_triples(F, spaces[i + 1].dim(), spaces[i].dim(), trip));
    }
    return CochainComplex(F, 0, std::move(spaces), std::move(diffs));
}

LieCohomology lie_cohomology(const Field& F, const RestrictedLieSuperalgebra& g, int max_degree) {
    if (max_degree < 0) throw InvalidInput("max_degree must be nonnegative");
    if (!g.even_part_abelian() && max_degree > 1)
        throw InvalidInput("cohomology of a nonabelian even part needs X(g) beyond degree 2; max_degree must be <= 1");
    LieCohomology H;
    H.X = build_X(F, g, max_degree + 1);
    H.model = hom_complex(F, H.X);
    H.dims = cohomology_dims(F, H.model);
    H.dims.resize(max_degree + 1);
    return H;
}

std::vector<std::size_t> gamma_coboundary_dims(const Field& F, const LieCohomology& H) {
    std::vector<std::size_t> out;
    for (int i = 0; i + 1 < static_cast<int>(H.model.length()); ++i) {
        const auto& gens = H.X.generators[i];
        std::vector<SparseVec> gam;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k].a_degree == 0) gam.push_back({{static_cast<std::uint32_t>(k), 1}});
        if (i == 0) {
            out.push_back(0);
            continue;
        }
        const SparseMatrix& M = H.model.d(i - 1).matrix();
        Subspace B = Subspace::column_space(F, M);
        std::vector<SparseVec> both = B.basis();
        both.insert(both.end(), gam.begin(), gam.end());
        const std::size_t sum = Subspace::span(F, gens.size(), std::move(both)).dim();
        out.push_back(B.dim() + gam.size() - sum);
    }
    return out;
}

}  // namespace shom
