#include "superhomology/schur.hpp"

#include <random>
#include <tuple>
#include <unordered_map>

#include "superhomology/errors.hpp"
#include "superhomology/rref.hpp"

namespace shom {

namespace {

using Triples = std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>>;

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Entries (row, col, value) of a matrix.
struct Entries {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>> e;
};

Entries entries_of(const SparseMatrix& M) {
    Entries out;
    for (std::size_t c = 0; c < M.cols(); ++c)
        for (const auto& t : M.col(c)) out.e.emplace_back(t.idx, static_cast<std::uint32_t>(c), t.val);
    return out;
}

SparseVec table_entry(const SchurAlgebra& S, std::size_t i, std::size_t j) { return S.table[i * S.dim() + j]; }

// Σ_k c_k b_k as a matrix.
SparseMatrix combination(const Field& F, const SchurAlgebra& S, const SparseVec& c) {
    const std::size_t N = S.basis(0).rows();
    Triples t;
    for (const auto& k : c)
        for (const auto& [r, col, v] : entries_of(S.basis(k.idx).matrix()).e) t.emplace_back(r, col, F.mul(v, k.val));
    return SparseMatrix::from_triples(F, N, N, t);
}

// Coordinates of (Σ a_i b_i)(Σ c_j b_j) through the table.
SparseVec table_product(const Field& F, const SchurAlgebra& S, const SparseVec& a, const SparseVec& c) {
    SparseAccumulator acc(F);
    for (const auto& x : a)
        for (const auto& y : c) acc.add_vec(table_entry(S, x.idx, y.idx), F.mul(x.val, y.val));
    return acc.take();
}

}  // namespace

std::vector<Elt> EquivariantMaps::coords(const GradedMatrix& X) const {
    std::vector<Elt> c(free.size());
    const std::size_t rows = X.rows();
    for (std::size_t k = 0; k < free.size(); ++k) c[k] = X.get(free[k] % rows, free[k] / rows);
    return c;
}

EquivariantMaps equivariant_maps(const Field& F, const SuperSpace& V, const SuperSpace& W, int d) {
    if (d < 1) throw InvalidInput("equivariant maps need d >= 1");
    const std::size_t NV = ipow(V.dim(), d), NW = ipow(W.dim(), d);
    check_budget("Hom(V^⊗" + std::to_string(d) + ", W^⊗" + std::to_string(d) + ")", NV * NW);
    const SuperSpace PV = tensor_power(V, d), PW = tensor_power(W, d);
    const std::size_t unknowns = NV * NW;

    // Unknown X_{r,c} sits at c * NW + r; equation (s, r, c) is (X A_V(s) - A_W(s) X)_{r,c} = 0.
    Triples t;
    for (int s = 0; s + 1 < d; ++s) {
        const Perm sw = perm_adjacent(d, s);
        const SparseMatrix AV = sym_action_on(F, V, PV, d, sw).matrix();
        const SparseMatrix AWt = sym_action_on(F, W, PW, d, sw).matrix().transpose();
        for (std::size_t c = 0; c < NV; ++c)
            for (std::size_t r = 0; r < NW; ++r) {
                const auto row = static_cast<std::uint32_t>(s * unknowns + c * NW + r);
                for (const auto& e : AV.col(c)) t.emplace_back(row, static_cast<std::uint32_t>(e.idx * NW + r), e.val);
                for (const auto& e : AWt.col(r))
                    t.emplace_back(row, static_cast<std::uint32_t>(c * NW + e.idx), F.neg(e.val));
            }
    }
    const std::size_t eqs = d > 1 ? (d - 1) * unknowns : 0;
    GaussianData g = gaussian_data(F, SparseMatrix::from_triples(F, eqs, unknowns, t));

    EquivariantMaps out;
    std::vector<bool> pivot(unknowns, false);
    for (auto c : g.pivot_columns) pivot[c] = true;
    for (std::uint32_t c = 0; c < unknowns; ++c)
        if (!pivot[c]) out.free.push_back(c);
    for (const SparseVec& k : g.kernel_basis) {
        SparseMatrix M(NW, NV);
        std::vector<SparseVec> cols(NV);
        for (const auto& e : k) cols[e.idx / NW].push_back({static_cast<std::uint32_t>(e.idx % NW), e.val});
        for (std::size_t c = 0; c < NV; ++c)
            if (!cols[c].empty()) M.set_col(c, std::move(cols[c]));
        const std::uint32_t first = k.front().idx;
        const int parity = PW.parity(first % NW) ^ PV.parity(first / NW);
        out.basis.emplace_back(PV, PW, parity, std::move(M));
    }
    return out;
}

std::uint64_t schur_dimension_formula(std::size_t m, std::size_t n, int d) {
    const std::uint64_t even = m * m + n * n, odd = 2 * m * n;
    std::uint64_t total = 0;
    for (int a = 0; a <= d; ++a) {
        const std::uint64_t b = d - a;
        const std::uint64_t left = even == 0 ? (a == 0) : binomial_exact(even + a - 1, a);
        const std::uint64_t right = b > odd ? 0 : binomial_exact(odd, b);
        total += left * right;
    }
    return total;
}

SchurAlgebra schur_algebra(const Field& F, std::size_t m, std::size_t n, int d, bool with_table) {
    SchurAlgebra S;
    S.m = m;
    S.n = n;
    S.d = d;
    S.base = SuperSpace::standard(m, n);
    S.maps = equivariant_maps(F, S.base, S.base, d);
    const std::size_t N = ipow(S.base.dim(), d), dim = S.dim();

    const auto id = S.maps.coords(GradedMatrix::identity(tensor_power(S.base, d)));
    for (std::size_t k = 0; k < dim; ++k)
        if (id[k]) S.unit.push_back({static_cast<std::uint32_t>(k), id[k]});
    if (!with_table) return S;

    // Products are read at the free positions only; closure is verified by check_schur.
    std::vector<std::int32_t> slot(N * N, -1);
    for (std::size_t k = 0; k < dim; ++k) slot[S.maps.free[k]] = static_cast<std::int32_t>(k);
    std::vector<Entries> ent;
    for (std::size_t k = 0; k < dim; ++k) ent.push_back(entries_of(S.basis(k).matrix()));
    // Entries of b_j grouped by row, so b_i's column index can look them up.
    std::vector<std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, Elt>>>> by_row(dim);
    for (std::size_t k = 0; k < dim; ++k)
        for (const auto& [r, c, v] : ent[k].e) by_row[k][r].emplace_back(c, v);
    S.table.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            SparseAccumulator acc(F);
            for (const auto& [r, mid, v] : ent[i].e) {
                auto it = by_row[j].find(mid);
                if (it == by_row[j].end()) continue;
                for (const auto& [c, w] : it->second) {
                    const std::int32_t k = slot[static_cast<std::size_t>(c) * N + r];
                    if (k >= 0) acc.add(static_cast<std::uint32_t>(k), F.mul(v, w));
                }
            }
            S.table[i * dim + j] = acc.take();
        }
    return S;
}

SchurChecks check_schur(const Field& F, const SchurAlgebra& S, std::size_t max_triples) {
    SchurChecks r;
    const std::size_t dim = S.dim();
    const SuperSpace P = tensor_power(S.base, S.d);
    for (const Perm& sigma : perm_all(S.d)) {
        const GradedMatrix A = sym_action_on(F, S.base, P, S.d, sigma);
        for (std::size_t i = 0; i < dim; ++i)
            if (!(compose(F, A, S.basis(i)) == compose(F, S.basis(i), A))) {
                r.equivariant = false;
                r.failures.push_back("basis element " + std::to_string(i) + " does not commute with a permutation");
            }
    }
    if (!(combination(F, S, S.unit) == SparseMatrix::identity(P.dim()))) {
        r.unit = false;
        r.failures.push_back("identity is not in the span of the basis");
    }
    if (S.table.empty() || dim == 0) return r;

    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    const bool all = dim * dim * dim <= max_triples;
    const std::size_t pairs = all ? dim * dim : std::min(dim * dim, max_triples / 8 + 1);
    for (std::size_t q = 0; q < pairs; ++q) {
        const std::size_t i = all ? q / dim : pick(rng), j = all ? q % dim : pick(rng);
        const SparseVec ej{{static_cast<std::uint32_t>(j), 1}};
        if (table_product(F, S, S.unit, ej) != ej || table_product(F, S, ej, S.unit) != ej) {
            r.unit = false;
            r.failures.push_back("unit law fails at " + std::to_string(j));
        }
        // Closure: the product equals the combination its coordinates describe.
        if (!(combination(F, S, table_entry(S, i, j)) == mat_mul(F, S.basis(i).matrix(), S.basis(j).matrix()))) {
            r.associative = false;
            r.failures.push_back("product " + std::to_string(i) + "·" + std::to_string(j) + " leaves the span");
        }
    }
    const std::size_t triples = all ? dim * dim * dim : max_triples;
    for (std::size_t q = 0; q < triples; ++q) {
        std::size_t i, j, k;
        if (all) {
            i = q / (dim * dim);
            j = (q / dim) % dim;
            k = q % dim;
        } else {
            i = pick(rng);
            j = pick(rng);
            k = pick(rng);
        }
        const SparseVec ek{{static_cast<std::uint32_t>(k), 1}}, ei{{static_cast<std::uint32_t>(i), 1}};
        if (table_product(F, S, table_entry(S, i, j), ek) != table_product(F, S, ei, table_entry(S, j, k))) {
            r.associative = false;
            r.failures.push_back("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
        }
        ++r.triples_checked;
    }
    return r;
}

GammaHomReport gamma_hom_iso_check(const Field& F, const SuperSpace& V, const SuperSpace& W, int d) {
    GammaHomReport r;
    const SuperSpace H = hom_space(V, W);
    auto B = functor_basis(Algebra::Gamma, H, d);
    r.gamma_dim = B->size();
    const std::size_t NV = ipow(V.dim(), d), NW = ipow(W.dim(), d);
    check_budget("Hom(V^⊗" + std::to_string(d) + ", W^⊗" + std::to_string(d) + ")", NV * NW);
    const SuperSpace PV = tensor_power(V, d), PW = tensor_power(W, d);
    std::vector<SparseMatrix> swaps_v, swaps_w;
    for (int s = 0; s + 1 < d; ++s) {
        swaps_v.push_back(sym_action_on(F, V, PV, d, perm_adjacent(d, s)).matrix());
        swaps_w.push_back(sym_action_on(F, W, PW, d, perm_adjacent(d, s)).matrix());
    }
    SparseMatrix images(NV * NW, B->size());
    for (std::size_t k = 0; k < B->size(); ++k) {
        const GradedMatrix M = morphism_matrix(F, DividedPowerMorphism(V, W, B->monomial(k)));
        for (std::size_t s = 0; s < swaps_v.size(); ++s)
            if (!(mat_mul(F, M.matrix(), swaps_v[s]) == mat_mul(F, swaps_w[s], M.matrix()))) {
                r.images_equivariant = false;
                r.failures.push_back("image of " + B->label(k) + " is not equivariant");
            }
        SparseVec flat;
        for (std::size_t c = 0; c < M.cols(); ++c)
            for (const auto& e : M.matrix().col(c)) flat.push_back({static_cast<std::uint32_t>(c * NW + e.idx), e.val});
        images.set_col(k, std::move(flat));
    }
    r.rank = rank_of(F, images);
    r.equivariant_dim = equivariant_maps(F, V, W, d).dim();
    if (r.rank != r.gamma_dim)
        r.failures.push_back("rank defect " + std::to_string(r.gamma_dim - r.rank) + ": images are dependent");
    if (r.equivariant_dim != r.gamma_dim)
        r.failures.push_back("Γ^d Hom has dimension " + std::to_string(r.gamma_dim) + " but the equivariant maps " +
                             std::to_string(r.equivariant_dim));
    return r;
}

SchurModule module_action(const Field& F, Algebra alg, const SchurAlgebra& S) {
    SchurModule M;
    M.algebra = alg;
    auto B = functor_basis(alg, S.base, S.d);
    M.space = B->space();
    const std::size_t N = ipow(S.base.dim(), S.d), nb = B->size();
    const std::size_t base = S.base.dim();

    if (!is_sub_type(alg)) {
        // Quotient: X must preserve ker π.
        SparseMatrix pi(nb, N);
        for (std::size_t w = 0; w < N; ++w) {
            auto dig = tensor_digits(w, base, S.d);
            auto [idx, c] = project_word(F, *B, Word(dig.begin(), dig.end()));
            if (idx >= 0 && c) pi.set_col(w, {{static_cast<std::uint32_t>(idx), c}});
        }
        const auto ker = gaussian_data(F, pi).kernel_basis;
        for (std::size_t i = 0; i < S.dim(); ++i)
            for (const auto& k : ker)
                if (!mat_apply(F, pi, apply(F, S.basis(i), k)).empty())
                    throw std::logic_error("Schur basis element " + std::to_string(i) + " does not descend to " +
                                           algebra_name(alg));
    } else {
        // Invariants: X must map the embedded basis into its span.
        SparseMatrix iota(N, nb);
        for (std::size_t j = 0; j < nb; ++j) {
            SparseAccumulator acc(F);
            for (const auto& [w, c] : embed_monomial(F, *B, j))
                acc.add(static_cast<std::uint32_t>(tensor_index(std::vector<std::size_t>(w.begin(), w.end()), base)), c);
            iota.set_col(j, acc.take());
        }
        LinearSolver solve(F, iota);
        for (std::size_t i = 0; i < S.dim(); ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (!solve.solve(apply(F, S.basis(i), iota.col(j))))
                    throw std::logic_error("Schur basis element " + std::to_string(i) + " does not preserve " +
                                           algebra_name(alg));
    }
    for (std::size_t i = 0; i < S.dim(); ++i)
        M.action.push_back(induced_from_tensor_map(F, alg, S.base, S.base, S.d, S.basis(i)));
    return M;
}

std::vector<std::string> check_module(const Field& F, const SchurAlgebra& S, const SchurModule& M) {
    std::vector<std::string> bad;
    const std::size_t dim = S.dim(), nb = M.space.dim();
    auto rho = [&](const SparseVec& c) {
        SparseMatrix acc(nb, nb);
        for (const auto& k : c) acc = mat_add(F, acc, M.action[k.idx].matrix(), k.val);
        return acc;
    };
    if (!(rho(S.unit) == SparseMatrix::identity(nb))) bad.push_back("unit does not act as the identity");
    if (S.table.empty()) return bad;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (!(mat_mul(F, M.action[i].matrix(), M.action[j].matrix()) == rho(table_entry(S, i, j))))
                bad.push_back("action of " + std::to_string(i) + "·" + std::to_string(j) + " disagrees with the table");
    return bad;
}

std::map<Exponents, Elt> weight_character(const Field& F, Algebra alg, std::size_t m, std::size_t n, int d) {
    const SuperSpace V = SuperSpace::standard(m, n);
    const std::size_t N = ipow(V.dim(), d);
    const SuperSpace P = tensor_power(V, d);
    std::map<Exponents, SparseVec> diag;  // content -> words
    for (std::size_t w = 0; w < N; ++w) {
        Exponents content(V.dim(), 0);
        for (auto k : tensor_digits(w, V.dim(), d)) ++content[k];
        diag[content].push_back({static_cast<std::uint32_t>(w), 1});
    }
    std::map<Exponents, Elt> out;
    for (const auto& [lambda, words] : diag) {
        SparseMatrix xi(N, N);
        for (const auto& e : words) xi.set_col(e.idx, {{e.idx, 1}});
        const GradedMatrix rho = induced_from_tensor_map(F, alg, V, V, d, GradedMatrix(P, P, 0, std::move(xi)));
        Elt tr = 0;
        for (std::size_t k = 0; k < rho.cols(); ++k) tr = F.add(tr, rho.get(k, k));
        out[lambda] = tr;
    }
    return out;
}

}  // namespace shom
