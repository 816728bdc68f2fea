#include "superhomology/liecohom.hpp"

#include <numeric>

#include "superhomology/errors.hpp"

namespace shom {

namespace {

// Elements of A(g) keyed by exponent vector.
using AElement = std::map<Exponents, Elt>;

int a_parity(const SuperSpace& g, const Exponents& a) {
    int par = 0;
    for (std::size_t k = 0; k < a.size(); ++k) par ^= (a[k] & g.parity(k));
    return par;
}

int a_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

void add_to(const Field& F, std::map<Exponents, Elt>& out, const Exponents& e, Elt c) {
    if (!c) return;
    Elt& slot = out[e];
    slot = F.add(slot, c);
    if (!slot) out.erase(e);
}

void add_to(const Field& F, WElement& out, std::size_t v, const Exponents& e, Elt c) {
    if (!c) return;
    Elt& slot = out[{v, e}];
    slot = F.add(slot, c);
    if (!slot) out.erase({v, e});
}

// Ordered product of A-monomials; coefficient 0 when it vanishes.
MonoProduct a_product(const Field& F, const SuperSpace& g, const std::vector<Exponents>& factors) {
    MonoProduct acc{1, Exponents(g.dim(), 0)};
    for (const auto& f : factors) {
        MonoProduct step = monomial_product(F, Algebra::A, g, acc.exponents, f);
        acc = {F.mul(acc.coeff, step.coeff), std::move(step.exponents)};
        if (!acc.coeff) break;
    }
    return acc;
}

Exponents unit_exps(std::size_t dim, std::uint32_t k, int e = 1) {
    Exponents x(dim, 0);
    x[k] = e;
    return x;
}

// Splits a at letter l into (letters below l, letters above l).
std::pair<Exponents, Exponents> split_at(const Exponents& a, std::size_t l) {
    Exponents pre(a.size(), 0), suf(a.size(), 0);
    for (std::size_t m = 0; m < a.size(); ++m) (m < l ? pre : suf)[m] = m == l ? 0 : a[m];
    return {pre, suf};
}

// z.a: the derivation of A(g) induced by ad z.
AElement ad_action(const Field& F, const RestrictedLieSuperalgebra& g, std::uint32_t z, const Exponents& a) {
    AElement out;
    const int pz = g.space.parity(z);
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (!a[l]) continue;
        auto [pre, suf] = split_at(a, l);
        const Elt sgn = F.sign(pz & a_parity(g.space, pre));
        const Exponents rest = unit_exps(a.size(), static_cast<std::uint32_t>(l), a[l] - 1);
        for (const auto& t : g.br(z, l)) {
            MonoProduct m = a_product(F, g.space, {pre, unit_exps(a.size(), t.idx), rest, suf});
            add_to(F, out, m.exponents, F.mul(F.mul(sgn, t.val), m.coeff));
        }
    }
    return out;
}

// w·z for a letter z of g: (v⊗a)·z = (-1)^{|a||z|}(vz ⊗ a - v ⊗ z.a).
WElement right_letter(const Field& F, const EnvelopingAlgebra& V, const WElement& w, std::uint32_t z) {
    const auto& g = V.lie();
    WElement out;
    const std::size_t zm = V.letter(z);
    for (const auto& [key, c] : w) {
        const auto& [v, a] = key;
        const Elt s = F.mul(c, F.sign(a_parity(g.space, a) & g.space.parity(z)));
        for (const auto& t : V.mul_mono(v, zm)) add_to(F, out, t.idx, a, F.mul(s, t.val));
        for (const auto& [a2, c2] : ad_action(F, g, z, a)) add_to(F, out, v, a2, F.neg(F.mul(s, c2)));
    }
    return out;
}

WElement right_a(const Field& F, const SuperSpace& g, const WElement& w, const Exponents& b, Elt scale = 1) {
    WElement out;
    for (const auto& [key, c] : w) {
        MonoProduct m = monomial_product(F, Algebra::A, g, key.second, b);
        add_to(F, out, key.first, m.exponents, F.mul(F.mul(c, scale), m.coeff));
    }
    return out;
}

void accumulate(const Field& F, WElement& out, const WElement& w, Elt scale) {
    for (const auto& [key, c] : w) add_to(F, out, key.first, key.second, F.mul(c, scale));
}

// w·t(γ_1(x)) with t(γ_1(x)) = x^{p-1}⟨x⟩ - ⟨x^{[p]}⟩.
WElement times_t(const Field& F, const EnvelopingAlgebra& V, const WElement& w, std::uint32_t x) {
    const auto& g = V.lie();
    WElement head = w;
    for (std::uint32_t k = 0; k + 1 < F.p(); ++k) head = right_letter(F, V, head, x);
    WElement out = right_a(F, g.space, head, unit_exps(g.dim(), x));
    for (const auto& t : g.pmap[x]) accumulate(F, out, right_a(F, g.space, w, unit_exps(g.dim(), t.idx)), F.neg(t.val));
    return out;
}

}  // namespace

WElement w_boundary(const Field& F, const EnvelopingAlgebra& V, const Exponents& a) {
    const auto& g = V.lie();
    const std::size_t n = g.dim();
    WElement out;
    for (std::size_t l = 0; l < n; ++l) {
        if (!a[l]) continue;
        auto [pre, suf] = split_at(a, l);
        const Elt sgn = F.sign(a_degree(pre) % 2 != 0);
        const WElement prefix{{{0, pre}, 1}};
        const auto letter = static_cast<std::uint32_t>(l);
        // ∂⟨x⟩ = x; ∂γ_e(y) = y·γ_{e-1}(y) - ½⟨[y,y]⟩·γ_{e-2}(y).
        WElement lead = right_letter(F, V, prefix, letter);
        lead = right_a(F, g.space, lead, unit_exps(n, letter, a[l] - 1));
        accumulate(F, out, right_a(F, g.space, lead, suf), sgn);
        if (g.space.parity(l) == 1 && a[l] >= 2) {
            const Elt half = F.inv(2);
            for (const auto& t : g.br(l, l)) {
                WElement c = right_a(F, g.space, prefix, unit_exps(n, t.idx), F.mul(half, t.val));
                c = right_a(F, g.space, c, unit_exps(n, letter, a[l] - 2));
                accumulate(F, out, right_a(F, g.space, c, suf), F.neg(sgn));
            }
        }
    }
    return out;
}

namespace {

// Generator numbering of X_0..X_top: offsets per (degree, gamma degree).
struct Numbering {
    const SuperSpace* g;
    const SuperSpace* g0;
    std::vector<std::vector<std::size_t>> offset;  // [i][e]

    std::size_t index(int i, int e, const Exponents& a, const Exponents& gamma) const {
        auto A = functor_basis(Algebra::A, *g, i - 2 * e);
        auto G = functor_basis(Algebra::Gamma, *g0, e);
        const long ai = A->index_of(a), gi = G->index_of(gamma);
        if (ai < 0 || gi < 0) throw std::logic_error("X(g) term outside the generator basis");
        return offset[i][e] + static_cast<std::size_t>(ai) * G->size() + static_cast<std::size_t>(gi);
    }
};

SparseVec d_on_generator(const Field& F, const XgComplex& X, const Numbering& num, int i, const XGenerator& gen) {
    const EnvelopingAlgebra& V = *X.V;
    const auto& g = V.lie();
    const std::size_t dimV = V.dim();
    const int j = gen.a_degree, e = gen.gamma_degree;
    const Exponents& a = functor_basis(Algebra::A, g.space, j)->monomial(gen.a_index);
    const Exponents& gamma = functor_basis(Algebra::Gamma, X.g0, e)->monomial(gen.gamma_index);
    SparseAccumulator acc(F);
    if (j > 0)
        for (const auto& [key, c] : w_boundary(F, V, a))
            acc.add(static_cast<std::uint32_t>(num.index(i - 1, e, key.second, gamma) * dimV + key.first), c);
    const Elt sgn = F.sign(j % 2 != 0);
    for (std::size_t r = 0; r < X.g0.dim(); ++r) {
        if (!gamma[r]) continue;
        const Exponents eps = unit_exps(X.g0.dim(), static_cast<std::uint32_t>(r));
        const Elt cc = coproduct_coefficient(F, Algebra::Gamma, X.g0, gamma, eps);
        if (!cc) continue;
        Exponents rest = gamma;
        --rest[r];
        for (const auto& [key, c] : times_t(F, V, WElement{{{0, a}, 1}}, X.g0_to_g[r]))
            acc.add(static_cast<std::uint32_t>(num.index(i - 1, e - 1, key.second, rest) * dimV + key.first),
                    F.mul(F.mul(sgn, cc), c));
    }
    return acc.take();
}

}  // namespace

std::string XgComplex::generator_label(int i, std::size_t gen) const {
    const XGenerator& x = generators.at(i).at(gen);
    const auto& g = V->lie();
    std::string s = x.a_degree ? functor_basis(Algebra::A, g.space, x.a_degree)->label(x.a_index) : "1";
    if (x.gamma_degree) s += " | " + functor_basis(Algebra::Gamma, g0, x.gamma_degree)->label(x.gamma_index);
    return s;
}

SparseVec XgComplex::apply_d(int i, const SparseVec& x) const {
    if (i < 1 || i > max_degree) throw InvalidInput("d_i outside the built range of X(g)");
    const std::size_t dimV = V->dim();
    SparseAccumulator acc(V->field());
    for (const auto& t : x) {
        const std::size_t gen = t.idx / dimV, v = t.idx % dimV;
        for (const auto& s : d[i].at(gen)) {
            const std::size_t gen2 = s.idx / dimV, v2 = s.idx % dimV;
            for (const auto& u : V->mul_mono(v, v2))
                acc.add(static_cast<std::uint32_t>(gen2 * dimV + u.idx), V->field().mul(t.val, V->field().mul(s.val, u.val)));
        }
    }
    return acc.take();
}

XgComplex build_X(const Field& F, const RestrictedLieSuperalgebra& g, int max_degree) {
    if (max_degree < 0) throw InvalidInput("max_degree must be nonnegative");
    if (LieReport r = validate_lie(F, g); !r.ok())
        throw InvalidInput("not a restricted Lie superalgebra: " + r.violations.front());
    if (!g.even_part_abelian() && max_degree > 2)
        throw InvalidInput("X(g) for a nonabelian even part is only available through degree 2 (asked for " +
                           std::to_string(max_degree) + "): t is known only on Γ^1");
    XgComplex X;
    X.V = std::make_shared<const EnvelopingAlgebra>(F, g);
    X.max_degree = max_degree;
    std::vector<std::string> labels;
    for (auto k : g.even_indices()) {
        labels.push_back(g.space.label(k));
        X.g0_to_g.push_back(static_cast<std::uint32_t>(k));
    }
    X.g0 = SuperSpace(labels, std::vector<int>(labels.size(), 0));

    Numbering num{&g.space, &X.g0, {}};
    for (int i = 0; i <= max_degree; ++i) {
        num.offset.emplace_back();
        std::vector<XGenerator> gens;
        for (int e = 0; 2 * e <= i; ++e) {
            num.offset[i].push_back(gens.size());
            auto A = functor_basis(Algebra::A, g.space, i - 2 * e);
            auto G = functor_basis(Algebra::Gamma, X.g0, e);
            check_budget("X_" + std::to_string(i) + "(g)", gens.size() + A->size() * G->size());
            for (std::size_t a = 0; a < A->size(); ++a)
                for (std::size_t c = 0; c < G->size(); ++c) gens.push_back({i - 2 * e, a, e, c});
        }
        X.generators.push_back(std::move(gens));
    }
    X.d.assign(max_degree + 1, {});
    for (int i = 1; i <= max_degree; ++i)
        for (const auto& gen : X.generators[i]) X.d[i].push_back(d_on_generator(F, X, num, i, gen));
    for (auto k : g.even_indices()) X.t_table.push_back(times_t(F, *X.V, WElement{{{0, Exponents(g.dim(), 0)}, 1}},
                                                                static_cast<std::uint32_t>(k)));
    for (int i = 2; i <= max_degree; ++i)
        for (std::size_t gen = 0; gen < X.generators[i].size(); ++gen)
            if (!X.apply_d(i - 1, X.d[i][gen]).empty())
                throw ComplexError(i, "d_" + std::to_string(i - 1) + "∘d_" + std::to_string(i) +
                                          " is nonzero on generator " + X.generator_label(i, gen));
    return X;
}

XChecks check_X(const Field& F, const XgComplex& X) {
    XChecks r;
    const std::size_t dimV = X.V->dim();
    for (int i = 2; i <= X.max_degree; ++i)
        for (std::size_t gen = 0; gen < X.generators[i].size(); ++gen)
            if (!X.apply_d(i - 1, X.d[i][gen]).empty()) {
                r.d_squared_zero = false;
                r.failures.push_back("d∘d nonzero on " + X.generator_label(i, gen));
            }
    if (X.max_degree >= 1)
        for (std::size_t gen = 0; gen < X.generators[1].size(); ++gen)
            for (const auto& t : X.d[1][gen])
                if (t.idx % dimV == 0) {
                    r.augmentation = false;
                    r.failures.push_back("ε∘d_1 nonzero on " + X.generator_label(1, gen));
                }
    for (std::size_t r0 = 0; r0 < X.t_table.size(); ++r0) {
        WElement bd;
        for (const auto& [key, c] : X.t_table[r0]) {
            if (a_degree(key.second) == 0) r.t_cycles = false;
            for (const auto& [k2, c2] : w_boundary(F, *X.V, key.second))
                for (const auto& u : X.V->mul_mono(key.first, k2.first))
                    add_to(F, bd, u.idx, k2.second, F.mul(c, F.mul(c2, u.val)));
        }
        if (!bd.empty()) {
            r.t_cycles = false;
            r.failures.push_back("∂t(γ_1(" + X.g0.label(r0) + ")) is nonzero");
        }
    }
    return r;
}

}  // namespace shom
