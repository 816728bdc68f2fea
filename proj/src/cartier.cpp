#include <map>
#include <stdexcept>

#include "superhomology/complexes.hpp"
#include "superhomology/errors.hpp"

namespace shom {

namespace {

// Element of Ω(V) = S(V) ⊗ A(V) as a map from (S exponents, A exponents) to coefficients.
using OmegaElement = std::map<std::pair<Exponents, Exponents>, Elt>;

// (s⊗a)(s'⊗a') = (-1)^{|a||s'|} ss' ⊗ aa'.
OmegaElement omega_mul(const Field& F, const SuperSpace& V, const OmegaElement& x, const OmegaElement& y) {
    OmegaElement out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) {
            MonoProduct s = monomial_product(F, Algebra::S, V, k1.first, k2.first);
            if (!s.coeff) continue;
            MonoProduct a = monomial_product(F, Algebra::A, V, k1.second, k2.second);
            if (!a.coeff) continue;
            const bool neg = (monomial_parity(V, k1.second) & monomial_parity(V, k2.first)) != 0;
            Elt c = F.mul(F.mul(c1, c2), F.mul(s.coeff, a.coeff));
            c = F.mul(c, F.sign(neg));
            Elt& slot = out[{s.exponents, a.exponents}];
            slot = F.add(slot, c);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

OmegaElement omega_one(std::size_t dim) { return {{{Exponents(dim, 0), Exponents(dim, 0)}, 1}}; }

OmegaElement omega_power(const Field& F, const SuperSpace& V, const OmegaElement& x, int e) {
    OmegaElement r = omega_one(V.dim());
    for (int k = 0; k < e; ++k) r = omega_mul(F, V, r, x);
    return r;
}

OmegaElement omega_mono(std::size_t dim, std::size_t letter, int s, int a) {
    Exponents es(dim, 0), ea(dim, 0);
    es[letter] = s;
    ea[letter] = a;
    return {{{es, ea}, 1}};
}

// Images of the generators x'⊗1, y'⊗1 and 1⊗x', 1⊗γ_{p^e}(y').
OmegaElement theta_s_generator(const Field& F, const SuperSpace& V, std::size_t l) {
    const int p = static_cast<int>(F.p());
    return V.parity(l) == 0 ? omega_mono(V.dim(), l, p, 0) : omega_mono(V.dim(), l, 1, p - 1);
}

// θ(1⊗γ_e(x')). For odd letters γ_e is rebuilt from γ_{p^k} via the base-p digits of e:
// γ_e = Π_k γ_{p^k}^{d_k} / d_k!.
OmegaElement theta_a_letter(const Field& F, const SuperSpace& V, std::size_t l, int e) {
    const int p = static_cast<int>(F.p());
    if (V.parity(l) == 0) return e == 0 ? omega_one(V.dim()) : omega_mono(V.dim(), l, p - 1, 1);
    OmegaElement r = omega_one(V.dim());
    long long pk = 1;
    for (int rest = e; rest > 0; rest /= p, pk *= p) {
        const int digit = rest % p;
        if (!digit) continue;
        OmegaElement g = omega_mono(V.dim(), l, 0, static_cast<int>(pk * p));
        OmegaElement gp = omega_power(F, V, g, digit);
        for (auto& kv : gp) kv.second = F.mul(kv.second, F.inv_factorial(digit));
        r = omega_mul(F, V, r, gp);
    }
    return r;
}

void place(const SuperSpace& V, int total, const OmegaTotal& T, const OmegaElement& x, SparseAccumulator& acc) {
    for (const auto& [k, c] : x) {
        int t = 0;
        for (int a : k.second) t += a;
        auto S = functor_basis(Algebra::S, V, total - t);
        auto A = functor_basis(Algebra::A, V, t);
        const long si = S->index_of(k.first), ai = A->index_of(k.second);
        if (si < 0 || ai < 0) throw std::logic_error("Cartier image outside the monomial basis");
        acc.add(static_cast<std::uint32_t>(T.offsets[t] + si * A->size() + ai), c);
    }
}

}  // namespace

GradedMatrix cartier_map(const Field& F, const SuperSpace& V, int n) {
    if (n < 0) throw InvalidInput("negative total degree");
    const int p = static_cast<int>(F.p());
    const SuperSpace V1 = twist(V, 1);
    OmegaTotal src = omega_total(V1, n), tgt = omega_total(V, p * n);
    SparseMatrix m(tgt.dim(), src.dim());
    for (int i = 0; i <= n; ++i) {
        auto S = functor_basis(Algebra::S, V1, n - i);
        auto A = functor_basis(Algebra::A, V1, i);
        for (std::size_t si = 0; si < S->size(); ++si)
            for (std::size_t ai = 0; ai < A->size(); ++ai) {
                OmegaElement img = omega_one(V.dim());
                const Exponents& es = S->monomial(si);
                const Exponents& ea = A->monomial(ai);
                for (std::size_t l = 0; l < V.dim(); ++l)
                    img = omega_mul(F, V, img, omega_power(F, V, theta_s_generator(F, V, l), es[l]));
                for (std::size_t l = 0; l < V.dim(); ++l)
                    img = omega_mul(F, V, img, theta_a_letter(F, V, l, ea[l]));
                SparseAccumulator acc(F);
                place(V, p * n, tgt, img, acc);
                m.set_col(src.offsets[i] + si * A->size() + ai, acc.take());
            }
    }
    return GradedMatrix(src.space, tgt.space, 0, std::move(m));
}

GradedMatrix omega_induced(const Field& F, const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms,
                           const SuperSpace& V, const SuperSpace& W, int n) {
    OmegaTotal src = omega_total(V, n), tgt = omega_total(W, n);
    SparseMatrix m(tgt.dim(), src.dim());
    int parity = 0;
    for (int i = 0; i <= n; ++i) {
        GradedMatrix b = induced_pair_combination(F, Algebra::S, Algebra::A, V, W, n - i, i, terms);
        parity = b.parity();
        for (std::size_t c = 0; c < b.cols(); ++c) {
            SparseVec col = b.matrix().col(c);
            for (auto& e : col) e.idx += static_cast<std::uint32_t>(tgt.offsets[i]);
            m.set_col(src.offsets[i] + c, std::move(col));
        }
    }
    return GradedMatrix(src.space, tgt.space, parity, std::move(m));
}

}  // namespace shom
