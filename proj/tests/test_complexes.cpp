#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superhomology/complexes.hpp"
#include "superhomology/errors.hpp"
#include "support.hpp"

using namespace shom;
using namespace testsupport;

namespace {

std::size_t sum(const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (auto x : v) s += x;
    return s;
}

// Index of s⊗a in the total space of Ω_n(V), given both exponent vectors.
std::size_t total_index(const SuperSpace& V, int n, const Exponents& s, const Exponents& a) {
    int t = 0;
    for (int x : a) t += x;
    OmegaTotal T = omega_total(V, n);
    auto A = functor_basis(Algebra::A, V, t);
    return T.offsets[t] + functor_basis(Algebra::S, V, n - t)->index_of(s) * A->size() + A->index_of(a);
}

SparseVec unit(std::size_t i, Elt c = 1) { return {{static_cast<std::uint32_t>(i), c}}; }

Subspace coboundaries(const Field& F, const SuperSpace& V, int n) {
    DeRhamComplexes C = build_de_rham(F, V, n);
    OmegaTotal T = omega_total(V, n);
    std::vector<SparseVec> vs;
    for (int i = 0; i < n; ++i)
        for (std::size_t c = 0; c < C.d(i).cols(); ++c) {
            SparseVec col = C.d(i).matrix().col(c);
            for (auto& e : col) e.idx += static_cast<std::uint32_t>(T.offsets[i + 1]);
            if (!col.empty()) vs.push_back(col);
        }
    return Subspace::span(F, T.dim(), vs);
}

std::vector<int> morphism_exps(std::size_t dw, std::size_t dv, std::vector<std::tuple<int, int, int>> entries) {
    std::vector<int> e(dw * dv, 0);
    for (auto [i, j, a] : entries) e[i * dv + j] = a;
    return e;
}

}  // namespace

TEST_CASE("de Rham differential on one-dimensional spaces") {
    Field F(7);
    SuperSpace even = SuperSpace::standard(1, 0), odd = SuperSpace::standard(0, 1);
    for (int n = 1; n <= 9; ++n) {
        DeRhamComplexes C = build_de_rham(F, even, n);
        REQUIRE(C.spaces[0].dim() == 1);
        REQUIRE(C.spaces[1].dim() == 1);
        for (int i = 2; i <= n; ++i) CHECK(C.spaces[i].dim() == 0);
        CHECK(C.d(0).get(0, 0) == F.from_int(n));  // d(v^n⊗1) = n v^{n-1}⊗v
        CHECK(C.kappa(1).get(0, 0) == 1);           // κ(v^{n-1}⊗v) = v^n⊗1

        DeRhamComplexes D = build_de_rham(F, odd, n);
        for (int i = 0; i + 1 < n; ++i) CHECK(D.spaces[i].dim() == 0);
        REQUIRE(D.spaces[n - 1].dim() == 1);
        REQUIRE(D.spaces[n].dim() == 1);
        CHECK(D.d(n - 1).get(0, 0) == F.from_int(n));  // d(v⊗γ_{n-1}(v)) = n·1⊗γ_n(v)
    }
}

TEST_CASE("d and κ square to zero; homotopy formula") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        for (auto [m, k] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            SuperSpace V = SuperSpace::standard(m, k);
            const int top = (m + k >= 4 && p == 5) ? 6 : static_cast<int>(2 * p);
            for (int n = 0; n <= top; ++n) {
                INFO("p=" << p << " m=" << m << " k=" << k << " n=" << n);
                DeRhamComplexes C = build_de_rham(F, V, n);  // throws if d² or κ² fails
                HomotopyReport h = verify_homotopy(F, C);
                CHECK_MESSAGE(h.ok, h.message);
            }
        }
    }
}

TEST_CASE("homotopy examples at p = 3") {
    Field F(3);
    SuperSpace V11 = SuperSpace::standard(1, 1), V21 = SuperSpace::standard(2, 1);
    DeRhamComplexes c3 = build_de_rham(F, V11, 3);
    for (int i = 0; i <= 3; ++i) {
        const std::size_t dim = c3.spaces[i].dim();
        SparseMatrix s(dim, dim);
        if (i < 3) s = mat_add(F, s, mat_mul(F, c3.kappa(i + 1).matrix(), c3.d(i).matrix()));
        if (i > 0) s = mat_add(F, s, mat_mul(F, c3.d(i - 1).matrix(), c3.kappa(i).matrix()));
        CHECK(s.is_zero());
    }
    CHECK(verify_homotopy(F, build_de_rham(F, V11, 4)).ok);
    CHECK(verify_homotopy(F, build_de_rham(F, V21, 2)).ok);
}

TEST_CASE("Koszul complex is exact in positive degree") {
    Field F(3);
    for (auto [m, k] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}) {
        SuperSpace V = SuperSpace::standard(m, k);
        for (int n = 1; n <= 6; ++n) {
            INFO("m=" << m << " k=" << k << " n=" << n);
            for (auto d : cohomology_dims(F, build_de_rham(F, V, n).koszul)) CHECK(d == 0);
        }
    }
}

TEST_CASE("de Rham cohomology vanishes off multiples of p") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
            SuperSpace V = SuperSpace::standard(m, k);
            for (int n = 1; n <= 7; ++n) {
                if (n % static_cast<int>(p) == 0) continue;
                INFO("p=" << p << " m=" << m << " k=" << k << " n=" << n);
                CHECK(sum(cohomology_dims(F, build_de_rham(F, V, n).de_rham)) == 0);
            }
        }
    }
}

TEST_CASE("Koszul kernel subcomplex") {
    Field F(3);
    SuperSpace V = SuperSpace::standard(1, 1);
    DeRhamComplexes C = build_de_rham(F, V, 3);
    KoszulKernel K = koszul_kernel_complex(F, C);
    std::vector<std::size_t> dims;
    for (int i = 0; i <= 3; ++i) dims.push_back(K.complex.space(i).dim());
    CHECK(dims == std::vector<std::size_t>{2, 2, 2, 0});
    CHECK(dims[0] == C.spaces[0].dim());
    CHECK(cohomology_dims(F, K.complex) == std::vector<std::size_t>{1, 0, 1, 0});

    // Telescoping: dim K^i = dim Ω^i - dim K^{i-1} by exactness of κ.
    SuperSpace W = SuperSpace::standard(2, 1);
    DeRhamComplexes CW = build_de_rham(F, W, 4);
    auto KW = koszul_kernel_basis(F, CW);
    std::size_t prev = 0;
    for (int i = 0; i <= 4; ++i) {
        CHECK(KW[i].size() + prev == CW.spaces[i].dim());
        prev = KW[i].size();
    }
    CHECK_THROWS_AS(koszul_kernel_complex(F, CW), InvalidInput);
}

TEST_CASE("Cartier map on generators") {
    Field F(3);
    SuperSpace x = SuperSpace::standard(1, 0), y = SuperSpace::standard(0, 1);
    GradedMatrix tx = cartier_map(F, x, 1);
    CHECK(tx.matrix().col(0) == unit(total_index(x, 3, {3}, {0})));     // x'⊗1 -> x^3⊗1
    CHECK(tx.matrix().col(1) == unit(total_index(x, 3, {2}, {1})));     // 1⊗x' -> x^2⊗x
    GradedMatrix ty = cartier_map(F, y, 1);
    CHECK(ty.matrix().col(0) == unit(total_index(y, 3, {1}, {2})));     // y'⊗1 -> y⊗γ_2(y)
    CHECK(ty.matrix().col(1) == unit(total_index(y, 3, {0}, {3})));     // 1⊗y' -> 1⊗γ_3(y)
    for (int n = 1; n <= 5; ++n) {
        GradedMatrix t = cartier_map(F, y, n);
        CHECK(t.matrix().col(t.cols() - 1) == unit(total_index(y, 3 * n, {0}, {3 * n})));
    }
}

TEST_CASE("Cartier isomorphism examples") {
    Field F(3);
    CartierReport a = verify_cartier(F, SuperSpace::standard(1, 1), 1);
    CHECK(a.ok());
    CHECK(a.h_dims == std::vector<std::size_t>{1, 1, 1, 1});
    CartierReport b = verify_cartier(F, SuperSpace::standard(1, 0), 1);
    CHECK(b.ok());
    CHECK(b.h_dims == std::vector<std::size_t>{1, 1, 0, 0});
    CartierReport c = verify_cartier(F, SuperSpace::standard(0, 1), 1);
    CHECK(c.ok());
    CHECK(c.h_dims == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("Cartier isomorphism over a range") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        for (auto [m, k] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            for (int n = 1; n <= 2; ++n) {
                if (p == 5 && n == 2 && m + k > 2) continue;
                INFO("p=" << p << " m=" << m << " k=" << k << " n=" << n);
                CartierReport r = verify_cartier(F, SuperSpace::standard(m, k), n);
                for (const auto& f : r.failures) MESSAGE(f);
                CHECK(r.ok());
                CHECK(sum(r.h_dims) == r.source_dim);
            }
        }
    }
}

TEST_CASE("Kunneth consistency for direct sums") {
    Field F(3);
    auto hdims = [&](const SuperSpace& V, int n) { return cohomology_dims(F, build_de_rham(F, V, n).de_rham); };
    for (auto [V, W] : {std::pair{SuperSpace::standard(1, 0), SuperSpace::standard(0, 1)},
                        {SuperSpace::standard(1, 1), SuperSpace::standard(1, 0)}}) {
        for (int n = 1; n <= 2; ++n) {
            std::vector<std::size_t> expect(3 * n + 1, 0);
            for (int n1 = 0; n1 <= n; ++n1) {
                auto a = hdims(V, 3 * n1), b = hdims(W, 3 * (n - n1));
                for (std::size_t t1 = 0; t1 < a.size(); ++t1)
                    for (std::size_t t2 = 0; t2 < b.size(); ++t2) expect[t1 + t2] += a[t1] * b[t2];
            }
            CHECK(hdims(direct_sum(V, W), 3 * n) == expect);
        }
    }
}

TEST_CASE("Koszul kernel cohomology injects into de Rham cohomology") {
    Field F(3);
    for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        SuperSpace V = SuperSpace::standard(m, k);
        for (int n = 1; n <= 2; ++n) {
            INFO("m=" << m << " k=" << k << " n=" << n);
            DeRhamComplexes C = build_de_rham(F, V, 3 * n);
            KoszulKernel K = koszul_kernel_complex(F, C);
            auto hk = cohomology(F, K.complex);
            for (int t = 0; t <= 3 * n; ++t) {
                Subspace B = t > 0 ? Subspace::column_space(F, C.d(t - 1).matrix()) : Subspace(F, C.spaces[t].dim());
                std::vector<SparseVec> vs = B.basis();
                for (const auto& rep : hk[t].representatives) {
                    SparseAccumulator acc(F);
                    for (const auto& e : rep) acc.add_vec(K.basis[t][e.idx], e.val);
                    vs.push_back(acc.take());
                }
                CHECK(Subspace::span(F, C.spaces[t].dim(), vs).dim() - B.dim() == hk[t].dim);
            }
        }
    }
}

TEST_CASE("Cartier naturality examples") {
    Field F(3);
    SuperSpace x = SuperSpace::standard(1, 0), x2 = SuperSpace::standard(2, 0);

    NaturalityReport a = cartier_naturality(F, DividedPowerMorphism(x, x, {3}));
    CHECK(a.ok);
    CHECK(a.checked == 2);

    // γ_3 of the unit sending x2 to x1: x2'⊗1 goes to the class of x1^3⊗1 on both sides.
    DividedPowerMorphism phi(x2, x2, morphism_exps(2, 2, {{0, 1, 3}}));
    NaturalityReport b = cartier_naturality(F, phi);
    CHECK(b.ok);
    Subspace B = coboundaries(F, x2, 3);
    GradedMatrix right = compose(F, omega_induced(F, {{phi, 1}}, x2, x2, 3), cartier_map(F, x2, 1));
    const std::size_t z = total_index(twist(x2, 1), 1, {0, 1}, {0, 0});
    CHECK(B.reduce(right.matrix().col(z)) == B.reduce(unit(total_index(x2, 3, {3, 0}, {0, 0}))));
    CHECK(B.reduce(right.matrix().col(total_index(twist(x2, 1), 1, {1, 0}, {0, 0}))).empty());

    // Exponents not divisible by p: the twisted side vanishes and the other side is a coboundary.
    DividedPowerMorphism psi(x2, x2, morphism_exps(2, 2, {{0, 0, 1}, {1, 0, 2}}));
    CHECK(cartier_naturality(F, psi).ok);
    GradedMatrix r2 = compose(F, omega_induced(F, {{psi, 1}}, x2, x2, 3), cartier_map(F, x2, 1));
    for (std::size_t c = 0; c < r2.cols(); ++c) CHECK(B.contains(r2.matrix().col(c)));
}

TEST_CASE("Cartier naturality for random morphisms") {
    for (std::uint32_t p : {3u}) {
        Field F(p);
        for (auto [V, W] : {std::pair{SuperSpace::standard(1, 1), SuperSpace::standard(1, 1)},
                            {SuperSpace::standard(2, 1), SuperSpace::standard(1, 1)},
                            {SuperSpace::standard(1, 1), SuperSpace::standard(0, 2)}}) {
            const std::size_t cells = V.dim() * W.dim();
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<int> e(cells, 0);
                int left = static_cast<int>(p);
                while (left > 0) {
                    const std::size_t c = static_cast<std::size_t>(rand_int(0, static_cast<int>(cells) - 1));
                    const bool odd = (W.parity(c / V.dim()) ^ V.parity(c % V.dim())) != 0;
                    if (odd && e[c] == 1) continue;
                    ++e[c];
                    --left;
                }
                DividedPowerMorphism phi(V, W, e);
                NaturalityReport r = cartier_naturality(F, phi);
                for (const auto& f : r.failures) MESSAGE(f);
                CHECK(r.ok);
            }
        }
    }
}

TEST_CASE("size budget is enforced") {
    Field F(3);
    const std::size_t old = budget();
    set_budget(10);
    CHECK_THROWS_AS(build_de_rham(F, SuperSpace::standard(2, 2), 4), BudgetError);
    set_budget(old);
}

TEST_CASE("kernel_injection reports full rank") {
    Field F(3);
    for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 0}, {0, 1}}) {
        INFO("m=" << m << " k=" << k);
        DeRhamComplexes C = build_de_rham(F, SuperSpace::standard(m, k), 3);
        KernelInjectionReport r = kernel_injection(F, C, koszul_kernel_complex(F, C));
        CHECK(r.injective());
        CHECK(r.kernel_h_dims.size() == 4);
    }
    DeRhamComplexes C = build_de_rham(F, SuperSpace::standard(1, 1), 3);
    CHECK(kernel_injection(F, C, koszul_kernel_complex(F, C)).kernel_h_dims == std::vector<std::size_t>{1, 0, 1, 0});
}
