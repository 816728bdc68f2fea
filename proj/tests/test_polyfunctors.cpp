#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superhomology/errors.hpp"
#include "superhomology/functors.hpp"
#include "support.hpp"

using namespace shom;
using namespace testsupport;

namespace {

const Algebra kAll[] = {Algebra::S, Algebra::Lambda, Algebra::Gamma, Algebra::A};

FunctorElement random_element(const Field& F, Algebra alg, const SuperSpace& V, int n, double density = 0.6) {
    auto B = functor_basis(alg, V, n);
    return FunctorElement{B, random_vec(F, B->size(), density)};
}

FunctorElement mono(Algebra alg, const SuperSpace& V, const Exponents& e, Elt c = 1) {
    int n = 0;
    for (int x : e) n += x;
    return monomial_element(functor_basis(alg, V, n), e, c);
}

std::vector<std::string> labels(const BasisPtr& b) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < b->size(); ++i) out.push_back(b->label(i));
    return out;
}

// Multisets of size a from m letters.
std::uint64_t multiset(std::uint64_t m, std::uint64_t a) { return m == 0 ? (a == 0) : binomial_exact(m + a - 1, a); }

// Independent count from the exponent constraints.
std::uint64_t expected_dim(Algebra alg, std::uint64_t m, std::uint64_t n_odd, std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t a = 0; a <= n; ++a) {
        std::uint64_t b = n - a;
        total += bounds_odd(alg) ? multiset(m, a) * binomial_exact(n_odd, b) : binomial_exact(m, a) * multiset(n_odd, b);
    }
    return total;
}

// d matrix units chosen at random; odd units are used at most once.
DividedPowerMorphism random_morphism(const SuperSpace& V, const SuperSpace& W, int d, bool allow_odd) {
    std::vector<int> ex(V.dim() * W.dim(), 0);
    int placed = 0;
    for (int tries = 0; placed < d && tries < 1000; ++tries) {
        std::size_t k = rand_int(0, static_cast<int>(ex.size()) - 1);
        bool odd = W.parity(k / V.dim()) ^ V.parity(k % V.dim());
        if (odd && (!allow_odd || ex[k])) continue;
        ++ex[k];
        ++placed;
    }
    REQUIRE(placed == d);
    return DividedPowerMorphism(V, W, ex);
}

bool equal(const FunctorElement& a, const FunctorElement& b) {
    return a.basis->degree() == b.basis->degree() && a.basis->algebra() == b.basis->algebra() && a.coeffs == b.coeffs;
}

}  // namespace

TEST_CASE("functor bases in the documented order") {
    auto V = SuperSpace::standard(1, 1);
    CHECK(labels(functor_basis(Algebra::S, V, 3)) == std::vector<std::string>{"x^3", "x^2·y"});
    CHECK(labels(functor_basis(Algebra::Lambda, V, 2)) == std::vector<std::string>{"x·y", "y^2"});
    CHECK(labels(functor_basis(Algebra::A, V, 2)) == std::vector<std::string>{"x·γ1(y)", "γ2(y)"});
    CHECK(labels(functor_basis(Algebra::Gamma, V, 2)) == std::vector<std::string>{"γ2(x)", "γ1(x)·γ1(y)"});
}

TEST_CASE("functor dimensions match the closed counts") {
    for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 3; ++k) {
            if (m + k == 0) continue;
            auto V = SuperSpace::standard(m, k);
            for (int n = 0; n <= 6; ++n)
                for (Algebra alg : kAll)
                    CHECK_MESSAGE(functor_basis(alg, V, n)->size() == expected_dim(alg, m, k, n),
                                  algebra_name(alg) << " m=" << m << " n=" << k << " deg=" << n);
        }
}

TEST_CASE("product examples") {
    Field F(5);
    auto X = SuperSpace::standard(1, 0), Y = SuperSpace::standard(0, 1);
    auto g = multiply(F, mono(Algebra::Gamma, X, {1}), mono(Algebra::Gamma, X, {2}));
    CHECK(equal(g, mono(Algebra::Gamma, X, {3}, 3)));
    CHECK(multiply(F, mono(Algebra::S, Y, {1}), mono(Algebra::S, Y, {1})).is_zero());
    auto a = multiply(F, mono(Algebra::A, Y, {1}), mono(Algebra::A, Y, {1}));
    CHECK(equal(a, mono(Algebra::A, Y, {2}, 2)));
    // Odd letters anticommute in S; even letters anticommute in Λ.
    auto V = SuperSpace::standard(1, 2);
    auto yx = multiply(F, mono(Algebra::S, V, {0, 0, 1}), mono(Algebra::S, V, {0, 1, 0}));
    CHECK(equal(yx, mono(Algebra::S, V, {0, 1, 1}, F.neg(1))));
    auto V2 = SuperSpace::standard(2, 0);
    auto lx = multiply(F, mono(Algebra::Lambda, V2, {0, 1}), mono(Algebra::Lambda, V2, {1, 0}));
    CHECK(equal(lx, mono(Algebra::Lambda, V2, {1, 1}, F.neg(1))));
}

TEST_CASE("structure constants agree with the tensor-level products") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {0, 2}, {2, 0}})
            for (Algebra alg : kAll)
                for (int i = 0; i <= 3; ++i)
                    for (int j = 0; j <= 3; ++j) {
                        auto V = SuperSpace::standard(m, k);
                        auto a = random_element(F, alg, V, i), b = random_element(F, alg, V, j);
                        auto fast = multiply(F, a, b);
                        CHECK_MESSAGE(equal(fast, multiply_tensor(F, a, b)),
                                      algebra_name(alg) << " (" << m << "|" << k << ") " << i << "+" << j);
                        // A different set of coset representatives gives the same product.
                        CHECK(equal(fast, multiply_tensor_twisted(F, a, b)));
                    }
    }
}

TEST_CASE("products are associative and (graded) supercommutative") {
    Field F(7);
    for (int t = 0; t < 40; ++t) {
        Algebra alg = kAll[rand_int(0, 3)];
        auto V = SuperSpace::standard(rand_int(0, 2), rand_int(1, 2));
        int i = rand_int(0, 3), j = rand_int(0, 3), l = rand_int(0, 2);
        auto a = random_element(F, alg, V, i), b = random_element(F, alg, V, j), c = random_element(F, alg, V, l);
        CHECK(equal(multiply(F, multiply(F, a, b), c), multiply(F, a, multiply(F, b, c))));
        // Homogeneous monomials: ab = ± ba.
        auto B1 = functor_basis(alg, V, i), B2 = functor_basis(alg, V, j);
        if (!B1->size() || !B2->size()) continue;
        std::size_t u = rand_int(0, static_cast<int>(B1->size()) - 1), w = rand_int(0, static_cast<int>(B2->size()) - 1);
        auto x = FunctorElement{B1, {{static_cast<std::uint32_t>(u), 1}}};
        auto y = FunctorElement{B2, {{static_cast<std::uint32_t>(w), 1}}};
        bool neg = (B1->parity(u) & B2->parity(w)) != 0;
        if (exterior_type(alg) && (i * j) % 2) neg = !neg;
        auto xy = multiply(F, x, y), yx = multiply(F, y, x);
        CHECK(equal(xy, FunctorElement{yx.basis, sv_scale(F, yx.coeffs, F.sign(neg))}));
    }
}

TEST_CASE("coproduct examples") {
    Field F(5);
    auto X = SuperSpace::standard(1, 0);
    auto parts = coproduct(F, mono(Algebra::Gamma, X, {2}));
    REQUIRE(parts.size() == 3);
    for (const auto& t : parts) CHECK(t.coeffs == SparseVec{{0, 1}});
    auto s = coproduct(F, mono(Algebra::S, X, {1}));
    CHECK(s[0].coeffs == SparseVec{{0, 1}});
    CHECK(s[1].coeffs == SparseVec{{0, 1}});
    auto unit = coproduct(F, mono(Algebra::A, X, {0}));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].coeffs == SparseVec{{0, 1}});
    // Δ_S(x^2) carries the binomial 2 in the middle.
    auto s2 = coproduct(F, mono(Algebra::S, X, {2}));
    CHECK(s2[1].coeffs == SparseVec{{0, 2}});
}

TEST_CASE("coproducts are coassociative") {
    Field F(3);
    for (Algebra alg : kAll)
        for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
            auto V = SuperSpace::standard(m, k);
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 2; ++j)
                    for (int l = 0; l <= 2; ++l) {
                        auto Bi = functor_basis(alg, V, i)->space(), Bj = functor_basis(alg, V, j)->space(),
                             Bl = functor_basis(alg, V, l)->space();
                        auto left = compose(F, tensor_of_maps(F, coproduct_matrix(F, alg, V, i, j), GradedMatrix::identity(Bl)),
                                            coproduct_matrix(F, alg, V, i + j, l));
                        auto right = compose(F, tensor_of_maps(F, GradedMatrix::identity(Bi), coproduct_matrix(F, alg, V, j, l)),
                                             coproduct_matrix(F, alg, V, i, j + l));
                        CHECK(left.matrix() == right.matrix());
                    }
        }
}

TEST_CASE("coproduct is an algebra map") {
    Field F(5);
    for (int t = 0; t < 60; ++t) {
        Algebra alg = kAll[rand_int(0, 3)];
        auto V = SuperSpace::standard(rand_int(0, 2), rand_int(1, 2));
        int i = rand_int(0, 3), j = rand_int(0, 3);
        auto Bi = functor_basis(alg, V, i), Bj = functor_basis(alg, V, j);
        if (!Bi->size() || !Bj->size()) continue;
        std::size_t u = rand_int(0, static_cast<int>(Bi->size()) - 1), w = rand_int(0, static_cast<int>(Bj->size()) - 1);
        FunctorElement a{Bi, {{static_cast<std::uint32_t>(u), 1}}}, b{Bj, {{static_cast<std::uint32_t>(w), 1}}};
        auto lhs = coproduct(F, multiply(F, a, b));
        auto da = coproduct(F, a), db = coproduct(F, b);
        // (a'⊗a'')(b'⊗b'') = ± a'b' ⊗ a''b''.
        std::vector<SparseAccumulator> acc(i + j + 1, SparseAccumulator(F));
        for (const auto& ta : da)
            for (const auto& tb : db) {
                int left_deg = ta.left->degree() + tb.left->degree();
                auto Bl = functor_basis(alg, V, left_deg), Br = functor_basis(alg, V, i + j - left_deg);
                for (const auto& ea : ta.coeffs)
                    for (const auto& eb : tb.coeffs) {
                        std::size_t a1 = ea.idx / ta.right->size(), a2 = ea.idx % ta.right->size();
                        std::size_t b1 = eb.idx / tb.right->size(), b2 = eb.idx % tb.right->size();
                        bool neg = (ta.right->parity(a2) & tb.left->parity(b1)) != 0;
                        if (exterior_type(alg) && (ta.right->degree() * tb.left->degree()) % 2) neg = !neg;
                        auto l = monomial_product(F, alg, V, ta.left->monomial(a1), tb.left->monomial(b1));
                        auto r = monomial_product(F, alg, V, ta.right->monomial(a2), tb.right->monomial(b2));
                        Elt c = F.mul(F.mul(ea.val, eb.val), F.mul(l.coeff, r.coeff));
                        if (!c) continue;
                        acc[left_deg].add(static_cast<std::uint32_t>(Bl->index_of(l.exponents) * Br->size() +
                                                                     Br->index_of(r.exponents)),
                                          neg ? F.neg(c) : c);
                    }
            }
        for (int d = 0; d <= i + j; ++d) CHECK(lhs[d].coeffs == acc[d].take());
    }
}

TEST_CASE("duality pairing examples and tensor agreement") {
    Field F(5);
    auto X = SuperSpace::standard(1, 0);
    CHECK(duality_pairing(F, X, {2}, {2}) == 1);
    auto V = SuperSpace::standard(1, 1);
    CHECK(duality_pairing(F, V, {2, 0}, {1, 1}) == 0);
    CHECK(duality_pairing(F, SuperSpace::standard(0, 1), {1}, {1}) == F.neg(1));
    // Closed form (-1)^{k(k+1)/2} in the number k of odd letters, against the expansion.
    for (auto [m, k] : {std::pair{1, 1}, {1, 2}, {2, 2}, {0, 3}})
        for (int n = 0; n <= 6; ++n) {
            auto Vv = SuperSpace::standard(m, k);
            auto B = functor_basis(Algebra::S, Vv, n);
            for (std::size_t i = 0; i < B->size(); ++i) {
                long long odd = 0;
                for (std::size_t l = 0; l < Vv.dim(); ++l)
                    if (Vv.parity(l)) odd += B->monomial(i)[l];
                Elt expect = F.sign((odd * (odd + 1) / 2) % 2);
                CHECK(duality_pairing_tensor(F, Vv, B->monomial(i), B->monomial(i)) == expect);
                CHECK(duality_pairing(F, Vv, B->monomial(i), B->monomial(i)) == expect);
                std::size_t j = (i + 1) % B->size();
                if (j != i) CHECK(duality_pairing_tensor(F, Vv, B->monomial(i), B->monomial(j)) == 0);
            }
        }
}

TEST_CASE("duality pairing is a bialgebra pairing") {
    Field F(7);
    for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        auto V = SuperSpace::standard(m, k);
        SuperSpace Vd = dual(V);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 4 - i; ++j) {
                auto Bi = functor_basis(Algebra::S, V, i), Bj = functor_basis(Algebra::S, V, j);
                auto G = functor_basis(Algebra::Gamma, Vd, i + j);
                for (std::size_t a = 0; a < Bi->size(); ++a)
                    for (std::size_t b = 0; b < Bj->size(); ++b)
                        for (std::size_t g = 0; g < G->size(); ++g) {
                            auto ab = monomial_product(F, Algebra::S, V, Bi->monomial(a), Bj->monomial(b));
                            Elt lhs = ab.coeff ? F.mul(ab.coeff, duality_pairing(F, V, ab.exponents, G->monomial(g))) : 0;
                            auto parts = coproduct(F, FunctorElement{G, {{static_cast<std::uint32_t>(g), 1}}});
                            const auto& t = parts[i];
                            Elt rhs = 0;
                            for (const auto& e : t.coeffs) {
                                std::size_t g1 = e.idx / t.right->size(), g2 = e.idx % t.right->size();
                                Elt c = F.mul(e.val, F.mul(duality_pairing(F, V, Bi->monomial(a), t.left->monomial(g1)),
                                                           duality_pairing(F, V, Bj->monomial(b), t.right->monomial(g2))));
                                if (Bj->parity(b) & t.left->parity(g1)) c = F.neg(c);
                                rhs = F.add(rhs, c);
                            }
                            CHECK(lhs == rhs);
                        }
            }
    }
}

TEST_CASE("symmetrization") {
    Field F(3);
    auto X = SuperSpace::standard(1, 0), Y = SuperSpace::standard(0, 1);
    CHECK(equal(symmetrize(F, mono(Algebra::S, X, {2})), mono(Algebra::Gamma, X, {2}, 2)));
    CHECK(symmetrize(F, mono(Algebra::S, X, {3})).is_zero());
    CHECK(equal(symmetrize(F, mono(Algebra::S, Y, {1})), mono(Algebra::Gamma, Y, {1})));
    Field F7(7);
    for (int t = 0; t < 30; ++t) {
        Algebra alg = coin(0.5) ? Algebra::S : Algebra::Lambda;
        auto V = SuperSpace::standard(rand_int(0, 2), rand_int(1, 2));
        auto a = random_element(F7, alg, V, rand_int(0, 3)), b = random_element(F7, alg, V, rand_int(0, 3));
        CHECK(equal(symmetrize(F7, multiply(F7, a, b)), multiply(F7, symmetrize(F7, a), symmetrize(F7, b))));
    }
}

TEST_CASE("dual Frobenius and the p-power map") {
    Field F(3);
    auto V = SuperSpace::standard(1, 1);
    auto X1 = twist(SuperSpace::standard(1, 0), 1);
    auto g3 = dual_frobenius(F, mono(Algebra::Gamma, SuperSpace::standard(1, 0), {3}), 1);
    CHECK(equal(g3, mono(Algebra::Gamma, X1, {1})));
    CHECK(dual_frobenius(F, mono(Algebra::Gamma, V, {0, 1}), 1).is_zero());
    CHECK(dual_frobenius(F, mono(Algebra::Gamma, SuperSpace::standard(1, 0), {1}), 1).is_zero());
    // Closed form on monomials: γ_a ↦ γ_{a/p^r} when p^r | a and no odd letters occur.
    for (int r = 1; r <= 2; ++r) {
        auto W = SuperSpace::standard(2, 1);
        int q = r == 1 ? 3 : 9;
        for (int n : {q, 2 * q}) {
            auto B = functor_basis(Algebra::Gamma, W, n);
            auto M = dual_frobenius_matrix(F, W, n, r);
            for (std::size_t i = 0; i < B->size(); ++i) {
                const auto& a = B->monomial(i);
                bool ok = a[2] == 0 && a[0] % q == 0 && a[1] % q == 0;
                if (!ok) {
                    CHECK(M.matrix().col(i).empty());
                } else {
                    auto T = functor_basis(Algebra::Gamma, twist(W, r), n / q);
                    CHECK(M.matrix().col(i) == SparseVec{{static_cast<std::uint32_t>(T->index_of({a[0] / q, a[1] / q, 0})), 1}});
                }
            }
        }
    }
    // Composite with the p-power map, identifying x^{p} with γ_p(x).
    auto W = SuperSpace::standard(2, 2);
    auto P = p_power_matrix(F, W, 1);
    auto SB = functor_basis(Algebra::S, W, 3), GB = functor_basis(Algebra::Gamma, W, 3);
    for (std::size_t i = 0; i < W.dim(); ++i) {
        SparseVec img;
        for (const auto& e : P.matrix().col(i)) {
            long g = GB->index_of(SB->monomial(e.idx));
            REQUIRE(g >= 0);
            auto fr = dual_frobenius(F, FunctorElement{GB, {{static_cast<std::uint32_t>(g), e.val}}}, 1);
            for (const auto& f : fr.coeffs) img.push_back(f);
        }
        if (W.parity(i)) CHECK(img.empty());
        else CHECK(img == SparseVec{{static_cast<std::uint32_t>(i), 1}});
    }
    // Multiplicative on Γ.
    Field F5(5);
    auto U = SuperSpace::standard(2, 1);
    for (int t = 0; t < 20; ++t) {
        auto a = random_element(F5, Algebra::Gamma, U, 5), b = random_element(F5, Algebra::Gamma, U, 5);
        CHECK(equal(dual_frobenius(F5, multiply(F5, a, b), 1),
                    multiply(F5, dual_frobenius(F5, a, 1), dual_frobenius(F5, b, 1))));
    }
}

TEST_CASE("p-power examples") {
    Field F(3);
    auto V = SuperSpace::standard(1, 1);
    auto x3 = p_power(F, V, {{0, 1}}, 1);
    CHECK(equal(x3, mono(Algebra::S, V, {3, 0})));
    CHECK(equal(p_power(F, V, {{0, 1}, {1, 1}}, 1), mono(Algebra::S, V, {3, 0})));
    auto W = SuperSpace::standard(2, 1);
    for (int t = 0; t < 20; ++t) {
        SparseVec u = random_vec(F, 3, 0.7);
        auto lhs = p_power(F, W, u, 1);
        CHECK(lhs.coeffs == apply(F, p_power_matrix(F, W, 1), u));
    }
}

TEST_CASE("divided-power morphisms on tensor powers") {
    Field F(3);
    auto X = SuperSpace::standard(1, 0);
    auto gp = morphism_matrix(F, DividedPowerMorphism(X, X, {3}));
    CHECK(gp.get(0, 0) == 1);
    auto X2 = SuperSpace::standard(2, 0);
    auto phi = DividedPowerMorphism(X2, X2, {1, 0, 0, 1});
    auto M = morphism_matrix(F, phi);
    // basis x1⊗x1, x1⊗x2, x2⊗x1, x2⊗x2
    CHECK(M.matrix().col(1) == SparseVec{{1, 1}});
    CHECK(M.matrix().col(2) == SparseVec{{2, 1}});
    CHECK(M.matrix().col(0).empty());
    CHECK_THROWS_AS(DividedPowerMorphism(SuperSpace::standard(1, 1), SuperSpace::standard(1, 1), {0, 2, 0, 0}),
                    InvalidInput);
}

TEST_CASE("morphism matrices are equivariant, match conjugation, and do not depend on J") {
    Field F(5);
    for (int t = 0; t < 40; ++t) {
        auto V = SuperSpace::standard(rand_int(1, 2), rand_int(0, 2));
        auto W = SuperSpace::standard(rand_int(1, 2), rand_int(0, 2), "u", "w");
        int d = rand_int(1, 3);
        auto phi = random_morphism(V, W, d, true);
        auto M = morphism_matrix(F, phi);
        CHECK(M == morphism_matrix_conjugation(F, phi, false));
        CHECK(M == morphism_matrix_conjugation(F, phi, true));
        for (const auto& s : perm_all(phi.degree())) {
            auto lhs = compose(F, M, sym_action(F, V, phi.degree(), s));
            auto rhs = compose(F, sym_action(F, W, phi.degree(), s), M);
            CHECK(lhs.matrix() == rhs.matrix());
        }
    }
}

TEST_CASE("induced maps on functors") {
    Field F(3);
    auto V = SuperSpace::standard(2, 0);
    // γ_3(e_12): x2 ↦ x1 on cubes.
    auto M = induced_functor_map(F, Algebra::S, DividedPowerMorphism(V, V, {0, 3, 0, 0}));
    auto B = functor_basis(Algebra::S, V, 3);
    CHECK(M.matrix().col(B->index_of({0, 3})) == SparseVec{{static_cast<std::uint32_t>(B->index_of({3, 0})), 1}});
    // All exponents below p: the image of a cube vanishes.
    auto N = induced_functor_map(F, Algebra::S, DividedPowerMorphism(V, V, {0, 1, 0, 2}));
    CHECK(N.matrix().col(B->index_of({0, 3})).empty());
    // The identity of Γ^2(k^{1|1}) from the identity terms.
    auto U = SuperSpace::standard(1, 1);
    std::vector<std::pair<DividedPowerMorphism, Elt>> terms;
    for (auto& t : DividedPowerMorphism::identity_terms(U, 2)) terms.push_back({t, 1});
    for (Algebra alg : kAll) {
        auto I = induced_combination(F, alg, U, U, 2, terms);
        CHECK(I == GradedMatrix::identity(functor_basis(alg, U, 2)->space()));
    }
}

TEST_CASE("induced maps respect composition") {
    Field F(3);
    for (int t = 0; t < 30; ++t) {
        auto U = SuperSpace::standard(1, 1, "a", "b");
        auto V = SuperSpace::standard(rand_int(1, 2), 1);
        auto W = SuperSpace::standard(1, rand_int(0, 1) + 1, "u", "w");
        int d = rand_int(1, 3);
        auto psi = random_morphism(U, V, d, false);
        auto phi = random_morphism(V, W, d, false);
        auto MM = compose(F, morphism_matrix(F, phi), morphism_matrix(F, psi));
        for (Algebra alg : kAll) {
            auto lhs = compose(F, induced_functor_map(F, alg, phi), induced_functor_map(F, alg, psi));
            CHECK(lhs.matrix() == induced_from_tensor_map(F, alg, U, W, d, MM).matrix());
            CHECK(induced_from_tensor_map(F, alg, V, W, d, morphism_matrix(F, phi)).matrix() ==
                  induced_functor_map(F, alg, phi).matrix());
        }
    }
}
