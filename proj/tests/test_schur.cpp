#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "superhomology/errors.hpp"
#include "superhomology/schur.hpp"

using namespace shom;

namespace {

// Orbit count: S_d acts on pairs of words; an orbit carries an invariant iff no odd letter pair
// repeats (a repeated odd pair is swapped by a stabilizer element with sign -1).
std::size_t orbit_oracle(const SuperSpace& V, const SuperSpace& W, int d) {
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> orbits;
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) total *= V.dim() * W.dim();
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::pair<std::size_t, std::size_t>> letters;
        std::size_t c = code;
        for (int k = 0; k < d; ++k) {
            const std::size_t pair = c % (V.dim() * W.dim());
            c /= V.dim() * W.dim();
            letters.emplace_back(pair / V.dim(), pair % V.dim());
        }
        std::sort(letters.begin(), letters.end());
        bool ok = true;
        for (std::size_t k = 0; k + 1 < letters.size(); ++k)
            if (letters[k] == letters[k + 1] && (W.parity(letters[k].first) ^ V.parity(letters[k].second))) ok = false;
        if (ok) orbits.insert(letters);
    }
    return orbits.size();
}

std::size_t count_with_exponent(Algebra alg, const SuperSpace& V, int d, const Exponents& lambda) {
    auto B = functor_basis(alg, V, d);
    std::size_t c = 0;
    for (std::size_t k = 0; k < B->size(); ++k)
        if (B->monomial(k) == lambda) ++c;
    return c;
}

}  // namespace

TEST_CASE("Schur algebra dimensions match the orbit count and the closed formula") {
    for (std::uint64_t p : {3u, 5u}) {
        const Field F(p);
        for (std::size_t m = 0; m <= 2; ++m)
            for (std::size_t n = 0; n <= 2; ++n)
                for (int d = 1; d <= 3; ++d) {
                    if (m + n == 0) continue;
                    CAPTURE(p);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(d);
                    const SchurAlgebra S = schur_algebra(F, m, n, d, false);
                    CHECK(S.dim() == orbit_oracle(S.base, S.base, d));
                    CHECK(S.dim() == schur_dimension_formula(m, n, d));
                }
    }
}

TEST_CASE("individual Schur dimensions") {
    const Field F(3);
    CHECK(schur_algebra(F, 1, 1, 2, false).dim() == 8);
    CHECK(schur_algebra(F, 2, 1, 2, false).dim() == 41);
    CHECK(schur_algebra(F, 2, 2, 1, false).dim() == 16);
    CHECK(schur_algebra(F, 2, 2, 3, false).dim() == 688);
    CHECK(schur_dimension_formula(2, 2, 3) == 688);
    CHECK(schur_dimension_formula(1, 0, 5) == 1);
    CHECK(schur_dimension_formula(0, 1, 2) == 1);
}

TEST_CASE("equivariant maps between different spaces") {
    const Field F(5);
    const SuperSpace V = SuperSpace::standard(1, 1), W = SuperSpace::standard(2, 1);
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const EquivariantMaps E = equivariant_maps(F, V, W, d);
        CHECK(E.dim() == orbit_oracle(V, W, d));
        for (std::size_t k = 0; k < E.dim(); ++k) {
            auto c = E.coords(E.basis[k]);
            for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (j == k ? 1u : 0u));
        }
    }
}

TEST_CASE("Schur algebra axioms") {
    for (std::uint64_t p : {3u, 5u}) {
        const Field F(p);
        for (auto [m, n, d] : std::vector<std::tuple<std::size_t, std::size_t, int>>{
                 {1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {1, 2, 2}, {2, 0, 3}, {0, 2, 3}}) {
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(n);
            CAPTURE(d);
            const SchurAlgebra S = schur_algebra(F, m, n, d);
            const SchurChecks c = check_schur(F, S);
            CHECK(c.ok());
            CHECK(c.failures.empty());
            CHECK(c.triples_checked > 0);
        }
    }
}

TEST_CASE("S(2|2,3) builds and passes sampled checks") {
    const Field F(5);
    const SchurAlgebra S = schur_algebra(F, 2, 2, 3);
    CHECK(S.dim() == 688);
    const SchurChecks c = check_schur(F, S, 20000);
    CHECK(c.ok());
    CHECK(c.triples_checked == 20000);
}

TEST_CASE("a corrupted structure constant is caught") {
    const Field F(5);
    SchurAlgebra S = schur_algebra(F, 1, 1, 2);
    REQUIRE(check_schur(F, S).ok());
    SparseVec& t = S.table[3 * S.dim() + 5];
    t = t.empty() ? SparseVec{{0, 1}} : SparseVec{};
    CHECK_FALSE(check_schur(F, S).ok());
}

TEST_CASE("divided powers of Hom are the equivariant maps") {
    for (std::uint64_t p : {3u, 5u}) {
        const Field F(p);
        const SuperSpace a = SuperSpace::standard(1, 1), b = SuperSpace::standard(2, 1), c = SuperSpace::standard(0, 2);
        for (auto [V, W, d] : std::vector<std::tuple<SuperSpace, SuperSpace, int>>{
                 {a, a, 2}, {a, a, 3}, {a, b, 2}, {b, a, 2}, {c, c, 3}, {b, b, 2}}) {
            CAPTURE(p);
            CAPTURE(d);
            const GammaHomReport r = gamma_hom_iso_check(F, V, W, d);
            CHECK(r.ok());
            CHECK(r.images_equivariant);
            CHECK(r.rank == r.gamma_dim);
            CHECK(r.equivariant_dim == r.gamma_dim);
        }
    }
}

TEST_CASE("Schur algebra acts on the four functors") {
    const Field F(3);
    for (auto [m, n, d] : std::vector<std::tuple<std::size_t, std::size_t, int>>{{1, 1, 2}, {2, 1, 2}, {1, 1, 3}}) {
        const SchurAlgebra S = schur_algebra(F, m, n, d);
        for (Algebra alg : {Algebra::S, Algebra::A, Algebra::Gamma, Algebra::Lambda}) {
            CAPTURE(algebra_name(alg));
            CAPTURE(m);
            CAPTURE(n);
            CAPTURE(d);
            const SchurModule M = module_action(F, alg, S);
            CHECK(M.action.size() == S.dim());
            CHECK(M.space.dim() == functor_basis(alg, S.base, d)->size());
            const auto bad = check_module(F, S, M);
            CHECK(bad.empty());
        }
    }
}

TEST_CASE("weight characters count monomials by exponent") {
    const Field F(5);
    for (auto [m, n, d] : std::vector<std::tuple<std::size_t, std::size_t, int>>{{1, 1, 2}, {2, 1, 3}, {1, 2, 2}})
        for (Algebra alg : {Algebra::S, Algebra::A, Algebra::Gamma, Algebra::Lambda}) {
            const SuperSpace V = SuperSpace::standard(m, n);
            for (const auto& [lambda, tr] : weight_character(F, alg, m, n, d))
                CHECK(tr == count_with_exponent(alg, V, d, lambda) % 5);
        }
    const auto sym = weight_character(F, Algebra::S, 1, 1, 2);
    const auto ext = weight_character(F, Algebra::Lambda, 1, 1, 2);
    CHECK(sym != ext);
    CHECK(sym.at(Exponents{2, 0}) == 1);
    CHECK(ext.at(Exponents{2, 0}) == 0);
    CHECK(sym.at(Exponents{0, 2}) == 0);
    CHECK(ext.at(Exponents{0, 2}) == 1);
}

TEST_CASE("Schur inputs outside the budget or range are rejected") {
    const Field F(5);
    CHECK_THROWS_AS(schur_algebra(F, 2, 2, 4), BudgetError);
    CHECK_THROWS_AS(equivariant_maps(F, SuperSpace::standard(1, 1), SuperSpace::standard(1, 1), 0), InvalidInput);
}
