#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superhomology/errors.hpp"
#include "superhomology/liecohom.hpp"
#include "support.hpp"

using namespace shom;
using namespace testsupport;

namespace {

std::size_t find_gen(const XgComplex& X, int i, const Exponents& a, const Exponents& gamma) {
    const auto& g = X.V->lie();
    for (std::size_t k = 0; k < X.generators[i].size(); ++k) {
        const XGenerator& x = X.generators[i][k];
        if (functor_basis(Algebra::A, g.space, x.a_degree)->monomial(x.a_index) == a &&
            functor_basis(Algebra::Gamma, X.g0, x.gamma_degree)->monomial(x.gamma_index) == gamma)
            return k;
    }
    FAIL("generator not found");
    return 0;
}

// v ⊗ generator, v an element of V(g).
void add_term(const Field& F, SparseAccumulator& acc, const XgComplex& X, std::size_t gen, const SparseVec& v, Elt c) {
    for (const auto& t : v) acc.add(static_cast<std::uint32_t>(gen * X.V->dim() + t.idx), F.mul(c, t.val));
}

SparseVec mono(std::size_t m) { return {{static_cast<std::uint32_t>(m), 1}}; }

}  // namespace

TEST_CASE("validate_lie accepts the presets and reports broken axioms") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Field F(p);
        CHECK(validate_lie(F, lie_two_dim(F)).ok());
        CHECK(validate_lie(F, lie_gl(F, 1, 1)).ok());
        CHECK(validate_lie(F, lie_gl(F, 2, 1)).ok());
        CHECK(validate_lie(F, lie_odd_abelian(3)).ok());
        CHECK(validate_lie(F, lie_even_abelian(2)).ok());
    }
    Field F(3);
    auto bad = lie_two_dim(F);
    bad.bracket[1 * 2 + 1] = {{1, F.from_int(2)}};
    LieReport r = validate_lie(F, bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().find("parity") != std::string::npos);

    auto asym = lie_even_abelian(2);
    asym.bracket[0 * 2 + 1] = {{0, 1}};
    CHECK_FALSE(validate_lie(F, asym).ok());

    auto unrestricted = lie_two_dim(F);
    unrestricted.pmap[0] = {};
    CHECK(validate_lie(F, unrestricted).ok());  // ad x = 0, so any p-map on x is allowed
    auto gl = lie_gl(F, 1, 1);
    gl.pmap[0] = {};
    CHECK_FALSE(validate_lie(F, gl).ok());
}

TEST_CASE("presets and the text format") {
    Field F(5);
    const std::string text =
        "# the two-dimensional example\n"
        "basis\n x even\n y odd\n"
        "bracket\n 1 1 0 2\n"
        "pmap\n 0 0 1\n";
    auto g = parse_lie(F, text);
    auto h = lie_two_dim(F);
    CHECK(g.space.parities() == h.space.parities());
    CHECK(g.bracket == h.bracket);
    CHECK(g.pmap == h.pmap);
    CHECK(lie_preset(F, "gl:1:2").dim() == 9);
    CHECK(lie_preset(F, "odd-abelian:4").odd_indices().size() == 4);
    CHECK_THROWS_AS(lie_preset(F, "gl:1"), InvalidInput);
    CHECK_THROWS_AS(lie_preset(F, "even-abelian:x"), InvalidInput);
    CHECK_THROWS_AS(parse_lie(F, "basis\n x even\nbracket\n 0 0 5 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_lie(F, "basis\n x neither\n"), InvalidInput);
}

TEST_CASE("V(g) has the PBW dimension and satisfies its relations") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        for (auto g : {lie_two_dim(F), lie_gl(F, 1, 1), lie_odd_abelian(2), lie_even_abelian(2)}) {
            EnvelopingAlgebra V(F, g);
            std::size_t expect = 1;
            for (std::size_t k = 0; k < g.dim(); ++k) expect *= g.space.parity(k) ? 2 : p;
            CHECK(V.dim() == expect);
            for (std::size_t a = 0; a < g.dim(); ++a)
                for (std::size_t b = 0; b < g.dim(); ++b) {
                    // ab - (-1)^{|a||b|} ba = [a,b]
                    auto ab = V.word_product({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
                    auto ba = V.word_product({static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a)});
                    const bool both = g.space.parity(a) && g.space.parity(b);
                    SparseVec lhs = sv_axpy(F, ab, F.sign(!both), ba);
                    SparseAccumulator br(F);
                    for (const auto& t : g.br(a, b)) br.add(static_cast<std::uint32_t>(V.letter(t.idx)), t.val);
                    CHECK(lhs == br.take());
                }
            for (auto x : g.even_indices()) {
                SparseAccumulator rhs(F);
                for (const auto& t : g.pmap[x]) rhs.add(static_cast<std::uint32_t>(V.letter(t.idx)), t.val);
                CHECK(V.word_product(std::vector<std::uint32_t>(p, static_cast<std::uint32_t>(x))) == rhs.take());
            }
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t u = rand_int(0, static_cast<int>(V.dim()) - 1);
                const std::size_t v = rand_int(0, static_cast<int>(V.dim()) - 1);
                const std::size_t w = rand_int(0, static_cast<int>(V.dim()) - 1);
                CHECK(V.mul(V.mul_mono(u, v), mono(w)) == V.mul(mono(u), V.mul_mono(v, w)));
            }
            CHECK(V.mul_mono(0, V.dim() - 1) == mono(V.dim() - 1));
        }
    }
}

TEST_CASE("two-dimensional algebra: d matches the five-term formula") {
    for (std::uint32_t p : {3u, 5u}) {
        Field F(p);
        const int top = 6;
        XgComplex X = build_X(F, lie_two_dim(F), top);
        const EnvelopingAlgebra& V = *X.V;
        const SparseVec x = mono(V.letter(0)), y = mono(V.letter(1));
        int checked = 0;
        for (int c = 0; c <= 1; ++c)
            for (int d = 0; d <= top; ++d)
                for (int e = 0; c + d + 2 * e <= top; ++e) {
                    const int i = c + d + 2 * e;
                    if (i == 0) continue;
                    const std::size_t gen = find_gen(X, i, {c, d}, {e});
                    for (int a = 0; a < static_cast<int>(p); ++a)
                        for (int b = 0; b <= 1; ++b) {
                            INFO("p=" << p << " a=" << a << " b=" << b << " c=" << c << " d=" << d << " e=" << e);
                            const SparseVec u = mono(V.index_of({a, b}));
                            SparseAccumulator want(F);
                            const Elt sc = F.sign(c % 2 != 0);
                            if (c == 1) add_term(F, want, X, find_gen(X, i - 1, {0, d}, {e}), V.mul(u, x), 1);
                            if (d >= 1) add_term(F, want, X, find_gen(X, i - 1, {c, d - 1}, {e}), V.mul(u, y), sc);
                            if (c == 0 && d >= 2)
                                add_term(F, want, X, find_gen(X, i - 1, {1, d - 2}, {e}), u, F.neg(1));
                            if (c == 0 && e >= 1) {
                                SparseVec xp = u;
                                for (std::uint32_t k = 0; k + 1 < p; ++k) xp = V.mul(xp, x);
                                const std::size_t g2 = find_gen(X, i - 1, {1, d}, {e - 1});
                                add_term(F, want, X, g2, xp, sc);
                                add_term(F, want, X, g2, u, F.neg(sc));
                            }
                            SparseVec got = X.apply_d(i, {{static_cast<std::uint32_t>(gen * V.dim() + V.index_of({a, b})), 1}});
                            CHECK(got == want.take());
                            ++checked;
                        }
                }
        CHECK(checked > 0);
    }
}

TEST_CASE("gl(m|n): d_1 and d_2 on generators") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}}) {
        Field F(3);
        auto g = lie_gl(F, m, n);
        XgComplex X = build_X(F, g, 2);
        const EnvelopingAlgebra& V = *X.V;
        const std::size_t dim = g.dim();
        auto eps = [dim](std::size_t k) {
            Exponents e(dim, 0);
            e[k] = 1;
            return e;
        };
        const Exponents none(dim, 0), gnone(X.g0.dim(), 0);
        for (std::size_t k = 0; k < dim; ++k)
            CHECK(X.d[1][find_gen(X, 1, eps(k), gnone)] == SparseVec{{static_cast<std::uint32_t>(V.letter(k)), 1}});
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                MonoProduct prod = monomial_product(F, Algebra::A, g.space, eps(a), eps(b));
                if (!prod.coeff) continue;
                INFO("a=" << g.space.label(a) << " b=" << g.space.label(b));
                SparseAccumulator want(F);
                const Elt s = F.sign(g.space.parity(a) && g.space.parity(b));
                add_term(F, want, X, find_gen(X, 1, eps(b), gnone), mono(V.letter(a)), 1);
                add_term(F, want, X, find_gen(X, 1, eps(a), gnone), mono(V.letter(b)), F.neg(s));
                for (const auto& t : g.br(a, b)) add_term(F, want, X, find_gen(X, 1, eps(t.idx), gnone), mono(0), F.neg(t.val));
                const SparseVec d2 = X.d[2][find_gen(X, 2, prod.exponents, gnone)];
                CHECK(sv_scale(F, d2, prod.coeff) == want.take());
            }
        for (std::size_t r = 0; r < X.g0.dim(); ++r) {
            const std::uint32_t k = X.g0_to_g[r];
            Exponents gam(X.g0.dim(), 0);
            gam[r] = 1;
            SparseAccumulator want(F);
            add_term(F, want, X, find_gen(X, 1, eps(k), gnone), V.word_product(std::vector<std::uint32_t>(2, k)), 1);
            for (const auto& t : g.pmap[k]) add_term(F, want, X, find_gen(X, 1, eps(t.idx), gnone), mono(0), F.neg(t.val));
            CHECK(X.d[2][find_gen(X, 2, none, gam)] == want.take());
        }
        CHECK(check_X(F, X).ok());
    }
}

TEST_CASE("d^2 = 0, augmentation and t on the test algebras") {
    struct Case {
        std::uint32_t p;
        std::string preset;
        int top;
    };
    for (const Case& c : {Case{3, "two-dim", 7}, Case{5, "two-dim", 5}, Case{3, "odd-abelian:2", 5},
                          Case{3, "even-abelian:2", 5}, Case{5, "even-abelian:1", 6}, Case{3, "gl:1:1", 2},
                          Case{5, "gl:1:1", 2}, Case{3, "gl:2:1", 2}}) {
        INFO(c.preset << " p=" << c.p);
        Field F(c.p);
        XgComplex X = build_X(F, lie_preset(F, c.preset), c.top);
        XChecks r = check_X(F, X);
        CHECK(r.ok());
        CHECK(X.t_table.size() == X.g0.dim());
    }
}

TEST_CASE("build_X rejects what it cannot build") {
    Field F(3);
    CHECK_THROWS_AS(build_X(F, lie_gl(F, 2, 1), 3), InvalidInput);
    CHECK_NOTHROW(build_X(F, lie_gl(F, 1, 1), 3));
    auto bad = lie_two_dim(F);
    bad.bracket[3] = {{1, 2}};
    CHECK_THROWS_AS(build_X(F, bad, 2), InvalidInput);
    const std::size_t old = budget();
    set_budget(50);
    CHECK_THROWS_AS(build_X(F, lie_gl(F, 2, 1), 2), BudgetError);
    set_budget(old);
}
