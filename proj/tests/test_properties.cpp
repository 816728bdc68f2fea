#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"
#include "superhomology/functors.hpp"

namespace {

constexpr std::uint32_t kSeed = 20240611u;

void require_clean(const props::SuiteResult& r) {
    INFO(r.name);
    CHECK(r.cases > 0);
    for (const auto& f : r.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("braiding is natural for homogeneous maps") { require_clean(props::braiding_naturality(kSeed)); }

TEST_CASE("the symmetric group acts on the right") { require_clean(props::right_action(kSeed)); }

TEST_CASE("Γ and A products do not depend on coset representatives") { require_clean(props::j_independence(kSeed)); }

TEST_CASE("duality pairing is nondegenerate through degree 4") { require_clean(props::duality_pairing(kSeed)); }

TEST_CASE("d and κ square to zero") { require_clean(props::differentials_square_zero(kSeed)); }

TEST_CASE("twist and dual Frobenius identities") { require_clean(props::twist_frobenius(kSeed)); }

TEST_CASE("suites are reproducible for a fixed seed") {
    const auto a = props::all_suites(99), b = props::all_suites(99);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].cases == b[k].cases);
        CHECK(a[k].failures == b[k].failures);
    }
}

TEST_CASE("the braiding check sees a dropped Koszul sign") {
    using namespace shom;
    const Field F(5);
    const SuperSpace Y = SuperSpace::standard(0, 1);
    const GradedMatrix f = GradedMatrix::from_triples(F, Y, SuperSpace::standard(1, 0), 1, {{0, 0, 1}});
    const GradedMatrix lhs = compose(F, braiding(F, f.codomain(), f.codomain()), tensor_of_maps(F, f, f));
    const GradedMatrix unsigned_rhs = compose(F, tensor_of_maps(F, f, f), braiding(F, Y, Y));
    CHECK_FALSE(lhs.matrix() == unsigned_rhs.matrix());
    CHECK(lhs.matrix() == scale(F, unsigned_rhs, F.neg(1)).matrix());
}
