#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superhomology/complex.hpp"
#include "superhomology/enveloping.hpp"
#include "superhomology/functors.hpp"

namespace shom {

// Free generator a ⊗ γ of X_i(g): a a monomial of A^j(g) = Λ^•(g_0)⊗Γ^•(g_1) and γ a monomial
// of Γ^e(g_0), with i = j + 2e.
struct XGenerator {
    int a_degree = 0;
    std::size_t a_index = 0;
    int gamma_degree = 0;
    std::size_t gamma_index = 0;
};

// Elements of V(g) ⊗ A^j(g) keyed by (PBW monomial, A-exponents).
using WElement = std::map<std::pair<std::size_t, Exponents>, Elt>;

// X(g) through homological degree max_degree. An element of X_i is a SparseVec with index
// gen * dim V(g) + pbw, where gen numbers generators(i).
struct XgComplex {
    std::shared_ptr<const EnvelopingAlgebra> V;
    SuperSpace g0;                      // even part of g
    std::vector<std::uint32_t> g0_to_g; // basis of g0 inside g
    int max_degree = 0;
    std::vector<std::vector<XGenerator>> generators;
    // d_i on the generators of X_i, for 1 <= i <= max_degree; entry 0 is empty.
    std::vector<std::vector<SparseVec>> d;
    // t(γ_1(x)) for each even basis vector of g, in V(g) ⊗ A^1(g).
    std::vector<WElement> t_table;

    std::size_t rank(int i) const { return generators.at(i).size(); }
    std::string generator_label(int i, std::size_t gen) const;
    // d_i applied to an arbitrary element of X_i.
    SparseVec apply_d(int i, const SparseVec& x) const;
};

// ∂ on V(g) ⊗ A(g) restricted to 1 ⊗ a, a an A^j(g) exponent vector.
WElement w_boundary(const Field& F, const EnvelopingAlgebra& V, const Exponents& a);

// Throws InvalidInput for an invalid algebra or when g_0 is nonabelian and max_degree > 2,
// ComplexError(i) when d_{i-1}∘d_i is nonzero.
XgComplex build_X(const Field& F, const RestrictedLieSuperalgebra& g, int max_degree);

struct XChecks {
    bool d_squared_zero = true;
    bool augmentation = true;   // ε∘d_1 = 0
    bool t_cycles = true;       // ∂∘t = 0 and t has no constant term
    std::vector<std::string> failures;
    bool ok() const { return d_squared_zero && augmentation && t_cycles; }
};

XChecks check_X(const Field& F, const XgComplex& X);

// Hom_{V(g)}(X(g), k) in the cochain basis of Λ(g*) ⊗ S(g_0*(2)), degrees 0..top.
struct LieCohomology {
    std::vector<std::size_t> dims;  // dim H^i for 0 <= i <= max_degree
    CochainComplex model;           // degrees 0..max_degree+1
    XgComplex X;
};

// The cochain model differential: transpose of the augmented d, conjugated by the diagonal
// sign (-1)^{k(k+1)/2 + c(c-1)/2 + c(k+1)} on the basis vector dual to a⊗γ, where c and k
// count the even and odd letters of a.
CochainComplex hom_complex(const Field& F, const XgComplex& X);

// Needs X through max_degree + 1, so nonabelian g_0 allows max_degree <= 1.
LieCohomology lie_cohomology(const Field& F, const RestrictedLieSuperalgebra& g, int max_degree);

// Per degree, the dimension of (coboundaries) ∩ span{cochains dual to 1⊗γ}, i.e. the
// S(g_0*(2)) part of the model.
std::vector<std::size_t> gamma_coboundary_dims(const Field& F, const LieCohomology& H);

}  // namespace shom
