#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superhomology/functors.hpp"

namespace shom {

// Basis of Hom_{kS_d}(V^{⊗d}, W^{⊗d}) from the joint kernel of X ↦ X·A_V(s) - A_W(s)·X over the
// adjacent transpositions s. Each basis element is homogeneous and has a 1 at its own free
// coordinate (column-major position) and 0 at the others.
struct EquivariantMaps {
    std::vector<GradedMatrix> basis;
    std::vector<std::uint32_t> free;  // free coordinate of each basis element
    std::size_t dim() const { return basis.size(); }
    // Coordinates of an equivariant map, read at the free positions.
    std::vector<Elt> coords(const GradedMatrix& X) const;
};

EquivariantMaps equivariant_maps(const Field& F, const SuperSpace& V, const SuperSpace& W, int d);

// S(m|n,d) = End_{kS_d}((k^{m|n})^{⊗d}).
struct SchurAlgebra {
    std::size_t m = 0, n = 0;
    int d = 0;
    SuperSpace base;
    EquivariantMaps maps;
    // table[i * dim + j] = coordinates of b_i ∘ b_j; empty when not requested.
    std::vector<SparseVec> table;
    SparseVec unit;
    std::size_t dim() const { return maps.dim(); }
    const GradedMatrix& basis(std::size_t i) const { return maps.basis[i]; }
};

// Throws BudgetError when (m+n)^{2d} exceeds the budget.
SchurAlgebra schur_algebra(const Field& F, std::size_t m, std::size_t n, int d, bool with_table = true);

// Σ_{a+b=d} C(m²+n²+a-1, a)·C(2mn, b), the number of Γ^d(End(k^{m|n})) basis monomials.
std::uint64_t schur_dimension_formula(std::size_t m, std::size_t n, int d);

struct SchurChecks {
    bool equivariant = true;   // every basis element commutes with A(σ), all σ ∈ S_d
    bool unit = true;          // the identity is in the span and acts as a unit in the table
    bool associative = true;   // on the checked triples
    std::size_t triples_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return equivariant && unit && associative; }
};

// Associativity runs over all triples when dim³ <= max_triples, otherwise over max_triples
// triples drawn with a fixed seed.
SchurChecks check_schur(const Field& F, const SchurAlgebra& S, std::size_t max_triples = 200000);

struct GammaHomReport {
    std::size_t gamma_dim = 0;        // basis monomials of Γ^d Hom(V, W)
    std::size_t equivariant_dim = 0;  // dim Hom_{kS_d}(V^{⊗d}, W^{⊗d})
    std::size_t rank = 0;             // rank of the morphism_matrix images
    bool images_equivariant = true;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

GammaHomReport gamma_hom_iso_check(const Field& F, const SuperSpace& V, const SuperSpace& W, int d);

// S(m|n,d) acting on F^d(k^{m|n}).
struct SchurModule {
    Algebra algebra = Algebra::S;
    SuperSpace space;
    std::vector<GradedMatrix> action;  // one per basis element of S
};

// Descent (quotient types) or restriction (invariant types) is checked for every basis element;
// a failure is a logic error.
SchurModule module_action(const Field& F, Algebra alg, const SchurAlgebra& S);

// ρ(b_i)ρ(b_j) = Σ_k T_ij^k ρ(b_k) and ρ(1) = id; returns the violations.
std::vector<std::string> check_module(const Field& F, const SchurAlgebra& S, const SchurModule& M);

// Trace of the weight idempotent ξ_λ on F^d(k^{m|n}) for every composition λ of d.
std::map<Exponents, Elt> weight_character(const Field& F, Algebra alg, std::size_t m, std::size_t n, int d);

}  // namespace shom
