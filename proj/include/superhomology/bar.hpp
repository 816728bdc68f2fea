#pragma once

#include <vector>

#include "superhomology/enveloping.hpp"

namespace shom {

// Finite-dimensional superalgebra with basis b_0 = 1, b_1.. spanning the augmentation ideal.
// mult[i * dim + j] = b_i b_j.
struct AugmentedAlgebra {
    SuperSpace space;
    std::vector<SparseVec> mult;
    std::size_t dim() const { return space.dim(); }
};

// Structure constants of V(g) in its PBW basis.
AugmentedAlgebra enveloping_structure(const EnvelopingAlgebra& V);
// k[x]/x^n with x even.
AugmentedAlgebra truncated_polynomial(std::size_t n);

// Unit, closure of the ideal, associativity and parity; returns the violations found.
std::vector<std::string> check_augmented(const Field& F, const AugmentedAlgebra& A);

// The reduced bar differential Ā^{⊗i} -> Ā^{⊗(i-1)},
// [a_1|..|a_i] -> Σ_j (-1)^{ε_j} [a_1|..|a_j a_{j+1}|..|a_i], ε_j = Σ_{k<=j} (|a_k| + 1).
SparseMatrix bar_differential(const Field& F, const AugmentedAlgebra& A, int i);

// dim H^i(A, k) for 0 <= i <= max_degree from ranks of the reduced bar complex. Requires
// dim A <= 12 and max_degree <= 4; InvalidInput otherwise.
std::vector<std::size_t> bar_ext(const Field& F, const AugmentedAlgebra& A, int max_degree);

}  // namespace shom
