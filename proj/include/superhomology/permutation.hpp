#pragma once

#include <cstddef>
#include <vector>

namespace shom {

// A permutation of {0, ..., n-1} stored as its image list: perm[i] = sigma(i).
using Perm = std::vector<int>;

Perm perm_identity(std::size_t n);
// (a ∘ b)(i) = a(b(i)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_valid(const Perm& a);
// +1 or -1.
int perm_sign(const Perm& a);
// The adjacent transposition swapping i and i+1 in S_n.
Perm perm_adjacent(std::size_t n, std::size_t i);
// All of S_n in lexicographic order of image lists.
std::vector<Perm> perm_all(std::size_t n);

// Sign picked up when tensor factors with the given parities are rearranged so that
// position i receives the factor previously at position sigma(i).
bool koszul_sign_odd(const std::vector<int>& parities, const Perm& sigma);

}  // namespace shom
