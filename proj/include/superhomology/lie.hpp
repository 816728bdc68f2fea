#pragma once

#include <string>
#include <vector>

#include "superhomology/sparse.hpp"
#include "superhomology/superspace.hpp"

namespace shom {

// Restricted Lie superalgebra on a homogeneous basis b_0..b_{d-1}.
struct RestrictedLieSuperalgebra {
    std::string name;
    SuperSpace space;
    // [b_i, b_j] at index i * dim + j.
    std::vector<SparseVec> bracket;
    // b_i^{[p]} for even i; empty for odd i.
    std::vector<SparseVec> pmap;

    std::size_t dim() const { return space.dim(); }
    const SparseVec& br(std::size_t i, std::size_t j) const { return bracket[i * dim() + j]; }
    // Basis indices of the even and odd parts, in basis order.
    std::vector<std::size_t> even_indices() const;
    std::vector<std::size_t> odd_indices() const;
    bool even_part_abelian() const;
};

// x even, y odd, [x,y] = 0, [y,y] = 2x, x^{[p]} = x.
RestrictedLieSuperalgebra lie_two_dim(const Field& F);
RestrictedLieSuperalgebra lie_odd_abelian(std::size_t n);
// Abelian with trivial p-map.
RestrictedLieSuperalgebra lie_even_abelian(std::size_t m);
// gl(m|n) on matrix units e_ij (index i*(m+n)+j), supercommutator bracket, e_ij^{[p]} = δ_ij e_ii.
RestrictedLieSuperalgebra lie_gl(const Field& F, std::size_t m, std::size_t n);

// Presets: two-dim, odd-abelian:<n>, even-abelian:<m>, gl:<m>:<n>. Throws InvalidInput otherwise.
RestrictedLieSuperalgebra lie_preset(const Field& F, const std::string& spec);

// Plain-text format with sections `basis` (lines `label parity`), `bracket` (`i j k c` meaning
// c_{ij}^k) and `pmap` (`i k c`). Brackets not listed are zero; listing [b_i,b_j] does not imply
// [b_j,b_i]. Lines starting with # are comments.
RestrictedLieSuperalgebra parse_lie(const Field& F, const std::string& text);

struct LieReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Super antisymmetry, super Jacobi, bracket parity, and ad(x^{[p]}) = (ad x)^p on even basis vectors.
LieReport validate_lie(const Field& F, const RestrictedLieSuperalgebra& g);

}  // namespace shom
