#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "superhomology/lie.hpp"

namespace shom {

// V(g) = U(g) / (x^p - x^{[p]}) with its PBW basis. Letters are ordered even basis vectors
// first, then odd ones, each group in basis order. Exponents are below p on even letters and
// at most 1 on odd letters; index 0 is the unit.
//
// Products are memoized, so one instance must not be shared between threads.
class EnvelopingAlgebra {
public:
    EnvelopingAlgebra(const Field& F, RestrictedLieSuperalgebra g);

    const Field& field() const { return F_; }
    const RestrictedLieSuperalgebra& lie() const { return g_; }
    std::size_t dim() const { return dim_; }

    // Exponent vector indexed by basis vectors of g.
    std::vector<int> exponents(std::size_t mono) const;
    std::size_t index_of(const std::vector<int>& exps) const;
    int parity(std::size_t mono) const;
    // Letters of the monomial in PBW order, with multiplicity.
    std::vector<std::uint32_t> word(std::size_t mono) const;
    std::string label(std::size_t mono) const;
    // Monomial index of the single letter b_k.
    std::size_t letter(std::uint32_t k) const;

    // b_k · m for a basis monomial m.
    const SparseVec& mul_letter(std::uint32_t k, std::size_t mono) const;
    SparseVec mul_mono(std::size_t u, std::size_t v) const;
    SparseVec mul(const SparseVec& u, const SparseVec& v) const;
    // Product of an arbitrary word of letters.
    SparseVec word_product(const std::vector<std::uint32_t>& w) const;
    // Coefficient of the unit.
    Elt augmentation(const SparseVec& u) const { return sv_get(u, 0); }

private:
    Field F_;
    RestrictedLieSuperalgebra g_;
    std::vector<std::uint32_t> order_;   // letters in PBW order
    std::vector<std::size_t> stride_;    // per basis vector
    std::vector<int> radix_;             // per basis vector
    std::size_t dim_ = 1;
    mutable std::unordered_map<std::uint64_t, SparseVec> memo_;

    SparseVec compute_mul_letter(std::uint32_t k, std::size_t mono) const;
    SparseVec apply_letter(std::uint32_t k, const SparseVec& v) const;
};

}  // namespace shom
