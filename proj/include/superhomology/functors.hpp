#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "superhomology/graded_matrix.hpp"

namespace shom {

// Symmetric S, exterior Λ, divided powers Γ, and the divided-power exterior algebra A.
enum class Algebra { S, Lambda, Gamma, A };

std::string algebra_name(Algebra a);
Algebra parse_algebra(const std::string& s);
// S and Γ bound odd exponents by 1; Λ and A bound even exponents by 1.
bool bounds_odd(Algebra a);
// Λ and A pick up an extra sign when two letters are exchanged.
bool exterior_type(Algebra a);
// Γ and A are realized as invariant tensors, S and Λ as quotients of the tensor power.
bool is_sub_type(Algebra a);

// Exponent vector over the basis of V.
using Exponents = std::vector<int>;

struct MonomialIndex {
    Algebra algebra;
    Exponents exponents;
    int degree() const;
    bool operator==(const MonomialIndex& o) const {
        return algebra == o.algebra && exponents == o.exponents;
    }
};

// Ordered monomial basis of F^n(V), descending lexicographic in the exponent vector.
class FunctorBasis {
public:
    FunctorBasis(Algebra alg, const SuperSpace& V, int n);

    Algebra algebra() const { return alg_; }
    int degree() const { return n_; }
    const SuperSpace& base() const { return V_; }
    std::size_t size() const { return monos_.size(); }
    const Exponents& monomial(std::size_t i) const { return monos_[i]; }
    const std::vector<Exponents>& monomials() const { return monos_; }
    // Index of an exponent vector, or -1 when it is not a basis monomial.
    long index_of(const Exponents& e) const;
    int parity(std::size_t i) const;
    std::string label(std::size_t i) const;
    // The basis as a superspace (labels and parities), cached.
    const SuperSpace& space() const { return space_; }
    // Sorted letter word of monomial i (letter j repeated e_j times).
    std::vector<std::uint32_t> word(std::size_t i) const;

private:
    Algebra alg_;
    SuperSpace V_;
    int n_;
    std::vector<Exponents> monos_;
    std::unordered_map<std::string, std::size_t> lookup_;
    SuperSpace space_;
};

using BasisPtr = std::shared_ptr<const FunctorBasis>;

// Cached basis of F^n(V); thread-safe.
BasisPtr functor_basis(Algebra alg, const SuperSpace& V, int n);
std::string monomial_label(Algebra alg, const SuperSpace& V, const Exponents& e);
int monomial_parity(const SuperSpace& V, const Exponents& e);

struct FunctorElement {
    BasisPtr basis;
    SparseVec coeffs;
    bool is_zero() const { return coeffs.empty(); }
};

FunctorElement monomial_element(BasisPtr b, const Exponents& e, Elt c = 1);

// Product of basis monomials: coefficient (0 when the product vanishes) and exponent sum.
struct MonoProduct {
    Elt coeff;
    Exponents exponents;
};
MonoProduct monomial_product(const Field& F, Algebra alg, const SuperSpace& V, const Exponents& a,
                             const Exponents& b);
// Coefficient of b⊗(a-b) in the coproduct of a (0 if b is not below a).
Elt coproduct_coefficient(const Field& F, Algebra alg, const SuperSpace& V, const Exponents& a,
                          const Exponents& b);

FunctorElement multiply(const Field& F, const FunctorElement& a, const FunctorElement& b);

// Element of F^i(V) ⊗ F^j(V): coefficient at index (left * right->size() + right).
struct TensorElement {
    BasisPtr left, right;
    SparseVec coeffs;
};
// Coproduct of x split into all (i, n-i), i = 0..n.
std::vector<TensorElement> coproduct(const Field& F, const FunctorElement& x);

// Multiplication F^i ⊗ F^j -> F^{i+j} and coproduct component F^{i+j} -> F^i ⊗ F^j as matrices.
GradedMatrix product_matrix(const Field& F, Algebra alg, const SuperSpace& V, int i, int j);
GradedMatrix coproduct_matrix(const Field& F, Algebra alg, const SuperSpace& V, int i, int j);

// Pairing of S^n(V) with Γ^n(V*) on basis monomials (same exponent vectors index both).
Elt duality_pairing(const Field& F, const SuperSpace& V, const Exponents& s, const Exponents& g);
// The same pairing computed by expanding both sides in tensor powers; degree <= 6.
Elt duality_pairing_tensor(const Field& F, const SuperSpace& V, const Exponents& s, const Exponents& g);

// Algebra maps S -> Γ and Λ -> A extending the identity in degree 1.
FunctorElement symmetrize(const Field& F, const FunctorElement& x);
GradedMatrix symmetrize_matrix(const Field& F, Algebra from, const SuperSpace& V, int n);

// Dual Frobenius Γ^n(V) -> Γ^{n/p^r}(V^{(r)}); zero when p^r does not divide n.
FunctorElement dual_frobenius(const Field& F, const FunctorElement& x, int r);
GradedMatrix dual_frobenius_matrix(const Field& F, const SuperSpace& V, int n, int r);

// p^r-power map V^{(r)} -> S^{p^r}(V).
GradedMatrix p_power_matrix(const Field& F, const SuperSpace& V, int r);
FunctorElement p_power(const Field& F, const SuperSpace& V, const SparseVec& v, int r);

// --- tensor-level realization ---------------------------------------------------------

// A word in the basis letters of V and its index in V^{⊗n}.
using Word = std::vector<std::uint32_t>;

// Γ, A: invariant tensor of monomial i as (word, coefficient) terms. S, Λ: the sorted word.
std::vector<std::pair<Word, Elt>> embed_monomial(const Field& F, const FunctorBasis& b, std::size_t i);
// S, Λ: image of a word in the quotient (index, coefficient), index -1 when it vanishes.
std::pair<long, Elt> project_word(const Field& F, const FunctorBasis& b, const Word& w);

// Tensor-level product a⊗b -> F^{i+j} via signed shuffle sums (Γ, A) or concatenation (S, Λ).
FunctorElement multiply_tensor(const Field& F, const FunctorElement& a, const FunctorElement& b);
// Same, with coset representatives of S_i × S_j replaced by h·σ for a fixed h in the subgroup.
FunctorElement multiply_tensor_twisted(const Field& F, const FunctorElement& a, const FunctorElement& b);

// --- divided-power morphisms ----------------------------------------------------------

// φ = Π γ_{a_ij}(e_ij) in Γ^d Hom(V, W); e_ij sends basis j of V to basis i of W.
class DividedPowerMorphism {
public:
    DividedPowerMorphism(SuperSpace V, SuperSpace W, std::vector<int> exponents);
    // The identity of V^{⊗d} equals Σ Π γ_{a_i}(e_ii) over all a with Σ a_i = d.
    static std::vector<DividedPowerMorphism> identity_terms(const SuperSpace& V, int d);

    const SuperSpace& source() const { return V_; }
    const SuperSpace& target() const { return W_; }
    int degree() const { return d_; }
    int exponent(std::size_t i, std::size_t j) const { return exps_[i * V_.dim() + j]; }
    const std::vector<int>& exponents() const { return exps_; }
    int parity() const;

private:
    SuperSpace V_, W_;
    std::vector<int> exps_;
    int d_ = 0;
};

// Terms Σ c·word in W^{⊗d} of φ applied to a word of V^{⊗d}.
std::vector<std::pair<Word, Elt>> apply_to_word(const Field& F, const DividedPowerMorphism& phi, const Word& w);
// φ as the map V^{⊗d} -> W^{⊗d}, Σ_J (⊗ e^{⊗a})·σ.
GradedMatrix morphism_matrix(const Field& F, const DividedPowerMorphism& phi);
// The same sum written as conjugation A_W(σ) T A_V(σ)^{-1}; optionally with J replaced by h·J.
GradedMatrix morphism_matrix_conjugation(const Field& F, const DividedPowerMorphism& phi, bool twisted);

// F^n(φ): F^n(V) -> F^n(W).
GradedMatrix induced_functor_map(const Field& F, Algebra alg, const DividedPowerMorphism& phi);
// F^n of an arbitrary S_n-equivariant map M: V^{⊗n} -> W^{⊗n}.
GradedMatrix induced_from_tensor_map(const Field& F, Algebra alg, const SuperSpace& V, const SuperSpace& W,
                                     int n, const GradedMatrix& M);
// Σ_k c_k F^n(φ_k).
GradedMatrix induced_combination(const Field& F, Algebra alg, const SuperSpace& V, const SuperSpace& W, int n,
                                 const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms);
// (F1^a ⊗ F2^b)(Σ_k c_k φ_k) for morphisms of degree a+b, realized on V^{⊗(a+b)}.
GradedMatrix induced_pair_combination(const Field& F, Algebra first, Algebra second, const SuperSpace& V,
                                      const SuperSpace& W, int a, int b,
                                      const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms);

}  // namespace shom
