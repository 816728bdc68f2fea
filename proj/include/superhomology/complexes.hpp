#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superhomology/complex.hpp"
#include "superhomology/functors.hpp"

namespace shom {

// Ω_n^i(V) = S^{n-i}(V) ⊗ A^i(V), basis index s * dim A^i + a.
struct DeRhamBidegree {
    int n = 0;
    int i = 0;
    SuperSpace space;
};

DeRhamBidegree de_rham_bidegree(const SuperSpace& V, int n, int i);

// Both differentials on Ω_n(V). d(i): Ω^i -> Ω^{i+1} for 0 <= i < n, kappa(i): Ω^i -> Ω^{i-1}
// for 1 <= i <= n. The Koszul complex is stored with degree j = n - i so that it is a cochain
// complex as well.
struct DeRhamComplexes {
    SuperSpace V;
    int n = 0;
    std::vector<SuperSpace> spaces;  // Ω_n^0 .. Ω_n^n
    CochainComplex de_rham;
    CochainComplex koszul;
    const GradedMatrix& d(int i) const { return de_rham.d(i); }
    const GradedMatrix& kappa(int i) const { return koszul.d(n - i); }
};

// Throws BudgetError when some Ω_n^i exceeds the size budget and ComplexError (degree i) when
// d² or κ² fails.
DeRhamComplexes build_de_rham(const Field& F, const SuperSpace& V, int n);

struct HomotopyReport {
    bool ok = true;
    int n = 0;
    // First failure: bidegree, entry, value found and value expected.
    int bad_i = -1;
    std::size_t row = 0, col = 0;
    Elt got = 0, expected = 0;
    std::string message;
};

// Checks d∘κ + κ∘d = n·id on every Ω_n^i.
HomotopyReport verify_homotopy(const Field& F, const DeRhamComplexes& C);

// K_n^i = ker κ with the restricted de Rham differential. basis[i] lists the kernel vectors in
// Ω_n^i coordinates; the complex is written in those coordinates.
struct KoszulKernel {
    std::vector<std::vector<SparseVec>> basis;
    CochainComplex complex;
};

// Kernel bases of κ for any n.
std::vector<std::vector<SparseVec>> koszul_kernel_basis(const Field& F, const DeRhamComplexes& C);
// d preserves ker κ only when p divides n; otherwise InvalidInput.
KoszulKernel koszul_kernel_complex(const Field& F, const DeRhamComplexes& C);

// Rank of H^t(K_n) -> H^t(Ω_n) for each t, computed from representatives modulo im d.
struct KernelInjectionReport {
    std::vector<std::size_t> kernel_h_dims;
    std::vector<std::size_t> image_ranks;
    bool injective() const { return kernel_h_dims == image_ranks; }
};

KernelInjectionReport kernel_injection(const Field& F, const DeRhamComplexes& C, const KoszulKernel& K);

// Ω_n as one space, Ω_n^0 ⊕ .. ⊕ Ω_n^n, with the offset of each summand.
struct OmegaTotal {
    SuperSpace space;
    std::vector<std::size_t> offsets;
    std::size_t dim() const { return space.dim(); }
    // Cohomological degree of a total index.
    int degree_of(std::size_t idx) const;
};

OmegaTotal omega_total(const SuperSpace& V, int n);

// θ(V): Ω_n(V^{(1)}) -> Ω_{pn}(V), the algebra map fixed on generators.
GradedMatrix cartier_map(const Field& F, const SuperSpace& V, int n);

struct CartierReport {
    std::vector<std::size_t> h_dims;         // H^t(Ω_{pn}(V)), t = 0..pn
    std::size_t source_dim = 0;              // dim Ω_n(V^{(1)})
    std::vector<std::size_t> kernel_h_dims;  // H^t(K_{pn}(V))
    std::size_t kernel_source_dim = 0;       // dim K_n(V^{(1)})
    bool cocycles = true;                    // d∘θ = 0
    bool bijective = true;                   // Ω_n(V^{(1)}) -> H(Ω_{pn}(V))
    bool kernel_iso = true;                  // K_n(V^{(1)}) -> H(K_{pn}(V))
    std::vector<std::string> failures;
    bool ok() const { return cocycles && bijective && kernel_iso; }
};

CartierReport verify_cartier(const Field& F, const SuperSpace& V, int n);

struct NaturalityReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

// Compares θ(W)∘Ω^{(1)}(φ) with H(Ω(φ))∘θ(V) on every basis vector of Ω_n(V^{(1)}), modulo im d.
NaturalityReport cartier_naturality(const Field& F, const DividedPowerMorphism& phi);

// Ω_n(φ) on the total space, φ of degree n.
GradedMatrix omega_induced(const Field& F, const std::vector<std::pair<DividedPowerMorphism, Elt>>& terms,
                           const SuperSpace& V, const SuperSpace& W, int n);

}  // namespace shom
