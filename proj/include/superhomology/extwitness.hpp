#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superhomology/bar.hpp"
#include "superhomology/functors.hpp"
#include "superhomology/graded_matrix.hpp"

namespace shom {

// --- the four-term sequence I_0^{(1)} -> S^p -> Γ^p -> I_0^{(1)} --------------------------

struct E1Report {
    std::array<std::size_t, 4> dims{};  // I_0^{(1)}, S^p, Γ^p, I_0^{(1)}
    GradedMatrix p_power;               // I_0^{(1)} -> S^p
    GradedMatrix alpha;                 // S^p -> Γ^p
    GradedMatrix frobenius;             // Γ^p -> I_0^{(1)}
    std::array<std::size_t, 3> ranks{};
    // One entry per position that fails, with the homology dimension found there.
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Builds the maps on V and checks exactness at each of the four positions by ranks.
E1Report verify_e1(const Field& F, const SuperSpace& V);

// --- free resolutions, module complexes and the comparison theorem ------------------------
//
// Modules over an augmented superalgebra A with basis a_0 = 1, a_1, ... Module maps are
// determined by the images of free generators and satisfy φ(a·g) = a·φ(g).

// P_i = A ⊗ G_i; element coordinates are g * dim A + a.
struct FreeResolution {
    std::size_t algebra_dim = 0;
    std::vector<SuperSpace> generators;            // G_0 .. G_top
    std::vector<std::vector<SparseVec>> boundary;  // boundary[i][g] ∈ P_{i-1}; boundary[0] is empty
    GradedMatrix augmentation;                     // k G_0 -> M
    int top() const { return static_cast<int>(generators.size()) - 1; }
};

// C_0 <- C_1 <- .. <- C_top with an augmentation C_0 -> N.
struct ModuleComplex {
    std::vector<SuperSpace> spaces;
    std::vector<GradedMatrix> boundary;  // boundary[i - 1]: C_i -> C_{i-1}
    GradedMatrix augmentation;
    // Basis element a of A acting on c ∈ C_i.
    std::function<SparseVec(int i, std::size_t a, const SparseVec& c)> act;
    int top() const { return static_cast<int>(spaces.size()) - 1; }
};

// images[i][g] = φ_i(1 ⊗ g) ∈ C_i.
struct ChainMap {
    std::vector<std::vector<SparseVec>> images;
};

// φ_i(x) for x ∈ P_i in generator coordinates.
SparseVec apply_chain_map(const Field& F, const FreeResolution& P, const ModuleComplex& C, const ChainMap& phi,
                          int i, const SparseVec& x);

// One message per failing square: ε_C φ_0 = f ε_P, then ∂_C φ_i = φ_{i-1} ∂_P. Checks every
// degree present in phi.
std::vector<std::string> chain_map_residuals(const Field& F, const FreeResolution& P, const ModuleComplex& C,
                                             const GradedMatrix& f, const ChainMap& phi);

class LiftError : public std::runtime_error {
public:
    LiftError(int degree, const std::string& msg)
        : std::runtime_error("no lift in degree " + std::to_string(degree) + ": " + msg), degree(degree) {}
    int degree;
};

// Comparison theorem: lifts f: M -> N to φ_0 .. φ_top, top <= min(P.top(), C.top()). Each
// degree solves ∂_C x = φ_{i-1}(∂_P g) for some x; throws LiftError when a system has no
// solution, which happens only if C is not exact there or f is incompatible.
ChainMap lift_chain_map(const Field& F, const FreeResolution& P, const ModuleComplex& C, const GradedMatrix& f,
                        int top);

// h_i: P_i -> C_{i+1} with φ_i - ψ_i = ∂_C h_i + h_{i-1} ∂_P for i < top, or nullopt.
std::optional<ChainMap> find_homotopy(const Field& F, const FreeResolution& P, const ModuleComplex& C,
                                      const ChainMap& phi, const ChainMap& psi);

// P viewed as a module complex over A, augmented by P's own augmentation.
ModuleComplex as_module_complex(const Field& F, const FreeResolution& P, const AugmentedAlgebra& A);

// Differential Hom_A(P_i, N) -> Hom_A(P_{i+1}, N), f ↦ f∘∂. Basis of Hom_A(P_i, N) is
// g * dim N + n (the value of generator g).
SparseMatrix hom_differential(const Field& F, const FreeResolution& P, const SuperSpace& N,
                              const std::function<SparseVec(std::size_t a, const SparseVec& v)>& act, int i);

// --- the odd one-parameter subgroup witness ----------------------------------------------

struct C1Report {
    std::size_t m = 0, n = 0;
    bool transpose = false;
    std::vector<std::size_t> kernel_dims;  // K_p^0 .. K_p^{p-1}
    FreeResolution P;                      // periodic Λ(z)-resolution of the odd twist
    ModuleComplex K;                       // augmented Koszul kernel complex, homologically indexed
    ChainMap phi;                          // the explicit maps
    SparseMatrix phi_top;                  // φ_p on generators as a matrix G_p -> I_0^{(1)}
    std::size_t squares_checked = 0;
    bool squares_commute = false;
    bool phi_top_nonzero = false;
    bool hom_differential_zero = false;
    std::vector<std::string> failures;
    bool ok() const { return squares_commute && phi_top_nonzero && hom_differential_zero; }
};

// A homogeneous z ∈ End(V) acting on F^k(V) as a derivation through V^{⊗k}.
GradedMatrix derivation_action(const Field& F, Algebra alg, const GradedMatrix& z, int k);

// Λ(z) with z odd.
AugmentedAlgebra odd_exterior();

// On V = k^{m|n}, z odd with z.y_1 = x_m. With transpose, the same construction on k^{n|m}
// for z.y_m = x_1, which is the conjugate by parity change of the transposed subgroup.
C1Report c1_witness(const Field& F, std::size_t m, std::size_t n, bool transpose = false);

// Lifts the identity of I_1^{(1)} along P -> K' with the generic solver and compares the top
// component with the explicit φ_p modulo the image of the Hom differential.
struct C1LiftReport {
    bool lifted = false;   // the lift exists and every square commutes
    bool nonzero = false;  // the lifted class is nonzero
    bool matches = false;  // and equals the explicit class
    std::vector<std::string> failures;
    bool ok() const { return lifted && nonzero && matches; }
};

C1LiftReport c1_lift_check(const Field& F, const C1Report& r);

// --- the e_1 chain map over X(gl(m|n)) ---------------------------------------------------

struct E1ChainReport {
    std::size_t m = 0, n = 0;
    FreeResolution P;  // X(gl(m|n)) ⊗ k^{m(1)}, truncated at degree 2
    ModuleComplex E;   // Γ^p <- S^p <- I_0^{(1)}, augmented by the dual Frobenius
    ChainMap phi;
    std::size_t squares_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

E1ChainReport verify_e1_chain_map(const Field& F, std::size_t m, std::size_t n);

}  // namespace shom
