#include <numeric>

#include "superhomology/complexes.hpp"
#include "superhomology/errors.hpp"

namespace shom {

namespace {

// d (step = +1) or κ (step = -1) as one matrix on the total space Ω_n.
SparseMatrix total_map(const DeRhamComplexes& C, const OmegaTotal& T, int step) {
    SparseMatrix m(T.dim(), T.dim());
    for (int i = 0; i <= C.n; ++i) {
        const int j = i + step;
        if (j < 0 || j > C.n) continue;
        const GradedMatrix& b = step > 0 ? C.d(i) : C.kappa(i);
        for (std::size_t c = 0; c < b.cols(); ++c) {
            SparseVec col = b.matrix().col(c);
            for (auto& e : col) e.idx += static_cast<std::uint32_t>(T.offsets[j]);
            m.set_col(T.offsets[i] + c, std::move(col));
        }
    }
    return m;
}

std::vector<SparseVec> columns(const SparseMatrix& m) {
    std::vector<SparseVec> out;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.col(c).empty()) out.push_back(m.col(c));
    return out;
}

// Rank of span(extra ∪ base) minus rank of span(base).
std::size_t added_rank(const Field& F, std::size_t ambient, const std::vector<SparseVec>& base,
                       const std::vector<SparseVec>& extra) {
    std::vector<SparseVec> all = base;
    all.insert(all.end(), extra.begin(), extra.end());
    return Subspace::span(F, ambient, std::move(all)).dim() - Subspace::span(F, ambient, base).dim();
}

std::vector<SparseVec> shifted(const std::vector<SparseVec>& vs, std::size_t offset) {
    std::vector<SparseVec> out = vs;
    for (auto& v : out)
        for (auto& e : v) e.idx += static_cast<std::uint32_t>(offset);
    return out;
}

std::size_t total(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

}  // namespace

CartierReport verify_cartier(const Field& F, const SuperSpace& V, int n) {
    const int pn = static_cast<int>(F.p()) * n;
    CartierReport r;
    DeRhamComplexes big = build_de_rham(F, V, pn);
    DeRhamComplexes small = build_de_rham(F, twist(V, 1), n);
    OmegaTotal Tb = omega_total(V, pn), Ts = omega_total(twist(V, 1), n);
    GradedMatrix theta = cartier_map(F, V, n);
    SparseMatrix D = total_map(big, Tb, +1), K = total_map(big, Tb, -1);
    r.source_dim = Ts.dim();
    r.h_dims = cohomology_dims(F, big.de_rham);

    // (a) every image is a cocycle.
    SparseMatrix dtheta = mat_mul(F, D, theta.matrix());
    for (std::size_t c = 0; c < dtheta.cols() && r.cocycles; ++c)
        if (!dtheta.col(c).empty()) {
            r.cocycles = false;
            r.failures.push_back("d∘θ is nonzero on " + Ts.space.label(c));
        }

    // (b) the classes of the images form a basis of H(Ω_pn).
    std::vector<SparseVec> bound = columns(D);
    const std::size_t rk = added_rank(F, Tb.dim(), bound, columns(theta.matrix()));
    if (total(r.h_dims) != r.source_dim || rk != r.source_dim) {
        r.bijective = false;
        r.failures.push_back("θ on cohomology: dim H = " + std::to_string(total(r.h_dims)) + ", rank = " +
                             std::to_string(rk) + ", source dim = " + std::to_string(r.source_dim));
    }

    // (c) θ(K_n(V')) lies in K_pn(V) and maps onto H(K_pn(V)).
    auto ks = koszul_kernel_basis(F, small);
    KoszulKernel kb = koszul_kernel_complex(F, big);
    r.kernel_h_dims = cohomology_dims(F, kb.complex);
    std::vector<SparseVec> images;
    for (int i = 0; i <= n; ++i)
        for (const auto& v : shifted(ks[i], Ts.offsets[i])) {
            ++r.kernel_source_dim;
            SparseVec img = mat_apply(F, theta.matrix(), v);
            if (!mat_apply(F, K, img).empty() && r.kernel_iso) {
                r.kernel_iso = false;
                r.failures.push_back("θ moves a Koszul kernel vector of degree " + std::to_string(i) +
                                     " outside ker κ");
            }
            images.push_back(std::move(img));
        }
    std::vector<SparseVec> kbound;
    for (int i = 0; i <= pn; ++i)
        for (const auto& v : shifted(kb.basis[i], Tb.offsets[i])) {
            SparseVec dv = mat_apply(F, D, v);
            if (!dv.empty()) kbound.push_back(std::move(dv));
        }
    const std::size_t krk = added_rank(F, Tb.dim(), kbound, images);
    if (total(r.kernel_h_dims) != r.kernel_source_dim || krk != r.kernel_source_dim) {
        r.kernel_iso = false;
        r.failures.push_back("θ on Koszul kernel cohomology: dim H = " + std::to_string(total(r.kernel_h_dims)) +
                             ", rank = " + std::to_string(krk) + ", source dim = " +
                             std::to_string(r.kernel_source_dim));
    }
    return r;
}

NaturalityReport cartier_naturality(const Field& F, const DividedPowerMorphism& phi) {
    const int p = static_cast<int>(F.p());
    if (phi.degree() % p != 0) throw InvalidInput("morphism degree must be a multiple of p");
    const int n = phi.degree() / p;
    const SuperSpace &V = phi.source(), &W = phi.target();
    const SuperSpace V1 = twist(V, 1), W1 = twist(W, 1);

    // Ω^{(1)}(φ) = Ω(φ^#(φ)) with φ^# the dual Frobenius on Γ^{pn} Hom(V, W).
    const SuperSpace H = hom_space(V, W);
    FunctorElement el = monomial_element(functor_basis(Algebra::Gamma, H, phi.degree()), phi.exponents());
    FunctorElement fr = dual_frobenius(F, el, 1);
    std::vector<std::pair<DividedPowerMorphism, Elt>> twisted;
    for (const auto& e : fr.coeffs) twisted.emplace_back(DividedPowerMorphism(V1, W1, fr.basis->monomial(e.idx)), e.val);

    GradedMatrix left = compose(F, cartier_map(F, W, n), omega_induced(F, twisted, V1, W1, n));
    GradedMatrix right = compose(F, omega_induced(F, {{phi, 1}}, V, W, phi.degree()), cartier_map(F, V, n));

    DeRhamComplexes CW = build_de_rham(F, W, phi.degree());
    OmegaTotal TW = omega_total(W, phi.degree());
    Subspace bound = Subspace::column_space(F, total_map(CW, TW, +1));

    std::string name = "φ = Γ(";
    for (std::size_t k = 0; k < phi.exponents().size(); ++k) name += (k ? "," : "") + std::to_string(phi.exponents()[k]);
    name += ")";

    NaturalityReport r;
    for (std::size_t c = 0; c < left.cols(); ++c, ++r.checked) {
        SparseVec diff = sv_axpy(F, left.matrix().col(c), F.p() - 1, right.matrix().col(c));
        if (bound.contains(diff)) continue;
        r.ok = false;
        r.failures.push_back("classes differ on " + left.domain().label(c) + " for " + name);
    }
    return r;
}

}  // namespace shom
