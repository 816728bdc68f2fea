#include "superhomology/errors.hpp"
#include "superhomology/extwitness.hpp"
#include "superhomology/functors.hpp"
#include "superhomology/rref.hpp"

namespace shom {

namespace {

SuperSpace even_twist(const SuperSpace& V) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < V.even_dim(); ++i) labels.push_back(V.label(i) + "(1)");
    return SuperSpace(std::move(labels), std::vector<int>(V.even_dim(), 0));
}

}  // namespace

E1Report verify_e1(const Field& F, const SuperSpace& V) {
    const int p = static_cast<int>(F.p());
    for (std::size_t i = 0; i < V.dim(); ++i)
        if (V.parity(i) != (i >= V.even_dim() ? 1 : 0)) throw InvalidInput("verify_e1 expects even basis vectors first");
    E1Report r;
    const SuperSpace I0 = even_twist(V);
    const std::size_t m = I0.dim();

    // Only the even columns of the p-power map and the even rows of the dual Frobenius matter.
    GradedMatrix pp_full = p_power_matrix(F, V, 1);
    SparseMatrix pp(pp_full.rows(), m);
    for (std::size_t i = 0; i < m; ++i) pp.set_col(i, pp_full.matrix().col(i));
    r.p_power = GradedMatrix(I0, pp_full.codomain(), 0, std::move(pp));

    r.alpha = symmetrize_matrix(F, Algebra::S, V, p);

    GradedMatrix fr_full = dual_frobenius_matrix(F, V, p, 1);
    SparseMatrix fr(m, fr_full.cols());
    for (std::size_t c = 0; c < fr_full.cols(); ++c) {
        SparseVec col;
        for (const auto& e : fr_full.matrix().col(c)) {
            if (e.idx >= m) throw std::logic_error("dual Frobenius hit an odd twisted vector");
            col.push_back(e);
        }
        fr.set_col(c, std::move(col));
    }
    r.frobenius = GradedMatrix(fr_full.domain(), I0, 0, std::move(fr));

    r.dims = {m, r.p_power.rows(), r.alpha.rows(), m};
    r.ranks = {rank_of(F, r.p_power.matrix()), rank_of(F, r.alpha.matrix()), rank_of(F, r.frobenius.matrix())};

    if (!mat_mul(F, r.alpha.matrix(), r.p_power.matrix()).is_zero()) r.failures.push_back("alpha∘p_power is nonzero");
    if (!mat_mul(F, r.frobenius.matrix(), r.alpha.matrix()).is_zero())
        r.failures.push_back("frobenius∘alpha is nonzero");
    // Homology at each position: kernel of the outgoing map minus image of the incoming one.
    const std::array<std::size_t, 4> kernel = {m - r.ranks[0], r.dims[1] - r.ranks[1], r.dims[2] - r.ranks[2], m};
    const std::array<std::size_t, 4> image = {0, r.ranks[0], r.ranks[1], r.ranks[2]};
    const char* names[4] = {"I_0^(1)", "S^p", "Gamma^p", "I_0^(1) (end)"};
    for (int k = 0; k < 4; ++k)
        if (kernel[k] != image[k])
            r.failures.push_back(std::string("not exact at ") + names[k] + ": kernel " + std::to_string(kernel[k]) +
                                 ", image " + std::to_string(image[k]));
    return r;
}

}  // namespace shom
