#include "superhomology/complex.hpp"

#include "superhomology/errors.hpp"

namespace shom {

CochainComplex::CochainComplex(const Field& F, int lo, std::vector<SuperSpace> spaces,
                               std::vector<GradedMatrix> diffs)
    : lo_(lo), spaces_(std::move(spaces)), diffs_(std::move(diffs)) {
    if (spaces_.empty()) throw InvalidInput("a complex needs at least one space");
    if (diffs_.size() + 1 != spaces_.size()) throw InvalidInput("need one differential between consecutive spaces");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (!diffs_[i].domain().same_shape(spaces_[i]) || !diffs_[i].codomain().same_shape(spaces_[i + 1]))
            throw InvalidInput("differential at degree " + std::to_string(lo_ + static_cast<int>(i)) +
                               " has the wrong domain or codomain");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        SparseMatrix dd = mat_mul(F, diffs_[i + 1].matrix(), diffs_[i].matrix());
        if (!dd.is_zero())
            throw ComplexError(lo_ + static_cast<int>(i),
                               std::to_string(dd.nnz()) + " nonzero entries in d∘d");
    }
}

CohomologyDegree cohomology_at(const Field& F, std::size_t n, const SparseMatrix* d_in, const SparseMatrix* d_out,
                               const RrefOptions& opt) {
    CohomologyDegree h;
    if (d_out) {
        h.cocycle_basis = gaussian_data(F, *d_out, opt).kernel_basis;
    } else {
        for (std::uint32_t i = 0; i < n; ++i) h.cocycle_basis.push_back({{i, 1}});
    }
    Subspace B(F, n);
    if (d_in) B = Subspace::column_space(F, *d_in, opt);
    std::vector<SparseVec> reduced;
    reduced.reserve(h.cocycle_basis.size());
    for (const auto& z : h.cocycle_basis) {
        SparseVec r = B.reduce(z);
        if (!r.empty()) reduced.push_back(std::move(r));
    }
    h.representatives = rref_rows(F, std::move(reduced), n, opt).rows;
    h.dim = h.representatives.size();
    return h;
}

std::vector<CohomologyDegree> cohomology(const Field& F, const CochainComplex& C, const RrefOptions& opt) {
    std::vector<CohomologyDegree> out;
    for (int i = C.lo(); i <= C.hi(); ++i) {
        const SparseMatrix* din = i > C.lo() ? &C.d(i - 1).matrix() : nullptr;
        const SparseMatrix* dout = i < C.hi() ? &C.d(i).matrix() : nullptr;
        CohomologyDegree h = cohomology_at(F, C.space(i).dim(), din, dout, opt);
        h.degree = i;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::size_t> cohomology_dims(const Field& F, const CochainComplex& C, const RrefOptions& opt) {
    std::vector<std::size_t> dims;
    for (int i = C.lo(); i <= C.hi(); ++i) {
        std::size_t z = C.space(i).dim() - (i < C.hi() ? rank_of(F, C.d(i).matrix(), opt) : 0);
        std::size_t b = i > C.lo() ? rank_of(F, C.d(i - 1).matrix(), opt) : 0;
        dims.push_back(z - b);
    }
    return dims;
}

}  // namespace shom
