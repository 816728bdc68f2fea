#pragma once

#include <vector>

#include "superhomology/graded_matrix.hpp"
#include "superhomology/rref.hpp"

namespace shom {

// Spaces C^lo .. C^hi with differentials d^i: C^i -> C^{i+1}.
class CochainComplex {
public:
    CochainComplex() = default;
    // Throws ComplexError naming the first degree where d∘d is nonzero, InvalidInput on
    // mismatched spaces.
    CochainComplex(const Field& F, int lo, std::vector<SuperSpace> spaces, std::vector<GradedMatrix> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(spaces_.size()) - 1; }
    const SuperSpace& space(int i) const { return spaces_.at(i - lo_); }
    // d^i for lo <= i < hi.
    const GradedMatrix& d(int i) const { return diffs_.at(i - lo_); }
    std::size_t length() const { return spaces_.size(); }

private:
    int lo_ = 0;
    std::vector<SuperSpace> spaces_;
    std::vector<GradedMatrix> diffs_;
};

struct CohomologyDegree {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<SparseVec> cocycle_basis;
    // Cocycles reduced modulo coboundaries, in reduced echelon form.
    std::vector<SparseVec> representatives;
};

std::vector<CohomologyDegree> cohomology(const Field& F, const CochainComplex& C, const RrefOptions& opt = {});
std::vector<std::size_t> cohomology_dims(const Field& F, const CochainComplex& C, const RrefOptions& opt = {});

// H of a single position: Z = ker(d_out) and B = im(d_in) inside a space of dimension n.
// Either map may be absent (nullptr).
CohomologyDegree cohomology_at(const Field& F, std::size_t n, const SparseMatrix* d_in, const SparseMatrix* d_out,
                               const RrefOptions& opt = {});

}  // namespace shom
