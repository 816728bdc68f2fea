#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "superhomology/permutation.hpp"
#include "superhomology/sparse.hpp"
#include "superhomology/superspace.hpp"

namespace shom {

// A homogeneous linear map between superspaces; column j is the image of domain basis j.
class GradedMatrix {
public:
    GradedMatrix() = default;
    // Throws ParityError if an entry breaks the declared parity, InvalidInput on shape mismatch.
    GradedMatrix(SuperSpace domain, SuperSpace codomain, int parity, SparseMatrix m);
    static GradedMatrix zero(const SuperSpace& domain, const SuperSpace& codomain, int parity = 0);
    static GradedMatrix identity(const SuperSpace& V);
    static GradedMatrix from_triples(const Field& F, const SuperSpace& domain, const SuperSpace& codomain,
                                     int parity,
                                     const std::vector<std::tuple<std::uint32_t, std::uint32_t, Elt>>& t);

    const SuperSpace& domain() const { return dom_; }
    const SuperSpace& codomain() const { return cod_; }
    int parity() const { return parity_; }
    const SparseMatrix& matrix() const { return m_; }
    std::size_t rows() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }
    Elt get(std::size_t r, std::size_t c) const { return m_.get(r, c); }
    bool is_zero() const { return m_.is_zero(); }

    bool operator==(const GradedMatrix& o) const {
        return parity_ == o.parity_ && m_ == o.m_ && dom_.same_shape(o.dom_) && cod_.same_shape(o.cod_);
    }

private:
    SuperSpace dom_, cod_;
    int parity_ = 0;
    SparseMatrix m_;
};

// a ∘ b.
GradedMatrix compose(const Field& F, const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix add(const Field& F, const GradedMatrix& a, const GradedMatrix& b, Elt b_scale = 1);
GradedMatrix scale(const Field& F, const GradedMatrix& a, Elt s);
SparseVec apply(const Field& F, const GradedMatrix& a, const SparseVec& v);

// (f⊗g)(v⊗w) = (-1)^{|g||v|} f(v)⊗g(w).
GradedMatrix tensor_of_maps(const Field& F, const GradedMatrix& f, const GradedMatrix& g);
// T(v⊗w) = (-1)^{|v||w|} w⊗v.
GradedMatrix braiding(const Field& F, const SuperSpace& V, const SuperSpace& W);
// Right action of sigma on V^{⊗n}: factor i of v·σ is factor σ(i) of v, with the Koszul sign.
// sym_action(σ)·sym_action(τ) = sym_action(τ∘σ).
GradedMatrix sym_action(const Field& F, const SuperSpace& V, std::size_t n, const Perm& sigma);
// Same action on an already built tensor power, given the base space.
GradedMatrix sym_action_on(const Field& F, const SuperSpace& base, const SuperSpace& power, std::size_t n,
                           const Perm& sigma);

// Plain-text dump: header `gmatrix p=.. rows=.. cols=.. parity=..` then sorted `row col value` lines.
void dump(std::ostream& os, const Field& F, const GradedMatrix& m);
std::string dump_string(const Field& F, const GradedMatrix& m);

}  // namespace shom
