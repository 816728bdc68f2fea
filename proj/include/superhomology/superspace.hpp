#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace shom {

// A finite-dimensional Z/2-graded space given by an ordered basis of labelled vectors.
// Copies share storage; values are immutable.
class SuperSpace {
public:
    SuperSpace();
    // Throws InvalidInput on repeated labels or a size mismatch.
    SuperSpace(std::vector<std::string> labels, std::vector<int> parities);

    // k^{m|n} with basis x1..xm (even) followed by y1..yn (odd).
    static SuperSpace standard(std::size_t m, std::size_t n, const std::string& even = "x",
                               const std::string& odd = "y");

    std::size_t dim() const { return d_->parity.size(); }
    std::size_t even_dim() const { return d_->m; }
    std::size_t odd_dim() const { return dim() - d_->m; }
    int parity(std::size_t i) const { return d_->parity[i]; }
    const std::vector<int>& parities() const { return d_->parity; }
    const std::string& label(std::size_t i) const { return d_->labels[i]; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    // Index of a label, or -1.
    long index_of(const std::string& label) const;

    bool operator==(const SuperSpace& o) const {
        return d_ == o.d_ || (d_->parity == o.d_->parity && d_->labels == o.d_->labels);
    }
    bool same_shape(const SuperSpace& o) const { return d_->parity == o.d_->parity; }

private:
    struct Data {
        std::vector<std::string> labels;
        std::vector<int> parity;
        std::size_t m = 0;
    };
    std::shared_ptr<const Data> d_;
};

// Basis of V⊗W ordered lexicographically with the V index most significant.
SuperSpace tensor(const SuperSpace& V, const SuperSpace& W);
SuperSpace tensor_power(const SuperSpace& V, std::size_t n);
// Dual basis with labels suffixed "*"; parities are unchanged.
SuperSpace dual(const SuperSpace& V);
// Hom(V, W) realized as W ⊗ V*.
SuperSpace hom_space(const SuperSpace& V, const SuperSpace& W);
// Frobenius twist V^{(r)}: the same graded basis with labels suffixed "(r)".
SuperSpace twist(const SuperSpace& V, int r);
// Parity change Π(V).
SuperSpace parity_change(const SuperSpace& V);
SuperSpace direct_sum(const SuperSpace& V, const SuperSpace& W);

// Decomposes a tensor-power index into factor indices (first factor most significant).
std::vector<std::size_t> tensor_digits(std::size_t idx, std::size_t base, std::size_t n);
std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t base);

}  // namespace shom
