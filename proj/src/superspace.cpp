#include "superhomology/superspace.hpp"

#include <unordered_set>

#include "superhomology/errors.hpp"

namespace shom {

SuperSpace::SuperSpace() : d_(std::make_shared<Data>()) {}

SuperSpace::SuperSpace(std::vector<std::string> labels, std::vector<int> parities) {
    if (labels.size() != parities.size()) throw InvalidInput("labels and parities differ in length");
    std::unordered_set<std::string> seen;
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (parities[i] != 0 && parities[i] != 1) throw InvalidInput("parity must be 0 or 1");
        if (!seen.insert(labels[i]).second) throw InvalidInput("repeated basis label '" + labels[i] + "'");
        if (parities[i] == 0) ++d->m;
    }
    d->labels = std::move(labels);
    d->parity = std::move(parities);
    d_ = std::move(d);
}

SuperSpace SuperSpace::standard(std::size_t m, std::size_t n, const std::string& even,
                                const std::string& odd) {
    std::vector<std::string> l;
    std::vector<int> par;
    for (std::size_t i = 1; i <= m; ++i) {
        l.push_back(m == 1 && n <= 1 ? even : even + std::to_string(i));
        par.push_back(0);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        l.push_back(n == 1 && m <= 1 ? odd : odd + std::to_string(j));
        par.push_back(1);
    }
    return SuperSpace(std::move(l), std::move(par));
}

long SuperSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (d_->labels[i] == label) return static_cast<long>(i);
    return -1;
}

SuperSpace tensor(const SuperSpace& V, const SuperSpace& W) {
    std::vector<std::string> l;
    std::vector<int> par;
    l.reserve(V.dim() * W.dim());
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < W.dim(); ++j) {
            l.push_back(V.label(i) + "⊗" + W.label(j));
            par.push_back(V.parity(i) ^ W.parity(j));
        }
    return SuperSpace(std::move(l), std::move(par));
}

SuperSpace tensor_power(const SuperSpace& V, std::size_t n) {
    if (n == 0) return SuperSpace({"1"}, {0});
    SuperSpace T = V;
    for (std::size_t k = 1; k < n; ++k) T = tensor(T, V);
    return T;
}

SuperSpace dual(const SuperSpace& V) {
    std::vector<std::string> l;
    for (const auto& s : V.labels()) l.push_back(s + "*");
    return SuperSpace(std::move(l), V.parities());
}

SuperSpace hom_space(const SuperSpace& V, const SuperSpace& W) { return tensor(W, dual(V)); }

SuperSpace twist(const SuperSpace& V, int r) {
    if (r < 0) throw InvalidInput("twist exponent must be non-negative");
    if (r == 0) return V;
    std::vector<std::string> l;
    for (const auto& s : V.labels()) l.push_back(s + "(" + std::to_string(r) + ")");
    return SuperSpace(std::move(l), V.parities());
}

SuperSpace parity_change(const SuperSpace& V) {
    std::vector<std::string> l;
    std::vector<int> par;
    for (std::size_t i = 0; i < V.dim(); ++i) {
        l.push_back("Π" + V.label(i));
        par.push_back(1 - V.parity(i));
    }
    return SuperSpace(std::move(l), std::move(par));
}

SuperSpace direct_sum(const SuperSpace& V, const SuperSpace& W) {
    std::vector<std::string> l = V.labels();
    std::vector<int> par = V.parities();
    for (std::size_t j = 0; j < W.dim(); ++j) {
        std::string s = W.label(j);
        // Disambiguate clashes with a summand tag.
        if (V.index_of(s) >= 0) s += "'";
        l.push_back(s);
        par.push_back(W.parity(j));
    }
    return SuperSpace(std::move(l), std::move(par));
}

std::vector<std::size_t> tensor_digits(std::size_t idx, std::size_t base, std::size_t n) {
    std::vector<std::size_t> d(n);
    for (std::size_t k = n; k-- > 0;) {
        d[k] = idx % base;
        idx /= base;
    }
    return d;
}

std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t base) {
    std::size_t idx = 0;
    for (std::size_t d : digits) idx = idx * base + d;
    return idx;
}

}  // namespace shom
