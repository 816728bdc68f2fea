#include "superhomology/enveloping.hpp"

#include <algorithm>

#include "superhomology/errors.hpp"

namespace shom {

EnvelopingAlgebra::EnvelopingAlgebra(const Field& F, RestrictedLieSuperalgebra g) : F_(F), g_(std::move(g)) {
    const auto ev = g_.even_indices(), od = g_.odd_indices();
    order_.assign(ev.begin(), ev.end());
    order_.insert(order_.end(), od.begin(), od.end());
    stride_.assign(g_.dim(), 0);
    radix_.assign(g_.dim(), 0);
    for (auto k : order_) {
        radix_[k] = g_.space.parity(k) == 0 ? static_cast<int>(F_.p()) : 2;
        stride_[k] = dim_;
        check_budget("V(g)", dim_ * radix_[k]);
        dim_ *= radix_[k];
    }
}

std::vector<int> EnvelopingAlgebra::exponents(std::size_t mono) const {
    std::vector<int> e(g_.dim(), 0);
    for (auto k : order_) e[k] = static_cast<int>((mono / stride_[k]) % radix_[k]);
    return e;
}

std::size_t EnvelopingAlgebra::index_of(const std::vector<int>& exps) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] < 0 || exps[k] >= radix_[k]) throw InvalidInput("exponent outside the PBW range");
        idx += exps[k] * stride_[k];
    }
    return idx;
}

int EnvelopingAlgebra::parity(std::size_t mono) const {
    int par = 0;
    const auto e = exponents(mono);
    for (std::size_t k = 0; k < e.size(); ++k) par ^= (e[k] & g_.space.parity(k));
    return par;
}

std::vector<std::uint32_t> EnvelopingAlgebra::word(std::size_t mono) const {
    std::vector<std::uint32_t> w;
    const auto e = exponents(mono);
    for (auto k : order_) w.insert(w.end(), e[k], k);
    return w;
}

std::string EnvelopingAlgebra::label(std::size_t mono) const {
    if (mono == 0) return "1";
    std::string s;
    const auto e = exponents(mono);
    for (auto k : order_) {
        if (!e[k]) continue;
        if (!s.empty()) s += " ";
        s += g_.space.label(k);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::size_t EnvelopingAlgebra::letter(std::uint32_t k) const { return stride_.at(k); }

const SparseVec& EnvelopingAlgebra::mul_letter(std::uint32_t k, std::size_t mono) const {
    const std::uint64_t key = static_cast<std::uint64_t>(mono) * g_.dim() + k;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SparseVec v = compute_mul_letter(k, mono);
    // Node-based map: references survive the insertions made by nested calls.
    return memo_.emplace(key, std::move(v)).first->second;
}

SparseVec EnvelopingAlgebra::apply_letter(std::uint32_t k, const SparseVec& v) const {
    SparseAccumulator acc(F_);
    for (const auto& t : v) acc.add_vec(mul_letter(k, t.idx), t.val);
    return acc.take();
}

SparseVec EnvelopingAlgebra::compute_mul_letter(std::uint32_t k, std::size_t mono) const {
    auto e = exponents(mono);
    auto first = std::find_if(order_.begin(), order_.end(), [&](std::uint32_t l) { return e[l] > 0; });
    auto pos = [&](std::uint32_t l) { return std::find(order_.begin(), order_.end(), l) - order_.begin(); };
    if (first == order_.end() || pos(k) < first - order_.begin()) {
        e[k] = 1;
        return {{static_cast<std::uint32_t>(index_of(e)), 1}};
    }
    const std::uint32_t f = *first;
    SparseAccumulator acc(F_);
    if (k == f) {
        if (g_.space.parity(k) == 0 && e[k] + 1 < radix_[k]) {
            ++e[k];
            return {{static_cast<std::uint32_t>(index_of(e)), 1}};
        }
        // x^p = x^{[p]} for even x, y^2 = [y,y]/2 for odd y.
        e[k] = g_.space.parity(k) == 0 ? 0 : e[k] - 1;
        const std::size_t rest = index_of(e);
        const bool odd = g_.space.parity(k) == 1;
        const SparseVec& rep = odd ? g_.br(k, k) : g_.pmap[k];
        const Elt scale = odd ? F_.inv(2) : 1;
        for (const auto& t : rep) acc.add_vec(mul_letter(t.idx, rest), F_.mul(scale, t.val));
        return acc.take();
    }
    // k·f·rest = ±f·(k·rest) + [k,f]·rest.
    --e[f];
    const std::size_t rest = index_of(e);
    const bool neg = (g_.space.parity(k) & g_.space.parity(f)) != 0;
    const SparseVec krest = mul_letter(k, rest);
    acc.add_vec(apply_letter(f, krest), F_.sign(neg));
    for (const auto& t : g_.br(k, f)) acc.add_vec(mul_letter(t.idx, rest), t.val);
    return acc.take();
}

SparseVec EnvelopingAlgebra::mul_mono(std::size_t u, std::size_t v) const {
    SparseVec out{{static_cast<std::uint32_t>(v), 1}};
    const auto w = word(u);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_letter(*it, out);
    return out;
}

SparseVec EnvelopingAlgebra::mul(const SparseVec& u, const SparseVec& v) const {
    SparseAccumulator acc(F_);
    for (const auto& a : u)
        for (const auto& b : v) acc.add_vec(mul_mono(a.idx, b.idx), F_.mul(a.val, b.val));
    return acc.take();
}

SparseVec EnvelopingAlgebra::word_product(const std::vector<std::uint32_t>& w) const {
    SparseVec out{{0, 1}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it >= g_.dim()) throw InvalidInput("letter outside the basis of g");
        out = apply_letter(*it, out);
    }
    return out;
}

}  // namespace shom
