#include "superhomology/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "superhomology/errors.hpp"

namespace shom {

Perm perm_identity(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw InvalidInput("composing permutations of different sizes");
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

bool perm_is_valid(const Perm& a) {
    std::vector<char> seen(a.size(), 0);
    for (int x : a) {
        if (x < 0 || static_cast<std::size_t>(x) >= a.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

int perm_sign(const Perm& a) {
    int inv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

Perm perm_adjacent(std::size_t n, std::size_t i) {
    if (i + 1 >= n) throw InvalidInput("adjacent transposition out of range");
    Perm p = perm_identity(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

std::vector<Perm> perm_all(std::size_t n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool koszul_sign_odd(const std::vector<int>& parities, const Perm& sigma) {
    // Each pair of odd factors whose relative order flips contributes a sign.
    bool odd = false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!parities[sigma[i]]) continue;
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (parities[sigma[j]] && sigma[i] > sigma[j]) odd = !odd;
    }
    return odd;
}

}  // namespace shom
