#include "superhomology/field.hpp"
#include "superhomology/errors.hpp"

#include <limits>

namespace shom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 15) || !is_prime(p))
        throw InvalidInput("field characteristic must be an odd prime below 32768, got " +
                                    std::to_string(p));
    // Inverse table by the recurrence inv[a] = -(p / a) * inv[p mod a].
    inverse_.assign(p, 0);
    inverse_[1] = 1;
    for (std::uint32_t a = 2; a < p; ++a)
        inverse_[a] = p - static_cast<Elt>((static_cast<std::uint64_t>(p / a) * inverse_[p % a]) % p);
    fact_.assign(p, 1);
    for (std::uint32_t a = 1; a < p; ++a) fact_[a] = mul(fact_[a - 1], a);
}

Elt Field::inv(Elt a) const {
    if (a == 0 || a >= p_) throw std::domain_error("inverse of zero in F_p");
    return inverse_[a];
}

Elt Field::pow(Elt a, std::uint64_t e) const {
    Elt r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elt Field::factorial(std::uint64_t n) const { return n >= p_ ? 0 : fact_[n]; }

Elt Field::binomial(std::uint64_t n, std::uint64_t k) const {
    if (k > n) return 0;
    Elt r = 1;
    while (n || k) {
        std::uint64_t a = n % p_, b = k % p_;
        if (b > a) return 0;
        r = mul(r, mul(fact_[a], mul(inverse_[fact_[b]], inverse_[fact_[a - b]])));
        n /= p_;
        k /= p_;
    }
    return r;
}

Elt Field::multinomial(const std::vector<int>& parts) const {
    Elt r = 1;
    std::uint64_t total = 0;
    for (int k : parts) {
        total += static_cast<std::uint64_t>(k);
        r = mul(r, binomial(total, static_cast<std::uint64_t>(k)));
        if (r == 0) return 0;
    }
    return r;
}

std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient overflow");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace shom
