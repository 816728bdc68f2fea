#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shom {

using Elt = std::uint32_t;

// Arithmetic in the prime field F_p for an odd prime 3 <= p < 2^15.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const {
        return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const;

    // Reduces a signed integer into [0, p).
    Elt from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elt>(r < 0 ? r + p_ : r);
    }
    Elt sign(bool negative) const { return negative ? p_ - 1 : 1; }

    // n! mod p, binomial C(n,k) mod p (Lucas), multinomial mod p.
    Elt factorial(std::uint64_t n) const;
    Elt inv_factorial(std::uint64_t n) const { return inv(factorial(n)); }
    Elt binomial(std::uint64_t n, std::uint64_t k) const;
    Elt multinomial(const std::vector<int>& parts) const;

    // Signed representative in (-p/2, p/2], used for readable output.
    long long centered(Elt a) const {
        return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
    std::vector<Elt> inverse_;
    std::vector<Elt> fact_;
};

bool is_prime(std::uint64_t n);

// Exact integer binomial coefficient (no reduction); throws on overflow.
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k);

}  // namespace shom
