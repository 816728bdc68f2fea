#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shom {

// A construction would exceed the configured dimension cap.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what_built, std::size_t dimension, std::size_t cap)
        : std::runtime_error(what_built + " has dimension " + std::to_string(dimension) +
                             " exceeding the budget " + std::to_string(cap)),
          object(what_built), dimension(dimension), cap(cap) {}
    std::string object;
    std::size_t dimension;
    std::size_t cap;
};

// A sequence of maps fails d∘d = 0 at the named degree.
class ComplexError : public std::runtime_error {
public:
    ComplexError(int degree, const std::string& msg)
        : std::runtime_error("complex invariant fails at degree " + std::to_string(degree) + ": " +
                             msg),
          degree(degree) {}
    int degree;
};

// A homogeneous map has an entry that violates its declared parity.
class ParityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments to a library operation (mismatched spaces, bad exponents, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Default dimension cap; the CLI reads SUPERHOMOLOGY_BUDGET to override it.
constexpr std::size_t kDefaultBudget = 20000;

// Returns the budget from the environment, or the default when unset.
std::size_t budget_from_env();

// Process-wide cap used by the builders; starts at budget_from_env().
std::size_t budget();
void set_budget(std::size_t cap);

inline void check_budget(const std::string& what, std::size_t dim, std::size_t cap) {
    if (dim > cap) throw BudgetError(what, dim, cap);
}
inline void check_budget(const std::string& what, std::size_t dim) { check_budget(what, dim, budget()); }

}  // namespace shom
