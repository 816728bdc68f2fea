#include "superhomology/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace shom {

std::size_t budget_from_env() {
    const char* raw = std::getenv("SUPERHOMOLOGY_BUDGET");
    if (!raw || !*raw) return kDefaultBudget;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(raw, &pos);
        if (pos != std::string(raw).size() || v == 0) throw InvalidInput("bad budget");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("SUPERHOMOLOGY_BUDGET must be a positive integer, got '") + raw + "'");
    }
}

namespace {
std::atomic<std::size_t> g_budget{0};
}

std::size_t budget() {
    std::size_t b = g_budget.load();
    if (b == 0) {
        b = budget_from_env();
        g_budget.store(b);
    }
    return b;
}

void set_budget(std::size_t cap) {
    if (cap == 0) throw InvalidInput("budget must be positive");
    g_budget.store(cap);
}

}  // namespace shom
