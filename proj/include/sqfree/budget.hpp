#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sqfree {

/// Thrown when a search or build would exceed its configured work cap.
/// Callers get a hard error instead of a silently truncated answer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on enumerated objects (candidate words in a graph build,
/// coarsenings in the exact solver). Overridable via SQFREE_BUDGET.
inline long long default_budget() {
    if (const char* env = std::getenv("SQFREE_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("SQFREE_BUDGET must be a positive integer");
    }
    return 20'000'000;
}

}  // namespace sqfree
