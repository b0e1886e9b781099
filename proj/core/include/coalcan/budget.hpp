#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace coalcan {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection of a well-formed input (proof rejected, recognizer says no, ...).
struct Rejection : std::runtime_error {
  explicit Rejection(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
  int generator_cap = 4;  // free_ba generators
  int grade_cap = 3;      // GML grades
  int arity_cap = 3;      // tree arities
  int depth_cap = 3;      // modal depth / preimage depth
  // Enumeration budget shared by exhaustive scans (valuation spaces, functor
  // object enumerations). Overridable with COALCAN_BUDGET.
  uint64_t budget = 1ull << 28;

  static Caps defaults() {
    Caps c;
    if (const char* env = std::getenv("COALCAN_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) c.budget = v;
    }
    return c;
  }

  void charge(uint64_t steps, const char* where) const {
    if (steps > budget) throw BudgetExceeded(std::string("BUDGET-EXCEEDED: ") + where);
  }
};

} // namespace coalcan
