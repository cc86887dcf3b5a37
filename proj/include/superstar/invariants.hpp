#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superstar/polynomial.hpp"

namespace superstar {

// Deliberate breakage hooks so tests can confirm the suite notices.
enum class Fault {
  kNone,
  kStarReversed,   // star product with hbar -> -hbar
  kBracketScaled,  // Poisson bracket doubled
  kNoKoszulSign,   // multiplication ignores Grassmann signs
};

std::optional<Fault> parse_fault(std::string_view name);

struct SuiteConfig {
  Signature signature;
  int degree = 3;
  int cases = 50;
  std::uint64_t seed = 1;
  Fault fault = Fault::kNone;
  bool parallel = true;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first counterexample on failure
};

struct SuiteReport {
  std::vector<CheckOutcome> outcomes;

  bool ok() const;
  std::string to_text() const;
};

// Runs the algebraic laws of every module on randomized inputs.
SuiteReport run_invariant_suite(const SuiteConfig& config);

}  // namespace superstar
