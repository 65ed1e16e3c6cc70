#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

/// Runtime knobs shared by the solver, the survey and the CLI.
///
/// `budget` is the largest graph order for which the solver is allowed to
/// run a full subset exhaustion (the only way to *prove* that no m-resolving
/// set exists when there is no twin triple). It is hard-capped at 30: a
/// 2^30-subset scan is the most we ever accept.
struct RunConfig {
  static constexpr int kBudgetHardCap = 30;

  int budget = 22;
  int order_cap = 4096;
  int workers = 1;
  unsigned seed = 12345;
  std::string format = "csv";

  void check() const {
    if (budget < 1 || budget > kBudgetHardCap)
      throw std::invalid_argument("budget must be in 1.." +
                                  std::to_string(kBudgetHardCap) +
                                  " (2^" + std::to_string(kBudgetHardCap) +
                                  " subset scans are refused)");
    if (workers < 1 || workers > 256)
      throw std::invalid_argument("workers must be in 1..256");
    if (order_cap < 2 || order_cap > 4096)
      throw std::invalid_argument("order cap must be in 2..4096");
  }
};

}  // namespace zdg
