#ifndef MCG_BUDGET_HPP
#define MCG_BUDGET_HPP

#include <chrono>

#include "mcg/errors.hpp"

namespace mcg {

/// Wall-clock guard threaded through the long-running stages.
struct Budget {
  std::chrono::steady_clock::time_point deadline{};
  bool enabled = false;

  static Budget seconds(double s) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(s));
    b.enabled = true;
    return b;
  }

  void check() const {
    if (enabled && std::chrono::steady_clock::now() > deadline)
      throw BudgetExceeded("time budget exceeded");
  }
};

} // namespace mcg

#endif
