#pragma once

#include <cstddef>
#include <cstdint>

namespace gk {

struct Budgets {
  std::size_t enumeration = 200000;      // |W| cap for memoized enumeration
  std::uint64_t reversing_steps = 1000000;
  std::size_t sliding_circuits = 100000;  // cap on |SC(alpha)|
  std::size_t tits_orbit = 200000;       // type-II orbit size before falling back
  unsigned root_depth = 16;
  unsigned jobs = 1;
};

/// Process-wide defaults. The enumeration cap honours GARSIDE_KIT_BUDGET.
Budgets& default_budgets();

}  // namespace gk
