#pragma once

#include <cstddef>
#include <cstdint>

namespace immvar {

// Work limits for the enumeration-heavy operations. All limits are inclusive;
// exceeding one raises BoundError rather than silently truncating.
struct Bounds {
  std::uint64_t enumeration = 2'000'000;       // largest allowed n^k
  std::size_t group_table = 10'080;            // eager composition-table cutoff
  int relabel_n = 7;                           // largest n swept in S_n relabeling checks
  std::uint64_t ideal_cap = 200'000;           // order-ideal enumeration cap
  std::size_t shell_facet_cap = 24;            // exhaustive shellability cutoff
  std::uint64_t shell_step_budget = 2'000'000; // backtracking budget past the cutoff
  std::uint64_t poset_work = 400'000'000;      // |B|^2 * |G| cap for poset construction
};

} // namespace immvar
