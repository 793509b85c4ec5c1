#pragma once

#include <cstddef>
#include <vector>

#include "msum/intset.hpp"

namespace msum {

struct ClosureResult {
  IntSet result;
  std::size_t rounds = 0;
  /// Elements added by each round that added anything.
  std::vector<std::size_t> added_per_round;
  /// The last round added nothing and every multisum (or sum) <= B of the
  /// result is present.
  bool saturated = false;
  /// Some element in the top quarter (B - B/4, B] was added by the closure
  /// rather than supplied by the seed; a linearity check on such a result
  /// is horizon-limited.
  bool near_horizon_growth = false;
};

struct ClosureOptions {
  /// Stop after this many adding rounds (0 = run to the fixpoint). A stopped
  /// run reports saturated = false.
  std::size_t max_rounds = 0;
};

/// Least superset of `seed` inside [1, B] containing all of its multisums <= B.
/// Each round inserts every multisum present at the start of the round.
ClosureResult multisum_closure(const IntSet& seed, Value bound, ClosureOptions options = {});

/// Same, closing under sums instead of multisums.
ClosureResult sum_closure(const IntSet& seed, Value bound, ClosureOptions options = {});

}  // namespace msum
