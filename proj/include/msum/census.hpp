#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "msum/intset.hpp"

namespace msum {

enum class Family { multisum_set, multisum_free, sum_free, sum_closed };
enum class CensusMode { exhaustive, dfs_pruned };

inline constexpr Value kExhaustiveCap = 24;
inline constexpr Value kDfsCap = 64;

const char* to_string(Family f);
const char* to_string(CensusMode m);
std::optional<Family> parse_family(const std::string& s);
std::optional<CensusMode> parse_mode(const std::string& s);

struct CensusRecord {
  Family family = Family::multisum_set;
  Value B = 0;
  std::uint64_t count = 0;
  std::size_t max_size = 0;
  /// Lexicographically first members of maximum size.
  std::vector<std::vector<Value>> witnesses;
};

struct CensusOptions {
  std::size_t max_witnesses = 10;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;
};

/// Counts the nonempty S within {1..B} belonging to `family`, with every
/// predicate judged on [1, B].
CensusRecord enumerate(Family family, Value B, CensusMode mode, CensusOptions options = {});

/// Every maximum-cardinality member, in lexicographic order.
std::vector<std::vector<Value>> density_extremes(Family family, Value B,
                                                 CensusMode mode = CensusMode::dfs_pruned);

/// Membership test through `classify`.
bool in_family(Family family, const IntSet& s);

/// Membership test on a bit mask (bit v-1 set means v in S), B <= 64.
bool mask_in_family(Family family, std::uint64_t mask, Value B);

}  // namespace msum
