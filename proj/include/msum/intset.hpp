#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msum/bits.hpp"

namespace msum {

using Value = std::int64_t;

inline constexpr Value kDefaultUniverseCap = Value{1} << 24;

/// Largest horizon any IntSet or closure may use. Defaults to 2^24 and is
/// overridden by the MSUM_BMAX environment variable when it holds a positive
/// integer.
Value universe_cap();

/// Finite set of positive integers whose membership is known exactly on
/// [1, horizon]. Immutable after construction.
class IntSet {
 public:
  /// Horizon defaults to the largest element.
  explicit IntSet(std::vector<Value> elements);
  IntSet(std::vector<Value> elements, Value horizon);

  /// Builds from a membership bit array (bit v set means v is present).
  static IntSet from_bits(const DenseBits& bits, Value horizon);

  std::span<const Value> elements() const { return elements_; }
  Value horizon() const { return horizon_; }
  std::size_t size() const { return elements_.size(); }
  Value min() const { return elements_.front(); }
  Value max() const { return elements_.back(); }

  bool contains(Value v) const {
    return v >= 1 && v <= horizon_ && bits_.test(static_cast<std::size_t>(v));
  }

  /// Membership array over [0, horizon].
  const DenseBits& bits() const { return bits_; }

  /// Elements <= b with horizon b. Requires at least one element <= b.
  IntSet truncated(Value b) const;

  bool operator==(const IntSet& other) const {
    return horizon_ == other.horizon_ && elements_ == other.elements_;
  }

 private:
  IntSet(std::vector<Value> elements, Value horizon, DenseBits bits);
  void validate() const;

  std::vector<Value> elements_;
  Value horizon_ = 0;
  DenseBits bits_;
};

enum class ProfileMethod { automatic, convolution, pairs };

/// Representation counts of a set: r(m) is the number of unordered pairs
/// {s, t} from S with s + t = m, r'(m) the number with s < t.
class SumProfile {
 public:
  explicit SumProfile(const IntSet& s, ProfileMethod method = ProfileMethod::automatic);

  /// 2 * horizon; counts are exact for every m in [0, domain_max].
  Value domain_max() const { return domain_max_; }

  std::uint32_t count(Value m) const {
    if (m < 0 || m >= static_cast<Value>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(m)];
  }

  std::uint32_t strict_count(Value m) const {
    const std::uint32_t r = count(m);
    return (m % 2 == 0 && halves_.test(static_cast<std::size_t>(m / 2))) ? r - 1 : r;
  }

 private:
  Value domain_max_ = 0;
  std::vector<std::uint32_t> counts_;  // indexed by m, up to 2 * max(S)
  DenseBits halves_;                   // membership, for the doubled pair {m/2, m/2}
};

/// {m : r(m) >= 1}
std::vector<Value> sums(const IntSet& s);
/// {m : r(m) >= 2}
std::vector<Value> multisums(const IntSet& s);
/// {m : r'(m) >= 2}: two representations with four pairwise distinct summands.
std::vector<Value> strict_multisums(const IntSet& s);
/// {m : r(m) == 1}
std::vector<Value> unisums(const IntSet& s);

std::vector<Value> sums(const SumProfile& p);
std::vector<Value> multisums(const SumProfile& p);
std::vector<Value> strict_multisums(const SumProfile& p);
std::vector<Value> unisums(const SumProfile& p);

/// Set-level predicates, each judged on [1, horizon]. Sums and multisums
/// beyond the horizon are ignored.
struct Classification {
  bool is_sum_closed = false;
  bool is_multisum_closed = false;
  bool is_vacuously_multisum = false;
  bool is_sum_free = false;
  bool is_multisum_free = false;
  /// Least T such that every element in (T, horizon] is a multisum, present
  /// only when that tail is nonempty.
  std::optional<Value> complete_from;
};

Classification classify(const IntSet& s);
Classification classify(const IntSet& s, const SumProfile& p);

}  // namespace msum
