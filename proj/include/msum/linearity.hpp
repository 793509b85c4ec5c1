#pragma once

#include <optional>

#include "msum/intset.hpp"

namespace msum {

inline constexpr Value kDefaultMinWindow = 10;

/// Attests that for every n in (N, horizon]: n is in S exactly when k | n.
struct LinearityCertificate {
  Value k = 1;
  Value N = 0;
  Value horizon = 0;
  /// Multiples of k in (N, horizon].
  Value window_count = 0;

  bool operator==(const LinearityCertificate&) const = default;
};

enum class LinearityStatus { certificate, finite, unknown };

struct LinearityResult {
  LinearityStatus status = LinearityStatus::unknown;
  std::optional<LinearityCertificate> certificate;
};

/// Searches for the least N whose tail (N, B] is exactly the multiples of
/// k = gcd(tail), with at least min_window of them. Reports `finite` when no
/// element lies in the top quarter (B - B/4, B]; this boundary is a
/// heuristic, not a theorem.
LinearityResult detect_linear(const IntSet& s, Value min_window = kDefaultMinWindow);

/// True iff n in S <=> k | n for every n in (cert.N, cert.horizon].
bool verify_certificate(const IntSet& s, const LinearityCertificate& cert);

const char* to_string(LinearityStatus status);

}  // namespace msum
