#include "msum/linearity.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "msum/errors.hpp"

namespace msum {

LinearityResult detect_linear(const IntSet& s, Value min_window) {
  if (min_window < 2) throw InputError("min_window must be >= 2, got " + std::to_string(min_window));

  const Value b = s.horizon();
  const auto e = s.elements();
  if (s.max() <= b - b / 4) return {LinearityStatus::finite, std::nullopt};

  // suffix_gcd[i] = gcd(e[i], ..., e[last])
  std::vector<Value> suffix_gcd(e.size() + 1, 0);
  for (std::size_t i = e.size(); i-- > 0;) suffix_gcd[i] = std::gcd(suffix_gcd[i + 1], e[i]);

  // The tail for N in [e[i-1], e[i]) is e[i..]; its gcd is the only candidate
  // k, and the least admissible N for it is max(e[i-1], e[i] - k). Candidate
  // N values therefore increase with i.
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Value k = suffix_gcd[i];
    const Value prev = i == 0 ? 0 : e[i - 1];
    const Value n = std::max(prev, e[i] - k);
    const auto tail = static_cast<Value>(e.size() - i);
    const Value window = b / k - n / k;
    if (tail != window) continue;
    if (window < min_window) continue;
    return {LinearityStatus::certificate, LinearityCertificate{k, n, b, window}};
  }
  return {LinearityStatus::unknown, std::nullopt};
}

bool verify_certificate(const IntSet& s, const LinearityCertificate& cert) {
  if (cert.horizon > s.horizon()) {
    throw InputError("certificate horizon " + std::to_string(cert.horizon) +
                     " exceeds set horizon " + std::to_string(s.horizon()));
  }
  if (cert.k < 1 || cert.N < 0) return false;
  for (Value n = cert.N + 1; n <= cert.horizon; ++n) {
    if (s.contains(n) != (n % cert.k == 0)) return false;
  }
  return true;
}

const char* to_string(LinearityStatus status) {
  switch (status) {
    case LinearityStatus::certificate: return "certificate";
    case LinearityStatus::finite: return "finite";
    case LinearityStatus::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace msum
