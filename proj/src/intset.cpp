#include "msum/intset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "msum/errors.hpp"

namespace msum {

Value universe_cap() {
  if (const char* env = std::getenv("MSUM_BMAX")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Value>(v);
  }
  return kDefaultUniverseCap;
}

namespace {

DenseBits membership(std::span<const Value> elements, Value horizon) {
  DenseBits bits(static_cast<std::size_t>(horizon) + 1);
  for (Value e : elements) {
    if (e >= 1 && e <= horizon) bits.set(static_cast<std::size_t>(e));
  }
  return bits;
}

}  // namespace

IntSet::IntSet(std::vector<Value> elements)
    : IntSet(std::move(elements), 0) {}

IntSet::IntSet(std::vector<Value> elements, Value horizon)
    : elements_(std::move(elements)), horizon_(horizon) {
  if (elements_.empty()) throw InputError("IntSet must be nonempty");
  if (horizon_ == 0) horizon_ = elements_.back();
  validate();
  bits_ = membership(elements_, horizon_);
}

IntSet::IntSet(std::vector<Value> elements, Value horizon, DenseBits bits)
    : elements_(std::move(elements)), horizon_(horizon), bits_(std::move(bits)) {
  if (elements_.empty()) throw InputError("IntSet must be nonempty");
  validate();
}

void IntSet::validate() const {
  if (horizon_ < 1) throw InputError("horizon must be >= 1");
  if (horizon_ > universe_cap()) {
    throw ResourceError("horizon " + std::to_string(horizon_) +
                        " exceeds universe cap " + std::to_string(universe_cap()));
  }
  Value prev = 0;
  for (Value e : elements_) {
    if (e < 1) throw InputError("element " + std::to_string(e) + " is not positive");
    if (e <= prev) throw InputError("elements must be strictly increasing at " + std::to_string(e));
    if (e > horizon_) {
      throw InputError("element " + std::to_string(e) + " exceeds horizon " +
                       std::to_string(horizon_));
    }
    prev = e;
  }
}

IntSet IntSet::from_bits(const DenseBits& bits, Value horizon) {
  if (horizon > universe_cap()) {
    throw ResourceError("horizon " + std::to_string(horizon) + " exceeds universe cap");
  }
  DenseBits own(static_cast<std::size_t>(horizon) + 1);
  std::vector<Value> elements;
  const std::size_t words = std::min(own.word_count(), bits.word_count());
  for (std::size_t w = 0; w < words; ++w) {
    own.word(w) = bits.word(w) & own.valid_mask(w);
  }
  own.reset(0);
  elements.reserve(own.count());
  own.for_each_set([&](std::size_t v) { elements.push_back(static_cast<Value>(v)); });
  return IntSet(std::move(elements), horizon, std::move(own));
}

IntSet IntSet::truncated(Value b) const {
  std::vector<Value> kept;
  for (Value e : elements_) {
    if (e > b) break;
    kept.push_back(e);
  }
  return IntSet(std::move(kept), b);
}

namespace {

// Ordered representation count c(m) = #{x : x in S, m - x in S} for every m,
// via AND-popcount of the membership array against its reversal.
std::vector<std::uint32_t> convolution_counts(const IntSet& s) {
  const Value top = s.max();
  const std::size_t n = static_cast<std::size_t>(top) + 1;
  const DenseBits& fwd = s.bits();
  DenseBits rev(n);  // rev[j] = S[top - j]
  for (Value e : s.elements()) rev.set(static_cast<std::size_t>(top - e));

  std::vector<std::uint32_t> counts(2 * n - 1, 0);
  const Value lowest = s.min();
  for (Value m = 2 * lowest; m <= 2 * top; ++m) {
    // x ranges over [max(lowest, m - top), min(top, m - lowest)].
    const Value x_lo = std::max(lowest, m - top);
    const Value x_hi = std::min(top, m - lowest);
    if (x_lo > x_hi) continue;
    // S[m - x] = rev[top - m + x], so rev is read at offset (top - m).
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(m - top);
    const auto w_lo = static_cast<std::size_t>(x_lo) / DenseBits::kWordBits;
    const auto w_hi = static_cast<std::size_t>(x_hi) / DenseBits::kWordBits;
    std::uint32_t c = 0;
    for (std::size_t w = w_lo; w <= w_hi; ++w) {
      const DenseBits::Word both = fwd.word(w) & rev.shifted_word(static_cast<std::ptrdiff_t>(w), shift);
      c += static_cast<std::uint32_t>(std::popcount(both));
    }
    counts[static_cast<std::size_t>(m)] = c;
  }
  // Unordered: r(m) = (c(m) + [m/2 in S]) / 2.
  for (std::size_t m = 0; m < counts.size(); ++m) {
    const bool doubled = m % 2 == 0 && fwd.test(m / 2);
    counts[m] = (counts[m] + (doubled ? 1 : 0)) / 2;
  }
  return counts;
}

std::vector<std::uint32_t> pair_counts(const IntSet& s) {
  const auto e = s.elements();
  std::vector<std::uint32_t> counts(2 * static_cast<std::size_t>(s.max()) + 1, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i; j < e.size(); ++j) ++counts[static_cast<std::size_t>(e[i] + e[j])];
  }
  return counts;
}

}  // namespace

SumProfile::SumProfile(const IntSet& s, ProfileMethod method)
    : domain_max_(2 * s.horizon()), halves_(s.bits()) {
  if (method == ProfileMethod::automatic) {
    // Pair scan costs |S|^2 / 2, the bit convolution about max^2 / 32 word ops.
    const double pairs = 0.5 * static_cast<double>(s.size()) * static_cast<double>(s.size());
    const double conv = static_cast<double>(s.max()) * static_cast<double>(s.max()) / 32.0;
    method = pairs <= conv ? ProfileMethod::pairs : ProfileMethod::convolution;
  }
  counts_ = method == ProfileMethod::pairs ? pair_counts(s) : convolution_counts(s);
}

namespace {

template <class Pred>
std::vector<Value> collect(const SumProfile& p, Pred pred) {
  std::vector<Value> out;
  for (Value m = 2; m <= p.domain_max(); ++m) {
    if (pred(m)) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<Value> sums(const SumProfile& p) {
  return collect(p, [&](Value m) { return p.count(m) >= 1; });
}
std::vector<Value> multisums(const SumProfile& p) {
  return collect(p, [&](Value m) { return p.count(m) >= 2; });
}
std::vector<Value> strict_multisums(const SumProfile& p) {
  return collect(p, [&](Value m) { return p.strict_count(m) >= 2; });
}
std::vector<Value> unisums(const SumProfile& p) {
  return collect(p, [&](Value m) { return p.count(m) == 1; });
}

std::vector<Value> sums(const IntSet& s) { return sums(SumProfile(s)); }
std::vector<Value> multisums(const IntSet& s) { return multisums(SumProfile(s)); }
std::vector<Value> strict_multisums(const IntSet& s) { return strict_multisums(SumProfile(s)); }
std::vector<Value> unisums(const IntSet& s) { return unisums(SumProfile(s)); }

Classification classify(const IntSet& s) { return classify(s, SumProfile(s)); }

Classification classify(const IntSet& s, const SumProfile& p) {
  Classification c;
  c.is_sum_closed = true;
  c.is_multisum_closed = true;
  c.is_sum_free = true;
  c.is_multisum_free = true;
  bool any_multisum = false;
  for (Value m = 2; m <= s.horizon(); ++m) {
    const std::uint32_t r = p.count(m);
    const bool in = s.contains(m);
    if (r >= 1) {
      if (in) c.is_sum_free = false;
      else c.is_sum_closed = false;
    }
    if (r >= 2) {
      any_multisum = true;
      if (in) c.is_multisum_free = false;
      else c.is_multisum_closed = false;
    }
  }
  c.is_vacuously_multisum = !any_multisum;

  Value threshold = 0;
  for (Value e : s.elements()) {
    if (p.count(e) < 2) threshold = e;
  }
  if (threshold < s.max()) c.complete_from = threshold;
  return c;
}

}  // namespace msum
