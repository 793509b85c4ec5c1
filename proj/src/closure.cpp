#include "msum/closure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "msum/errors.hpp"

namespace msum {

namespace {

enum class Rule { sums, multisums };

// Incremental saturating representation counts over [0, B]. `one` marks
// values with at least one pair, `two` values with at least two. Inserting e
// contributes exactly one new pair {e, x} to e + x for every present x (and
// {e, e} to 2e), so the shifted membership array updates both levels exactly.
class Closer {
 public:
  Closer(Value bound, Rule rule)
      : bound_(bound),
        rule_(rule),
        present_(static_cast<std::size_t>(bound) + 1),
        one_(static_cast<std::size_t>(bound) + 1),
        two_(static_cast<std::size_t>(bound) + 1) {}

  bool present(Value v) const { return present_.test(static_cast<std::size_t>(v)); }

  void insert(Value e) {
    present_.set(static_cast<std::size_t>(e));
    lowest_ = lowest_ == 0 ? e : std::min(lowest_, e);
    highest_ = std::max(highest_, e);

    const Value lo = e + lowest_;
    const Value hi = std::min(bound_, e + highest_);
    if (lo > hi) return;
    advance_open(rule_ == Rule::multisums ? two_ : one_);

    const std::size_t w_first = std::max(static_cast<std::size_t>(lo) / DenseBits::kWordBits, open_word_);
    const std::size_t w_last = static_cast<std::size_t>(hi) / DenseBits::kWordBits;
    if (rule_ == Rule::multisums) {
      update<true>(e, w_first, w_last);
    } else {
      update<false>(e, w_first, w_last);
    }
  }

  // Word w of the shifted array is built from source words w - q - 1 and
  // w - q. Both indices stay in range because e + lowest_ <= 64 * w + 63.
  template <bool kMultisum>
  void update(Value e, std::size_t w_first, std::size_t w_last) {
    using Word = DenseBits::Word;
    const auto q = static_cast<std::size_t>(e) / DenseBits::kWordBits;
    const auto off = static_cast<unsigned>(static_cast<std::size_t>(e) % DenseBits::kWordBits);
    const Word* src = present_.data();
    Word* one = one_.data();
    Word* two = two_.data();
    const Word* reached = kMultisum ? two : one;
    for (std::size_t w = w_first; w <= w_last; ++w) {
      Word open = ~src[w] & ~reached[w];
      if (w == w_last) open &= present_.valid_mask(w);
      if (open == 0) continue;
      Word fresh = src[w - q] << off;
      if (off != 0 && w > q) fresh |= src[w - q - 1] >> (DenseBits::kWordBits - off);
      Word newly;
      if constexpr (kMultisum) {
        newly = one[w] & fresh & ~two[w];
        two[w] |= newly;
        one[w] |= fresh;
      } else {
        newly = fresh & ~one[w];
        one[w] |= fresh;
      }
      newly &= open;
      while (newly != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(newly));
        pending_.push_back(static_cast<Value>(w * DenseBits::kWordBits + bit));
        newly &= newly - 1;
      }
    }
  }

  std::vector<Value> take_pending() {
    std::vector<Value> out;
    out.swap(pending_);
    std::sort(out.begin(), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [&](Value v) { return present(v); }), out.end());
    return out;
  }

  bool has_missing_reached() const {
    const DenseBits& reached = rule_ == Rule::multisums ? two_ : one_;
    for (std::size_t w = open_word_; w < present_.word_count(); ++w) {
      if ((reached.word(w) & ~present_.word(w) & present_.valid_mask(w)) != 0) return true;
    }
    return false;
  }

  const DenseBits& membership() const { return present_; }

 private:
  // Words below open_word_ hold no value that is both absent and unreached;
  // updates there can never produce a new element.
  void advance_open(const DenseBits& reached) {
    while (open_word_ < present_.word_count()) {
      const std::size_t w = open_word_;
      DenseBits::Word open = ~present_.word(w) & ~reached.word(w) & present_.valid_mask(w);
      if (w == 0) open &= ~DenseBits::Word{1};  // 0 is not a candidate
      if (open != 0) break;
      ++open_word_;
    }
  }

  Value bound_;
  Rule rule_;
  DenseBits present_;
  DenseBits one_;
  DenseBits two_;
  Value lowest_ = 0;
  Value highest_ = 0;
  std::size_t open_word_ = 0;
  std::vector<Value> pending_;
};

ClosureResult run_closure(const IntSet& seed, Value bound, ClosureOptions options, Rule rule) {
  if (bound > universe_cap()) {
    throw ResourceError("bound " + std::to_string(bound) + " exceeds universe cap " +
                        std::to_string(universe_cap()));
  }
  if (bound < seed.max()) {
    throw InputError("bound " + std::to_string(bound) + " is below the largest seed element");
  }

  // A seed inside gZ closes inside gZ with the same pair structure as seed / g.
  const Value g = std::accumulate(seed.elements().begin(), seed.elements().end(), Value{0},
                                  [](Value acc, Value e) { return std::gcd(acc, e); });
  const Value scaled_bound = bound / g;

  Closer closer(scaled_bound, rule);
  for (Value e : seed.elements()) closer.insert(e / g);

  ClosureResult out{seed, 0, {}, false, false};
  const Value top_quarter = bound - bound / 4;
  bool stopped = false;
  for (;;) {
    std::vector<Value> batch = closer.take_pending();
    if (batch.empty()) break;
    if (options.max_rounds != 0 && out.rounds == options.max_rounds) {
      stopped = true;
      break;
    }
    for (Value v : batch) closer.insert(v);
    if (batch.back() * g > top_quarter) out.near_horizon_growth = true;
    ++out.rounds;
    out.added_per_round.push_back(batch.size());
  }
  out.saturated = !stopped && !closer.has_missing_reached();

  DenseBits scaled(static_cast<std::size_t>(bound) + 1);
  closer.membership().for_each_set(
      [&](std::size_t v) { scaled.set(static_cast<std::size_t>(static_cast<Value>(v) * g)); });
  out.result = IntSet::from_bits(scaled, bound);
  return out;
}

}  // namespace

ClosureResult multisum_closure(const IntSet& seed, Value bound, ClosureOptions options) {
  return run_closure(seed, bound, options, Rule::multisums);
}

ClosureResult sum_closure(const IntSet& seed, Value bound, ClosureOptions options) {
  return run_closure(seed, bound, options, Rule::sums);
}

}  // namespace msum
