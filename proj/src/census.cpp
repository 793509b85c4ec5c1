#include "msum/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "msum/errors.hpp"

namespace msum {

const char* to_string(Family f) {
  switch (f) {
    case Family::multisum_set: return "multisum_set";
    case Family::multisum_free: return "multisum_free";
    case Family::sum_free: return "sum_free";
    case Family::sum_closed: return "sum_closed";
  }
  return "?";
}

const char* to_string(CensusMode m) {
  return m == CensusMode::exhaustive ? "exhaustive" : "dfs_pruned";
}

std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::multisum_set, Family::multisum_free, Family::sum_free, Family::sum_closed}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<CensusMode> parse_mode(const std::string& s) {
  if (s == "exhaustive") return CensusMode::exhaustive;
  if (s == "dfs_pruned") return CensusMode::dfs_pruned;
  return std::nullopt;
}

bool in_family(Family family, const IntSet& s) {
  const Classification c = classify(s);
  switch (family) {
    case Family::multisum_set: return c.is_multisum_closed;
    case Family::multisum_free: return c.is_multisum_free;
    case Family::sum_free: return c.is_sum_free;
    case Family::sum_closed: return c.is_sum_closed;
  }
  return false;
}

namespace {

using Mask = std::uint64_t;

Mask low_bits(Value B) { return B >= 64 ? ~Mask{0} : (Mask{1} << B) - 1; }

Mask shl(Mask m, Value by) { return by >= 64 ? 0 : m << by; }

std::vector<Value> mask_values(Mask m) {
  std::vector<Value> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Accumulates the lexicographically first `limit` members of maximum size.
struct Extremes {
  explicit Extremes(std::size_t lim = 0) : limit(lim) {}

  std::size_t limit;
  std::size_t max_size = 0;
  std::vector<std::vector<Value>> sets;

  void offer(std::size_t size, Mask m) {
    if (size < max_size) return;
    if (size > max_size) {
      max_size = size;
      sets.clear();
    }
    std::vector<Value> v = mask_values(m);
    if (sets.size() == limit && !(v < sets.back())) return;
    sets.insert(std::upper_bound(sets.begin(), sets.end(), v), std::move(v));
    if (sets.size() > limit) sets.pop_back();
  }

  void merge(const Extremes& other) {
    if (other.max_size < max_size || other.sets.empty()) return;
    if (other.max_size > max_size) {
      max_size = other.max_size;
      sets = other.sets;
      return;
    }
    std::vector<std::vector<Value>> all;
    std::merge(sets.begin(), sets.end(), other.sets.begin(), other.sets.end(), std::back_inserter(all));
    if (all.size() > limit) all.resize(limit);
    sets = std::move(all);
  }
};

struct Partial {
  std::uint64_t count = 0;
  Extremes extremes;
};

bool admits(Family family, Mask s, Mask one, Mask two, Mask all) {
  switch (family) {
    case Family::multisum_set: return (two & ~s & all) == 0;
    case Family::multisum_free: return (two & s) == 0;
    case Family::sum_free: return (one & s) == 0;
    case Family::sum_closed: return (one & ~s & all) == 0;
  }
  return false;
}

// Saturating representation masks of S restricted to [1, B].
void profile_masks(Mask s, Value B, Mask& one, Mask& two) {
  const Mask all = low_bits(B);
  one = two = 0;
  Mask below = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const Value x = std::countr_zero(rest) + 1;
    below |= Mask{1} << (x - 1);
    const Mask fresh = shl(below, x) & all;
    two |= one & fresh;
    one |= fresh;
  }
}

// Decisions are made for v = 1..B in order. Every pair summing to v uses
// values below v, so the masks already hold r(v) when v is decided.
class Dfs {
 public:
  Dfs(Family family, Value B, std::size_t limit)
      : family_(family), B_(B), all_(low_bits(B)), partial_{0, Extremes(limit)} {}

  void run(Value v, Mask s, Mask one, Mask two, std::size_t size) {
    if (v > B_) {
      if (size > 0) {
        ++partial_.count;
        partial_.extremes.offer(size, s);
      }
      return;
    }
    const Mask bit = Mask{1} << (v - 1);
    const bool reached1 = (one & bit) != 0;
    const bool reached2 = (two & bit) != 0;
    bool may_include = true;
    bool may_exclude = true;
    switch (family_) {
      case Family::multisum_set: may_exclude = !reached2; break;
      case Family::sum_closed: may_exclude = !reached1; break;
      case Family::multisum_free: may_include = !reached2; break;
      case Family::sum_free: may_include = !reached1; break;
    }
    if (may_include) {
      const Mask with = s | bit;
      const Mask fresh = shl(with, v) & all_;
      run(v + 1, with, one | fresh, two | (one & fresh), size + 1);
    }
    if (may_exclude) run(v + 1, s, one, two, size);
  }

  Partial& result() { return partial_; }

 private:
  Family family_;
  Value B_;
  Mask all_;
  Partial partial_;
};

template <class Work>
std::vector<Partial> run_units(std::size_t units, unsigned threads, Work work) {
  std::vector<Partial> results(units);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u; (u = next.fetch_add(1)) < units;) results[u] = work(u);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(units)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

bool mask_in_family(Family family, std::uint64_t mask, Value B) {
  Mask one = 0, two = 0;
  profile_masks(mask, B, one, two);
  return admits(family, mask, one, two, low_bits(B));
}

CensusRecord enumerate(Family family, Value B, CensusMode mode, CensusOptions options) {
  if (B < 1) throw InputError("census bound must be >= 1");
  const Value cap = mode == CensusMode::exhaustive ? kExhaustiveCap : kDfsCap;
  if (B > cap) {
    throw ResourceError(std::string(to_string(mode)) + " census supports B <= " +
                        std::to_string(cap) + ", got " + std::to_string(B));
  }
  const std::size_t limit = options.max_witnesses;

  std::vector<Partial> parts;
  if (mode == CensusMode::exhaustive) {
    // Units split the mask range by its top bits.
    const Value split = std::min<Value>(B, 6);
    const std::size_t units = std::size_t{1} << split;
    const Value low = B - split;
    parts = run_units(units, options.threads, [&](std::size_t u) {
      Partial p{0, Extremes(limit)};
      const Mask base = static_cast<Mask>(u) << low;
      const Mask span = Mask{1} << low;
      for (Mask lo = 0; lo < span; ++lo) {
        const Mask m = base | lo;
        if (m == 0 || !mask_in_family(family, m, B)) continue;
        ++p.count;
        p.extremes.offer(static_cast<std::size_t>(std::popcount(m)), m);
      }
      return p;
    });
  } else {
    // Units fix the decisions for the first few values; subtrees are independent.
    const Value depth = std::min<Value>(B, 6);
    const std::size_t units = std::size_t{1} << depth;
    const Mask all = low_bits(B);
    parts = run_units(units, options.threads, [&](std::size_t u) {
      Dfs dfs(family, B, limit);
      Mask s = 0, one = 0, two = 0;
      std::size_t size = 0;
      for (Value v = 1; v <= depth; ++v) {
        const Mask bit = Mask{1} << (v - 1);
        const bool include = (u >> (v - 1)) & 1U;
        const bool r1 = (one & bit) != 0, r2 = (two & bit) != 0;
        bool ok = true;
        switch (family) {
          case Family::multisum_set: ok = include || !r2; break;
          case Family::sum_closed: ok = include || !r1; break;
          case Family::multisum_free: ok = !include || !r2; break;
          case Family::sum_free: ok = !include || !r1; break;
        }
        if (!ok) return Partial{0, Extremes(limit)};
        if (include) {
          s |= bit;
          const Mask fresh = shl(s, v) & all;
          two |= one & fresh;
          one |= fresh;
          ++size;
        }
      }
      dfs.run(depth + 1, s, one, two, size);
      return std::move(dfs.result());
    });
  }

  CensusRecord record;
  record.family = family;
  record.B = B;
  Extremes merged{limit};
  for (const Partial& p : parts) {
    record.count += p.count;
    merged.merge(p.extremes);
  }
  record.max_size = merged.max_size;
  record.witnesses = std::move(merged.sets);
  return record;
}

std::vector<std::vector<Value>> density_extremes(Family family, Value B, CensusMode mode) {
  CensusOptions options;
  options.max_witnesses = std::numeric_limits<std::size_t>::max();
  return enumerate(family, B, mode, options).witnesses;
}

}  // namespace msum
