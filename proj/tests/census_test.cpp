#include "msum/census.hpp"

#include <gtest/gtest.h>

#include <random>

#include "msum/errors.hpp"
#include "oracles.hpp"

using namespace msum;
using oracle::Values;

namespace {

const Family kFamilies[] = {Family::multisum_set, Family::multisum_free, Family::sum_free,
                            Family::sum_closed};

// Family membership from the quadruple and pair-sum definitions, on [1, B].
bool oracle_member(Family f, const Values& s, Value B) {
  const std::set<Value> in(s.begin(), s.end());
  const auto ms = oracle::quadruple_multisums(s);
  const auto ps = oracle::pair_sums(s);
  switch (f) {
    case Family::multisum_set:
      for (Value m : ms) {
        if (m <= B && !in.count(m)) return false;
      }
      return true;
    case Family::multisum_free:
      for (Value m : ms) {
        if (in.count(m)) return false;
      }
      return true;
    case Family::sum_free:
      for (Value m : ps) {
        if (in.count(m)) return false;
      }
      return true;
    case Family::sum_closed:
      for (Value m : ps) {
        if (m <= B && !in.count(m)) return false;
      }
      return true;
  }
  return false;
}

struct OracleCensus {
  std::uint64_t count = 0;
  std::size_t max_size = 0;
  std::vector<Values> extremes;
};

OracleCensus oracle_census(Family f, Value B) {
  OracleCensus c;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << B); ++mask) {
    const Values s = oracle::from_mask(mask);
    if (!oracle_member(f, s, B)) continue;
    ++c.count;
    if (s.size() > c.max_size) {
      c.max_size = s.size();
      c.extremes.clear();
    }
    if (s.size() == c.max_size) c.extremes.push_back(s);
  }
  std::sort(c.extremes.begin(), c.extremes.end());
  return c;
}

bool contains(const std::vector<Values>& v, const Values& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Census, ParseNames) {
  for (Family f : kFamilies) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(parse_mode("exhaustive"), CensusMode::exhaustive);
  EXPECT_EQ(parse_mode("dfs_pruned"), CensusMode::dfs_pruned);
  EXPECT_FALSE(parse_family("sumset"));
  EXPECT_FALSE(parse_mode("fast"));
}

TEST(Census, MultisumFreeUpToThree) {
  EXPECT_EQ(enumerate(Family::multisum_free, 3, CensusMode::exhaustive).count, 7U);
  EXPECT_EQ(enumerate(Family::multisum_free, 3, CensusMode::dfs_pruned).count, 7U);
}

TEST(Census, MembershipExamples) {
  EXPECT_TRUE(in_family(Family::multisum_set, IntSet({1, 3, 7}, 7)));
  EXPECT_TRUE(in_family(Family::multisum_set, IntSet({1, 3, 5, 6}, 7)));
  EXPECT_FALSE(in_family(Family::multisum_free, IntSet({1, 2, 3, 4}, 4)));
  EXPECT_TRUE(in_family(Family::sum_free, IntSet({1, 3}, 4)));
  EXPECT_TRUE(mask_in_family(Family::multisum_set, 0b1000101, 7));
  EXPECT_FALSE(mask_in_family(Family::multisum_free, 0b1111, 4));
}

TEST(Census, SumFreeExtremesAtTen) {
  const auto ex = density_extremes(Family::sum_free, 10);
  EXPECT_TRUE(contains(ex, {6, 7, 8, 9, 10}));
  EXPECT_TRUE(contains(ex, {1, 3, 5, 7, 9}));
  EXPECT_TRUE(std::is_sorted(ex.begin(), ex.end()));
  EXPECT_EQ(ex, density_extremes(Family::sum_free, 10, CensusMode::exhaustive));
}

TEST(Census, MultisumFreeMaximumAtTen) {
  // Golden value from the quadruple brute force below.
  const OracleCensus o = oracle_census(Family::multisum_free, 10);
  const CensusRecord r = enumerate(Family::multisum_free, 10, CensusMode::dfs_pruned);
  EXPECT_EQ(r.max_size, 6U);
  EXPECT_EQ(o.max_size, 6U);
  EXPECT_EQ(r.count, o.count);
  std::vector<Values> ex = density_extremes(Family::multisum_free, 10);
  EXPECT_EQ(ex, o.extremes);
}

TEST(Census, AgreesWithQuadrupleOracle) {
  for (Family f : kFamilies) {
    for (Value B = 1; B <= 11; ++B) {
      const OracleCensus o = oracle_census(f, B);
      for (CensusMode m : {CensusMode::exhaustive, CensusMode::dfs_pruned}) {
        const CensusRecord r = enumerate(f, B, m, {1000, 1});
        ASSERT_EQ(r.count, o.count) << to_string(f) << " B=" << B;
        ASSERT_EQ(r.max_size, o.max_size) << to_string(f) << " B=" << B;
        const std::size_t shown = std::min<std::size_t>(o.extremes.size(), 1000);
        ASSERT_EQ(r.witnesses, std::vector<Values>(o.extremes.begin(), o.extremes.begin() + static_cast<std::ptrdiff_t>(shown)));
      }
    }
  }
}

TEST(Census, DfsMatchesExhaustiveToTwenty) {
  for (Family f : kFamilies) {
    for (Value B = 12; B <= 20; ++B) {
      const CensusRecord e = enumerate(f, B, CensusMode::exhaustive);
      const CensusRecord d = enumerate(f, B, CensusMode::dfs_pruned);
      ASSERT_EQ(e.count, d.count) << to_string(f) << " B=" << B;
      ASSERT_EQ(e.max_size, d.max_size);
      ASSERT_EQ(e.witnesses, d.witnesses);
    }
  }
}

TEST(Census, WitnessesClassifyPositively) {
  for (Family f : kFamilies) {
    const CensusRecord r = enumerate(f, 14, CensusMode::dfs_pruned);
    EXPECT_LE(r.witnesses.size(), 10U);
    EXPECT_LE(r.count, std::uint64_t{1} << 14);
    for (const Values& w : r.witnesses) {
      EXPECT_EQ(w.size(), r.max_size);
      EXPECT_TRUE(in_family(f, IntSet(w, 14)));
    }
  }
}

TEST(Census, MultisumFreeIsClosedUnderSubsets) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 500) {
    const Value B = 8 + static_cast<Value>(rng() % 20);
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << B) - 1);
    if (mask == 0 || !mask_in_family(Family::multisum_free, mask, B)) continue;
    const std::uint64_t sub = mask & rng();
    if (sub == 0) continue;
    ASSERT_TRUE(mask_in_family(Family::multisum_free, sub, B));
    ++checked;
  }
}

TEST(Census, VacuousSetsAreInBothFamilies) {
  const Value B = 12;
  for (std::uint64_t mask = 1; mask < (1U << B); ++mask) {
    const IntSet s(oracle::from_mask(mask), B);
    if (!classify(s).is_vacuously_multisum) continue;
    ASSERT_TRUE(in_family(Family::multisum_set, s));
    ASSERT_TRUE(in_family(Family::multisum_free, s));
  }
}

TEST(Census, ThreadCountDoesNotChangeOutput) {
  for (Family f : kFamilies) {
    for (CensusMode m : {CensusMode::exhaustive, CensusMode::dfs_pruned}) {
      const CensusRecord one = enumerate(f, 16, m, {25, 1});
      for (unsigned t : {2U, 3U, 8U}) {
        const CensusRecord many = enumerate(f, 16, m, {25, t});
        ASSERT_EQ(one.count, many.count);
        ASSERT_EQ(one.max_size, many.max_size);
        ASSERT_EQ(one.witnesses, many.witnesses);
      }
    }
  }
}

TEST(Census, ModeCaps) {
  EXPECT_THROW(enumerate(Family::sum_free, kExhaustiveCap + 1, CensusMode::exhaustive), ResourceError);
  EXPECT_THROW(enumerate(Family::sum_free, kDfsCap + 1, CensusMode::dfs_pruned), ResourceError);
  EXPECT_THROW(enumerate(Family::sum_free, 0, CensusMode::dfs_pruned), InputError);
}
