#include "msum/linearity.hpp"

#include <gtest/gtest.h>

#include "msum/closure.hpp"
#include "msum/errors.hpp"
#include "oracles.hpp"

using namespace msum;

TEST(DetectLinear, Evens) {
  const LinearityResult r = detect_linear(IntSet(oracle::multiples(2, 200), 200), 10);
  ASSERT_EQ(r.status, LinearityStatus::certificate);
  EXPECT_EQ(r.certificate->k, 2);
  EXPECT_EQ(r.certificate->N, 0);
  EXPECT_EQ(r.certificate->window_count, 100);
}

TEST(DetectLinear, FiniteSet) {
  const LinearityResult r = detect_linear(IntSet({1, 3, 5, 6}, 100));
  EXPECT_EQ(r.status, LinearityStatus::finite);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(DetectLinear, ClosureOfFirstThree) {
  const IntSet a = multisum_closure(IntSet({1, 2, 3}), 2000).result;
  const LinearityResult r = detect_linear(a);
  ASSERT_EQ(r.status, LinearityStatus::certificate);
  EXPECT_EQ(r.certificate->k, 1);
  EXPECT_EQ(r.certificate->N, 0);
}

TEST(DetectLinear, IsolatedHeadBeforeLinearTail) {
  // {1} followed by every multiple of 10: N must step past 1.
  oracle::Values v{1};
  for (Value x : oracle::multiples(10, 500)) v.push_back(x);
  const LinearityResult r = detect_linear(IntSet(v, 500));
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->k, 10);
  EXPECT_EQ(r.certificate->N, 1);
  EXPECT_TRUE(verify_certificate(IntSet(v, 500), *r.certificate));
  EXPECT_FALSE(verify_certificate(IntSet(v, 500), {10, 0, 500, 50}));
}

TEST(DetectLinear, LeastThresholdSitsJustBelowFirstTailMultiple) {
  // 1, 3, then all evens from 4: the tail starts after 3, so N = 3.
  oracle::Values v{1, 3};
  for (Value x = 4; x <= 100; x += 2) v.push_back(x);
  const LinearityResult r = detect_linear(IntSet(v, 100));
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->k, 2);
  EXPECT_EQ(r.certificate->N, 3);
}

TEST(DetectLinear, UnknownWhenTailNeverSettles) {
  oracle::Values v;
  for (Value x = 1; x <= 100; ++x) {
    if (x % 3 != 0) v.push_back(x);
  }
  EXPECT_EQ(detect_linear(IntSet(v, 100)).status, LinearityStatus::unknown);
}

TEST(DetectLinear, WindowGuard) {
  // Only 5 multiples of 20 in (0, 100]: certificate needs min_window <= 5.
  const IntSet s(oracle::multiples(20, 100), 100);
  EXPECT_EQ(detect_linear(s, 10).status, LinearityStatus::unknown);
  EXPECT_EQ(detect_linear(s, 5).status, LinearityStatus::certificate);
  EXPECT_THROW(detect_linear(s, 1), InputError);
}

TEST(VerifyCertificate, Examples) {
  const IntSet evens(oracle::multiples(2, 200), 200);
  EXPECT_TRUE(verify_certificate(evens, {2, 0, 200, 100}));
  EXPECT_TRUE(verify_certificate(evens, {2, 17, 200, 92}));
  EXPECT_FALSE(verify_certificate(evens, {4, 0, 200, 50}));
  EXPECT_THROW(verify_certificate(evens, {2, 0, 201, 100}), InputError);
}

TEST(DetectLinear, SoundAndMinimalOnClosures) {
  for (std::uint64_t mask = 1; mask < (1U << 8); ++mask) {
    const IntSet a = multisum_closure(IntSet(oracle::from_mask(mask)), 1000).result;
    const LinearityResult r = detect_linear(a);
    if (!r.certificate) continue;
    const LinearityCertificate& c = *r.certificate;
    ASSERT_TRUE(verify_certificate(a, c)) << mask;
    ASSERT_GE(c.window_count, kDefaultMinWindow);
    for (Value mult = 2; c.k * mult <= a.horizon(); ++mult) {
      LinearityCertificate bigger{c.k * mult, c.N, c.horizon, c.horizon / (c.k * mult) - c.N / (c.k * mult)};
      if (bigger.window_count >= kDefaultMinWindow) ASSERT_FALSE(verify_certificate(a, bigger));
    }
  }
}

TEST(DetectLinear, StableUnderDoubledHorizon) {
  for (std::uint64_t mask = 1; mask < (1U << 8); ++mask) {
    const IntSet seed(oracle::from_mask(mask));
    const ClosureResult small = multisum_closure(seed, 1000);
    const ClosureResult big = multisum_closure(seed, 2000);
    const LinearityResult rs = detect_linear(small.result);
    if (!rs.certificate || !small.saturated || !big.saturated) continue;
    const LinearityResult rb = detect_linear(big.result);
    ASSERT_TRUE(rb.certificate) << mask;
    EXPECT_EQ(rb.certificate->k, rs.certificate->k) << mask;
  }
}
