#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "telepathy/quantum.hpp"

using namespace telepathy;

namespace {

// Closed form of the protocol amplitude in floating point:
// 2^{-3n/2} sum_i (-1)^{xa_i + xb_i + i.ya + i.yb}.
double amplitude(unsigned n, Word xa, Word xb, unsigned ya, unsigned yb) {
  const unsigned d = 1U << n;
  double s = 0;
  for (unsigned i = 0; i < d; ++i) {
    int sign = xa.test(i) ^ xb.test(i) ^ (std::popcount(i & ya) & 1) ^ (std::popcount(i & yb) & 1);
    s += sign ? -1.0 : 1.0;
  }
  return s / std::pow(2.0, 1.5 * n);
}

}  // namespace

TEST(State, Epr) {
  auto st = prepare_epr(2);
  EXPECT_EQ(st.amp.size(), 16U);
  EXPECT_TRUE(st.normalized());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(st.at(i, j), i == j ? 1 : 0);
  EXPECT_EQ(prepare_epr(4).amp.size(), 256U);
  EXPECT_THROW(prepare_epr(0), usage_error);
}

TEST(State, PhaseActsOnOwnRegister) {
  auto st = apply_phase(prepare_epr(2), Party::alice, Word(0b0101, 4));
  EXPECT_EQ(st.at(0, 0), -1);
  EXPECT_EQ(st.at(1, 1), 1);
  EXPECT_EQ(st.at(2, 2), -1);
  st = apply_phase(st, Party::bob, Word(0b0101, 4));
  EXPECT_EQ(st, prepare_epr(2));
  EXPECT_THROW(apply_phase(prepare_epr(2), Party::bob, Word(1, 8)), usage_error);
}

TEST(State, HadamardIsAnInvolutionUpToScale) {
  std::mt19937_64 rng(1);
  for (unsigned n = 1; n <= 4; ++n) {
    auto st = apply_phase(prepare_epr(n), Party::alice, Word(static_cast<bits_t>(rng()) & low_mask(1U << n), 1U << n));
    for (Party p : {Party::alice, Party::bob}) {
      auto twice = apply_hadamard(apply_hadamard(st, p), p);
      EXPECT_EQ(twice.exponent, st.exponent + 2 * n);
      for (std::size_t k = 0; k < st.amp.size(); ++k) ASSERT_EQ(twice.amp[k], st.amp[k] << n);
      EXPECT_TRUE(apply_hadamard(st, p).normalized());
    }
  }
}

TEST(State, NormalizationGuard) {
  auto st = prepare_epr(2);
  st.amp[1] = 1;
  EXPECT_FALSE(st.normalized());
  EXPECT_THROW(outcome_distribution(st), invariant_error);
}

// The post-phase state depends on x_A xor x_B only.
TEST(Protocol, PhaseFactorization) {
  std::mt19937_64 rng(4);
  for (unsigned n = 1; n <= 4; ++n) {
    const unsigned N = 1U << n;
    auto phased = [&](Word xa, Word xb) {
      return apply_phase(apply_phase(prepare_epr(n), Party::alice, xa), Party::bob, xb);
    };
    auto classes = promise_classes(N);
    for (Word z : classes) {
      auto base = phased(Word(0, N), z);
      if (n <= 2) {
        for (bits_t x = 0; x < (1U << N); ++x) ASSERT_EQ(phased(Word(x, N), Word(x ^ z.bits(), N)), base);
      }
    }
    if (n > 2) {
      for (int t = 0; t < 100; ++t) {
        Word z = classes[rng() % classes.size()];
        Word xa(static_cast<bits_t>(rng()) & low_mask(N), N);
        ASSERT_EQ(phased(xa, Word(xa.bits() ^ z.bits(), N)), phased(Word(0, N), z));
      }
    }
  }
}

TEST(Protocol, MatchesClosedForm) {
  std::mt19937_64 rng(2);
  for (unsigned n = 1; n <= 4; ++n) {
    const unsigned N = 1U << n;
    auto classes = promise_classes(N);
    for (int t = 0; t < 20; ++t) {
      Word xa(static_cast<bits_t>(rng()) & low_mask(N), N);
      Word xb(xa.bits() ^ classes[rng() % classes.size()].bits(), N);
      auto st = run_protocol(n, xa, xb);
      const double scale = std::pow(2.0, -0.5 * st.exponent);
      for (unsigned ya = 0; ya < (1U << n); ++ya)
        for (unsigned yb = 0; yb < (1U << n); ++yb)
          ASSERT_NEAR(st.at(ya, yb) * scale, amplitude(n, xa, xb, ya, yb), 1e-12);
    }
  }
}

TEST(Protocol, Distributions) {
  const Word zero(0, 16);
  auto same = outcome_distribution(run_protocol(4, zero, zero));
  EXPECT_EQ(same.total(), (Fraction{1, 1}));
  EXPECT_EQ(same.p_equal(), (Fraction{1, 1}));
  for (unsigned y = 0; y < 16; ++y) EXPECT_EQ(same.probability(y, y), (Fraction{1, 16}));

  auto far = outcome_distribution(run_protocol(4, zero, Word(0x00ff, 16)));
  EXPECT_EQ(far.total(), (Fraction{1, 1}));
  EXPECT_EQ(far.p_equal(), (Fraction{0, 1}));

  // off-promise questions can collide
  auto off = outcome_distribution(run_protocol(4, zero, Word(0x0001, 16)));
  EXPECT_GT(off.p_equal().num, 0U);
}

TEST(Protocol, VerifyAllClasses) {
  auto r1 = verify_protocol(1);
  EXPECT_EQ(r1.classes.size(), 3U);
  EXPECT_TRUE(r1.pass());
  auto r2 = verify_protocol(2);
  EXPECT_EQ(r2.classes.size(), 7U);
  EXPECT_TRUE(r2.pass());
  EXPECT_THROW(verify_protocol(5), usage_error);
}
