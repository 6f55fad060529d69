#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tnet/entropy.hpp"

using namespace tnet;

TEST(Entropy, KnownValues) {
  EXPECT_NEAR(entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(entropy(0.25), 0.811278124459133, 1e-12);
  EXPECT_NEAR(entropy(0.1), entropy(0.9), 1e-15);
  for (double x = 0.01; x < 1.0; x += 0.01) EXPECT_NEAR(entropy(x), oracle::binary_entropy(x), 1e-14);
}

TEST(Entropy, DomainErrors) {
  for (double x : {0.0, 1.0, -0.2, 1.5}) {
    try {
      entropy(x);
      FAIL() << x;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DomainError);
    }
  }
  EXPECT_THROW(entropy_inverse(0.0), Error);
  EXPECT_THROW(entropy_inverse(1.2), Error);
  EXPECT_THROW(gamma(1), Error);
}

TEST(EntropyInverse, RoundTripAndRange) {
  EXPECT_DOUBLE_EQ(entropy_inverse(1.0), 0.5);
  for (double y = 0.001; y < 1.0; y += 0.013) {
    const double x = entropy_inverse(y);
    EXPECT_GT(x, 0.0);
    EXPECT_LE(x, 0.5);
    EXPECT_NEAR(oracle::binary_entropy(x), y, 1e-12);
  }
}

TEST(Gamma, Values) {
  // gamma_2 = 1 / (2 x) with h(x) = 1/2, x ~ 0.110028.
  const double g2 = gamma(2);
  EXPECT_GE(g2, 4.53);
  EXPECT_LE(g2, 4.56);
  const double x = 1.0 / (2.0 * g2);
  EXPECT_NEAR(oracle::binary_entropy(x), 0.5, 1e-12);
  for (int t = 2; t <= 8; ++t) {
    const double g = gamma(t);
    EXPECT_NEAR(oracle::binary_entropy(1.0 / (t * g)), 1.0 / t, 1e-12);
    if (t > 2) {
      EXPECT_GT(g, gamma(t - 1));
    }
  }
}

// y / (2 log2(6/y)) <= h^{-1}(y) <= y / log2(1/y).
TEST(EntropyInverse, SandwichBounds) {
  for (int k = 1; k <= 9; ++k) {
    const double y = k / 10.0;
    const double x = entropy_inverse(y);
    EXPECT_GE(x, y / (2.0 * std::log2(6.0 / y)) - 1e-9) << y;
    EXPECT_LE(x, y / std::log2(1.0 / y) + 1e-9) << y;
  }
  EXPECT_NEAR(entropy_inverse(0.5), 0.11003, 1e-5);
}

TEST(Gamma, LogBracket) {
  EXPECT_NEAR(gamma(3), 5.42, 5e-3);
  for (int t = 2; t <= 64; ++t) {
    EXPECT_GE(gamma(t), std::log2(t));
    EXPECT_LE(gamma(t), 2.0 * std::log2(6.0 * t));
  }
}

// log2 sum_{i <= floor(a n)} C(n, i) <= n h(a) for 0 < a <= 1/2.
TEST(Entropy, BinomialSumBound) {
  for (int n = 1; n <= 60; ++n)
    for (int j = 1; j <= 100; ++j) {
      const double a = j / 200.0;
      const int k = static_cast<int>(std::floor(a * n));
      double lhs = 0;
      double c = 1;
      for (int i = 0; i <= k; ++i) {
        lhs += c;
        c = c * (n - i) / (i + 1);
      }
      const double h = j == 100 ? 1.0 : entropy(a);
      EXPECT_LE(std::log2(lhs), n * h + 1e-9) << n << " " << a;
    }
}
