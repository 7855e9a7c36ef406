// Copyright 2026 The boolcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "boolcx/errors.hpp"
#include "boolcx/noisy.hpp"
#include "support/oracles.hpp"

namespace boolcx {
namespace {

TEST(Seeds, DeriveSeedSeparatesStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(42, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
}

TEST(Seeds, Uniform01Range) {
  Rng rng(7);
  double lo = 1, hi = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(rng);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_FALSE(bernoulli(rng, 0.0));
  EXPECT_TRUE(bernoulli(rng, 1.0));
}

TEST(Oracle, ExactAndAntiQueries) {
  NoisyOracle o({true, false, true}, 9, true);
  for (int r = 0; r < 20; ++r) {
    EXPECT_TRUE(o.query(0, 1.0));
    EXPECT_FALSE(o.query(1, 1.0));
    EXPECT_TRUE(o.query(1, -1.0));
  }
  EXPECT_DOUBLE_EQ(o.cost(), 60.0);
  EXPECT_EQ(o.num_queries(), 60);
  ASSERT_EQ(o.transcript().size(), 60u);
  EXPECT_DOUBLE_EQ(o.transcript().back().cumulative_cost, 60.0);
  EXPECT_EQ(o.transcript()[1].index, 1);
}

TEST(Oracle, AgreementRateMatchesBias) {
  const double gamma = 0.3;
  const int n = 200000;
  NoisyOracle o({true}, 10);
  int agree = 0;
  for (int r = 0; r < n; ++r) agree += o.query(0, gamma);
  const double p = (1 + gamma) / 2;
  const double se = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(agree / double(n), p, 4 * se);
  EXPECT_NEAR(o.cost(), n * gamma * gamma, 1e-6);
}

TEST(Oracle, IndicesAreIndependentStreams) {
  NoisyOracle a({true, true}, 11), b({true, true}, 11);
  std::vector<bool> ra, rb;
  for (int r = 0; r < 50; ++r) {
    ra.push_back(a.query(0, 0.1));
    b.query(1, 0.1);  // interleaved queries on another index
    rb.push_back(b.query(0, 0.1));
  }
  EXPECT_EQ(ra, rb);
}

TEST(Oracle, Rejects) {
  NoisyOracle o({true}, 1);
  EXPECT_THROW(o.query(1, 0.5), InputError);
  EXPECT_THROW(o.query(-1, 0.5), InputError);
  EXPECT_THROW(o.query(0, 1.5), InputError);
  EXPECT_THROW(o.query(0, std::nan("")), InputError);
}

TEST(Amplification, ExactMatchesPlainSum) {
  for (double g : {0.01, 0.05, 0.1, 0.2, 0.5}) {
    for (int k = 1; k <= 401; k += 20) {
      EXPECT_NEAR(amplify_bias_exact(g, k), static_cast<double>(oracle::amplified_bias(g, k)),
                  1e-12)
          << g << " " << k;
    }
  }
  EXPECT_DOUBLE_EQ(amplify_bias_exact(0.3, 1), 0.3);
  // k = 3: gamma' = (3 gamma - gamma^3) / 2.
  EXPECT_NEAR(amplify_bias_exact(0.2, 3), (0.6 - 0.008) / 2, 1e-15);
  EXPECT_NEAR(amplify_bias_exact(-0.2, 3), -(0.6 - 0.008) / 2, 1e-15);
  EXPECT_THROW(amplify_bias_exact(0.2, 4), InputError);
}

TEST(Amplification, BoundsInExactArithmetic) {
  const auto b = check_amplification_bounds(1, 10, 99);
  EXPECT_TRUE(b.lower_holds);
  EXPECT_TRUE(b.upper_holds);
  EXPECT_NEAR(b.lower, std::sqrt(99.0) * 0.1 / 3, 1e-15);
  EXPECT_NEAR(b.upper, 3 * std::sqrt(99.0) * 0.1, 1e-15);
  EXPECT_GE(b.gamma_prime, b.lower);
  // Far past 1/gamma^2 the upper bound still holds but the lower one fails.
  const auto far = check_amplification_bounds(1, 2, 101);
  EXPECT_FALSE(far.lower_holds);
  EXPECT_THROW(check_amplification_bounds(0, 10, 3), InputError);
  EXPECT_THROW(check_amplification_bounds(11, 10, 3), InputError);
}

TEST(Amplification, SampledMajorityAgreesWithExact) {
  const double g = 0.1;
  const int k = 25;
  const int n = 40000;
  NoisyOracle o({true}, 12);
  int ok = 0;
  for (int r = 0; r < n; ++r) ok += amplify_bias_sample(o, 0, g, k);
  const double p = (1 + amplify_bias_exact(g, k)) / 2;
  EXPECT_NEAR(ok / double(n), p, 4 * std::sqrt(p * (1 - p) / n));
  EXPECT_EQ(o.num_queries(), std::int64_t{n} * k);
}

}  // namespace
}  // namespace boolcx
