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
#include <map>
#include <string>
#include <vector>

#include "boolcx/errors.hpp"
#include "boolcx/walk.hpp"
#include "support/oracles.hpp"

namespace boolcx {
namespace {

std::string key(const WalkTrace& w) {
  std::string s;
  for (auto step : w) s += step > 0 ? '+' : '-';
  return s;
}

TEST(Threshold, FloorWithExactQuotients) {
  EXPECT_EQ(walk_threshold(0.1, 4), 1);
  EXPECT_EQ(walk_threshold(0.02, 4), 5);
  EXPECT_EQ(walk_threshold(0.05, 4), 2);
  EXPECT_EQ(walk_threshold(0.05, 16), 1);
  EXPECT_EQ(walk_threshold(0.02, 64), 1);
  EXPECT_EQ(walk_threshold(0.1, 16), 0);
  EXPECT_THROW(walk_threshold(0.0, 4), InputError);
}

TEST(Params, MakeAndReject) {
  const auto p = WalkParams::make(0.02, 4);
  EXPECT_EQ(p.T, 5);
  EXPECT_NEAR(p.R, std::pow(1.02 / 0.98, 5), 1e-12);
  EXPECT_NEAR(p.delta_prime, (p.R - 1) / (p.R + 1), 1e-14);
  EXPECT_LE(p.delta_scale(), 0.2 + 1e-9);
  EXPECT_THROW(WalkParams::make(0.2, 4), InputError);
  EXPECT_THROW(WalkParams::make(0.0, 4), InputError);
  EXPECT_THROW(WalkParams::make(0.1, 16), InputError);
}

TEST(MuT, ClosedFormsAgree) {
  for (double g : {0.01, 0.02, 0.05, 0.1, 0.2, 0.5}) {
    for (int T = 1; T <= 40; ++T) {
      const double mu = mu_T(g, T);
      EXPECT_NEAR(mu, static_cast<double>(oracle::mu_literal(g, T)), 1e-9 * mu) << g << " " << T;
      EXPECT_NEAR(mu, oracle::walk_mean_dp(g, T), 1e-8 * mu) << g << " " << T;
      EXPECT_LE(mu, T / g + 1e-9);
      EXPECT_GE(mu, T * T / (1 + g * T) - 1e-9);
    }
  }
  EXPECT_NEAR(mu_T(0.3, 1), 1.0, 1e-15);
  EXPECT_THROW(mu_T(0.1, 0), InputError);
}

TEST(MuT, RatioOnGrid) {
  for (double g : {0.02, 0.05, 0.1}) {
    for (int t : {4, 16, 64}) {
      if (walk_threshold(g, t) < 1) {
        EXPECT_THROW(mu_ratio_check(g, t), InputError);
        continue;
      }
      const auto r = mu_ratio_check(g, t);
      EXPECT_TRUE(r.holds) << g << " " << t;
      EXPECT_LE(r.mu_2T, 4 * r.mu_T + 1e-9);
      EXPECT_GT(r.c0, 0.0);
    }
  }
}

TEST(Sampler, EndsAtTargetWithoutTouchingOtherBarrier) {
  Rng rng(3);
  for (int target : {4, -4}) {
    for (int rep = 0; rep < 500; ++rep) {
      const WalkTrace w = sample_conditioned_walk(0.05, 4, target, rng);
      int pos = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        pos += w[i];
        if (i + 1 < w.size()) {
          ASSERT_LT(std::abs(pos), 4);
        }
      }
      EXPECT_EQ(pos, target);
    }
  }
}

TEST(Sampler, ConditionedLawMatchesPathEnumeration) {
  const double g = 0.2;
  const int T = 2, L = 8, N = 200000;
  const auto law = oracle::complete_path_law(g, T, L);
  Rng rng(4);
  std::map<std::string, int> up, down;
  for (int i = 0; i < N; ++i) {
    ++up[key(sample_conditioned_walk(g, T, T, rng))];
    std::string k = key(sample_conditioned_walk(g, T, -T, rng));
    for (auto& c : k) c = c == '+' ? '-' : '+';
    ++down[k];
  }
  for (const auto& [path, p] : law) {
    const double se = std::sqrt(p * (1 - p) / N);
    EXPECT_NEAR(up[path] / double(N), p, 4 * se) << path;
    EXPECT_NEAR(down[path] / double(N), p, 4 * se) << "mirror " << path;
  }
}

TEST(Sampler, RejectionAgainstDriftAgrees) {
  Rng rng(5);
  const int N = 50000;
  double a = 0, b = 0;
  for (int i = 0; i < N; ++i) {
    a += static_cast<double>(sample_conditioned_walk_rejection(0.1, 3, 3, false, rng).size());
    b += static_cast<double>(sample_conditioned_walk(0.1, 3, 3, rng).size());
  }
  const double mu = mu_T(0.1, 3);
  EXPECT_NEAR(a / N, mu, 0.1);
  EXPECT_NEAR(b / N, mu, 0.1);
}

TEST(Sampler, StepCapAndArguments) {
  Rng rng(6);
  EXPECT_THROW(sample_conditioned_walk(0.001, 1000, 1000, rng, 10), WalkStepCap);
  EXPECT_THROW(sample_conditioned_walk(0.1, 2, 1, rng), InputError);
  EXPECT_THROW(sample_conditioned_walk(0.1, 0, 0, rng), InputError);
  EXPECT_THROW(sample_conditioned_walk(1.0, 2, 2, rng), InputError);
}

TEST(Generator, MarginalBiasAndAccounting) {
  const auto p = WalkParams::make(0.05, 4);
  const std::int64_t n = 400000;
  const auto out = generate_biased_bits(p, false, n, 77);
  std::int64_t zeros = 0;
  for (bool b : out.bits) zeros += !b;
  const double q = (1 + p.gamma_hat) / 2;
  EXPECT_NEAR(zeros / double(n), q, 4 * std::sqrt(q * (1 - q) / n));
  EXPECT_EQ(out.stats.bits, n);
  EXPECT_GE(out.stats.steps, n);
  EXPECT_EQ(out.stats.coin_queries, out.stats.walks);
  EXPECT_NEAR(out.stats.cost, out.stats.walks / 4.0, 1e-9);
  EXPECT_GE(out.stats.min_walk_length, p.T);
  EXPECT_NEAR(static_cast<double>(out.stats.steps) / out.stats.walks, mu_T(0.05, p.T), 0.05);
}

TEST(Generator, SeedReplay) {
  const auto p = WalkParams::make(0.02, 16);
  const auto a = generate_biased_bits(p, true, 5000, 1);
  const auto b = generate_biased_bits(p, true, 5000, 1);
  const auto c = generate_biased_bits(p, true, 5000, 2);
  EXPECT_EQ(a.bits, b.bits);
  EXPECT_NE(a.bits, c.bits);
}

TEST(Generator, RejectsOversizedDelta) {
  WalkParams p;
  p.gamma_hat = 0.5;
  p.t = 16;
  p.T = 3;
  p.R = std::pow(3.0, 3);
  p.delta_prime = (p.R - 1) / (p.R + 1);
  NoisyOracle o({true}, 1);
  Rng rng(1);
  EXPECT_THROW(BiasedBitGenerator(p, o, 0, rng), InputError);
  const auto ok = WalkParams::make(0.1, 4);
  EXPECT_THROW(BiasedBitGenerator(ok, o, 1, rng), InputError);
}

}  // namespace
}  // namespace boolcx
