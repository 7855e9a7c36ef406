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

#ifndef BOOLCX_WALK_HPP_
#define BOOLCX_WALK_HPP_

#include <cstdint>
#include <deque>
#include <vector>

#include "boolcx/noisy.hpp"

namespace boolcx {

inline constexpr double kMaxWalkBias = 0.1;
inline constexpr std::int64_t kWalkStepCap = 10'000'000;

// floor(1 / (5 sqrt(t) gamma_hat)); a relative 1e-12 nudge keeps exact
// quotients such as 1 / (5 * 2 * 0.1) from rounding down.
int walk_threshold(double gamma_hat, int t);

struct WalkParams {
  double gamma_hat = 0.0;
  int t = 0;
  int T = 0;
  double R = 0.0;            // ((1 + gamma_hat) / (1 - gamma_hat))^T
  double delta_prime = 0.0;  // (R - 1) / (R + 1)

  // Throws InputError unless 0 < gamma_hat <= 1/10, t >= 1 and T >= 1.
  static WalkParams make(double gamma_hat, int t);
  // delta_prime * sqrt(t); at most about 1/5 by the choice of T.
  double delta_scale() const;
};

// Expected length of a gamma_hat-biased walk from 0 stopped at +-T,
// conditioned on ending at +T (equal to the unconditioned mean). Evaluated
// as (T / gamma_hat) tanh(T atanh gamma_hat).
double mu_T(double gamma_hat, int T);

struct MuRatio {
  int T = 0;
  double mu_T = 0.0;
  double mu_2T = 0.0;
  bool holds = false;  // mu_2T <= 12 mu_T
  double c0 = 0.0;     // mu_2T * t * gamma_hat^2
};

MuRatio mu_ratio_check(double gamma_hat, int t);

// Walk trace: +1 / -1 steps from 0 until the first visit to +-T.
using WalkTrace = std::vector<std::int8_t>;

// Draws from the law of a gamma_hat-biased walk conditioned on reaching
// `target` (+T or -T) first. Simulates with the drift pointing at the target
// and retries on a miss; both drift signs give the same conditional law and
// this one accepts with probability R / (R + 1) >= 1/2. Throws WalkStepCap if
// a single attempt exceeds step_cap steps.
WalkTrace sample_conditioned_walk(double gamma_hat, int T, int target, Rng& rng,
                                  std::int64_t step_cap = kWalkStepCap);

// Plain rejection with a fixed drift direction. Slow when the drift points
// away from the target; intended for small T cross-checks.
WalkTrace sample_conditioned_walk_rejection(double gamma_hat, int T, int target,
                                            bool drift_up, Rng& rng,
                                            std::int64_t step_cap = kWalkStepCap);

struct BiasedBitStats {
  std::int64_t walks = 0;
  std::int64_t bits = 0;  // bits handed out
  std::int64_t steps = 0;  // bits produced by walks, including the buffer
  std::int64_t coin_queries = 0;
  double cost = 0.0;  // gamma^2 paid to the underlying oracle
  std::int64_t min_walk_length = 0;
};

// Produces gamma_hat-biased copies of x_i using one (i, 1/sqrt(t)) query per
// walk: the answer is kept with probability delta' sqrt(t) and replaced by a
// fair coin otherwise, which yields a coin agreeing with x_i with probability
// R / (R + 1). A walk conditioned to end on that coin's side is then an
// unconditioned gamma_hat-biased walk toward x_i, and its steps (up = 1) are
// the output bits. Unused steps stay buffered for later calls.
class BiasedBitGenerator {
 public:
  BiasedBitGenerator(const WalkParams& params, NoisyAccess& oracle, int index, Rng& rng);

  bool next();
  const BiasedBitStats& stats() const { return stats_; }
  const WalkParams& params() const { return params_; }

 private:
  void refill();

  WalkParams params_;
  NoisyAccess* oracle_;
  int index_;
  Rng* rng_;
  std::deque<bool> buffer_;
  BiasedBitStats stats_;
};

struct BiasedBits {
  std::vector<bool> bits;
  BiasedBitStats stats;
};

// `count` gamma_hat-biased copies of a hidden bit, through a fresh oracle.
BiasedBits generate_biased_bits(const WalkParams& params, bool hidden_bit, std::int64_t count,
                                std::uint64_t seed);

}  // namespace boolcx

#endif  // BOOLCX_WALK_HPP_
