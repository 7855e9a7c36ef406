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

#include "boolcx/walk.hpp"

#include <algorithm>
#include <cmath>

#include "boolcx/errors.hpp"

namespace boolcx {

int walk_threshold(double gamma_hat, int t) {
  if (!(gamma_hat > 0.0) || t < 1) throw InputError("need gamma_hat > 0 and t >= 1");
  const double x = 1.0 / (5.0 * std::sqrt(static_cast<double>(t)) * gamma_hat);
  return static_cast<int>(std::floor(x * (1.0 + 1e-12)));
}

WalkParams WalkParams::make(double gamma_hat, int t) {
  if (!(gamma_hat > 0.0 && gamma_hat <= kMaxWalkBias)) {
    throw InputError("gamma_hat must lie in (0, 1/10]");
  }
  WalkParams p;
  p.gamma_hat = gamma_hat;
  p.t = t;
  p.T = walk_threshold(gamma_hat, t);
  if (p.T < 1) throw InputError("T = floor(1 / (5 sqrt(t) gamma_hat)) is 0 for these parameters");
  p.R = std::pow((1.0 + gamma_hat) / (1.0 - gamma_hat), p.T);
  p.delta_prime = std::tanh(p.T * std::atanh(gamma_hat));
  return p;
}

double WalkParams::delta_scale() const { return delta_prime * std::sqrt(static_cast<double>(t)); }

double mu_T(double gamma_hat, int T) {
  if (!(gamma_hat > 0.0 && gamma_hat < 1.0)) throw InputError("gamma_hat must lie in (0, 1)");
  if (T < 1) throw InputError("T must be at least 1");
  return T / gamma_hat * std::tanh(T * std::atanh(gamma_hat));
}

MuRatio mu_ratio_check(double gamma_hat, int t) {
  MuRatio r;
  r.T = walk_threshold(gamma_hat, t);
  if (r.T < 1) throw InputError("T = 0 for these parameters");
  r.mu_T = mu_T(gamma_hat, r.T);
  r.mu_2T = mu_T(gamma_hat, 2 * r.T);
  r.holds = r.mu_2T <= 12.0 * r.mu_T;
  r.c0 = r.mu_2T * t * gamma_hat * gamma_hat;
  return r;
}

namespace {

void check_walk_args(double gamma_hat, int T, int target) {
  if (!(gamma_hat >= 0.0 && gamma_hat < 1.0)) throw InputError("gamma_hat must lie in [0, 1)");
  if (T < 1) throw InputError("T must be at least 1");
  if (target != T && target != -T) throw InputError("target must be +T or -T");
}

// One walk with Pr[up] = p_up until +-T. Returns the end point.
int run_walk(int T, double p_up, Rng& rng, std::int64_t step_cap, WalkTrace& trace) {
  trace.clear();
  int pos = 0;
  while (pos != T && pos != -T) {
    if (static_cast<std::int64_t>(trace.size()) >= step_cap) {
      throw WalkStepCap("walk exceeded the step cap");
    }
    const bool up = uniform01(rng) < p_up;
    trace.push_back(up ? 1 : -1);
    pos += up ? 1 : -1;
  }
  return pos;
}

}  // namespace

WalkTrace sample_conditioned_walk(double gamma_hat, int T, int target, Rng& rng,
                                  std::int64_t step_cap) {
  check_walk_args(gamma_hat, T, target);
  const double p_up = target > 0 ? (1.0 + gamma_hat) / 2.0 : (1.0 - gamma_hat) / 2.0;
  WalkTrace trace;
  while (run_walk(T, p_up, rng, step_cap, trace) != target) {
  }
  return trace;
}

WalkTrace sample_conditioned_walk_rejection(double gamma_hat, int T, int target, bool drift_up,
                                            Rng& rng, std::int64_t step_cap) {
  check_walk_args(gamma_hat, T, target);
  const double p_up = drift_up ? (1.0 + gamma_hat) / 2.0 : (1.0 - gamma_hat) / 2.0;
  WalkTrace trace;
  while (run_walk(T, p_up, rng, step_cap, trace) != target) {
  }
  return trace;
}

BiasedBitGenerator::BiasedBitGenerator(const WalkParams& params, NoisyAccess& oracle, int index,
                                       Rng& rng)
    : params_(params), oracle_(&oracle), index_(index), rng_(&rng) {
  if (params_.delta_scale() > 1.0) throw InputError("delta' exceeds 1/sqrt(t)");
  if (index < 0 || index >= oracle.size()) throw InputError("generator index out of range");
}

void BiasedBitGenerator::refill() {
  const double coin_bias = 1.0 / std::sqrt(static_cast<double>(params_.t));
  bool coin = oracle_->query(index_, coin_bias);
  ++stats_.coin_queries;
  stats_.cost += coin_bias * coin_bias;
  if (!bernoulli(*rng_, params_.delta_scale())) coin = bernoulli(*rng_, 0.5);

  const int target = coin ? params_.T : -params_.T;
  const WalkTrace trace = sample_conditioned_walk(params_.gamma_hat, params_.T, target, *rng_);
  for (const auto step : trace) buffer_.push_back(step > 0);
  const auto len = static_cast<std::int64_t>(trace.size());
  stats_.min_walk_length = stats_.walks == 0 ? len : std::min(stats_.min_walk_length, len);
  ++stats_.walks;
  stats_.steps += len;
}

bool BiasedBitGenerator::next() {
  if (buffer_.empty()) refill();
  const bool b = buffer_.front();
  buffer_.pop_front();
  ++stats_.bits;
  return b;
}

BiasedBits generate_biased_bits(const WalkParams& params, bool hidden_bit, std::int64_t count,
                                std::uint64_t seed) {
  if (count < 0) throw InputError("count must be non-negative");
  NoisyOracle oracle({hidden_bit}, derive_seed(seed, 0));
  Rng rng(derive_seed(seed, 1));
  BiasedBitGenerator gen(params, oracle, 0, rng);
  BiasedBits out;
  out.bits.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.bits.push_back(gen.next());
  out.stats = gen.stats();
  return out;
}

}  // namespace boolcx
