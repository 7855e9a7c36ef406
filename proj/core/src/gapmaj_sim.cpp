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

#include "boolcx/gapmaj_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "boolcx/errors.hpp"
#include "boolcx/zoo.hpp"

namespace boolcx {

namespace {

constexpr double kBiasMatchTol = 1e-12;
constexpr int kMaxMajorityK = 100001;

void check_index(const NoisyAccess& a, int i) {
  if (i < 0 || i >= a.size()) throw InputError("query index out of range: " + std::to_string(i));
}

}  // namespace

NoisyAlgorithm exact_query_algorithm(const TruthTable& f) {
  return [f](NoisyAccess& oracle, Rng&) {
    Input x = 0;
    for (int i = 0; i < f.arity(); ++i) {
      if (oracle.query(i, 1.0)) x |= Input{1} << i;
    }
    return f(x);
  };
}

NoisyAlgorithm majority_vote_algorithm(const TruthTable& f, double gamma, int repetitions) {
  if (repetitions < 1) throw InputError("repetitions must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InputError("gamma must lie in (0, 1]");
  return [f, gamma, repetitions](NoisyAccess& oracle, Rng&) {
    Input x = 0;
    for (int i = 0; i < f.arity(); ++i) {
      int ones = 0;
      for (int r = 0; r < repetitions; ++r) ones += oracle.query(i, gamma) ? 1 : 0;
      if (2 * ones > repetitions) x |= Input{1} << i;
    }
    return f(x);
  };
}

NoisyRun run_noisy(const NoisyAlgorithm& alg, std::vector<bool> input, std::uint64_t seed) {
  NoisyOracle oracle(std::move(input), derive_seed(seed, 0), true);
  Rng rng(derive_seed(seed, 1));
  NoisyRun run;
  run.output = alg(oracle, rng);
  run.cost = oracle.cost();
  run.transcript = oracle.transcript();
  return run;
}

GapMajBlockOracle::GapMajBlockOracle(int n, int t, BitTable composed_input, Rng& rng)
    : n_(n), t_(t), input_(std::move(composed_input)), rng_(&rng) {
  zoo::gapmaj_root(t);
  if (n < 1) throw InputError("need at least one block");
  if (input_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(t)) {
    throw InputError("composed input must hold n * t bits");
  }
  low_bias_ = 1.0 / std::sqrt(static_cast<double>(t));
}

bool GapMajBlockOracle::read(std::size_t pos) {
  ++composed_queries_;
  return input_.get(pos);
}

bool GapMajBlockOracle::query(int i, double gamma) {
  check_index(*this, i);
  const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(t_);
  bool answer = false;
  if (gamma == 1.0) {
    int weight = 0;
    for (int j = 0; j < t_; ++j) weight += read(base + static_cast<std::size_t>(j)) ? 1 : 0;
    answer = 2 * weight > t_;
    ++unit_queries_;
  } else if (std::fabs(gamma - low_bias_) <= kBiasMatchTol) {
    const auto offset = static_cast<std::size_t>(uniform01(*rng_) * t_);
    answer = read(base + std::min(offset, static_cast<std::size_t>(t_ - 1)));
    if (!bernoulli(*rng_, 0.25)) answer = bernoulli(*rng_, 0.5);
    ++low_queries_;
  } else {
    throw InputError("block oracle serves only gamma = 1 and gamma = 1/sqrt(t)");
  }
  cost_ += gamma * gamma;
  transcript_.push_back({i, gamma, answer, cost_});
  return answer;
}

GapMajBridge::GapMajBridge(GapMajBlockOracle& blocks, double gamma_hat, Rng& rng)
    : blocks_(&blocks), gamma_hat_(gamma_hat), rng_(&rng) {
  if (!(gamma_hat > 0.0 && gamma_hat <= 1.0)) throw InputError("gamma_hat must lie in (0, 1]");
  const double low = blocks.low_bias();
  const int t = blocks.t();
  use_walks_ = gamma_hat < low && gamma_hat <= kMaxWalkBias && walk_threshold(gamma_hat, t) >= 1;
  if (use_walks_) {
    walk_ = WalkParams::make(gamma_hat, t);
    generators_.resize(static_cast<std::size_t>(blocks.size()));
  } else if (gamma_hat < 1.0) {
    majority_k_ = 1;
    majority_bias_ = amplify_bias_exact(low, 1);
    while (majority_bias_ < gamma_hat) {
      majority_k_ += 2;
      if (majority_k_ > kMaxMajorityK) throw BoundExceeded("gamma_hat needs too many samples");
      majority_bias_ = amplify_bias_exact(low, majority_k_);
    }
  }
}

bool GapMajBridge::query(int i, double gamma) {
  check_index(*this, i);
  ++algorithm_queries_;
  algorithm_cost_ += gamma * gamma;
  if (gamma == 1.0) return blocks_->query(i, 1.0);
  if (std::fabs(gamma - gamma_hat_) > kBiasMatchTol) {
    throw InputError("algorithm left the {1, gamma_hat} normal form");
  }
  if (use_walks_) {
    auto& gen = generators_[static_cast<std::size_t>(i)];
    if (!gen) gen = std::make_unique<BiasedBitGenerator>(walk_, *blocks_, i, *rng_);
    return gen->next();
  }
  bool b = amplify_bias_sample(*blocks_, i, blocks_->low_bias(), majority_k_);
  if (!bernoulli(*rng_, gamma_hat_ / majority_bias_)) b = bernoulli(*rng_, 0.5);
  return b;
}

bool ComposedRun::count_identity(int t) const {
  return composed_queries == static_cast<std::int64_t>(t) * unit_queries + low_queries;
}

ComposedAlgorithm simulate_on_gapmaj(NoisyAlgorithm alg, int n, int t, double gamma_hat) {
  zoo::gapmaj_root(t);
  return [alg = std::move(alg), n, t, gamma_hat](const BitTable& input, std::uint64_t seed) {
    Rng block_rng(derive_seed(seed, 0));
    Rng bridge_rng(derive_seed(seed, 1));
    Rng alg_rng(derive_seed(seed, 2));
    GapMajBlockOracle blocks(n, t, input, block_rng);
    GapMajBridge bridge(blocks, gamma_hat, bridge_rng);
    ComposedRun run;
    run.output = alg(bridge, alg_rng);
    run.composed_queries = blocks.composed_queries();
    run.unit_queries = blocks.unit_queries();
    run.low_queries = blocks.low_queries();
    run.block_cost = blocks.cost();
    run.algorithm_cost = bridge.algorithm_cost();
    run.transcript = blocks.transcript();
    return run;
  };
}

BitTable sample_composed_input(Input outer, int n, int t, Rng& rng) {
  const int s = zoo::gapmaj_root(t);
  BitTable out(static_cast<std::size_t>(n) * static_cast<std::size_t>(t));
  std::vector<int> pos(static_cast<std::size_t>(t));
  for (int i = 0; i < n; ++i) {
    const int weight = ((outer >> i) & 1u) ? 2 * s * s + 4 * s : 2 * s * s - 4 * s;
    std::iota(pos.begin(), pos.end(), 0);
    for (int j = 0; j < weight; ++j) {
      const int span = t - j;
      const int pick = j + std::min(static_cast<int>(uniform01(rng) * span), span - 1);
      std::swap(pos[static_cast<std::size_t>(j)], pos[static_cast<std::size_t>(pick)]);
      out.set(static_cast<std::size_t>(i) * static_cast<std::size_t>(t) +
                  static_cast<std::size_t>(pos[static_cast<std::size_t>(j)]),
              true);
    }
  }
  return out;
}

}  // namespace boolcx
