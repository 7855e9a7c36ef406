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

#ifndef BOOLCX_NOISY_HPP_
#define BOOLCX_NOISY_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "boolcx/bits.hpp"

namespace boolcx {

using Rng = std::mt19937_64;

// splitmix64 finalizer over (base, stream); used to give every oracle index
// and every trial its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);
// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);
bool bernoulli(Rng& rng, double p);

struct QueryRecord {
  int index = 0;
  double gamma = 0.0;
  bool answer = false;
  double cumulative_cost = 0.0;
};

// Anything that answers noisy queries (i, gamma).
class NoisyAccess {
 public:
  virtual ~NoisyAccess() = default;
  virtual int size() const = 0;
  // Returns x_i with probability (1 + gamma) / 2. Throws InputError for an
  // index out of range or |gamma| > 1.
  virtual bool query(int i, double gamma) = 0;
};

// Noisy oracle over a hidden bit string with a running gamma^2 cost ledger.
// The answer noise of index i comes from its own counter-based stream, so the
// answers to queries on i do not depend on queries made to other indices.
class NoisyOracle : public NoisyAccess {
 public:
  NoisyOracle(std::vector<bool> input, std::uint64_t seed, bool keep_transcript = false);

  int size() const override { return static_cast<int>(input_.size()); }
  bool query(int i, double gamma) override;

  double cost() const { return cost_; }
  std::int64_t num_queries() const { return queries_; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

 private:
  std::vector<bool> input_;
  std::uint64_t seed_;
  bool keep_transcript_;
  std::vector<std::uint64_t> counters_;
  double cost_ = 0.0;
  std::int64_t queries_ = 0;
  std::vector<QueryRecord> transcript_;
};

// gamma' = 2 Pr[Bin(k, (1 + gamma) / 2) > k / 2] - 1 for odd k, summed
// antisymmetrically so small biases keep their relative precision.
double amplify_bias_exact(double gamma, int k);

struct AmplificationBounds {
  double gamma_prime = 0.0;
  double lower = 0.0;  // sqrt(k) gamma / 3
  double upper = 0.0;  // 3 sqrt(k) gamma
  bool lower_holds = false;
  bool upper_holds = false;
};

// Majority-amplification bounds for gamma = num / den decided in exact
// integer arithmetic (squared form, both sides positive).
AmplificationBounds check_amplification_bounds(std::int64_t num, std::int64_t den, int k);

// Majority of k fresh queries (i, gamma); k odd.
bool amplify_bias_sample(NoisyAccess& oracle, int i, double gamma, int k);

}  // namespace boolcx

#endif  // BOOLCX_NOISY_HPP_
