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

#ifndef BOOLCX_GAPMAJ_SIM_HPP_
#define BOOLCX_GAPMAJ_SIM_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "boolcx/bits.hpp"
#include "boolcx/noisy.hpp"
#include "boolcx/partial_fn.hpp"
#include "boolcx/walk.hpp"

namespace boolcx {

// A noisy-oracle algorithm: issues queries through `oracle`, draws private
// coins from `rng`, returns its output bit.
using NoisyAlgorithm = std::function<bool(NoisyAccess& oracle, Rng& rng)>;

// Queries every variable once with gamma = 1 and evaluates f.
NoisyAlgorithm exact_query_algorithm(const TruthTable& f);
// Estimates each variable by a majority of `repetitions` gamma-queries
// (ties read as 0) and evaluates f.
NoisyAlgorithm majority_vote_algorithm(const TruthTable& f, double gamma, int repetitions);

struct NoisyRun {
  bool output = false;
  double cost = 0.0;
  std::vector<QueryRecord> transcript;
};

NoisyRun run_noisy(const NoisyAlgorithm& alg, std::vector<bool> input, std::uint64_t seed);

// Noisy access to the outer bits of f o GapMaj_t backed by a concrete
// composed input of n t bits. Only two biases are served: gamma = 1 reads all
// t bits of the block, gamma = 1/sqrt(t) reads one uniformly random bit of
// the block (bias 4/sqrt(t) toward the block's GapMaj value on promise
// inputs) and keeps it with probability 1/4, replacing it by a fair coin
// otherwise. Needs t >= 16.
class GapMajBlockOracle : public NoisyAccess {
 public:
  GapMajBlockOracle(int n, int t, BitTable composed_input, Rng& rng);

  int size() const override { return n_; }
  bool query(int i, double gamma) override;

  int t() const { return t_; }
  double low_bias() const { return low_bias_; }
  std::int64_t composed_queries() const { return composed_queries_; }
  std::int64_t unit_queries() const { return unit_queries_; }
  std::int64_t low_queries() const { return low_queries_; }
  double cost() const { return cost_; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

 private:
  bool read(std::size_t pos);

  int n_;
  int t_;
  double low_bias_;
  BitTable input_;
  Rng* rng_;
  std::int64_t composed_queries_ = 0;
  std::int64_t unit_queries_ = 0;
  std::int64_t low_queries_ = 0;
  double cost_ = 0.0;
  std::vector<QueryRecord> transcript_;
};

// Serves a {1, gamma_hat} normal-form algorithm from a GapMajBlockOracle.
// gamma = 1 is forwarded. gamma_hat is produced either by a majority of k
// low-bias queries thinned to exactly gamma_hat (when gamma_hat >= 1/sqrt(t),
// or the walk parameters are inadmissible) or by a per-index
// BiasedBitGenerator. Any other bias is rejected with InputError.
class GapMajBridge : public NoisyAccess {
 public:
  GapMajBridge(GapMajBlockOracle& blocks, double gamma_hat, Rng& rng);

  int size() const override { return blocks_->size(); }
  bool query(int i, double gamma) override;

  bool uses_walks() const { return use_walks_; }
  int majority_k() const { return majority_k_; }
  double algorithm_cost() const { return algorithm_cost_; }
  std::int64_t algorithm_queries() const { return algorithm_queries_; }

 private:
  GapMajBlockOracle* blocks_;
  double gamma_hat_;
  Rng* rng_;
  bool use_walks_ = false;
  int majority_k_ = 1;
  double majority_bias_ = 0.0;
  WalkParams walk_;
  std::vector<std::unique_ptr<BiasedBitGenerator>> generators_;
  double algorithm_cost_ = 0.0;
  std::int64_t algorithm_queries_ = 0;
};

struct ComposedRun {
  bool output = false;
  std::int64_t composed_queries = 0;
  std::int64_t unit_queries = 0;  // block-level gamma = 1
  std::int64_t low_queries = 0;   // block-level gamma = 1/sqrt(t)
  double block_cost = 0.0;
  double algorithm_cost = 0.0;
  std::vector<QueryRecord> transcript;  // block-level queries

  // composed_queries == t * unit_queries + low_queries.
  bool count_identity(int t) const;
};

// Randomized query algorithm for f o GapMaj_t obtained from a noisy
// algorithm for f in {1, gamma_hat} normal form.
using ComposedAlgorithm = std::function<ComposedRun(const BitTable& input, std::uint64_t seed)>;

ComposedAlgorithm simulate_on_gapmaj(NoisyAlgorithm alg, int n, int t, double gamma_hat);

// Random composed input whose block i has weight t/2 + 2 sqrt(t) if bit i of
// `outer` is set and t/2 - 2 sqrt(t) otherwise, positions uniform.
BitTable sample_composed_input(Input outer, int n, int t, Rng& rng);

}  // namespace boolcx

#endif  // BOOLCX_GAPMAJ_SIM_HPP_
