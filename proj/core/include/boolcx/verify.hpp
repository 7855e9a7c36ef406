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

#ifndef BOOLCX_VERIFY_HPP_
#define BOOLCX_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "boolcx/adeg.hpp"
#include "boolcx/partial_fn.hpp"
#include "boolcx/report.hpp"

namespace boolcx {

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 20261016;
  double eps = kOneThird;
  int max_lp_arity = kDefaultMaxLpArity;
};

// Runs fn(0), ..., fn(count - 1) on up to `jobs` threads. The first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

// Objects of the block-sensitivity lower-bound argument for f o g at the
// smallest input a attaining bs(f).
struct BsChain {
  Input a = 0;
  int b = 0;
  std::vector<Input> blocks;  // disjoint minimal sensitive blocks at a
  PartialFn fprime_g;         // f' o g
  PartialFn fdouble_g;        // f'' o g: blocks outside the union fixed
  PartialFn pror_g;           // PrOR_b o (I_1 o g, ..., I_b o g), reordered
  std::vector<PartialFn> inner;  // I_i o g
  bool rewrite_matches = false;  // fdouble_g == pror_g bit for bit

  int adeg_fg = 0;
  int bdeg_fg = 0;  // recorded: the bounded variant of adeg_fg
  int bdeg_fprime_g = 0;
  int bdeg_fdouble_g = 0;
  int bdeg_pror_g = 0;
  std::vector<int> bdeg_inner;
  int adeg_g = 0;
};

// Throws InputError("non-constant required") for constant f or g and
// BoundExceeded when f o g exceeds max_lp_arity.
BsChain build_bs_chain(const TruthTable& f, const TruthTable& g, const VerifyOptions& opts);

VerificationReport verify_bs_chain(const std::string& f_name, const TruthTable& f,
                                   const std::string& g_name, const TruthTable& g,
                                   const VerifyOptions& opts);

struct NamedFn {
  std::string name;
  PartialFn fn;
};

// PrOR_n o (g_1, ..., g_n): exact restriction facts plus recorded ratios.
VerificationReport verify_pror(const std::vector<NamedFn>& inner, const VerifyOptions& opts);

// Band of adeg / sqrt(n (gamma + 1)) over all non-constant total symmetric
// functions with n <= n_max, plus junta restriction checks.
VerificationReport verify_symmetric(int n_max, const VerifyOptions& opts);

struct WalkSuiteOptions {
  std::int64_t walks_per_cell = 100'000;
  std::int64_t trace_samples = 100'000;
  std::int64_t bits = 1'000'000;
};

VerificationReport verify_walks(const WalkSuiteOptions& walk, const VerifyOptions& opts);

struct SimulateOptions {
  int t = 64;
  int trials = 1000;
  // Trials for the walk-backed variant with a small gamma_hat.
  int walk_trials = 200;
  std::ostream* transcript = nullptr;  // JSON lines, one per block query
};

// Runs the majority-vote noisy algorithm for f (9t queries of bias 1/sqrt(t)
// per variable) through the GapMaj reduction on every outer input.
VerificationReport verify_simulate(const std::string& name, const TruthTable& f,
                                   const SimulateOptions& sim, const VerifyOptions& opts);

VerificationReport verify_sink_poly(int k, double eps, std::ostream* witness,
                                    const VerifyOptions& opts);

}  // namespace boolcx

#endif  // BOOLCX_VERIFY_HPP_
