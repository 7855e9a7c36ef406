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

#ifndef BOOLCX_MEASURES_HPP_
#define BOOLCX_MEASURES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boolcx/partial_fn.hpp"
#include "boolcx/zoo.hpp"

namespace boolcx {

inline constexpr int kDefaultMaxBsArity = 14;

// Sensitive blocks at a base input, with weights (all 1 for integral
// families). Blocks are variable masks.
struct BlockFamily {
  Input base = 0;
  std::vector<Input> blocks;
  std::vector<double> weights;

  double total() const;
};

struct SensitivityResult {
  int value = 0;
  Input witness = 0;
};

// Number of single-bit flips at x that stay in Dom(f) and change f.
// Precondition: x in Dom(f).
int sensitivity_at(const PartialFn& f, Input x);
SensitivityResult sensitivity(const PartialFn& f);

// All nonempty B with x^B in Dom(f) and f(x^B) != f(x), ascending by mask.
std::vector<Input> sensitive_blocks(const PartialFn& f, Input x);
// Sensitive blocks with no sensitive proper subset, ascending by mask.
std::vector<Input> minimal_sensitive_blocks(const PartialFn& f, Input x);

// Exact maximum set of pairwise disjoint blocks. Deterministic: the first
// optimum found in canonical (ascending) search order.
std::vector<Input> max_disjoint_packing(std::span<const Input> blocks);

struct BsResult {
  int value = 0;
  BlockFamily witness;
};

BsResult block_sensitivity_at(const PartialFn& f, Input x,
                              int max_arity = kDefaultMaxBsArity);
// Maximum over Dom(f); ties go to the smallest input index.
BsResult block_sensitivity(const PartialFn& f,
                           int max_arity = kDefaultMaxBsArity);

// Which sensitive blocks become LP columns. `minimal` is enough: shrinking a
// block to a minimal sensitive sub-block never increases any index load, so
// every feasible weighting over all blocks maps to one over minimal blocks
// with the same total.
enum class BlockColumns { minimal, all };

struct FbsResult {
  double value = 0.0;
  BlockFamily witness;  // blocks with positive weight
};

FbsResult fractional_block_sensitivity_at(
    const PartialFn& f, Input x, BlockColumns columns = BlockColumns::minimal,
    int max_arity = kDefaultMaxBsArity);
FbsResult fractional_block_sensitivity(
    const PartialFn& f, BlockColumns columns = BlockColumns::minimal,
    int max_arity = kDefaultMaxBsArity);

// Coefficients of the unique multilinear representation over {0,1}, indexed
// by monomial mask.
std::vector<std::int64_t> mobius_coefficients(const TruthTable& f);
int exact_degree(const TruthTable& f);

// Deterministic decision tree depth by memoized recursion over subcubes.
int decision_tree_depth(const PartialFn& f, int max_arity = kDefaultMaxBsArity);

// gamma(f) for a non-constant total symmetric function: with k the flip
// position (f(k) != f(k+1)) closest to n/2, k if k <= n/2 else n - k.
int paturi_gamma(const SymmetricSpectrum& spec);

struct MeasureReport {
  std::string name;
  int arity = 0;
  int s = 0;
  int bs = 0;
  double fbs = 0.0;
  std::optional<int> deg;   // total functions only
  std::optional<int> depth;  // D(f), when arity within the bound
  std::optional<int> adeg;
  Input s_witness = 0;
  BlockFamily bs_witness;
  BlockFamily fbs_witness;
};

struct MeasureOptions {
  int max_arity = kDefaultMaxBsArity;
  bool with_adeg = false;
  int max_lp_arity = 10;
};

MeasureReport compute_measures(const std::string& name, const PartialFn& f,
                               const MeasureOptions& opts = {});

std::string measures_csv_header();
std::string to_csv_row(const MeasureReport& r);
std::string measures_to_json(std::span<const MeasureReport> reports);

}  // namespace boolcx

#endif  // BOOLCX_MEASURES_HPP_
