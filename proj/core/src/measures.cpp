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

#include "boolcx/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "boolcx/adeg.hpp"
#include "boolcx/errors.hpp"
#include "boolcx/lp.hpp"

namespace boolcx {
namespace {

constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

using Words = std::vector<std::uint64_t>;

// out[B] = in[B ^ shift], on 2^n-entry packed tables.
Words xor_permute(std::span<const std::uint64_t> in, int n, Input shift) {
  Words out(in.begin(), in.end());
  for (int i = 0; i < n; ++i) {
    if (!((shift >> i) & 1u)) continue;
    if (i < 6) {
      const int s = 1 << i;
      for (auto& w : out) w = ((w & kLowHalf[i]) << s) | ((w >> s) & kLowHalf[i]);
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < out.size(); ++w) {
        if (w & stride) std::swap(out[w], out[w ^ stride]);
      }
    }
  }
  return out;
}

// out[B] = OR over i in B of in[B \ {i}].
Words shift_up_union(const Words& in, int n) {
  Words out(in.size(), 0);
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const int s = 1 << i;
      for (std::size_t w = 0; w < in.size(); ++w) out[w] |= (in[w] & kLowHalf[i]) << s;
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < in.size(); ++w) {
        if (w & stride) out[w] |= in[w ^ stride];
      }
    }
  }
  return out;
}

// Downward closure: out[B] = OR over subsets A of B of in[A].
void subset_closure(Words& t, int n) {
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const int s = 1 << i;
      for (auto& w : t) w |= (w & kLowHalf[i]) << s;
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < t.size(); ++w) {
        if (w & stride) t[w] |= t[w ^ stride];
      }
    }
  }
}

std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

// sens[B] = 1 iff x^B in Dom(f) and f(x^B) != f(x).
Words sensitivity_table(const PartialFn& f, Input x) {
  const int n = f.arity();
  Words dom = xor_permute(f.domain_mask().words(), n, x);
  Words val = xor_permute(f.value_bits().words(), n, x);
  const bool fx = f.value(x);
  for (std::size_t w = 0; w < dom.size(); ++w) {
    dom[w] &= fx ? ~val[w] : val[w];
  }
  dom.back() &= tail_mask(n);
  return dom;
}

std::vector<Input> collect(const Words& t) {
  std::vector<Input> out;
  for (std::size_t w = 0; w < t.size(); ++w) {
    std::uint64_t bits = t[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Input>(64 * w + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

class Packer {
 public:
  explicit Packer(std::span<const Input> blocks) : blocks_(blocks.begin(), blocks.end()) {}

  std::vector<Input> run() {
    Input avail = 0;
    for (Input b : blocks_) avail |= b;
    search(avail, blocks_);
    return best_;
  }

 private:
  static std::vector<Input> fitting(const std::vector<Input>& cands, Input avail) {
    std::vector<Input> out;
    for (Input b : cands) {
      if ((b & ~avail) == 0) out.push_back(b);
    }
    return out;
  }

  void search(Input avail, const std::vector<Input>& cands) {
    if (cands.empty()) {
      if (cur_.size() > best_.size()) best_ = cur_;
      return;
    }
    Input uni = 0;
    int min_size = 64;
    for (Input b : cands) {
      uni |= b;
      min_size = std::min(min_size, popcount(b));
    }
    const std::size_t bound =
        cur_.size() + std::min(cands.size(), static_cast<std::size_t>(popcount(uni) / min_size));
    if (bound <= best_.size()) return;
    const Input e = uni & (~uni + 1);
    for (Input b : cands) {
      if (!(b & e)) continue;
      cur_.push_back(b);
      search(avail & ~b, fitting(cands, avail & ~b));
      cur_.pop_back();
    }
    search(avail & ~e, fitting(cands, avail & ~e));
  }

  std::vector<Input> blocks_;
  std::vector<Input> cur_;
  std::vector<Input> best_;
};

void require_in_domain(const PartialFn& f, Input x) {
  if (x >= f.size() || !f.defined(x)) throw InputError("base input outside Dom(f)");
}

void require_bs_arity(const PartialFn& f, int max_arity) {
  if (f.arity() > max_arity) {
    throw BoundExceeded("arity " + std::to_string(f.arity()) +
                        " exceeds the block-sensitivity bound " + std::to_string(max_arity));
  }
}

}  // namespace

double BlockFamily::total() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

int sensitivity_at(const PartialFn& f, Input x) {
  require_in_domain(f, x);
  int s = 0;
  const bool fx = f.value(x);
  for (int i = 0; i < f.arity(); ++i) {
    const Input y = x ^ (Input{1} << i);
    if (f.defined(y) && f.value(y) != fx) ++s;
  }
  return s;
}

SensitivityResult sensitivity(const PartialFn& f) {
  SensitivityResult best;
  for (Input x = 0; x < f.size(); ++x) {
    if (!f.defined(x)) continue;
    const int s = sensitivity_at(f, x);
    if (s > best.value) best = {s, x};
  }
  return best;
}

std::vector<Input> sensitive_blocks(const PartialFn& f, Input x) {
  require_in_domain(f, x);
  return collect(sensitivity_table(f, x));
}

std::vector<Input> minimal_sensitive_blocks(const PartialFn& f, Input x) {
  require_in_domain(f, x);
  const int n = f.arity();
  const Words sens = sensitivity_table(f, x);
  Words down = sens;
  subset_closure(down, n);
  const Words proper = shift_up_union(down, n);
  Words minimal(sens.size());
  for (std::size_t w = 0; w < sens.size(); ++w) minimal[w] = sens[w] & ~proper[w];
  return collect(minimal);
}

std::vector<Input> max_disjoint_packing(std::span<const Input> blocks) {
  return Packer(blocks).run();
}

BsResult block_sensitivity_at(const PartialFn& f, Input x, int max_arity) {
  require_bs_arity(f, max_arity);
  BsResult r;
  r.witness.base = x;
  r.witness.blocks = max_disjoint_packing(minimal_sensitive_blocks(f, x));
  std::sort(r.witness.blocks.begin(), r.witness.blocks.end());
  r.witness.weights.assign(r.witness.blocks.size(), 1.0);
  r.value = static_cast<int>(r.witness.blocks.size());
  return r;
}

BsResult block_sensitivity(const PartialFn& f, int max_arity) {
  require_bs_arity(f, max_arity);
  BsResult best;
  bool have = false;
  for (Input x = 0; x < f.size(); ++x) {
    if (!f.defined(x)) continue;
    BsResult r = block_sensitivity_at(f, x, max_arity);
    if (!have || r.value > best.value) {
      best = std::move(r);
      have = true;
      if (best.value == f.arity()) break;
    }
  }
  return best;
}

FbsResult fractional_block_sensitivity_at(const PartialFn& f, Input x,
                                          BlockColumns columns, int max_arity) {
  require_bs_arity(f, max_arity);
  const std::vector<Input> blocks = columns == BlockColumns::minimal
                                        ? minimal_sensitive_blocks(f, x)
                                        : sensitive_blocks(f, x);
  FbsResult out;
  out.witness.base = x;
  if (blocks.empty()) return out;
  const int nb = static_cast<int>(blocks.size());
  lp::LinearProgram prog(nb, lp::Sense::maximize);
  prog.set_objective(std::vector<double>(static_cast<std::size_t>(nb), 1.0));
  for (int j = 0; j < nb; ++j) prog.set_bounds(j, 0.0, 1.0);
  for (int i = 0; i < f.arity(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(nb), 0.0);
    bool any = false;
    for (int j = 0; j < nb; ++j) {
      if ((blocks[static_cast<std::size_t>(j)] >> i) & 1u) {
        row[static_cast<std::size_t>(j)] = 1.0;
        any = true;
      }
    }
    if (any) prog.add_row(std::move(row), lp::Relation::less_equal, 1.0);
  }
  const lp::LpOutcome res = lp::solve(prog);
  if (res.status != lp::Status::optimal) {
    throw VerificationFailure("fbs LP did not reach an optimum: " + lp::to_string(res.status));
  }
  out.value = res.objective;
  for (int j = 0; j < nb; ++j) {
    const double p = res.solution[static_cast<std::size_t>(j)];
    if (p > 1e-12) {
      out.witness.blocks.push_back(blocks[static_cast<std::size_t>(j)]);
      out.witness.weights.push_back(std::min(p, 1.0));
    }
  }
  return out;
}

FbsResult fractional_block_sensitivity(const PartialFn& f, BlockColumns columns,
                                       int max_arity) {
  require_bs_arity(f, max_arity);
  FbsResult best;
  bool have = false;
  for (Input x = 0; x < f.size(); ++x) {
    if (!f.defined(x)) continue;
    FbsResult r = fractional_block_sensitivity_at(f, x, columns, max_arity);
    if (!have || r.value > best.value + 1e-9) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

std::vector<std::int64_t> mobius_coefficients(const TruthTable& f) {
  const int n = f.arity();
  std::vector<std::int64_t> a(f.size());
  for (Input x = 0; x < f.size(); ++x) a[x] = f(x) ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    const Input bit = Input{1} << i;
    for (Input s = 0; s < f.size(); ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
  return a;
}

int exact_degree(const TruthTable& f) {
  const auto a = mobius_coefficients(f);
  int d = 0;
  for (Input s = 0; s < a.size(); ++s) {
    if (a[s] != 0) d = std::max(d, popcount(s));
  }
  return d;
}

namespace {

class DepthSolver {
 public:
  explicit DepthSolver(const PartialFn& f) : f_(f), n_(f.arity()) {
    pow3_.resize(static_cast<std::size_t>(n_) + 1);
    pow3_[0] = 1;
    for (int i = 1; i <= n_; ++i) pow3_[static_cast<std::size_t>(i)] = 3 * pow3_[static_cast<std::size_t>(i) - 1];
    vals_.assign(pow3_.back(), kUnknown);
    depth_.assign(pow3_.back(), -1);
  }

  int run() {
    std::uint64_t all_free = 0;
    for (int i = 0; i < n_; ++i) all_free += 2 * pow3_[static_cast<std::size_t>(i)];
    return depth(all_free);
  }

 private:
  static constexpr std::uint8_t kUnknown = 0xff;

  int digit(std::uint64_t s, int i) const {
    return static_cast<int>((s / pow3_[static_cast<std::size_t>(i)]) % 3);
  }

  // Bit 0: some defined point has value 0; bit 1: value 1.
  std::uint8_t values(std::uint64_t s) {
    std::uint8_t& v = vals_[s];
    if (v != kUnknown) return v;
    int free_var = -1;
    Input x = 0;
    for (int i = 0; i < n_; ++i) {
      const int d = digit(s, i);
      if (d == 2) {
        free_var = i;
        break;
      }
      if (d == 1) x |= Input{1} << i;
    }
    if (free_var < 0) {
      v = f_.defined(x) ? static_cast<std::uint8_t>(f_.value(x) ? 2 : 1) : 0;
    } else {
      const std::uint64_t p = pow3_[static_cast<std::size_t>(free_var)];
      v = static_cast<std::uint8_t>(values(s - 2 * p) | values(s - p));
    }
    return v;
  }

  int depth(std::uint64_t s) {
    if (depth_[s] >= 0) return depth_[s];
    int best = 0;
    if (values(s) == 3) {
      best = n_ + 1;
      for (int i = 0; i < n_; ++i) {
        if (digit(s, i) != 2) continue;
        const std::uint64_t p = pow3_[static_cast<std::size_t>(i)];
        const int d0 = depth(s - 2 * p);
        if (1 + d0 >= best) continue;
        const int d1 = depth(s - p);
        best = std::min(best, 1 + std::max(d0, d1));
      }
    }
    depth_[s] = static_cast<std::int8_t>(best);
    return best;
  }

  const PartialFn& f_;
  int n_;
  std::vector<std::uint64_t> pow3_;
  std::vector<std::uint8_t> vals_;
  std::vector<std::int8_t> depth_;
};

}  // namespace

int decision_tree_depth(const PartialFn& f, int max_arity) {
  if (f.arity() > max_arity) {
    throw BoundExceeded("decision tree depth limited to arity " + std::to_string(max_arity));
  }
  return DepthSolver(f).run();
}

int paturi_gamma(const SymmetricSpectrum& spec) {
  if (!spec.is_total()) throw InputError("paturi_gamma needs a total spectrum");
  if (spec.is_constant()) throw InputError("paturi_gamma needs a non-constant spectrum");
  const int n = spec.arity;
  int best_k = -1;
  for (int k = 0; k < n; ++k) {
    if (spec.profile[static_cast<std::size_t>(k)] == spec.profile[static_cast<std::size_t>(k) + 1]) continue;
    if (best_k < 0 || std::abs(2 * k - n) < std::abs(2 * best_k - n)) best_k = k;
  }
  return 2 * best_k <= n ? best_k : n - best_k;
}

MeasureReport compute_measures(const std::string& name, const PartialFn& f,
                               const MeasureOptions& opts) {
  MeasureReport r;
  r.name = name;
  r.arity = f.arity();
  const auto s = sensitivity(f);
  r.s = s.value;
  r.s_witness = s.witness;
  auto bs = block_sensitivity(f, opts.max_arity);
  r.bs = bs.value;
  r.bs_witness = std::move(bs.witness);
  auto fbs = fractional_block_sensitivity(f, BlockColumns::minimal, opts.max_arity);
  r.fbs = fbs.value;
  r.fbs_witness = std::move(fbs.witness);
  if (f.is_total()) r.deg = exact_degree(TruthTable(f));
  r.depth = decision_tree_depth(f, opts.max_arity);
  if (opts.with_adeg && f.is_total() && f.arity() <= opts.max_lp_arity) {
    r.adeg = adeg(TruthTable(f));
  }
  return r;
}

std::string measures_csv_header() { return "name,n,s,bs,fbs,deg,D"; }

std::string to_csv_row(const MeasureReport& r) {
  char fbs[32];
  std::snprintf(fbs, sizeof fbs, "%.6f", r.fbs);
  std::string row = r.name + "," + std::to_string(r.arity) + "," + std::to_string(r.s) + "," +
                    std::to_string(r.bs) + "," + fbs + ",";
  if (r.deg) row += std::to_string(*r.deg);
  row += ",";
  if (r.depth) row += std::to_string(*r.depth);
  return row;
}

namespace {

nlohmann::ordered_json family_json(const BlockFamily& fam) {
  nlohmann::ordered_json j;
  j["base"] = fam.base;
  j["blocks"] = fam.blocks;
  std::vector<double> w;
  for (double x : fam.weights) w.push_back(std::round(x * 1e9) / 1e9);
  j["weights"] = w;
  return j;
}

}  // namespace

std::string measures_to_json(std::span<const MeasureReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["n"] = r.arity;
    j["s"] = r.s;
    j["bs"] = r.bs;
    j["fbs"] = std::round(r.fbs * 1e9) / 1e9;
    j["deg"] = r.deg ? nlohmann::ordered_json(*r.deg) : nlohmann::ordered_json();
    j["D"] = r.depth ? nlohmann::ordered_json(*r.depth) : nlohmann::ordered_json();
    if (r.adeg) j["adeg"] = *r.adeg;
    j["s_witness"] = r.s_witness;
    j["bs_witness"] = family_json(r.bs_witness);
    j["fbs_witness"] = family_json(r.fbs_witness);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace boolcx
