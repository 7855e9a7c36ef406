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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Wall-clock limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "boolcx/adeg.hpp"
#include "boolcx/errors.hpp"
#include "boolcx/gapmaj_sim.hpp"
#include "boolcx/measures.hpp"
#include "boolcx/noisy.hpp"
#include "boolcx/verify.hpp"
#include "boolcx/walk.hpp"
#include "boolcx/zoo.hpp"
#include "support/oracles.hpp"

namespace {

using namespace boolcx;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool within_3_sigma(double observed, double expected, double se) {
  return std::fabs(observed - expected) <= 3.0 * se;
}

// All 256 total 3-bit functions followed by 500 seeded random 4-bit ones.
std::vector<PartialFn> measure_instances() {
  std::vector<PartialFn> out;
  for (unsigned code = 0; code < 256; ++code) {
    out.push_back(PartialFn::tabulate(3, [&](Input x) { return to_value((code >> x) & 1u); }));
  }
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 500; ++i) out.push_back(oracle::random_total(4, rng).as_partial());
  return out;
}

Outcome ac1() {
  Outcome o;
  int checked = 0;
  for (const auto& f : measure_instances()) {
    const int s = sensitivity(f).value;
    const int bs = block_sensitivity(f).value;
    const double fbs = fractional_block_sensitivity(f).value;
    const int n = f.arity();
    if (!(s <= bs && bs <= fbs + 1e-6 && fbs <= n + 1e-6)) fail(o, "order violated");
    if (s != oracle::sensitivity(f)) fail(o, "s differs from naive count");
    if (bs != oracle::block_sensitivity(f)) fail(o, "bs differs from set-packing oracle");
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " functions, s <= bs <= fbs <= n, bs exact";
  return o;
}

Outcome ac2() {
  Outcome o;
  double worst_gap = 0.0;
  for (const auto& f : measure_instances()) {
    const double gap = fractional_block_sensitivity(f).value - block_sensitivity(f).value;
    worst_gap = std::min(worst_gap, gap);
    if (gap < -1e-6) fail(o, "fbs < bs");
  }
  double worst_or = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const double v = fractional_block_sensitivity(zoo::or_n(n)).value;
    worst_or = std::max(worst_or, std::fabs(v - n));
    if (std::fabs(v - n) > 1e-6) fail(o, "fbs(OR_" + std::to_string(n) + ") = " + fmt("%.9f", v));
  }
  if (o.ok) o.detail = "min fbs-bs " + fmt("%.3g", worst_gap) + ", max |fbs(OR_n)-n| " + fmt("%.3g", worst_or);
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const TruthTable x(zoo::xor_n(n));
    if (adeg_feasible(x, n - 1).feasible) fail(o, "XOR_" + std::to_string(n) + " feasible at n-1");
    if (!adeg_feasible(x, n).feasible) fail(o, "XOR_" + std::to_string(n) + " infeasible at n");
  }
  const TruthTable and2(zoo::and_n(2));
  if (adeg(and2) != 1) fail(o, "adeg(AND_2) != 1");
  const auto w = adeg_feasible(and2, 1);
  const double werr = oracle::max_error(w.witness, and2.as_partial());
  if (werr > 1.0 / 3.0 + 1e-7) fail(o, "AND_2 witness error " + fmt("%.9f", werr));
  std::string seq;
  int prev = 0;
  for (int n = 1; n <= 10; ++n) {
    const int d = adeg(TruthTable(zoo::or_n(n)), kOneThird, 10);
    seq += (n > 1 ? "," : "") + std::to_string(d);
    if (d < prev) fail(o, "adeg(OR_n) decreases at n = " + std::to_string(n));
    prev = d;
  }
  if (o.ok) o.detail = "adeg(XOR_n) = n for n <= 6; AND_2 witness error " + fmt("%.4f", werr) +
                       "; adeg(OR_1..10) = " + seq;
  return o;
}

Outcome ac4() {
  Outcome o;
  double lo = 1e9, hi = 0.0;
  int count = 0;
  std::string per_n;
  for (int n = 1; n <= 8; ++n) {
    double nlo = 1e9, nhi = 0.0;
    for (int code = 1; code < (1 << (n + 1)) - 1; ++code) {
      std::vector<int> prof(static_cast<std::size_t>(n) + 1);
      std::string text;
      for (int k = 0; k <= n; ++k) {
        prof[static_cast<std::size_t>(k)] = (code >> k) & 1;
        text += static_cast<char>('0' + prof[static_cast<std::size_t>(k)]);
      }
      const auto spec = SymmetricSpectrum::parse(text);
      const int g = paturi_gamma(spec);
      if (g != oracle::paturi_gamma(prof)) fail(o, "gamma mismatch for " + text);
      const int d = adeg_symmetric(spec);
      const double ratio = d / std::sqrt(static_cast<double>(n) * (g + 1));
      nlo = std::min(nlo, ratio);
      nhi = std::max(nhi, ratio);
      if (ratio < 0.2 || ratio > 3.0) fail(o, "ratio " + fmt("%.4f", ratio) + " for " + text);
      ++count;
    }
    lo = std::min(lo, nlo);
    hi = std::max(hi, nhi);
    per_n += " n=" + std::to_string(n) + ":[" + fmt("%.4f", nlo) + "," + fmt("%.4f", nhi) + "]";
  }
  if (o.ok) {
    o.detail = std::to_string(count) + " functions, ratio in [" + fmt("%.4f", lo) + ", " +
               fmt("%.4f", hi) + "];" + per_n;
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  VerifyOptions opts;
  opts.max_lp_arity = 9;
  const std::vector<std::pair<std::string, PartialFn>> outer = {
      {"OR_3", zoo::or_n(3)}, {"XOR_2", zoo::xor_n(2)}, {"MAJ_3", zoo::maj_n(3)}};
  const std::vector<std::pair<std::string, PartialFn>> inner = {{"AND_2", zoo::and_n(2)},
                                                                {"XOR_2", zoo::xor_n(2)}};
  int violations = 0;
  std::string rows;
  std::string failing;
  for (const auto& [fn, f] : outer) {
    for (const auto& [gn, g] : inner) {
      const BsChain c = build_bs_chain(TruthTable(f), TruthTable(g), opts);
      int v = 0;
      if (c.adeg_fg < c.bdeg_fprime_g) ++v;
      if (c.bdeg_fprime_g < c.bdeg_pror_g) ++v;
      for (int b : c.bdeg_inner) {
        if (b < c.adeg_g) ++v;
      }
      if (!c.rewrite_matches) ++v;
      violations += v;
      std::string chain;
      for (int b : c.bdeg_inner) chain += std::to_string(b) + "/";
      rows += " " + fn + "o" + gn + ":" + std::to_string(c.adeg_fg) + ">=" +
              std::to_string(c.bdeg_fprime_g) + ">=" + std::to_string(c.bdeg_pror_g) +
              ",inner " + chain + "adeg(g)=" + std::to_string(c.adeg_g);
      if (v > 0) failing += " " + fn + "o" + gn;
    }
  }
  if (violations > 0) fail(o, std::to_string(violations) + " violations at" + failing + ";");
  o.detail += rows;
  return o;
}

Outcome ac6() {
  Outcome o;
  const std::vector<std::pair<int, int>> gammas = {{1, 20}, {1, 10}, {1, 5}};
  int cases = 0;
  double worst_float = 0.0;
  for (const auto& [num, den] : gammas) {
    const int kmax = (den * den) / (num * num);
    for (int k = 1; k <= kmax; k += 2) {
      const auto b = check_amplification_bounds(num, den, k);
      if (!b.lower_holds || !b.upper_holds) {
        fail(o, "bound fails at gamma=" + std::to_string(num) + "/" + std::to_string(den) +
                    " k=" + std::to_string(k));
      }
      const double ref = static_cast<double>(oracle::amplified_bias(
          static_cast<long double>(num) / den, k));
      worst_float = std::max(worst_float, std::fabs(ref - b.gamma_prime));
      ++cases;
    }
  }
  if (worst_float > 1e-12) fail(o, "floating gamma' off by " + fmt("%.3g", worst_float));
  if (o.ok) o.detail = std::to_string(cases) + " (gamma, k) cases exact; float drift " + fmt("%.2g", worst_float);
  return o;
}

Outcome ac7() {
  Outcome o;
  const std::int64_t walks = 100000;
  std::string cells;
  std::uint64_t stream = 0;
  for (double g : {0.02, 0.05, 0.1}) {
    for (int t : {4, 16, 64}) {
      ++stream;
      if (walk_threshold(g, t) < 1) continue;
      const auto r = mu_ratio_check(g, t);
      if (!r.holds) fail(o, "mu_2T > 12 mu_T");
      if (std::fabs(r.mu_T - oracle::walk_mean_dp(g, r.T)) > 1e-9 * r.mu_T) {
        fail(o, "closed form disagrees with the linear-system oracle");
      }
      Rng rng(derive_seed(20261016, stream));
      // Welford accumulation; at T = 1 every walk has length 1 and the
      // variance is exactly zero, leaving only rounding in mu_T.
      double mean = 0.0, m2 = 0.0;
      for (std::int64_t i = 0; i < walks; ++i) {
        const double len = static_cast<double>(sample_conditioned_walk(g, r.T, r.T, rng).size());
        const double d = len - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (len - mean);
      }
      const double se = std::sqrt(m2 / static_cast<double>(walks - 1) / static_cast<double>(walks));
      const bool ok = se > 0.0 ? within_3_sigma(mean, r.mu_T, se)
                               : std::fabs(mean - r.mu_T) <= 1e-12 * r.mu_T;
      const double z = se > 0.0 ? (mean - r.mu_T) / se : 0.0;
      if (!ok) fail(o, "mean length off at g=" + fmt("%.2f", g) + " t=" + std::to_string(t));
      cells += " (" + fmt("%.2f", g) + "," + std::to_string(t) + ",T=" + std::to_string(r.T) +
               ",ratio=" + fmt("%.2f", r.mu_2T / r.mu_T) + ",z=" + fmt("%+.2f", z) + ")";
    }
  }
  o.detail += cells;
  return o;
}

Outcome ac8() {
  Outcome o;
  const double g = 0.2;
  const int T = 2;
  const std::int64_t samples = 100000;
  // Complete paths of length <= 6 plus one bucket for longer ones.
  const auto law = oracle::complete_path_law(g, T, 6);
  double listed = 0.0;
  for (const auto& [k, p] : law) listed += p;
  std::map<std::string, std::int64_t> counts;
  Rng rng(derive_seed(20261016, 800));
  for (std::int64_t i = 0; i < samples; ++i) {
    const WalkTrace w = sample_conditioned_walk(g, T, T, rng);
    std::string key;
    for (auto s : w) key += s > 0 ? '+' : '-';
    ++counts[key.size() <= 6 ? key : std::string("longer")];
  }
  double max_z = 0.0;
  auto compare = [&](const std::string& key, double p) {
    const double obs = static_cast<double>(counts[key]) / samples;
    const double se = std::sqrt(p * (1 - p) / samples);
    max_z = std::max(max_z, std::fabs(obs - p) / se);
    if (!within_3_sigma(obs, p, se)) fail(o, "trace " + key + " off");
  };
  for (const auto& [k, p] : law) compare(k, p);
  compare("longer", 1.0 - listed);
  std::int64_t seen = 0;
  for (const auto& [k, c] : counts) seen += c;
  if (seen != samples || counts.size() > law.size() + 1) fail(o, "trace outside the law's support");

  // Generated bits at the same (gamma_hat, T). The walk parameters are set
  // by hand with t = 1, since the (t, gamma_hat) threshold rule gives T = 0
  // at gamma_hat = 0.2.
  WalkParams params;
  params.gamma_hat = g;
  params.t = 1;
  params.T = T;
  params.R = std::pow((1 + g) / (1 - g), T);
  params.delta_prime = (params.R - 1) / (params.R + 1);
  const std::int64_t bits = 1000000;
  NoisyOracle hidden({true}, derive_seed(20261016, 801));
  Rng gen_rng(derive_seed(20261016, 802));
  BiasedBitGenerator gen(params, hidden, 0, gen_rng);
  std::int64_t ones = 0;
  for (std::int64_t i = 0; i < bits; ++i) ones += gen.next();
  const double p = (1 + g) / 2;
  const double freq = static_cast<double>(ones) / bits;
  const double bias_se = 2 * std::sqrt(p * (1 - p) / bits);
  if (!within_3_sigma(2 * freq - 1, g, bias_se)) fail(o, "generated-bit bias " + fmt("%.5f", 2 * freq - 1));
  o.detail += " " + std::to_string(law.size() + 1) + " trace classes, max z " + fmt("%.2f", max_z) +
              "; bit bias " + fmt("%.5f", 2 * freq - 1) + " (z " +
              fmt("%+.2f", (2 * freq - 1 - g) / bias_se) + ")";
  return o;
}

Outcome ac9() {
  Outcome o;
  const int t = 64, n = 2, trials = 1000;
  const double low = 1.0 / 8.0;
  const TruthTable f(zoo::or_n(2));
  const auto sim = simulate_on_gapmaj(majority_vote_algorithm(f, low, 9 * t), n, t, low);
  Rng rng(derive_seed(20261016, 900));
  double worst = 1.0;
  std::int64_t transcripts = 0;
  for (Input outer = 0; outer < 4; ++outer) {
    // Two random arrangements per outer input plus the packed one.
    std::vector<BitTable> inputs = {sample_composed_input(outer, n, t, rng),
                                    sample_composed_input(outer, n, t, rng)};
    BitTable packed(static_cast<std::size_t>(n * t));
    for (int i = 0; i < n; ++i) {
      const int w = ((outer >> i) & 1u) ? 48 : 16;
      for (int j = 0; j < w; ++j) packed.set(static_cast<std::size_t>(i * t + j), true);
    }
    inputs.push_back(packed);
    for (std::size_t v = 0; v < inputs.size(); ++v) {
      int correct = 0;
      for (int trial = 0; trial < trials; ++trial) {
        const auto run = sim(inputs[v], derive_seed(outer * 16 + v, static_cast<std::uint64_t>(trial)));
        correct += run.output == f(outer);
        std::int64_t unit = 0, lowq = 0;
        for (const auto& q : run.transcript) (q.gamma == 1.0 ? unit : lowq) += 1;
        if (run.composed_queries != t * unit + lowq || !run.count_identity(t)) {
          fail(o, "query count identity broken");
        }
        ++transcripts;
      }
      const double rate = static_cast<double>(correct) / trials;
      worst = std::min(worst, rate);
      if (rate < 2.0 / 3.0) fail(o, "success rate " + fmt("%.3f", rate));
    }
  }
  o.detail += " worst success rate " + fmt("%.3f", worst) + " over " + std::to_string(transcripts) +
              " transcripts";
  return o;
}

Outcome ac10() {
  Outcome o;
  const auto s = build_sink_polynomial(4, 1.0 / 3.0);
  const PartialFn sink = zoo::sink(4);
  double worst = 0.0;
  for (Input x = 0; x < 64; ++x) {
    if (!sink.defined(x)) fail(o, "SINK_4 undefined somewhere");
    worst = std::max(worst, std::fabs(oracle::naive_eval(s.poly, x) - sink.value(x)));
  }
  if (worst > 1.0 / 3.0 + 1e-9) fail(o, "max error " + fmt("%.9f", worst));
  const int bs = block_sensitivity(sink).value;
  if (bs < 3 || bs != oracle::block_sensitivity(sink)) fail(o, "bs(SINK_4) = " + std::to_string(bs));
  o.detail += " degree " + std::to_string(s.degree) + ", max error " + fmt("%.6f", worst) +
              ", bs(SINK_4) = " + std::to_string(bs);
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {"AC1", "measure order and exact bs", 120, ac1},
      {"AC2", "fractional block sensitivity LP", 60, ac2},
      {"AC3", "approximate degree LP", 600, ac3},
      {"AC4", "symmetric band", 900, ac4},
      {"AC5", "block-sensitivity chain", 1200, ac5},
      {"AC6", "majority amplification bounds", 1, ac6},
      {"AC7", "walk length ratio and mean", 120, ac7},
      {"AC8", "conditioned trace law and generated bits", 120, ac8},
      {"AC9", "OR_2 o GapMaj_64 simulation", 300, ac9},
      {"AC10", "SINK_4 polynomial", 60, ac10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      out.ok = false;
      out.detail += " (over time limit)";
    }
    failed += !out.ok;
    std::printf("%s %s %s [%.2f s, limit %.0f s]:%s%s\n", c.id, out.ok ? "PASS" : "FAIL", c.title,
                secs, c.limit_s, out.detail.empty() || out.detail[0] == ' ' ? "" : " ",
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
