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

#include "boolcx/noisy.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "boolcx/errors.hpp"

namespace boolcx {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_odd(int k) {
  if (k < 1 || k % 2 == 0) throw InputError("k must be a positive odd integer");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ (stream * 0xd1b54a32d192ed03ULL + 1));
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

NoisyOracle::NoisyOracle(std::vector<bool> input, std::uint64_t seed, bool keep_transcript)
    : input_(std::move(input)),
      seed_(seed),
      keep_transcript_(keep_transcript),
      counters_(input_.size(), 0) {}

bool NoisyOracle::query(int i, double gamma) {
  if (i < 0 || i >= size()) throw InputError("query index out of range: " + std::to_string(i));
  if (!(std::fabs(gamma) <= 1.0)) throw InputError("query bias must satisfy |gamma| <= 1");
  const auto idx = static_cast<std::size_t>(i);
  const std::uint64_t word = splitmix64(derive_seed(seed_, idx) + counters_[idx]++);
  const double u = static_cast<double>(word >> 11) * 0x1.0p-53;
  const bool truthful = u < (1.0 + gamma) / 2.0;
  const bool answer = truthful ? input_[idx] : !input_[idx];
  cost_ += gamma * gamma;
  ++queries_;
  if (keep_transcript_) transcript_.push_back({i, gamma, answer, cost_});
  return answer;
}

double amplify_bias_exact(double gamma, int k) {
  require_odd(k);
  if (!(std::fabs(gamma) <= 1.0)) throw InputError("bias must satisfy |gamma| <= 1");
  const long double p = (1.0L + gamma) / 2.0L;
  const long double q = (1.0L - gamma) / 2.0L;
  long double sum = 0.0L;
  for (int j = k / 2 + 1; j <= k; ++j) {
    const long double log_c = std::lgamma(static_cast<long double>(k) + 1) -
                              std::lgamma(static_cast<long double>(j) + 1) -
                              std::lgamma(static_cast<long double>(k - j) + 1);
    const long double c = std::exp(log_c);
    sum += c * (std::pow(p, j) * std::pow(q, k - j) - std::pow(q, j) * std::pow(p, k - j));
  }
  return static_cast<double>(sum);
}

AmplificationBounds check_amplification_bounds(std::int64_t num, std::int64_t den, int k) {
  using boost::multiprecision::cpp_int;
  require_odd(k);
  if (den <= 0 || num <= 0 || num > den) throw InputError("need 0 < num <= den");
  // Pr[majority correct] = S / D with D = (2 den)^k and
  // S = sum_{j > k/2} C(k, j) (den + num)^j (den - num)^(k - j).
  const cpp_int up = den + num;
  const cpp_int down = den - num;
  cpp_int d = 1;
  for (int i = 0; i < k; ++i) d *= 2 * den;
  std::vector<cpp_int> up_pow(static_cast<std::size_t>(k) + 1, 1);
  std::vector<cpp_int> down_pow(static_cast<std::size_t>(k) + 1, 1);
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
    up_pow[j] = up_pow[j - 1] * up;
    down_pow[j] = down_pow[j - 1] * down;
  }
  cpp_int s = 0;
  cpp_int c = 1;  // C(k, j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) c = c * (k - j + 1) / j;
    if (2 * j > k) {
      s += c * up_pow[static_cast<std::size_t>(j)] * down_pow[static_cast<std::size_t>(k - j)];
    }
  }
  // gamma' = G / D with G = 2S - D, and gamma = num / den.
  const cpp_int g = 2 * s - d;
  const cpp_int g2den2 = g * g * den * den;
  const cpp_int num2d2 = cpp_int(num) * num * d * d;

  AmplificationBounds out;
  out.gamma_prime = amplify_bias_exact(static_cast<double>(num) / static_cast<double>(den), k);
  const double gamma = static_cast<double>(num) / static_cast<double>(den);
  out.lower = std::sqrt(static_cast<double>(k)) * gamma / 3.0;
  out.upper = 3.0 * std::sqrt(static_cast<double>(k)) * gamma;
  // sqrt(k) gamma / 3 <= gamma'  <=>  k num^2 D^2 <= 9 den^2 G^2 (G > 0).
  out.lower_holds = g > 0 && k * num2d2 <= 9 * g2den2;
  // gamma' <= 3 sqrt(k) gamma  <=>  den^2 G^2 <= 9 k num^2 D^2.
  out.upper_holds = g2den2 <= 9 * k * num2d2;
  return out;
}

bool amplify_bias_sample(NoisyAccess& oracle, int i, double gamma, int k) {
  require_odd(k);
  int ones = 0;
  for (int r = 0; r < k; ++r) ones += oracle.query(i, gamma) ? 1 : 0;
  return 2 * ones > k;
}

}  // namespace boolcx
