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

#ifndef BOOLCX_ADEG_HPP_
#define BOOLCX_ADEG_HPP_

#include <cstdint>
#include <vector>

#include "boolcx/lp.hpp"
#include "boolcx/partial_fn.hpp"
#include "boolcx/poly.hpp"
#include "boolcx/zoo.hpp"

namespace boolcx {

inline constexpr double kOneThird = 1.0 / 3.0;
// Error exactly at the target counts as feasible; this absorbs float noise.
inline constexpr double kFeasibilitySlack = 1e-7;
inline constexpr int kDefaultMaxLpArity = 12;

struct ApproxResult {
  int degree = 0;
  bool feasible = false;
  double error = 0.0;  // optimal max error of a degree-d polynomial
  MultilinearPoly witness;
  double certificate_violation = 0.0;
  std::int64_t pivots = 0;
  double wall_ms = 0.0;
};

// min e s.t. |p(x) - f(x)| <= e for all x, deg p <= d.
lp::LinearProgram adeg_program(const TruthTable& f, int d);
// min e s.t. |p(x) - f(x)| <= e on Dom(f) and 0 <= p(x) <= 1 everywhere.
lp::LinearProgram bdeg_program(const PartialFn& f, int d);

ApproxResult adeg_feasible(const TruthTable& f, int d, double eps = kOneThird,
                           int max_arity = kDefaultMaxLpArity);
ApproxResult bdeg_feasible(const PartialFn& f, int d, double eps = kOneThird,
                           int max_arity = kDefaultMaxLpArity);

// Least feasible degree by linear scan from 0.
int adeg(const TruthTable& f, double eps = kOneThird,
         int max_arity = kDefaultMaxLpArity);
int bdeg(const PartialFn& f, double eps = kOneThird,
         int max_arity = kDefaultMaxLpArity);

// Scan results for d = 0..stop, where stop is the first feasible degree, or
// every d up to n when `full` is set.
std::vector<ApproxResult> adeg_sweep(const TruthTable& f, double eps = kOneThird,
                                     bool full = false,
                                     int max_arity = kDefaultMaxLpArity);
std::vector<ApproxResult> bdeg_sweep(const PartialFn& f, double eps = kOneThird,
                                     bool full = false,
                                     int max_arity = kDefaultMaxLpArity);

// Approximate degree of a symmetric function through the weight-indexed LP
// over the basis C(|x|, j), j <= d. Symmetrizing any approximant preserves
// its error and degree (and its range, for the bounded variant), so this is
// exact. The spectrum must be total for adeg_symmetric.
int adeg_symmetric(const SymmetricSpectrum& spec, double eps = kOneThird);
int bdeg_symmetric(const SymmetricSpectrum& spec, double eps = kOneThird);
double symmetric_error(const SymmetricSpectrum& spec, int d, bool bounded);

struct SinkPolynomial {
  MultilinearPoly poly;
  int degree = 0;
  double max_error = 0.0;  // measured over the whole cube
  int base_degree = 0;     // degree of the bounded AND_{k-1} approximant
  int amplifier = 0;       // odd m of the majority amplifier
};

// Approximant for SINK on k <= 5 vertices: the sum over vertices of the
// vertex's "all edges incoming" AND, each replaced by an amplified bounded
// approximant of error eps / k. Throws VerificationFailure if the measured
// error exceeds eps.
SinkPolynomial build_sink_polynomial(int k, double eps = kOneThird);

}  // namespace boolcx

#endif  // BOOLCX_ADEG_HPP_
