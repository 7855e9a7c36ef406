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

#include "boolcx/adeg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "boolcx/errors.hpp"

namespace boolcx {
namespace {

// Monomials of size <= d ordered by (size, mask).
std::vector<Input> monomials(int n, int d) {
  std::vector<Input> out;
  for (Input m = 0; m < (Input{1} << n); ++m) {
    if (popcount(m) <= d) out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [](Input a, Input b) {
    return popcount(a) < popcount(b);
  });
  return out;
}

void check_degree(int n, int d) {
  if (d < 0 || d > n) throw InputError("degree must lie in [0, n]");
}

void check_eps(double eps) {
  if (!(eps >= 1e-4 && eps < 0.5)) throw InputError("eps must lie in [1e-4, 1/2)");
}

std::vector<double> eval_row(const std::vector<Input>& mons, Input x, std::size_t width) {
  std::vector<double> row(width, 0.0);
  for (std::size_t j = 0; j < mons.size(); ++j) {
    if ((mons[j] & ~x) == 0) row[j] = 1.0;
  }
  return row;
}

// Shared layout: monomial coefficients (free) then the error variable e >= 0.
lp::LinearProgram error_program(const PartialFn& f, int d, bool bounded,
                                std::vector<Input>* mons_out) {
  const int n = f.arity();
  check_degree(n, d);
  auto mons = monomials(n, d);
  const int m = static_cast<int>(mons.size());
  const auto width = static_cast<std::size_t>(m) + 1;
  lp::LinearProgram prog(m + 1, lp::Sense::minimize);
  for (int j = 0; j < m; ++j) prog.set_free(j);
  prog.set_objective_coeff(m, 1.0);
  for (Input x = 0; x < f.size(); ++x) {
    auto row = eval_row(mons, x, width);
    if (f.defined(x)) {
      const double fx = f.value(x) ? 1.0 : 0.0;
      auto lo = row;
      lo[static_cast<std::size_t>(m)] = -1.0;
      prog.add_row(std::move(lo), lp::Relation::less_equal, fx);
      auto hi = row;
      hi[static_cast<std::size_t>(m)] = 1.0;
      prog.add_row(std::move(hi), lp::Relation::greater_equal, fx);
    }
    if (bounded) {
      prog.add_row(row, lp::Relation::greater_equal, 0.0);
      prog.add_row(std::move(row), lp::Relation::less_equal, 1.0);
    }
  }
  if (mons_out) *mons_out = std::move(mons);
  return prog;
}

ApproxResult solve_error_program(const PartialFn& f, int d, double eps, bool bounded,
                                 int max_arity) {
  check_eps(eps);
  PartialFn::check_arity(f.arity(), max_arity);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Input> mons;
  const auto prog = error_program(f, d, bounded, &mons);
  const auto outcome = lp::solve(prog);
  ApproxResult r;
  r.degree = d;
  r.pivots = outcome.pivots;
  r.certificate_violation = outcome.max_violation;
  if (outcome.status != lp::Status::optimal) {
    // Only the bounded program can be infeasible, and it never is: the
    // constant 1/2 satisfies every row.
    throw VerificationFailure("approximation LP not optimal: " + lp::to_string(outcome.status));
  }
  r.error = outcome.objective;
  r.witness = MultilinearPoly(f.arity());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    r.witness.add_term(mons[j], outcome.solution[j]);
  }
  r.feasible = r.error <= eps + kFeasibilitySlack;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

lp::LinearProgram adeg_program(const TruthTable& f, int d) {
  return error_program(f.as_partial(), d, false, nullptr);
}

lp::LinearProgram bdeg_program(const PartialFn& f, int d) {
  return error_program(f, d, true, nullptr);
}

ApproxResult adeg_feasible(const TruthTable& f, int d, double eps, int max_arity) {
  return solve_error_program(f.as_partial(), d, eps, false, max_arity);
}

ApproxResult bdeg_feasible(const PartialFn& f, int d, double eps, int max_arity) {
  return solve_error_program(f, d, eps, true, max_arity);
}

std::vector<ApproxResult> adeg_sweep(const TruthTable& f, double eps, bool full,
                                     int max_arity) {
  std::vector<ApproxResult> out;
  for (int d = 0; d <= f.arity(); ++d) {
    out.push_back(adeg_feasible(f, d, eps, max_arity));
    if (out.back().feasible && !full) break;
  }
  return out;
}

std::vector<ApproxResult> bdeg_sweep(const PartialFn& f, double eps, bool full,
                                     int max_arity) {
  std::vector<ApproxResult> out;
  for (int d = 0; d <= f.arity(); ++d) {
    out.push_back(bdeg_feasible(f, d, eps, max_arity));
    if (out.back().feasible && !full) break;
  }
  return out;
}

int adeg(const TruthTable& f, double eps, int max_arity) {
  const auto sweep = adeg_sweep(f, eps, false, max_arity);
  return sweep.back().degree;
}

int bdeg(const PartialFn& f, double eps, int max_arity) {
  const auto sweep = bdeg_sweep(f, eps, false, max_arity);
  return sweep.back().degree;
}

double symmetric_error(const SymmetricSpectrum& spec, int d, bool bounded) {
  const int n = spec.arity;
  check_degree(n, d);
  if (spec.profile.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError("spectrum length must be n+1");
  }
  const int m = d + 1;
  lp::LinearProgram prog(m + 1, lp::Sense::minimize);
  for (int j = 0; j < m; ++j) prog.set_free(j);
  prog.set_objective_coeff(m, 1.0);
  for (int w = 0; w <= n; ++w) {
    std::vector<double> row(static_cast<std::size_t>(m) + 1, 0.0);
    double c = 1.0;  // C(w, j)
    for (int j = 0; j < m; ++j) {
      row[static_cast<std::size_t>(j)] = c;
      c = c * (w - j) / (j + 1);
    }
    const Value v = spec.profile[static_cast<std::size_t>(w)];
    if (v != Value::undefined) {
      const double fx = v == Value::one ? 1.0 : 0.0;
      auto lo = row;
      lo.back() = -1.0;
      prog.add_row(std::move(lo), lp::Relation::less_equal, fx);
      auto hi = row;
      hi.back() = 1.0;
      prog.add_row(std::move(hi), lp::Relation::greater_equal, fx);
    }
    if (bounded) {
      prog.add_row(row, lp::Relation::greater_equal, 0.0);
      prog.add_row(std::move(row), lp::Relation::less_equal, 1.0);
    }
  }
  const auto outcome = lp::solve(prog);
  if (outcome.status != lp::Status::optimal) {
    throw VerificationFailure("symmetric LP not optimal: " + lp::to_string(outcome.status));
  }
  return outcome.objective;
}

int adeg_symmetric(const SymmetricSpectrum& spec, double eps) {
  check_eps(eps);
  if (!spec.is_total()) throw InputError("adeg needs a total spectrum");
  for (int d = 0; d <= spec.arity; ++d) {
    if (symmetric_error(spec, d, false) <= eps + kFeasibilitySlack) return d;
  }
  return spec.arity;
}

int bdeg_symmetric(const SymmetricSpectrum& spec, double eps) {
  check_eps(eps);
  for (int d = 0; d <= spec.arity; ++d) {
    if (symmetric_error(spec, d, true) <= eps + kFeasibilitySlack) return d;
  }
  return spec.arity;
}

SinkPolynomial build_sink_polynomial(int k, double eps) {
  if (k < 2) throw InputError("sink needs k >= 2");
  if (k > 5) throw BoundExceeded("sink polynomial supports k <= 5");
  check_eps(eps);
  const int m = k - 1;
  const int n = k * (k - 1) / 2;

  SinkPolynomial out;
  const auto base = bdeg_sweep(zoo::and_n(m), kOneThird).back();
  out.base_degree = base.degree;

  // Measured base error, clamped to the LP target: amplification bounds
  // only need an upper bound below 1/2.
  const auto base_values = base.witness.values();
  const Input full = (Input{1} << m) - 1;
  double e0 = 0.0;
  for (Input y = 0; y <= full; ++y) {
    e0 = std::max(e0, std::fabs(base_values[y] - (y == full ? 1.0 : 0.0)));
  }
  e0 = std::max(e0, kOneThird) + kFeasibilitySlack;

  int r = 1;
  while (k * amplify_value(r, e0) > eps) {
    r += 2;
    if (r > 199) throw BoundExceeded("amplifier degree too large for requested eps");
  }
  out.amplifier = r;

  std::vector<double> amplified(base_values.size());
  for (std::size_t y = 0; y < base_values.size(); ++y) {
    amplified[y] = amplify_value(r, base_values[y]);
  }
  const auto vertex_poly = MultilinearPoly::from_values(m, amplified, 1e-13);

  out.poly = MultilinearPoly(n);
  for (int v = 0; v < k; ++v) {
    std::vector<int> var;
    bool neg[8] = {};
    for (int u = 0; u < k; ++u) {
      if (u == v) continue;
      // Edge u -> v must be present: x_uv = 1 when u < v, x_vu = 0 otherwise.
      if (u < v) {
        var.push_back(zoo::sink_edge_index(k, u, v));
      } else {
        neg[var.size()] = true;
        var.push_back(zoo::sink_edge_index(k, v, u));
      }
    }
    out.poly += vertex_poly.substitute(n, var, std::span<const bool>(neg, var.size()));
  }

  const auto f = zoo::sink(k);
  const auto values = out.poly.values();
  double worst = 0.0;
  for (Input x = 0; x < f.size(); ++x) {
    worst = std::max(worst, std::fabs(values[x] - (f.value(x) ? 1.0 : 0.0)));
  }
  out.max_error = worst;
  out.degree = out.poly.degree(1e-12);
  if (worst > eps) throw VerificationFailure("sink polynomial exceeds target error");
  return out;
}

}  // namespace boolcx
