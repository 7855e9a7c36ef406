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

#ifndef BOOLCX_LP_HPP_
#define BOOLCX_LP_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace boolcx::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

std::string to_string(Status s);

struct Row {
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

// Dense linear program. Variables default to [0, +inf).
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars, Sense sense = Sense::minimize);

  int num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }

  void set_objective(std::vector<double> coeffs);
  void set_objective_coeff(int var, double c);
  // Throws InputError on width mismatch or non-finite entries.
  void add_row(std::vector<double> coeffs, Relation rel, double rhs);
  // lo may be -inf, hi may be +inf; lo <= hi.
  void set_bounds(int var, double lo, double hi);
  void set_free(int var) { set_bounds(var, -kInf, kInf); }

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Row>& rows() const { return rows_; }
  double lower(int var) const { return lower_[static_cast<std::size_t>(var)]; }
  double upper(int var) const { return upper_[static_cast<std::size_t>(var)]; }

  // Objective value of x (no feasibility check).
  double evaluate(std::span<const double> x) const;

 private:
  int num_vars_;
  Sense sense_;
  std::vector<double> objective_;
  std::vector<Row> rows_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct LpOutcome {
  Status status = Status::infeasible;
  std::vector<double> solution;  // empty unless optimal
  double objective = 0.0;
  double max_violation = 0.0;  // re-measured by check_certificate
  std::int64_t pivots = 0;
};

struct SolverOptions {
  double feasibility_tol = 1e-9;
  double certificate_tol = 1e-7;
  std::int64_t max_pivots = 1'000'000;
  // Consecutive degenerate pivots before pricing switches to Bland's rule.
  int degenerate_streak_for_bland = 50;
  // Price every pivot with Bland's rule.
  bool always_bland = false;
};

// Two-phase dense simplex. Deterministic for identical input. Throws
// LpIterationLimit past max_pivots and VerificationFailure if an optimal
// point fails its certificate check.
LpOutcome solve(const LinearProgram& lp, const SolverOptions& opts = {});

struct CertificateCheck {
  bool pass = false;
  double worst_violation = 0.0;
  // Row index of the worst violation; -1 - var for a bound, -1 - n if none.
  int worst_row = 0;
};

// Recomputes every row residual and bound with compensated summation,
// independently of solver state.
CertificateCheck check_certificate(const LinearProgram& lp,
                                   std::span<const double> x, double tol);

// Plain-text dump, one constraint per line:
//   minimize
//    obj: 1 x0 - 2 x1
//   subject to
//    r0: 1 x0 + 1 x1 <= 3
//   bounds
//    0 <= x0 <= inf
//   end
void write_lp(std::ostream& os, const LinearProgram& lp);

}  // namespace boolcx::lp

#endif  // BOOLCX_LP_HPP_
