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

#include "boolcx/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "boolcx/errors.hpp"

namespace boolcx::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "?";
}

LinearProgram::LinearProgram(int num_vars, Sense sense)
    : num_vars_(num_vars),
      sense_(sense),
      objective_(static_cast<std::size_t>(num_vars), 0.0),
      lower_(static_cast<std::size_t>(num_vars), 0.0),
      upper_(static_cast<std::size_t>(num_vars), kInf) {
  if (num_vars < 0) throw InputError("negative variable count");
}

void LinearProgram::set_objective(std::vector<double> coeffs) {
  if (coeffs.size() != objective_.size()) throw InputError("objective width mismatch");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw InputError("non-finite objective coefficient");
  }
  objective_ = std::move(coeffs);
}

void LinearProgram::set_objective_coeff(int var, double c) {
  if (!std::isfinite(c)) throw InputError("non-finite objective coefficient");
  objective_.at(static_cast<std::size_t>(var)) = c;
}

void LinearProgram::add_row(std::vector<double> coeffs, Relation rel, double rhs) {
  if (coeffs.size() != static_cast<std::size_t>(num_vars_)) {
    throw InputError("constraint width mismatch");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw InputError("non-finite constraint coefficient");
  }
  if (!std::isfinite(rhs)) throw InputError("non-finite right-hand side");
  rows_.push_back(Row{std::move(coeffs), rel, rhs});
}

void LinearProgram::set_bounds(int var, double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInf || hi == -kInf) {
    throw InputError("invalid variable bounds");
  }
  lower_.at(static_cast<std::size_t>(var)) = lo;
  upper_.at(static_cast<std::size_t>(var)) = hi;
}

double LinearProgram::evaluate(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < objective_.size(); ++j) s += objective_[j] * x[j];
  return s;
}

namespace {

// Neumaier-compensated dot product.
double compensated_dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double term = a[i] * b[i];
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

// How an original variable maps onto a nonnegative (or free) tableau column:
// x = offset + sign * y.
struct VarMap {
  int column;
  double offset;
  double sign;
};

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SolverOptions& opts)
      : lp_(lp), opts_(opts) {
    build();
  }

  LpOutcome run() {
    LpOutcome out;
    if (num_artificial_ > 0) {
      std::vector<double> phase1(static_cast<std::size_t>(ncols_), 0.0);
      for (int j = first_artificial_; j < ncols_; ++j) phase1[static_cast<std::size_t>(j)] = 1.0;
      load_objective(phase1);
      const Status s1 = iterate();
      (void)s1;  // phase one is bounded below by zero
      const double infeas = -obj_[static_cast<std::size_t>(ncols_)];
      if (infeas > opts_.feasibility_tol * std::max(1.0, rhs_scale_)) {
        out.status = Status::infeasible;
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }
    load_objective(phase2_costs_);
    const Status s2 = iterate();
    out.pivots = pivots_;
    if (s2 == Status::unbounded) {
      out.status = Status::unbounded;
      return out;
    }
    out.status = Status::optimal;
    out.solution = extract();
    out.objective = lp_.evaluate(out.solution);
    return out;
  }

 private:
  double& at(int r, int c) {
    return tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(c)];
  }
  double at(int r, int c) const {
    return tab_[static_cast<std::size_t>(r) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(c)];
  }

  void build() {
    const int n = lp_.num_vars();
    // Structural columns.
    std::vector<std::pair<int, double>> bound_rows;  // (column, upper)
    maps_.reserve(static_cast<std::size_t>(n));
    int col = 0;
    for (int j = 0; j < n; ++j) {
      const double lo = lp_.lower(j), hi = lp_.upper(j);
      if (std::isfinite(lo)) {
        maps_.push_back({col, lo, 1.0});
        is_free_.push_back(false);
        if (std::isfinite(hi)) bound_rows.emplace_back(col, hi - lo);
      } else if (std::isfinite(hi)) {
        maps_.push_back({col, hi, -1.0});
        is_free_.push_back(false);
      } else {
        maps_.push_back({col, 0.0, 1.0});
        is_free_.push_back(true);
      }
      ++col;
    }
    num_structural_ = col;

    // Normalized rows: coefficients over structural columns, relation, rhs >= 0.
    struct NormRow {
      std::vector<std::pair<int, double>> entries;
      Relation rel;
      double rhs;
    };
    std::vector<NormRow> rows;
    rows.reserve(lp_.rows().size() + bound_rows.size());
    for (const Row& r : lp_.rows()) {
      NormRow nr{{}, r.relation, r.rhs};
      for (int j = 0; j < n; ++j) {
        const double a = r.coeffs[static_cast<std::size_t>(j)];
        if (a == 0.0) continue;
        const VarMap& m = maps_[static_cast<std::size_t>(j)];
        nr.entries.emplace_back(m.column, a * m.sign);
        nr.rhs -= a * m.offset;
      }
      rows.push_back(std::move(nr));
    }
    for (auto [c, ub] : bound_rows) {
      rows.push_back(NormRow{{{c, 1.0}}, Relation::less_equal, ub});
    }
    for (auto& r : rows) {
      if (r.rhs < 0.0) {
        r.rhs = -r.rhs;
        for (auto& e : r.entries) e.second = -e.second;
        if (r.rel == Relation::less_equal) {
          r.rel = Relation::greater_equal;
        } else if (r.rel == Relation::greater_equal) {
          r.rel = Relation::less_equal;
        }
      }
      rhs_scale_ = std::max(rhs_scale_, r.rhs);
    }

    m_ = static_cast<int>(rows.size());
    int num_slack = 0;
    for (const auto& r : rows) {
      if (r.rel != Relation::equal) ++num_slack;
      if (r.rel != Relation::less_equal) ++num_artificial_;
    }
    first_artificial_ = num_structural_ + num_slack;
    ncols_ = first_artificial_ + num_artificial_;
    width_ = ncols_ + 1;
    tab_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(width_), 0.0);
    basis_.assign(static_cast<std::size_t>(m_), -1);
    is_free_.resize(static_cast<std::size_t>(ncols_), false);
    flipped_.assign(static_cast<std::size_t>(ncols_), false);

    int slack = num_structural_;
    int art = first_artificial_;
    for (int i = 0; i < m_; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      for (auto [c, a] : r.entries) at(i, c) += a;
      at(i, ncols_) = r.rhs;
      switch (r.rel) {
        case Relation::less_equal:
          at(i, slack) = 1.0;
          basis_[static_cast<std::size_t>(i)] = slack++;
          break;
        case Relation::greater_equal:
          at(i, slack++) = -1.0;
          at(i, art) = 1.0;
          basis_[static_cast<std::size_t>(i)] = art++;
          break;
        case Relation::equal:
          at(i, art) = 1.0;
          basis_[static_cast<std::size_t>(i)] = art++;
          break;
      }
    }

    phase2_costs_.assign(static_cast<std::size_t>(ncols_), 0.0);
    const double dir = lp_.sense() == Sense::maximize ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      const VarMap& m = maps_[static_cast<std::size_t>(j)];
      phase2_costs_[static_cast<std::size_t>(m.column)] =
          dir * lp_.objective()[static_cast<std::size_t>(j)] * m.sign;
    }
    obj_.assign(static_cast<std::size_t>(width_), 0.0);
  }

  void load_objective(const std::vector<double>& costs) {
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (int j = 0; j < ncols_; ++j) {
      const double c = costs[static_cast<std::size_t>(j)];
      obj_[static_cast<std::size_t>(j)] = flipped_[static_cast<std::size_t>(j)] ? -c : c;
    }
    for (int i = 0; i < m_; ++i) {
      const double cb = obj_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      for (int c = 0; c <= ncols_; ++c) obj_[static_cast<std::size_t>(c)] -= cb * at(i, c);
    }
    for (int i = 0; i < m_; ++i) obj_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = 0.0;
  }

  void flip_column(int c) {
    for (int i = 0; i < m_; ++i) at(i, c) = -at(i, c);
    obj_[static_cast<std::size_t>(c)] = -obj_[static_cast<std::size_t>(c)];
    flipped_[static_cast<std::size_t>(c)] = !flipped_[static_cast<std::size_t>(c)];
  }

  // Entering column or -1 when optimal.
  int choose_entering(bool bland) {
    const double tol = opts_.feasibility_tol;
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < first_artificial_; ++j) {
      if (in_basis_(j)) continue;
      const double d = obj_[static_cast<std::size_t>(j)];
      const double score = is_free_[static_cast<std::size_t>(j)] ? std::fabs(d) : -d;
      if (score <= tol) continue;
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  bool in_basis_(int j) const { return basic_flag_[static_cast<std::size_t>(j)]; }

  // Leaving row or -1 when the column is unbounded.
  int choose_leaving(int e, bool bland, double* ratio_out) const {
    const double piv_tol = opts_.feasibility_tol;
    int best = -1;
    double best_ratio = 0.0, best_piv = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (is_free_[static_cast<std::size_t>(b)]) continue;
      const double a = at(i, e);
      if (a <= piv_tol) continue;
      const double ratio = std::max(at(i, ncols_), 0.0) / a;
      if (best < 0) {
        best = i;
        best_ratio = ratio;
        best_piv = a;
        continue;
      }
      const double slack = 1e-12 * (1.0 + best_ratio);
      if (ratio < best_ratio - slack) {
        best = i;
        best_ratio = ratio;
        best_piv = a;
      } else if (ratio <= best_ratio + slack) {
        const int bb = basis_[static_cast<std::size_t>(best)];
        const bool take = bland ? b < bb : (a > best_piv || (a == best_piv && b < bb));
        if (take) {
          best = i;
          best_ratio = std::min(ratio, best_ratio);
          best_piv = a;
        }
      }
    }
    *ratio_out = best_ratio;
    return best;
  }

  void pivot(int r, int e) {
    if (++pivots_ > opts_.max_pivots) {
      throw LpIterationLimit("simplex exceeded " + std::to_string(opts_.max_pivots) +
                             " pivots");
    }
    double* prow = &at(r, 0);
    const double inv = 1.0 / prow[e];
    nz_.clear();
    for (int c = 0; c <= ncols_; ++c) {
      if (prow[c] != 0.0) {
        prow[c] *= inv;
        nz_.push_back(c);
      }
    }
    prow[e] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &at(i, 0);
      const double f = row[e];
      if (f == 0.0) continue;
      for (int c : nz_) row[c] -= f * prow[c];
      row[e] = 0.0;
      if (!is_free_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] &&
          row[ncols_] < 0.0 && row[ncols_] > -opts_.feasibility_tol) {
        row[ncols_] = 0.0;
      }
    }
    const double fo = obj_[static_cast<std::size_t>(e)];
    if (fo != 0.0) {
      for (int c : nz_) obj_[static_cast<std::size_t>(c)] -= fo * prow[c];
      obj_[static_cast<std::size_t>(e)] = 0.0;
    }
    basic_flag_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = false;
    basis_[static_cast<std::size_t>(r)] = e;
    basic_flag_[static_cast<std::size_t>(e)] = true;
  }

  Status iterate() {
    basic_flag_.assign(static_cast<std::size_t>(ncols_), false);
    for (int b : basis_) basic_flag_[static_cast<std::size_t>(b)] = true;
    bool bland = opts_.always_bland;
    int streak = 0;
    while (true) {
      const int e = choose_entering(bland);
      if (e < 0) return Status::optimal;
      if (obj_[static_cast<std::size_t>(e)] > 0.0) flip_column(e);  // free column
      double ratio = 0.0;
      const int r = choose_leaving(e, bland, &ratio);
      if (r < 0) return Status::unbounded;
      if (ratio <= opts_.feasibility_tol) {
        if (++streak >= opts_.degenerate_streak_for_bland) bland = true;
      } else {
        streak = 0;
        bland = opts_.always_bland;
      }
      pivot(r, e);
    }
  }

  void drive_out_artificials() {
    basic_flag_.assign(static_cast<std::size_t>(ncols_), false);
    for (int b : basis_) basic_flag_[static_cast<std::size_t>(b)] = true;
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < first_artificial_) continue;
      int best = -1;
      double best_abs = opts_.feasibility_tol;
      for (int j = 0; j < first_artificial_; ++j) {
        if (basic_flag_[static_cast<std::size_t>(j)]) continue;
        const double a = std::fabs(at(i, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      // A row with no usable column is redundant; its artificial stays at 0.
      if (best < 0) continue;
      at(i, ncols_) = 0.0;
      pivot(i, best);
    }
  }

  std::vector<double> extract() const {
    std::vector<double> y(static_cast<std::size_t>(ncols_), 0.0);
    for (int i = 0; i < m_; ++i) {
      y[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = at(i, ncols_);
    }
    std::vector<double> x(static_cast<std::size_t>(lp_.num_vars()));
    for (std::size_t j = 0; j < x.size(); ++j) {
      const VarMap& m = maps_[j];
      double v = y[static_cast<std::size_t>(m.column)];
      if (flipped_[static_cast<std::size_t>(m.column)]) v = -v;
      x[j] = m.offset + m.sign * v;
    }
    return x;
  }

  const LinearProgram& lp_;
  const SolverOptions& opts_;
  std::vector<VarMap> maps_;
  std::vector<bool> is_free_;
  std::vector<bool> flipped_;
  std::vector<bool> basic_flag_;
  std::vector<double> tab_;
  std::vector<double> obj_;
  std::vector<double> phase2_costs_;
  std::vector<int> basis_;
  std::vector<int> nz_;
  int m_ = 0;
  int ncols_ = 0;
  int width_ = 0;
  int num_structural_ = 0;
  int num_artificial_ = 0;
  int first_artificial_ = 0;
  double rhs_scale_ = 0.0;
  std::int64_t pivots_ = 0;
};

}  // namespace

LpOutcome solve(const LinearProgram& lp, const SolverOptions& opts) {
  Tableau t(lp, opts);
  LpOutcome out = t.run();
  if (out.status == Status::optimal) {
    const CertificateCheck cert = check_certificate(lp, out.solution, opts.certificate_tol);
    out.max_violation = cert.worst_violation;
    if (!cert.pass) {
      throw VerificationFailure("simplex returned a point violating row " +
                                std::to_string(cert.worst_row) + " by " +
                                std::to_string(cert.worst_violation));
    }
  }
  return out;
}

CertificateCheck check_certificate(const LinearProgram& lp,
                                   std::span<const double> x, double tol) {
  CertificateCheck out;
  const int n = lp.num_vars();
  out.worst_row = -1 - n;
  if (x.size() != static_cast<std::size_t>(n)) {
    out.pass = false;
    out.worst_violation = kInf;
    return out;
  }
  auto record = [&](double v, int where) {
    if (std::isnan(v)) v = kInf;
    if (v > out.worst_violation) {
      out.worst_violation = v;
      out.worst_row = where;
    }
  };
  for (int j = 0; j < n; ++j) {
    const double xj = x[static_cast<std::size_t>(j)];
    record(lp.lower(j) - xj, -1 - j);
    record(xj - lp.upper(j), -1 - j);
    if (!std::isfinite(xj)) record(kInf, -1 - j);
  }
  const auto& rows = lp.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double ax = compensated_dot(rows[i].coeffs, x);
    double v = 0.0;
    switch (rows[i].relation) {
      case Relation::less_equal: v = ax - rows[i].rhs; break;
      case Relation::greater_equal: v = rows[i].rhs - ax; break;
      case Relation::equal: v = std::fabs(ax - rows[i].rhs); break;
    }
    record(v, static_cast<int>(i));
  }
  out.pass = out.worst_violation <= tol;
  return out;
}

namespace {

void write_linear(std::ostream& os, const std::vector<double>& coeffs) {
  bool first = true;
  char buf[64];
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double c = coeffs[j];
    if (c == 0.0) continue;
    if (first) {
      std::snprintf(buf, sizeof buf, "%.17g x%zu", c, j);
    } else {
      std::snprintf(buf, sizeof buf, " %c %.17g x%zu", c < 0 ? '-' : '+', std::fabs(c), j);
    }
    os << buf;
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

void write_lp(std::ostream& os, const LinearProgram& lp) {
  os << (lp.sense() == Sense::maximize ? "maximize" : "minimize") << "\n obj: ";
  write_linear(os, lp.objective());
  os << "\nsubject to\n";
  char buf[64];
  for (std::size_t i = 0; i < lp.rows().size(); ++i) {
    const Row& r = lp.rows()[i];
    os << " r" << i << ": ";
    write_linear(os, r.coeffs);
    const char* rel = r.relation == Relation::less_equal      ? "<="
                      : r.relation == Relation::greater_equal ? ">="
                                                              : "=";
    std::snprintf(buf, sizeof buf, " %s %.17g\n", rel, r.rhs);
    os << buf;
  }
  os << "bounds\n";
  for (int j = 0; j < lp.num_vars(); ++j) {
    const double lo = lp.lower(j), hi = lp.upper(j);
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
      os << " x" << j << " free\n";
      continue;
    }
    os << ' ';
    if (std::isfinite(lo)) {
      std::snprintf(buf, sizeof buf, "%.17g", lo);
      os << buf;
    } else {
      os << "-inf";
    }
    os << " <= x" << j << " <= ";
    if (std::isfinite(hi)) {
      std::snprintf(buf, sizeof buf, "%.17g", hi);
      os << buf;
    } else {
      os << "inf";
    }
    os << '\n';
  }
  os << "end\n";
}

}  // namespace boolcx::lp
