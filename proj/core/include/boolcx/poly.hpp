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

#ifndef BOOLCX_POLY_HPP_
#define BOOLCX_POLY_HPP_

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "boolcx/bits.hpp"

namespace boolcx {

// Real multilinear polynomial over {0,1}^n, keyed by monomial variable mask.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(int arity = 0) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Input, double>& terms() const { return terms_; }

  // Accumulates into the coefficient of `monomial`.
  void add_term(Input monomial, double coeff);
  double coeff(Input monomial) const;
  // Largest monomial size with |coefficient| > zero_tol.
  int degree(double zero_tol = 0.0) const;

  double eval(Input x) const;
  // Multilinear extension at a point of [0,1]^n (or R^n).
  double eval(std::span<const double> z) const;
  // Values at all 2^n Boolean points.
  std::vector<double> values() const;

  // Unique multilinear polynomial with the given cube values; coefficients
  // with |c| <= zero_tol are dropped.
  static MultilinearPoly from_values(int arity, std::span<const double> values,
                                     double zero_tol = 0.0);

  // Substitutes literal j := x_{var[j]} or 1 - x_{var[j]} (negated[j]) and
  // expands into a polynomial on `new_arity` variables.
  MultilinearPoly substitute(int new_arity, std::span<const int> var,
                             std::span<const bool> negated) const;

  MultilinearPoly& operator+=(const MultilinearPoly& o);

 private:
  int arity_;
  std::map<Input, double> terms_;
};

// Witness format: a header line "arity n" followed by one line per term,
// "subset-bitmask coefficient", the coefficient in fixed-point decimal.
void write_poly(std::ostream& os, const MultilinearPoly& p);
MultilinearPoly read_poly(std::istream& is);

class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const;
  double eval(double x) const;

 private:
  std::vector<double> coeffs_;  // coeffs_[k] multiplies x^k
};

// Majority amplifier A_m(x) = sum_{j > m/2} C(m,j) x^j (1-x)^(m-j) in the
// power basis, for odd m <= 33 (coefficients stay exact in double).
UnivariatePoly amplify_poly(int m);
// A_m(x) evaluated as a binomial tail sum; stable for any odd m.
double amplify_value(int m, double x);

}  // namespace boolcx

#endif  // BOOLCX_POLY_HPP_
