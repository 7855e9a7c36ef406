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

#include "boolcx/poly.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <cstdint>

#include "boolcx/errors.hpp"

namespace boolcx {

void MultilinearPoly::add_term(Input monomial, double coeff) {
  if (!std::isfinite(coeff)) throw InputError("non-finite polynomial coefficient");
  if (arity_ < 32 && (monomial >> arity_) != 0) throw InputError("monomial outside arity");
  if (coeff == 0.0) return;
  terms_[monomial] += coeff;
}

double MultilinearPoly::coeff(Input monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? 0.0 : it->second;
}

int MultilinearPoly::degree(double zero_tol) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    if (std::fabs(c) > zero_tol) d = std::max(d, popcount(m));
  }
  return d;
}

double MultilinearPoly::eval(Input x) const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    if ((m & ~x) == 0) s += c;
  }
  return s;
}

double MultilinearPoly::eval(std::span<const double> z) const {
  if (z.size() != static_cast<std::size_t>(arity_)) throw InputError("point dimension mismatch");
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c;
    for (Input bits = m; bits; bits &= bits - 1) {
      term *= z[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    s += term;
  }
  return s;
}

std::vector<double> MultilinearPoly::values() const {
  const std::size_t size = std::size_t{1} << arity_;
  std::vector<double> v(size, 0.0);
  for (const auto& [m, c] : terms_) v[m] += c;
  for (int i = 0; i < arity_; ++i) {
    const Input bit = Input{1} << i;
    for (Input x = 0; x < size; ++x) {
      if (x & bit) v[x] += v[x ^ bit];
    }
  }
  return v;
}

MultilinearPoly MultilinearPoly::from_values(int arity, std::span<const double> values,
                                             double zero_tol) {
  const std::size_t size = std::size_t{1} << arity;
  if (values.size() != size) throw InputError("need 2^arity values");
  std::vector<double> a(values.begin(), values.end());
  for (int i = 0; i < arity; ++i) {
    const Input bit = Input{1} << i;
    for (Input x = 0; x < size; ++x) {
      if (x & bit) a[x] -= a[x ^ bit];
    }
  }
  MultilinearPoly p(arity);
  for (Input m = 0; m < size; ++m) {
    if (std::fabs(a[m]) > zero_tol) p.add_term(m, a[m]);
  }
  return p;
}

MultilinearPoly MultilinearPoly::substitute(int new_arity, std::span<const int> var,
                                            std::span<const bool> negated) const {
  if (var.size() != static_cast<std::size_t>(arity_) || negated.size() != var.size()) {
    throw InputError("substitution needs one literal per variable");
  }
  MultilinearPoly out(new_arity);
  for (const auto& [m, c] : terms_) {
    Input pos = 0, neg = 0;
    for (Input bits = m; bits; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      const Input target = Input{1} << var[j];
      (negated[j] ? neg : pos) |= target;
    }
    // x (1 - x) vanishes on the cube.
    if (pos & neg) continue;
    for_each_submask(neg, [&](Input t) {
      out.add_term(pos | t, (popcount(t) & 1) ? -c : c);
    });
  }
  return out;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  if (o.arity_ != arity_) throw InputError("arity mismatch in polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

void write_poly(std::ostream& os, const MultilinearPoly& p) {
  os << "arity " << p.arity() << '\n';
  char buf[64];
  for (const auto& [m, c] : p.terms()) {
    std::snprintf(buf, sizeof buf, "%u %.17f\n", m, c);
    os << buf;
  }
}

MultilinearPoly read_poly(std::istream& is) {
  std::string word;
  int arity = -1;
  if (!(is >> word >> arity) || word != "arity" || arity < 0 || arity > 30) {
    throw InputError("polynomial witness must start with 'arity n'");
  }
  MultilinearPoly p(arity);
  Input m = 0;
  double c = 0.0;
  while (is >> m >> c) p.add_term(m, c);
  if (!is.eof()) throw InputError("malformed polynomial witness line");
  return p;
}

int UnivariatePoly::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0.0) return k;
  }
  return 0;
}

double UnivariatePoly::eval(double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return static_cast<double>(acc);
}

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_odd(int m) {
  if (m < 1 || m % 2 == 0) throw InputError("amplifier degree must be a positive odd integer");
}

}  // namespace

UnivariatePoly amplify_poly(int m) {
  require_odd(m);
  if (m > 33) throw InputError("amplify_poly supports m <= 33; use amplify_value");
  std::vector<double> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    std::int64_t c = 0;
    for (int j = m / 2 + 1; j <= k; ++j) {
      const std::int64_t term = binom(m, j) * binom(m - j, k - j);
      c += ((k - j) % 2 == 0) ? term : -term;
    }
    coeffs[static_cast<std::size_t>(k)] = static_cast<double>(c);
  }
  return UnivariatePoly(std::move(coeffs));
}

double amplify_value(int m, double x) {
  require_odd(m);
  long double sum = 0.0L;
  long double c = 1.0L;  // C(m, j), built incrementally
  for (int j = 0; j <= m; ++j) {
    if (j > 0) c = c * (m - j + 1) / j;
    if (2 * j > m) {
      sum += c * std::pow(static_cast<long double>(x), j) *
             std::pow(1.0L - static_cast<long double>(x), m - j);
    }
  }
  return static_cast<double>(sum);
}

}  // namespace boolcx
