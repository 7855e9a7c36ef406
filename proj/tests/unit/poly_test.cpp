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


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "boolcx/errors.hpp"
#include "boolcx/poly.hpp"
#include "support/oracles.hpp"

namespace boolcx {
namespace {

MultilinearPoly random_poly(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MultilinearPoly p(n);
  for (Input m = 0; m < (Input{1} << n); ++m) {
    if (u(rng) > 0.2) p.add_term(m, u(rng));
  }
  return p;
}

TEST(Multilinear, EvalMatchesTermSum) {
  std::mt19937_64 rng(1);
  for (int n = 0; n <= 5; ++n) {
    const MultilinearPoly p = random_poly(n, rng);
    const auto vals = p.values();
    for (Input x = 0; x < (Input{1} << n); ++x) {
      EXPECT_NEAR(p.eval(x), oracle::naive_eval(p, x), 1e-12);
      EXPECT_NEAR(vals[x], oracle::naive_eval(p, x), 1e-12);
    }
  }
}

TEST(Multilinear, MobiusRoundTrip) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 6; ++n) {
    const MultilinearPoly p = random_poly(n, rng);
    const auto q = MultilinearPoly::from_values(n, p.values(), 1e-13);
    for (const auto& [m, c] : p.terms()) EXPECT_NEAR(q.coeff(m), c, 1e-12);
    EXPECT_EQ(q.degree(1e-12), p.degree(1e-12));
  }
  const std::vector<double> and2 = {0, 0, 0, 1};
  const auto a = MultilinearPoly::from_values(2, and2);
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_DOUBLE_EQ(a.coeff(3), 1.0);
}

TEST(Multilinear, ExtensionAtRealPoints) {
  MultilinearPoly p(2);
  p.add_term(0, 0.5);
  p.add_term(3, 2.0);
  const std::vector<double> z = {0.5, 0.25};
  EXPECT_DOUBLE_EQ(p.eval(z), 0.75);
  EXPECT_EQ(p.degree(), 2);
  p.add_term(3, -2.0);
  EXPECT_EQ(p.degree(), 0);
  EXPECT_THROW(p.add_term(1, std::nan("")), InputError);
}

TEST(Multilinear, SubstituteAgreesPointwise) {
  std::mt19937_64 rng(3);
  const MultilinearPoly p = random_poly(3, rng);
  const std::vector<int> var = {2, 0, 2};
  const bool neg[] = {false, true, true};
  const auto q = p.substitute(4, var, neg);
  for (Input x = 0; x < 16; ++x) {
    Input y = 0;
    for (int j = 0; j < 3; ++j) {
      const bool bit = ((x >> var[static_cast<std::size_t>(j)]) & 1u) != neg[static_cast<std::size_t>(j)];
      y |= static_cast<Input>(bit) << j;
    }
    EXPECT_NEAR(q.eval(x), p.eval(y), 1e-12) << x;
  }
  const int one_var[] = {0};
  const bool one_neg[] = {false};
  EXPECT_THROW(p.substitute(4, one_var, one_neg), InputError);
}

TEST(Multilinear, WitnessTextRoundTrip) {
  std::mt19937_64 rng(4);
  const MultilinearPoly p = random_poly(4, rng);
  std::stringstream ss;
  write_poly(ss, p);
  EXPECT_EQ(ss.str().rfind("arity 4\n", 0), 0u);
  const MultilinearPoly q = read_poly(ss);
  ASSERT_EQ(q.terms().size(), p.terms().size());
  for (const auto& [m, c] : p.terms()) EXPECT_NEAR(q.coeff(m), c, 1e-15);
  std::stringstream bad("arity 2\n1 x\n");
  EXPECT_THROW(read_poly(bad), InputError);
  std::stringstream nohead("1 0.5\n");
  EXPECT_THROW(read_poly(nohead), InputError);
}

TEST(Amplifier, PowerBasisMatchesTail) {
  for (int m = 1; m <= 33; m += 2) {
    const UnivariatePoly a = amplify_poly(m);
    EXPECT_EQ(a.degree(), m);
    // Power-basis evaluation cancels; its error scales with sum |c_k|.
    double mass = 0.0;
    for (double c : a.coeffs()) mass += std::fabs(c);
    const double tol = 1e-12 + 1e-17 * mass;
    for (double x = 0.0; x <= 1.0; x += 0.0625) {
      EXPECT_NEAR(a.eval(x), amplify_value(m, x), tol) << m << " " << x;
    }
  }
}

TEST(Amplifier, SymmetryAndExamples) {
  EXPECT_DOUBLE_EQ(amplify_value(1, 0.3), 0.3);
  // A_3(x) = 3x^2 - 2x^3.
  EXPECT_NEAR(amplify_value(3, 0.25), 3 * 0.0625 - 2 * 0.015625, 1e-15);
  EXPECT_EQ(amplify_poly(3).coeffs(), (std::vector<double>{0, 0, 3, -2}));
  for (int m = 1; m <= 101; m += 10) {
    for (double x : {0.1, 0.3, 0.45}) {
      EXPECT_NEAR(amplify_value(m, 1 - x), 1 - amplify_value(m, x), 1e-12);
    }
  }
  EXPECT_LT(amplify_value(41, 1.0 / 3.0), 0.05);
  EXPECT_THROW(amplify_poly(4), InputError);
  EXPECT_THROW(amplify_poly(35), InputError);
}

}  // namespace
}  // namespace boolcx
