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

#ifndef BOOLCX_ZOO_HPP_
#define BOOLCX_ZOO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "boolcx/partial_fn.hpp"

namespace boolcx {

// Value of a symmetric function on each Hamming weight 0..n.
struct SymmetricSpectrum {
  int arity = 0;
  std::vector<Value> profile;

  // Parses a string over {'0','1','*'} of length n+1.
  static SymmetricSpectrum parse(std::string_view text);
  std::string to_string() const;
  bool is_total() const;
  bool is_constant() const;  // on the defined weights
};

// A k-junta symmetric function: the value is looked up from the assignment
// to the junta variables (junta[0] is the low bit of the table index) and the
// Hamming weight of the whole input.
struct JuntaSymmetricSpec {
  int arity = 0;
  std::vector<int> junta;
  std::vector<SymmetricSpectrum> table;  // 2^k spectra, each of length n+1

  void validate() const;
  // Symmetric function on the n-k non-junta variables obtained by fixing the
  // junta variables to `assignment`.
  SymmetricSpectrum restriction(Input assignment) const;
  // Some junta assignment leaves a non-constant symmetric restriction.
  bool is_strong() const;
};

namespace zoo {

PartialFn or_n(int n);
PartialFn and_n(int n);
PartialFn xor_n(int n);
// 1 iff |x| > n/2; even n with |x| = n/2 maps to 0.
PartialFn maj_n(int n);
PartialFn identity();
PartialFn constant(int n, bool value);

// Promise-OR: defined only on inputs of weight 0 (value 0) and 1 (value 1).
PartialFn pror(int n);
// pror(n) evaluated at x xor shift.
PartialFn pror_shifted(int n, Input shift);

// Gap majority on t = 4 s^2 bits (s >= 2): 1 at weight t/2 + 2 sqrt(t),
// 0 at weight t/2 - 2 sqrt(t), undefined elsewhere.
PartialFn gapmaj(int t);
// Integer s with t == 4 s^2 and s >= 2; throws InputError otherwise.
int gapmaj_root(int t);

// Multiplexer on k address bits followed by 2^k data bits.
PartialFn mux(int k);

// Sink of a tournament on k vertices. Edge variables are ordered
// (1,2), (1,3), ..., (1,k), (2,3), ...; x_ij = 1 orients the edge i -> j.
PartialFn sink(int k);
int sink_edge_index(int k, int i, int j);  // 0-based vertices, i < j

// OR_k of k blocks of k bits; a block is 1 iff it holds exactly two adjacent
// ones.
PartialFn rub(int k);

PartialFn from_spectrum(const SymmetricSpectrum& spec);
PartialFn from_junta_spec(const JuntaSymmetricSpec& spec);

// Parses "name:p1:p2" (e.g. "or:4", "pror_shifted:3:5", "sink:4").
PartialFn by_name(std::string_view name);

}  // namespace zoo
}  // namespace boolcx

#endif  // BOOLCX_ZOO_HPP_
