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

#ifndef BOOLCX_PARTIAL_FN_HPP_
#define BOOLCX_PARTIAL_FN_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "boolcx/bits.hpp"

namespace boolcx {

inline constexpr int kDefaultMaxArity = 24;

// Output of a possibly partial Boolean function.
enum class Value : std::uint8_t { zero = 0, one = 1, undefined = 2 };

inline Value to_value(bool b) { return b ? Value::one : Value::zero; }

// A function {0,1}^n -> {0,1,*}, stored as a domain mask plus value bits.
// Values outside the domain are kept zero so that equal functions compare
// equal bit for bit.
class PartialFn {
 public:
  PartialFn() = default;
  // Throws BoundExceeded when arity > max_arity, InputError on size mismatch.
  PartialFn(int arity, BitTable defined, BitTable values,
            int max_arity = kDefaultMaxArity);

  static PartialFn total(int arity, BitTable values,
                         int max_arity = kDefaultMaxArity);

  // Builds the table by calling fn(x) -> Value for every x.
  template <class Fn>
  static PartialFn tabulate(int arity, Fn&& fn,
                            int max_arity = kDefaultMaxArity) {
    check_arity(arity, max_arity);
    const std::size_t size = std::size_t{1} << arity;
    BitTable defined(size), values(size);
    for (std::size_t x = 0; x < size; ++x) {
      const Value v = fn(static_cast<Input>(x));
      if (v != Value::undefined) {
        defined.set(x, true);
        values.set(x, v == Value::one);
      }
    }
    return PartialFn(arity, std::move(defined), std::move(values), max_arity);
  }

  int arity() const { return arity_; }
  std::size_t size() const { return std::size_t{1} << arity_; }

  Value eval(Input x) const {
    if (!defined_.get(x)) return Value::undefined;
    return values_.get(x) ? Value::one : Value::zero;
  }
  bool defined(Input x) const { return defined_.get(x); }
  // Meaningful only when defined(x).
  bool value(Input x) const { return values_.get(x); }

  bool is_total() const { return defined_.all(); }
  std::size_t domain_size() const { return defined_.count(); }
  // True when every domain point has the same value (vacuously for an
  // empty domain).
  bool is_constant() const;

  const BitTable& domain_mask() const { return defined_; }
  const BitTable& value_bits() const { return values_; }

  friend bool operator==(const PartialFn&, const PartialFn&) = default;

  static void check_arity(int arity, int max_arity);

 private:
  int arity_ = 0;
  BitTable defined_;
  BitTable values_;
};

// Total Boolean function. A thin strong type over the value table.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(int arity, BitTable values, int max_arity = kDefaultMaxArity);
  // Throws InputError if `f` is not total.
  explicit TruthTable(const PartialFn& f);

  template <class Fn>
  static TruthTable tabulate(int arity, Fn&& fn,
                             int max_arity = kDefaultMaxArity) {
    PartialFn::check_arity(arity, max_arity);
    const std::size_t size = std::size_t{1} << arity;
    BitTable values(size);
    for (std::size_t x = 0; x < size; ++x) {
      values.set(x, static_cast<bool>(fn(static_cast<Input>(x))));
    }
    return TruthTable(arity, std::move(values), max_arity);
  }

  int arity() const { return arity_; }
  std::size_t size() const { return std::size_t{1} << arity_; }
  bool operator()(Input x) const { return values_.get(x); }
  const BitTable& bits() const { return values_; }
  PartialFn as_partial() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int arity_ = 0;
  BitTable values_;
};

// Pointwise complement on the domain.
PartialFn negate(const PartialFn& f);

// g(x) = f(x xor shift).
PartialFn xor_shift(const PartialFn& f, Input shift);

// g(x) = f(y) where y_i = x_{perm[i]}; perm must be a bijection on [n].
PartialFn permute(const PartialFn& f, std::span<const int> perm);

// Fixes the given variables (index -> bit) and returns the subfunction on the
// remaining variables, which keep their relative order.
PartialFn restrict(const PartialFn& f, const std::map<int, bool>& fixing);

// Generalized composition f o (g_1, ..., g_n). The composed input places the
// variables of g_1 in the lowest bits, then g_2, and so on. The result is
// undefined wherever some block is outside Dom(g_i) or the tuple of inner
// values is outside Dom(f).
PartialFn compose(const PartialFn& outer, std::span<const PartialFn> inner,
                  int max_arity = kDefaultMaxArity);

// compose(outer, (g, g, ..., g)).
PartialFn compose_uniform(const PartialFn& outer, const PartialFn& inner,
                          int max_arity = kDefaultMaxArity);

}  // namespace boolcx

#endif  // BOOLCX_PARTIAL_FN_HPP_
