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

#include "boolcx/partial_fn.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "boolcx/errors.hpp"

namespace boolcx {

void PartialFn::check_arity(int arity, int max_arity) {
  if (arity < 0) throw InputError("negative arity");
  if (arity > max_arity) {
    throw BoundExceeded("arity " + std::to_string(arity) +
                        " exceeds bound " + std::to_string(max_arity));
  }
}

PartialFn::PartialFn(int arity, BitTable defined, BitTable values,
                     int max_arity)
    : arity_(arity), defined_(std::move(defined)), values_(std::move(values)) {
  check_arity(arity, max_arity);
  const std::size_t size = std::size_t{1} << arity;
  if (defined_.size() != size || values_.size() != size) {
    throw InputError("table length must be 2^arity");
  }
  values_ &= defined_;
}

PartialFn PartialFn::total(int arity, BitTable values, int max_arity) {
  check_arity(arity, max_arity);
  BitTable defined(std::size_t{1} << arity, true);
  return PartialFn(arity, std::move(defined), std::move(values), max_arity);
}

bool PartialFn::is_constant() const {
  const std::size_t ones = values_.count();
  return ones == 0 || ones == defined_.count();
}

TruthTable::TruthTable(int arity, BitTable values, int max_arity)
    : arity_(arity), values_(std::move(values)) {
  PartialFn::check_arity(arity, max_arity);
  if (values_.size() != (std::size_t{1} << arity)) {
    throw InputError("table length must be 2^arity");
  }
}

TruthTable::TruthTable(const PartialFn& f)
    : arity_(f.arity()), values_(f.value_bits()) {
  if (!f.is_total()) throw InputError("function is not total");
}

PartialFn TruthTable::as_partial() const {
  return PartialFn::total(arity_, values_, arity_);
}

PartialFn negate(const PartialFn& f) {
  BitTable values = ~f.value_bits();
  return PartialFn(f.arity(), f.domain_mask(), std::move(values), f.arity());
}

PartialFn xor_shift(const PartialFn& f, Input shift) {
  if (shift >= f.size()) throw InputError("shift outside the cube");
  return PartialFn::tabulate(
      f.arity(), [&](Input x) { return f.eval(x ^ shift); }, f.arity());
}

PartialFn permute(const PartialFn& f, std::span<const int> perm) {
  const int n = f.arity();
  if (static_cast<int>(perm.size()) != n) {
    throw InputError("permutation length must equal arity");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw InputError("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  return PartialFn::tabulate(
      n,
      [&](Input x) {
        Input y = 0;
        for (int i = 0; i < n; ++i) {
          y |= ((x >> perm[static_cast<std::size_t>(i)]) & 1u) << i;
        }
        return f.eval(y);
      },
      n);
}

PartialFn restrict(const PartialFn& f, const std::map<int, bool>& fixing) {
  const int n = f.arity();
  Input fixed_bits = 0;
  Input fixed_mask = 0;
  for (auto [i, b] : fixing) {
    if (i < 0 || i >= n) throw InputError("restricted index out of range");
    fixed_mask |= Input{1} << i;
    if (b) fixed_bits |= Input{1} << i;
  }
  std::vector<int> free_vars;
  for (int i = 0; i < n; ++i) {
    if (!((fixed_mask >> i) & 1u)) free_vars.push_back(i);
  }
  const int m = static_cast<int>(free_vars.size());
  return PartialFn::tabulate(
      m,
      [&](Input y) {
        Input x = fixed_bits;
        for (int j = 0; j < m; ++j) {
          x |= ((y >> j) & 1u) << free_vars[static_cast<std::size_t>(j)];
        }
        return f.eval(x);
      },
      m);
}

PartialFn compose(const PartialFn& outer, std::span<const PartialFn> inner,
                  int max_arity) {
  const int n = outer.arity();
  if (static_cast<int>(inner.size()) != n) {
    throw InputError("compose needs one inner function per outer variable");
  }
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    offset[static_cast<std::size_t>(i) + 1] =
        offset[static_cast<std::size_t>(i)] +
        inner[static_cast<std::size_t>(i)].arity();
  }
  const int total = offset.back();
  PartialFn::check_arity(total, max_arity);
  return PartialFn::tabulate(
      total,
      [&](Input z) {
        Input y = 0;
        for (int i = 0; i < n; ++i) {
          const auto& g = inner[static_cast<std::size_t>(i)];
          const Input block =
              (z >> offset[static_cast<std::size_t>(i)]) &
              static_cast<Input>(g.size() - 1);
          const Value v = g.eval(block);
          if (v == Value::undefined) return Value::undefined;
          if (v == Value::one) y |= Input{1} << i;
        }
        return outer.eval(y);
      },
      max_arity);
}

PartialFn compose_uniform(const PartialFn& outer, const PartialFn& inner,
                          int max_arity) {
  std::vector<PartialFn> gs(static_cast<std::size_t>(outer.arity()), inner);
  return compose(outer, gs, max_arity);
}

}  // namespace boolcx
