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

#ifndef BOOLCX_BITS_HPP_
#define BOOLCX_BITS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace boolcx {

// Index of a point of the Boolean cube. Variable x_1 is bit 0.
using Input = std::uint32_t;

inline int popcount(Input x) { return std::popcount(x); }

// Fixed-size packed bit sequence. Bits past size() in the last word are
// always zero, so equality is word equality.
class BitTable {
 public:
  BitTable() = default;
  explicit BitTable(std::size_t size, bool fill = false);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  std::size_t count() const;
  bool all() const { return count() == size_; }
  bool none() const { return count() == 0; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  BitTable& operator&=(const BitTable& o);
  BitTable& operator|=(const BitTable& o);
  BitTable& operator^=(const BitTable& o);
  BitTable operator~() const;

  friend bool operator==(const BitTable&, const BitTable&) = default;

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Enumerates the subsets of `mask` in increasing numeric order, including 0
// and `mask` itself.
template <class Fn>
void for_each_submask(Input mask, Fn&& fn) {
  Input s = 0;
  while (true) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

}  // namespace boolcx

#endif  // BOOLCX_BITS_HPP_
