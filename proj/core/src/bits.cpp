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

#include "boolcx/bits.hpp"

#include <cassert>

namespace boolcx {

BitTable::BitTable(std::size_t size, bool fill)
    : size_(size), words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

std::size_t BitTable::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitTable& BitTable::operator&=(const BitTable& o) {
  assert(o.size_ == size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitTable& BitTable::operator|=(const BitTable& o) {
  assert(o.size_ == size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

BitTable& BitTable::operator^=(const BitTable& o) {
  assert(o.size_ == size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitTable BitTable::operator~() const {
  BitTable r = *this;
  for (auto& w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

void BitTable::clear_tail() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

}  // namespace boolcx
