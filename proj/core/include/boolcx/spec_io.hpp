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

#ifndef BOOLCX_SPEC_IO_HPP_
#define BOOLCX_SPEC_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "boolcx/partial_fn.hpp"

namespace boolcx {

// Hex encoding of a bit table: byte b holds entries 8b..8b+7 with entry 8b in
// the least significant bit; bytes are written in increasing order, two hex
// digits each. Tables shorter than 8 entries occupy one zero-padded byte.
std::string to_hex(const BitTable& bits);
// Throws InputError on bad digits, wrong length or nonzero padding.
BitTable from_hex(std::string_view hex, std::size_t num_bits);

struct FunctionSpec {
  std::string name;
  PartialFn fn;
};

// Function spec document, e.g.
//   {"arity": 2, "kind": "table", "table": "08", "defined": "0f"}
//   {"arity": 3, "kind": "symmetric", "params": {"profile": "0111"}}
//   {"arity": 3, "kind": "junta", "params": {"junta": [0],
//                                  "profiles": ["0011", "0110"]}}
//   {"arity": 4, "kind": "zoo", "name": "or", "params": [4]}
// A missing "defined" field means the function is total.
FunctionSpec parse_function_spec(std::string_view text,
                                 int max_arity = kDefaultMaxArity);
FunctionSpec load_function_spec(const std::filesystem::path& path,
                                int max_arity = kDefaultMaxArity);

// Serializes as kind "table" (the only kind every function has).
std::string to_spec_json(const PartialFn& f, std::string_view name);

}  // namespace boolcx

#endif  // BOOLCX_SPEC_IO_HPP_
