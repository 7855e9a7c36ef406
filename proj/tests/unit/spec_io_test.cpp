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

#include <filesystem>
#include <fstream>
#include <random>

#include "boolcx/errors.hpp"
#include "boolcx/spec_io.hpp"
#include "boolcx/zoo.hpp"
#include "support/oracles.hpp"

namespace boolcx {
namespace {

TEST(Hex, LittleEndianBitOrder) {
  BitTable b(8);
  b.set(0, true);
  b.set(5, true);
  EXPECT_EQ(to_hex(b), "21");
  EXPECT_EQ(from_hex("21", 8), b);
  BitTable small(2);
  small.set(1, true);
  EXPECT_EQ(to_hex(small), "02");
  EXPECT_THROW(from_hex("04", 2), InputError);
  EXPECT_THROW(from_hex("0", 2), InputError);
  EXPECT_THROW(from_hex("zz", 8), InputError);
}

TEST(SpecJson, RoundTripsRandomPartialFunctions) {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 6; ++n) {
    const PartialFn f = oracle::random_partial(n, 0.6, rng);
    const auto spec = parse_function_spec(to_spec_json(f, "rnd"));
    EXPECT_EQ(spec.fn, f);
    EXPECT_EQ(spec.name, "rnd");
  }
}

TEST(SpecJson, OtherKinds) {
  auto s = parse_function_spec(R"({"kind":"symmetric","arity":3,"params":{"profile":"0111"}})");
  EXPECT_EQ(s.fn, zoo::or_n(3));
  s = parse_function_spec(R"({"kind":"zoo","name":"pror","arity":4,"params":[4]})");
  EXPECT_EQ(s.fn, zoo::pror(4));
  EXPECT_EQ(s.name, "pror:4");
  s = parse_function_spec(
      R"({"kind":"junta","arity":2,"params":{"junta":[1],"profiles":["000","111"]}})");
  for (Input x = 0; x < 4; ++x) EXPECT_EQ(s.fn.value(x), (x >> 1) & 1u);
}

TEST(SpecJson, Rejects) {
  EXPECT_THROW(parse_function_spec("{"), InputError);
  EXPECT_THROW(parse_function_spec("[]"), InputError);
  EXPECT_THROW(parse_function_spec(R"({"arity":2})"), InputError);
  EXPECT_THROW(parse_function_spec(R"({"arity":2,"table":"0f","defined":"07"})"), InputError);
  EXPECT_THROW(parse_function_spec(R"({"arity":2,"kind":"what","table":"00"})"), InputError);
  EXPECT_THROW(parse_function_spec(R"({"kind":"zoo","name":"or","arity":3,"params":[4]})"),
               InputError);
  EXPECT_THROW(parse_function_spec(R"({"arity":30,"table":"00"})"), BoundExceeded);
}

TEST(SpecJson, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "boolcx_spec_io_test.json";
  {
    std::ofstream os(path);
    os << to_spec_json(zoo::sink(3), "sink3");
  }
  EXPECT_EQ(load_function_spec(path).fn, zoo::sink(3));
  std::filesystem::remove(path);
  EXPECT_THROW(load_function_spec(path), InputError);
}

}  // namespace
}  // namespace boolcx
