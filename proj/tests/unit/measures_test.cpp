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

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolcx/errors.hpp"
#include "boolcx/measures.hpp"
#include "boolcx/zoo.hpp"
#include "support/oracles.hpp"

namespace boolcx {
namespace {

TEST(Sensitivity, KnownValues) {
  EXPECT_EQ(sensitivity(zoo::or_n(5)).value, 5);
  EXPECT_EQ(sensitivity(zoo::or_n(5)).witness, 0u);
  EXPECT_EQ(sensitivity(zoo::xor_n(4)).value, 4);
  EXPECT_EQ(sensitivity(zoo::maj_n(3)).value, 2);
  EXPECT_EQ(sensitivity(zoo::pror(4)).value, 4);
  EXPECT_EQ(sensitivity(zoo::constant(3, false)).value, 0);
  EXPECT_EQ(sensitivity_at(zoo::and_n(3), 0b011), 1);
}

TEST(Sensitivity, MatchesNaiveOnRandomPartials) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    const PartialFn f = oracle::random_partial(1 + rep % 5, 0.7, rng);
    EXPECT_EQ(sensitivity(f).value, oracle::sensitivity(f)) << rep;
  }
}

TEST(Blocks, SensitiveAndMinimal) {
  const PartialFn f = zoo::and_n(2);
  EXPECT_EQ(sensitive_blocks(f, 0b00), (std::vector<Input>{3}));
  EXPECT_EQ(sensitive_blocks(f, 0b11), (std::vector<Input>{1, 2, 3}));
  EXPECT_EQ(minimal_sensitive_blocks(f, 0b11), (std::vector<Input>{1, 2}));
  const std::vector<Input> blocks = {0b0011, 0b0110, 0b1100, 0b1000};
  const auto pack = max_disjoint_packing(blocks);
  EXPECT_EQ(pack.size(), 2u);
  EXPECT_EQ(pack, (std::vector<Input>{0b0011, 0b1100}));
}

TEST(BlockSensitivity, KnownValues) {
  EXPECT_EQ(block_sensitivity(zoo::sink(4)).value, 4);
  EXPECT_EQ(block_sensitivity(zoo::pror(5)).value, 5);
  const auto r = block_sensitivity(zoo::maj_n(5));
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(static_cast<int>(r.witness.blocks.size()), 3);
}

TEST(BlockSensitivity, WitnessIsDisjointAndSensitive) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 60; ++rep) {
    const PartialFn f = oracle::random_partial(4, 0.8, rng);
    const auto r = block_sensitivity(f);
    EXPECT_EQ(r.value, oracle::block_sensitivity(f));
    Input used = 0;
    for (const Input b : r.witness.blocks) {
      EXPECT_EQ(used & b, 0u);
      used |= b;
      const Input y = r.witness.base ^ b;
      ASSERT_TRUE(f.defined(y));
      EXPECT_NE(f.value(y), f.value(r.witness.base));
    }
    EXPECT_EQ(static_cast<int>(r.witness.blocks.size()), r.value);
  }
}

TEST(BlockSensitivity, ArityBound) {
  EXPECT_THROW(block_sensitivity(zoo::gapmaj(16)), BoundExceeded);
  EXPECT_NO_THROW(block_sensitivity(zoo::or_n(6), 6));
}

TEST(FractionalBs, OrAndSandwich) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_NEAR(fractional_block_sensitivity(zoo::or_n(n)).value, n, 1e-9);
  }
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 40; ++rep) {
    const PartialFn f = oracle::random_partial(4, 0.9, rng);
    const double fbs = fractional_block_sensitivity(f).value;
    EXPECT_GE(fbs + 1e-9, block_sensitivity(f).value);
    EXPECT_LE(fbs, 4 + 1e-9);
  }
}

TEST(FractionalBs, MinimalColumnsSuffice) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 30; ++rep) {
    const PartialFn f = oracle::random_partial(4, 0.8, rng);
    EXPECT_NEAR(fractional_block_sensitivity(f, BlockColumns::minimal).value,
                fractional_block_sensitivity(f, BlockColumns::all).value, 1e-7);
  }
}

TEST(FractionalBs, WitnessLoadsAtMostOne) {
  const auto r = fractional_block_sensitivity(zoo::sink(4));
  std::vector<double> load(6, 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < r.witness.blocks.size(); ++j) {
    EXPECT_GT(r.witness.weights[j], 0.0);
    EXPECT_LE(r.witness.weights[j], 1.0 + 1e-9);
    total += r.witness.weights[j];
    for (int i = 0; i < 6; ++i) {
      if ((r.witness.blocks[j] >> i) & 1u) load[static_cast<std::size_t>(i)] += r.witness.weights[j];
    }
  }
  for (double l : load) EXPECT_LE(l, 1.0 + 1e-9);
  EXPECT_NEAR(total, r.value, 1e-9);
}

TEST(Degree, MobiusAndExactDegree) {
  const auto c = mobius_coefficients(TruthTable(zoo::or_n(2)));
  EXPECT_EQ(c, (std::vector<std::int64_t>{0, 1, 1, -1}));
  EXPECT_EQ(exact_degree(TruthTable(zoo::xor_n(4))), 4);
  EXPECT_EQ(exact_degree(TruthTable(zoo::constant(3, true))), 0);
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    const TruthTable f = oracle::random_total(1 + rep % 4, rng);
    EXPECT_EQ(exact_degree(f), oracle::exact_degree(f));
  }
}

TEST(DecisionTree, MatchesPlainRecursion) {
  EXPECT_EQ(decision_tree_depth(zoo::or_n(4)), 4);
  EXPECT_EQ(decision_tree_depth(zoo::mux(2)), 3);
  EXPECT_EQ(decision_tree_depth(zoo::constant(3, true)), 0);
  EXPECT_EQ(decision_tree_depth(zoo::pror(3)), 3);
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 40; ++rep) {
    const PartialFn f = oracle::random_partial(1 + rep % 4, 0.75, rng);
    EXPECT_EQ(decision_tree_depth(f), oracle::decision_tree_depth(f)) << rep;
  }
}

TEST(Paturi, GammaOfSymmetricFunctions) {
  EXPECT_EQ(paturi_gamma(SymmetricSpectrum::parse("0111")), 0);   // OR_3
  EXPECT_EQ(paturi_gamma(SymmetricSpectrum::parse("0001")), 1);   // AND_3, k = 2
  EXPECT_EQ(paturi_gamma(SymmetricSpectrum::parse("00011")), 2);  // MAJ_4
  EXPECT_THROW(paturi_gamma(SymmetricSpectrum::parse("000")), InputError);
  EXPECT_THROW(paturi_gamma(SymmetricSpectrum::parse("0*1")), InputError);
  for (int code = 1; code < 63; ++code) {
    std::vector<int> prof(6);
    std::string text;
    for (int w = 0; w < 6; ++w) {
      prof[static_cast<std::size_t>(w)] = (code >> w) & 1;
      text += static_cast<char>('0' + prof[static_cast<std::size_t>(w)]);
    }
    EXPECT_EQ(paturi_gamma(SymmetricSpectrum::parse(text)), oracle::paturi_gamma(prof)) << text;
  }
}

TEST(Report, CsvAndJson) {
  const auto r = compute_measures("or:3", zoo::or_n(3));
  EXPECT_EQ(to_csv_row(r), "or:3,3,3,3,3.000000,3,3");
  EXPECT_EQ(measures_csv_header(), "name,n,s,bs,fbs,deg,D");
  const std::vector<MeasureReport> rs = {r, compute_measures("pror:3", zoo::pror(3))};
  const auto doc = nlohmann::json::parse(measures_to_json(rs));
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["bs"], 3);
  EXPECT_TRUE(doc[1]["deg"].is_null());
}

}  // namespace
}  // namespace boolcx
