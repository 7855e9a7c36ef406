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

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolcx/errors.hpp"
#include "boolcx/report.hpp"
#include "boolcx/verify.hpp"
#include "boolcx/zoo.hpp"

namespace boolcx {
namespace {

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_double(3.0), "3");
  for (double v : {0.1, 1e-300, 123456.789, -2.5e17}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Report, SortCountAndJson) {
  VerificationReport rep("demo");
  CheckRecord b("b/check", "second");
  b.set("x", 1).set("ok", true).verdict(false);
  CheckRecord a("a/check", "first");
  a.set("y", 0.25).set("label", "z").verdict(true);
  CheckRecord c("c/check", "measurement");
  c.set("n", std::int64_t{7});
  rep.add(b);
  rep.add(a);
  rep.add(c);
  rep.sort();
  EXPECT_EQ(rep.checks().front().name, "a/check");
  EXPECT_EQ(rep.count(CheckStatus::pass), 1u);
  EXPECT_EQ(rep.count(CheckStatus::fail), 1u);
  EXPECT_EQ(rep.count(CheckStatus::recorded), 1u);
  EXPECT_TRUE(rep.any_failed());

  const auto doc = nlohmann::json::parse(rep.to_json());
  EXPECT_EQ(doc["suite"], "demo");
  EXPECT_EQ(doc["fail"], 1);
  EXPECT_EQ(doc["checks"][0]["values"]["y"], "0.25");
  EXPECT_EQ(doc["checks"][1]["values"]["ok"], "true");
  EXPECT_FALSE(doc["checks"][0].contains("runtime_ms"));
  EXPECT_TRUE(nlohmann::json::parse(rep.to_json(true))["checks"][0].contains("runtime_ms"));
  EXPECT_NE(rep.to_text().find("[fail] b/check"), std::string::npos);
}

TEST(Report, AppendKeepsChecks) {
  VerificationReport a("a"), b("b");
  a.add(CheckRecord("x", ""));
  b.add(CheckRecord("y", ""));
  a.append(b);
  EXPECT_EQ(a.checks().size(), 2u);
  EXPECT_FALSE(a.any_failed());
}

TEST(Report, ByteIdenticalAcrossRuns) {
  VerifyOptions opts;
  WalkSuiteOptions w;
  w.walks_per_cell = 2000;
  w.trace_samples = 2000;
  w.bits = 20000;
  const auto r1 = verify_walks(w, opts);
  const auto r2 = verify_walks(w, opts);
  EXPECT_EQ(r1.to_json(), r2.to_json());
  EXPECT_EQ(r1.to_text(), r2.to_text());

  SimulateOptions sim;
  sim.t = 16;
  sim.trials = 20;
  sim.walk_trials = 5;
  const TruthTable f(zoo::or_n(2));
  EXPECT_EQ(verify_simulate("or:2", f, sim, opts).to_json(),
            verify_simulate("or:2", f, sim, opts).to_json());
}

TEST(Report, JobsDoNotChangeOutput) {
  VerifyOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(verify_symmetric(5, one).to_json(), verify_symmetric(5, four).to_json());
}

TEST(ParallelFor, RunsEveryIndexAndRethrowsLowest) {
  std::vector<std::atomic<int>> hits(50);
  parallel_for(50, 3, [&](int i) { ++hits[static_cast<std::size_t>(i)]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  try {
    parallel_for(20, 4, [](int i) {
      if (i == 7 || i == 13) throw std::runtime_error(std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Suites, SinkPolyAndBsChainSmall) {
  VerifyOptions opts;
  const auto sink = verify_sink_poly(3, kOneThird, nullptr, opts);
  EXPECT_FALSE(sink.any_failed()) << sink.to_text();
  const auto chain = verify_bs_chain("xor:2", TruthTable(zoo::xor_n(2)), "and:2",
                                     TruthTable(zoo::and_n(2)), opts);
  EXPECT_FALSE(chain.any_failed()) << chain.to_text();
  EXPECT_THROW(build_bs_chain(TruthTable(zoo::constant(2, false)), TruthTable(zoo::and_n(2)), opts),
               InputError);
}

}  // namespace
}  // namespace boolcx
