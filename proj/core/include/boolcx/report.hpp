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

#ifndef BOOLCX_REPORT_HPP_
#define BOOLCX_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boolcx {

// `recorded` entries carry measurements only and never fail a report.
enum class CheckStatus { pass, fail, recorded };

std::string_view to_string(CheckStatus s);

struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string name_, std::string property_)
      : name(std::move(name_)), property(std::move(property_)) {}

  std::string name;
  std::string property;
  CheckStatus status = CheckStatus::recorded;
  // Key/value pairs, already formatted, in insertion order.
  std::vector<std::pair<std::string, std::string>> values;
  std::string tolerance;
  double runtime_ms = 0.0;

  CheckRecord& set(std::string key, double v);
  CheckRecord& set(std::string key, std::int64_t v);
  CheckRecord& set(std::string key, int v) { return set(std::move(key), std::int64_t{v}); }
  CheckRecord& set(std::string key, bool v);
  CheckRecord& set(std::string key, std::string v);
  CheckRecord& set(std::string key, const char* v) { return set(std::move(key), std::string(v)); }

  // pass if ok, fail otherwise.
  CheckRecord& verdict(bool ok);
};

// Shortest round-trip decimal for doubles ("%.17g" trimmed).
std::string format_double(double v);

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }

  void add(CheckRecord c) { checks_.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  // Stable sort by check name; run before emitting.
  void sort();

  std::size_t count(CheckStatus s) const;
  bool any_failed() const { return count(CheckStatus::fail) > 0; }

  // Runtimes are only printed with `timing`; without it two runs with the
  // same inputs and seed produce identical bytes.
  std::string to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
};

}  // namespace boolcx

#endif  // BOOLCX_REPORT_HPP_
