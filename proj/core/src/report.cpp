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

#include "boolcx/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

namespace boolcx {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::recorded:
      return "recorded";
  }
  return "recorded";
}

std::string format_double(double v) {
  char buf[40];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

CheckRecord& CheckRecord::set(std::string key, double v) {
  values.emplace_back(std::move(key), format_double(v));
  return *this;
}

CheckRecord& CheckRecord::set(std::string key, std::int64_t v) {
  values.emplace_back(std::move(key), std::to_string(v));
  return *this;
}

CheckRecord& CheckRecord::set(std::string key, bool v) {
  values.emplace_back(std::move(key), v ? "true" : "false");
  return *this;
}

CheckRecord& CheckRecord::set(std::string key, std::string v) {
  values.emplace_back(std::move(key), std::move(v));
  return *this;
}

CheckRecord& CheckRecord::verdict(bool ok) {
  status = ok ? CheckStatus::pass : CheckStatus::fail;
  return *this;
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void VerificationReport::sort() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::string VerificationReport::to_json(bool timing) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["suite"] = suite_;
  doc["pass"] = count(CheckStatus::pass);
  doc["fail"] = count(CheckStatus::fail);
  doc["recorded"] = count(CheckStatus::recorded);
  ordered_json checks = ordered_json::array();
  for (const auto& c : checks_) {
    ordered_json j;
    j["name"] = c.name;
    j["property"] = c.property;
    j["status"] = std::string(to_string(c.status));
    ordered_json vals = ordered_json::object();
    for (const auto& [k, v] : c.values) vals[k] = v;
    j["values"] = std::move(vals);
    if (!c.tolerance.empty()) j["tolerance"] = c.tolerance;
    if (timing) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  os << "suite " << suite_ << ": " << count(CheckStatus::pass) << " pass, "
     << count(CheckStatus::fail) << " fail, " << count(CheckStatus::recorded) << " recorded\n";
  for (const auto& c : checks_) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.property.empty()) os << " -- " << c.property;
    os << '\n';
    if (!c.values.empty()) {
      os << "     ";
      for (const auto& [k, v] : c.values) os << ' ' << k << '=' << v;
      os << '\n';
    }
    if (!c.tolerance.empty()) os << "      tolerance " << c.tolerance << '\n';
    if (timing) os << "      runtime_ms " << format_double(c.runtime_ms) << '\n';
  }
  return os.str();
}

}  // namespace boolcx
