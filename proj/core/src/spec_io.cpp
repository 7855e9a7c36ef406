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

#include "boolcx/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolcx/errors.hpp"
#include "boolcx/zoo.hpp"

namespace boolcx {
namespace {

using nlohmann::json;

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::size_t num_bytes(std::size_t num_bits) {
  return num_bits == 0 ? 0 : (num_bits + 7) / 8;
}

PartialFn from_table_fields(const json& doc, int arity, int max_arity) {
  PartialFn::check_arity(arity, max_arity);
  const std::size_t size = std::size_t{1} << arity;
  if (!doc.contains("table")) throw InputError("table spec needs a 'table' field");
  BitTable values = from_hex(doc.at("table").get<std::string>(), size);
  BitTable defined(size, true);
  if (doc.contains("defined")) {
    defined = from_hex(doc.at("defined").get<std::string>(), size);
  }
  // Files stay canonical so that hex equality is function equality.
  BitTable outside = values;
  outside &= ~defined;
  if (!outside.none()) throw InputError("table has bits set outside 'defined'");
  return PartialFn(arity, std::move(defined), std::move(values), max_arity);
}

}  // namespace

std::string to_hex(const BitTable& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t bytes = num_bytes(bits.size());
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      const std::size_t i = 8 * b + k;
      if (i < bits.size() && bits.get(i)) byte |= 1u << k;
    }
    out += kDigits[byte >> 4];
    out += kDigits[byte & 15];
  }
  return out;
}

BitTable from_hex(std::string_view hex, std::size_t num_bits) {
  const std::size_t bytes = num_bytes(num_bits);
  if (hex.size() != 2 * bytes) {
    throw InputError("hex table has " + std::to_string(hex.size()) +
                     " digits, expected " + std::to_string(2 * bytes));
  }
  BitTable out(num_bits);
  for (std::size_t b = 0; b < bytes; ++b) {
    const int hi = hex_digit(hex[2 * b]);
    const int lo = hex_digit(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) throw InputError("invalid hex digit");
    const unsigned byte = static_cast<unsigned>(hi * 16 + lo);
    for (std::size_t k = 0; k < 8; ++k) {
      if (!((byte >> k) & 1u)) continue;
      const std::size_t i = 8 * b + k;
      if (i >= num_bits) throw InputError("nonzero padding bits in hex table");
      out.set(i, true);
    }
  }
  return out;
}

FunctionSpec parse_function_spec(std::string_view text, int max_arity) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("function spec is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InputError("function spec must be an object");
    const std::string kind = doc.value("kind", std::string("table"));
    const int arity = doc.at("arity").get<int>();
    FunctionSpec spec;
    spec.name = doc.value("name", std::string(kind));
    const json params = doc.value("params", json());
    if (kind == "table") {
      spec.fn = from_table_fields(doc, arity, max_arity);
    } else if (kind == "symmetric") {
      auto s = SymmetricSpectrum::parse(params.at("profile").get<std::string>());
      if (s.arity != arity) throw InputError("profile length must be arity + 1");
      PartialFn::check_arity(arity, max_arity);
      spec.fn = zoo::from_spectrum(s);
    } else if (kind == "junta") {
      JuntaSymmetricSpec js;
      js.arity = arity;
      js.junta = params.at("junta").get<std::vector<int>>();
      for (const auto& p : params.at("profiles")) {
        js.table.push_back(SymmetricSpectrum::parse(p.get<std::string>()));
      }
      PartialFn::check_arity(arity, max_arity);
      spec.fn = zoo::from_junta_spec(js);
    } else if (kind == "zoo") {
      std::string id = doc.at("name").get<std::string>();
      if (params.is_array()) {
        for (const auto& p : params) id += ":" + std::to_string(p.get<long long>());
      }
      spec.fn = zoo::by_name(id);
      spec.name = id;
      if (spec.fn.arity() != arity) {
        throw InputError("zoo function '" + id + "' has arity " +
                         std::to_string(spec.fn.arity()) + ", spec says " +
                         std::to_string(arity));
      }
    } else {
      throw InputError("unknown spec kind '" + kind + "'");
    }
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed function spec: ") + e.what());
  }
}

FunctionSpec load_function_spec(const std::filesystem::path& path, int max_arity) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  FunctionSpec spec = parse_function_spec(buf.str(), max_arity);
  if (spec.name == "table") spec.name = path.stem().string();
  return spec;
}

std::string to_spec_json(const PartialFn& f, std::string_view name) {
  nlohmann::ordered_json doc;
  doc["arity"] = f.arity();
  doc["kind"] = "table";
  doc["name"] = std::string(name);
  doc["table"] = to_hex(f.value_bits());
  if (!f.is_total()) doc["defined"] = to_hex(f.domain_mask());
  return doc.dump();
}

}  // namespace boolcx
