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

#include "boolcx/zoo.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "boolcx/errors.hpp"

namespace boolcx {

SymmetricSpectrum SymmetricSpectrum::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty spectrum");
  SymmetricSpectrum s;
  s.arity = static_cast<int>(text.size()) - 1;
  for (char c : text) {
    switch (c) {
      case '0': s.profile.push_back(Value::zero); break;
      case '1': s.profile.push_back(Value::one); break;
      case '*': s.profile.push_back(Value::undefined); break;
      default: throw InputError("spectrum characters must be 0, 1 or *");
    }
  }
  return s;
}

std::string SymmetricSpectrum::to_string() const {
  std::string out;
  for (Value v : profile) {
    out += v == Value::zero ? '0' : v == Value::one ? '1' : '*';
  }
  return out;
}

bool SymmetricSpectrum::is_total() const {
  for (Value v : profile) {
    if (v == Value::undefined) return false;
  }
  return true;
}

bool SymmetricSpectrum::is_constant() const {
  bool seen0 = false, seen1 = false;
  for (Value v : profile) {
    seen0 |= v == Value::zero;
    seen1 |= v == Value::one;
  }
  return !(seen0 && seen1);
}

void JuntaSymmetricSpec::validate() const {
  const int k = static_cast<int>(junta.size());
  if (k > arity) throw InputError("junta larger than arity");
  Input seen = 0;
  for (int j : junta) {
    if (j < 0 || j >= arity) throw InputError("junta index out of range");
    if ((seen >> j) & 1u) throw InputError("duplicate junta index");
    seen |= Input{1} << j;
  }
  if (table.size() != (std::size_t{1} << k)) {
    throw InputError("junta table needs 2^k spectra");
  }
  for (const auto& s : table) {
    if (s.arity != arity || s.profile.size() != static_cast<std::size_t>(arity) + 1) {
      throw InputError("junta spectra must range over the whole input weight");
    }
  }
}

SymmetricSpectrum JuntaSymmetricSpec::restriction(Input assignment) const {
  const int k = static_cast<int>(junta.size());
  const auto& base = table.at(assignment);
  SymmetricSpectrum out;
  out.arity = arity - k;
  const int offset = popcount(assignment);
  for (int w = 0; w <= out.arity; ++w) {
    out.profile.push_back(base.profile[static_cast<std::size_t>(w + offset)]);
  }
  return out;
}

bool JuntaSymmetricSpec::is_strong() const {
  for (Input a = 0; a < table.size(); ++a) {
    if (!restriction(a).is_constant()) return true;
  }
  return false;
}

namespace zoo {
namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InputError(what);
}

}  // namespace

PartialFn or_n(int n) {
  require(n >= 1, "or needs n >= 1");
  return PartialFn::tabulate(n, [](Input x) { return to_value(x != 0); });
}

PartialFn and_n(int n) {
  require(n >= 1, "and needs n >= 1");
  const Input all = (Input{1} << n) - 1;
  return PartialFn::tabulate(n, [&](Input x) { return to_value(x == all); });
}

PartialFn xor_n(int n) {
  require(n >= 1, "xor needs n >= 1");
  return PartialFn::tabulate(n, [](Input x) { return to_value(popcount(x) & 1); });
}

PartialFn maj_n(int n) {
  require(n >= 1, "maj needs n >= 1");
  return PartialFn::tabulate(n, [&](Input x) { return to_value(2 * popcount(x) > n); });
}

PartialFn identity() { return or_n(1); }

PartialFn constant(int n, bool value) {
  return PartialFn::tabulate(n, [&](Input) { return to_value(value); });
}

PartialFn pror(int n) {
  require(n >= 1, "pror needs n >= 1");
  return PartialFn::tabulate(n, [](Input x) {
    const int w = popcount(x);
    if (w == 0) return Value::zero;
    if (w == 1) return Value::one;
    return Value::undefined;
  });
}

PartialFn pror_shifted(int n, Input shift) { return xor_shift(pror(n), shift); }

int gapmaj_root(int t) {
  if (t >= 16) {
    const int s = static_cast<int>(std::lround(std::sqrt(t / 4.0)));
    if (4 * s * s == t && s >= 2) return s;
  }
  throw InputError("gapmaj needs t = 4 s^2 with s >= 2, got t = " +
                   std::to_string(t));
}

PartialFn gapmaj(int t) {
  const int s = gapmaj_root(t);
  const int hi = 2 * s * s + 4 * s;
  const int lo = 2 * s * s - 4 * s;
  return PartialFn::tabulate(t, [&](Input x) {
    const int w = popcount(x);
    if (w == hi) return Value::one;
    if (w == lo) return Value::zero;
    return Value::undefined;
  });
}

PartialFn mux(int k) {
  require(k >= 0, "mux needs k >= 0");
  if (k > 4) throw BoundExceeded("mux arity k + 2^k exceeds the table bound");
  const int n = k + (1 << k);
  return PartialFn::tabulate(n, [&](Input x) {
    const Input address = x & ((Input{1} << k) - 1);
    return to_value((x >> (k + static_cast<int>(address))) & 1u);
  });
}

int sink_edge_index(int k, int i, int j) {
  // Pairs (a,b), a<b, enumerated row by row.
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

PartialFn sink(int k) {
  require(k >= 2, "sink needs k >= 2");
  const int n = k * (k - 1) / 2;
  return PartialFn::tabulate(n, [&](Input x) {
    for (int v = 0; v < k; ++v) {
      bool is_sink = true;
      for (int u = 0; u < k && is_sink; ++u) {
        if (u == v) continue;
        if (u < v) {
          // Edge u -> v needs x_uv = 1.
          is_sink = (x >> sink_edge_index(k, u, v)) & 1u;
        } else {
          // Edge u -> v needs x_vu = 0.
          is_sink = !((x >> sink_edge_index(k, v, u)) & 1u);
        }
      }
      if (is_sink) return Value::one;
    }
    return Value::zero;
  });
}

PartialFn rub(int k) {
  require(k >= 2, "rub needs k >= 2");
  const Input block_mask = (Input{1} << k) - 1;
  auto adjacent_pair = [&](Input b) {
    return popcount(b) == 2 && (b & (b >> 1)) != 0;
  };
  return PartialFn::tabulate(k * k, [&](Input x) {
    for (int i = 0; i < k; ++i) {
      if (adjacent_pair((x >> (i * k)) & block_mask)) return Value::one;
    }
    return Value::zero;
  });
}

PartialFn from_spectrum(const SymmetricSpectrum& spec) {
  require(spec.profile.size() == static_cast<std::size_t>(spec.arity) + 1,
          "spectrum length must be arity + 1");
  return PartialFn::tabulate(spec.arity, [&](Input x) {
    return spec.profile[static_cast<std::size_t>(popcount(x))];
  });
}

PartialFn from_junta_spec(const JuntaSymmetricSpec& spec) {
  spec.validate();
  return PartialFn::tabulate(spec.arity, [&](Input x) {
    Input a = 0;
    for (std::size_t j = 0; j < spec.junta.size(); ++j) {
      a |= ((x >> spec.junta[j]) & 1u) << j;
    }
    return spec.table[a].profile[static_cast<std::size_t>(popcount(x))];
  });
}

PartialFn by_name(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = name.find(':', start);
    parts.push_back(name.substr(start, colon == std::string_view::npos
                                           ? std::string_view::npos
                                           : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts[0] == "sym") {
    if (parts.size() != 2) throw InputError("sym needs a profile, e.g. sym:0110");
    return from_spectrum(SymmetricSpectrum::parse(parts[1]));
  }
  std::vector<long long> args;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
    if (ec != std::errc() || ptr != parts[i].data() + parts[i].size()) {
      throw InputError("bad zoo parameter in '" + std::string(name) + "'");
    }
    args.push_back(v);
  }
  const std::string_view kind = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= args.size()) {
      throw InputError("missing parameter for zoo function '" + std::string(name) + "'");
    }
    if (args[i] < 0 || args[i] > (1LL << 30)) throw InputError("zoo parameter out of range");
    return static_cast<int>(args[i]);
  };
  if (kind == "or") return or_n(arg(0));
  if (kind == "and") return and_n(arg(0));
  if (kind == "xor") return xor_n(arg(0));
  if (kind == "maj") return maj_n(arg(0));
  if (kind == "id" || kind == "identity") return identity();
  if (kind == "pror") return pror(arg(0));
  if (kind == "pror_shifted") return pror_shifted(arg(0), static_cast<Input>(arg(1)));
  if (kind == "gapmaj") return gapmaj(arg(0));
  if (kind == "mux") return mux(arg(0));
  if (kind == "sink") return sink(arg(0));
  if (kind == "rub") return rub(arg(0));
  throw InputError("unknown zoo function '" + std::string(kind) + "'");
}

}  // namespace zoo
}  // namespace boolcx
