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

// boolcx-lab: measure tables, verification suites and simulations.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error, 3 a resource
// bound was exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "boolcx/adeg.hpp"
#include "boolcx/errors.hpp"
#include "boolcx/lp.hpp"
#include "boolcx/measures.hpp"
#include "boolcx/spec_io.hpp"
#include "boolcx/verify.hpp"
#include "boolcx/zoo.hpp"

namespace {

using namespace boolcx;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Globals {
  std::uint64_t seed = VerifyOptions{}.seed;
  double eps = kOneThird;
  int max_arity = kDefaultMaxLpArity;
  int jobs = 1;
  std::string format = "text";
  std::string output;
  bool timing = false;
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

std::vector<NamedFn> load_functions(const std::vector<std::string>& zoo_names,
                                    const std::vector<std::string>& files, int max_arity) {
  std::vector<NamedFn> out;
  for (const auto& name : split_list(zoo_names)) {
    PartialFn f = zoo::by_name(name);
    PartialFn::check_arity(f.arity(), max_arity);
    out.push_back({name, std::move(f)});
  }
  for (const auto& path : files) {
    auto spec = load_function_spec(path, max_arity);
    out.push_back({spec.name.empty() ? path : spec.name, std::move(spec.fn)});
  }
  return out;
}

TruthTable total_by_name(const std::string& name) {
  const PartialFn f = zoo::by_name(name);
  if (!f.is_total()) throw InputError("'" + name + "' is partial; a total function is required");
  return TruthTable(f);
}

VerifyOptions verify_options(const Globals& g) {
  VerifyOptions o;
  o.seed = g.seed;
  o.eps = g.eps;
  o.max_lp_arity = g.max_arity;
  o.jobs = g.jobs;
  return o;
}

// Writes to --output if given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.output);
  if (!os) throw InputError("cannot open output file " + g.output);
  os << text;
}

int emit_report(const Globals& g, VerificationReport rep) {
  rep.sort();
  emit(g, g.format == "json" ? rep.to_json(g.timing) : rep.to_text(g.timing));
  return rep.any_failed() ? kExitCheckFailed : kExitOk;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  if (path.empty()) return nullptr;
  auto os = std::make_unique<std::ofstream>(path);
  if (!*os) throw InputError("cannot open " + path);
  return os;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolcx-lab: Boolean function complexity laboratory"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Base seed for every random stream");
  app.add_option("--eps", g.eps, "Approximation error target")->check(CLI::Range(1e-4, 0.4999));
  app.add_option("--max-arity", g.max_arity, "Largest arity handed to the LP")
      ->check(CLI::Range(1, 24));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", g.output, "Write the report here instead of stdout");
  app.add_flag("--timing", g.timing, "Include runtimes in reports (not byte-stable)");

  // measures
  auto* measures = app.add_subcommand("measures", "s, bs, fbs, deg, D (and optionally adeg)");
  std::vector<std::string> m_zoo, m_files;
  std::string m_out = "csv";
  bool m_adeg = false;
  int m_bs_arity = kDefaultMaxBsArity;
  measures->add_option("--zoo", m_zoo, "Zoo names, comma separated (e.g. or:4,sink:4)");
  measures->add_option("--file", m_files, "Function spec files");
  measures->add_option("--out", m_out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  measures->add_flag("--adeg", m_adeg, "Also compute adeg by LP (total functions)");
  measures->add_option("--bs-arity", m_bs_arity, "Arity bound for bs, fbs and D")
      ->check(CLI::Range(1, 20));

  // verify-bs-chain
  auto* bs_chain = app.add_subcommand("verify-bs-chain", "Block-sensitivity degree chain for f o g");
  std::vector<std::string> bc_f, bc_g;
  bs_chain->add_option("--f", bc_f, "Outer total functions (default or:3,xor:2,maj:3)");
  bs_chain->add_option("--g", bc_g, "Inner total functions (default and:2,xor:2)");

  // verify-pror
  auto* pror = app.add_subcommand("verify-pror", "PrOR_n composed with partial inner functions");
  std::vector<std::string> pr_inner;
  int pr_n = 0;
  pror->add_option("--inner", pr_inner, "Inner zoo names, comma separated (default id)");
  pror->add_option("--n", pr_n, "Outer arity; the inner list is repeated cyclically")
      ->check(CLI::Range(1, 12));

  // verify-symmetric
  auto* sym = app.add_subcommand("verify-symmetric", "Symmetric band and junta restrictions");
  int sym_n = 8;
  sym->add_option("--n-max", sym_n, "Largest arity of the symmetric sweep")->check(CLI::Range(1, 10));

  // verify-walks
  auto* walks = app.add_subcommand("verify-walks", "Amplification bounds and biased walks");
  WalkSuiteOptions wopt;
  walks->add_option("--walks", wopt.walks_per_cell, "Walks per grid cell");
  walks->add_option("--trace-samples", wopt.trace_samples, "Samples for the trace law test");
  walks->add_option("--bits", wopt.bits, "Generated bits for the marginal test");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Noisy algorithm run through the GapMaj reduction");
  std::string sim_f = "or:2";
  SimulateOptions sopt;
  std::string sim_transcript;
  simulate->add_option("--f", sim_f, "Outer total function");
  simulate->add_option("--t", sopt.t, "Inner GapMaj size (4 s^2, s >= 2)");
  simulate->add_option("--trials", sopt.trials, "Trials per outer input");
  simulate->add_option("--walk-trials", sopt.walk_trials, "Trials for the walk-backed variant");
  simulate->add_option("--transcript", sim_transcript, "JSON-lines transcript of block queries");

  // sink-poly
  auto* sink = app.add_subcommand("sink-poly", "Constructive approximating polynomial for SINK");
  int sink_k = 4;
  double sink_eps = kOneThird;
  std::string sink_witness;
  sink->add_option("--k", sink_k, "Number of vertices");
  sink->add_option("--target-eps", sink_eps, "Target error (defaults to 1/3)");
  sink->add_option("--witness", sink_witness, "Write the polynomial here");

  // adeg
  auto* adeg_cmd = app.add_subcommand("adeg", "Degree sweep CSV: n, d*, lp_error, wall_time");
  std::vector<std::string> a_zoo, a_files;
  bool a_bounded = false;
  bool a_full = false;
  adeg_cmd->add_option("--zoo", a_zoo, "Zoo names, comma separated");
  adeg_cmd->add_option("--file", a_files, "Function spec files");
  adeg_cmd->add_flag("--bounded", a_bounded, "Bounded approximate degree (partial functions)");
  adeg_cmd->add_flag("--full", a_full, "Also print every d of the sweep");

  // lp-dump
  auto* dump = app.add_subcommand("lp-dump", "Write the degree-d approximation LP as text");
  std::string d_name;
  int d_degree = 1;
  bool d_bounded = false;
  dump->add_option("--zoo", d_name, "Zoo name")->required();
  dump->add_option("--d", d_degree, "Degree")->required();
  dump->add_flag("--bounded", d_bounded, "Bounded program (partial functions)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const VerifyOptions vopt = verify_options(g);
    if (measures->parsed()) {
      const auto fns = load_functions(m_zoo, m_files, kDefaultMaxArity);
      std::vector<MeasureReport> reports(fns.size());
      MeasureOptions mo;
      mo.max_arity = m_bs_arity;
      mo.with_adeg = m_adeg;
      mo.max_lp_arity = g.max_arity;
      parallel_for(static_cast<int>(fns.size()), g.jobs, [&](int i) {
        const auto& f = fns[static_cast<std::size_t>(i)];
        reports[static_cast<std::size_t>(i)] = compute_measures(f.name, f.fn, mo);
      });
      if (m_out == "json") {
        emit(g, measures_to_json(reports));
      } else {
        std::string text = measures_csv_header() + "\n";
        for (const auto& r : reports) text += to_csv_row(r) + "\n";
        emit(g, text);
      }
      return kExitOk;
    }
    if (bs_chain->parsed()) {
      auto fs = split_list(bc_f);
      auto gs = split_list(bc_g);
      if (fs.empty()) fs = {"or:3", "xor:2", "maj:3"};
      if (gs.empty()) gs = {"and:2", "xor:2"};
      VerificationReport rep("bs-chain");
      for (const auto& fn : fs) {
        for (const auto& gn : gs) {
          rep.append(verify_bs_chain(fn, total_by_name(fn), gn, total_by_name(gn), vopt));
        }
      }
      return emit_report(g, std::move(rep));
    }
    if (pror->parsed()) {
      auto names = split_list(pr_inner);
      if (names.empty()) names = {"id"};
      const int n = pr_n > 0 ? pr_n : static_cast<int>(names.size());
      std::vector<NamedFn> inner;
      for (int i = 0; i < n; ++i) {
        const auto& name = names[static_cast<std::size_t>(i) % names.size()];
        inner.push_back({name, zoo::by_name(name)});
      }
      return emit_report(g, verify_pror(inner, vopt));
    }
    if (sym->parsed()) return emit_report(g, verify_symmetric(sym_n, vopt));
    if (walks->parsed()) return emit_report(g, verify_walks(wopt, vopt));
    if (simulate->parsed()) {
      const auto transcript = open_out(sim_transcript);
      sopt.transcript = transcript.get();
      return emit_report(g, verify_simulate(sim_f, total_by_name(sim_f), sopt, vopt));
    }
    if (sink->parsed()) {
      const auto witness = open_out(sink_witness);
      return emit_report(g, verify_sink_poly(sink_k, sink_eps, witness.get(), vopt));
    }
    if (adeg_cmd->parsed()) {
      const auto fns = load_functions(a_zoo, a_files, g.max_arity);
      std::ostringstream os;
      os << (a_full ? "name,n,d,lp_error,feasible,wall_time_ms\n"
                    : "name,n,d_star,lp_error,wall_time_ms\n");
      for (const auto& f : fns) {
        const auto sweep = a_bounded || !f.fn.is_total()
                               ? bdeg_sweep(f.fn, g.eps, a_full, g.max_arity)
                               : adeg_sweep(TruthTable(f.fn), g.eps, a_full, g.max_arity);
        if (a_full) {
          for (const auto& r : sweep) {
            os << f.name << ',' << f.fn.arity() << ',' << r.degree << ','
               << format_double(r.error) << ',' << (r.feasible ? 1 : 0) << ','
               << format_double(r.wall_ms) << '\n';
          }
          continue;
        }
        double wall = 0.0;
        for (const auto& r : sweep) wall += r.wall_ms;
        const auto& last = sweep.back();
        os << f.name << ',' << f.fn.arity() << ',' << last.degree << ','
           << format_double(last.error) << ',' << format_double(wall) << '\n';
      }
      emit(g, os.str());
      return kExitOk;
    }
    if (dump->parsed()) {
      const PartialFn f = zoo::by_name(d_name);
      PartialFn::check_arity(f.arity(), g.max_arity);
      std::ostringstream os;
      if (d_bounded || !f.is_total()) {
        lp::write_lp(os, bdeg_program(f, d_degree));
      } else {
        lp::write_lp(os, adeg_program(TruthTable(f), d_degree));
      }
      emit(g, os.str());
      return kExitOk;
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "boolcx-lab: bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const InputError& e) {
    std::cerr << "boolcx-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "boolcx-lab: verification failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "boolcx-lab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
