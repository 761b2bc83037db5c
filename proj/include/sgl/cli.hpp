// Copyright 2026 The Authors.
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

#ifndef SGL_CLI_HPP_
#define SGL_CLI_HPP_

// Command-line front end. RunCommand parses an argument vector, dispatches
// to the library and renders the report; the sgl binary is a thin wrapper
// so that tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sgl/builders.hpp"
#include "sgl/error.hpp"
#include "sgl/exact.hpp"
#include "sgl/format.hpp"
#include "sgl/greedy.hpp"
#include "sgl/instance.hpp"
#include "sgl/io.hpp"
#include "sgl/verify.hpp"

#ifndef SGL_VERSION
#define SGL_VERSION "0.1.0"
#endif

namespace sgl {

enum class OutputFormat { kHuman, kCsv, kJson };

struct CommandRequest {
  std::string subcommand;
  std::string paper;
  std::string instance_path;
  std::string seed = "0";
  std::optional<std::uint64_t> trials;
  std::string order;
  std::string tie = "first-name";
  std::string format = "human";
  std::string out;
  bool exact = false;
  bool trace = false;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<int> grid;
  std::size_t dummies = 0;
  std::size_t copies = 1;
  unsigned threads = 0;
  bool exhaustive = false;
  std::size_t cap = 16;
  std::string set;
  std::string base;
};

struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli {

inline constexpr const char* kCsvHelp = R"(CSV columns by subcommand:
  solve            step,part,element,gain,value
  opt              value,bases,base
  ratio            mode,runs,seed,tie,opt,expected_final,min_final,max_final,ratio,exact_ratio
  curve            i,expected_value,lower_bound_g[,stderr]   (lower_bound_g = g(i/m) * opt)
  bound            p,q,a,b,c0,c
  paper/extend/compose  name,parts,elements
  reduce-swm       item,bidder,gain,welfare
  verify           property,witnesses,values
  check-potential  order,final_value,monotone,final_bound,potentials
SGL_ENUM_CAP=N caps exact enumeration at N arrival orders (default 40320);
SGL_ENUM_CAP=N,B also caps brute-force optimum search at B bases (default 1e7).)";

[[noreturn]] inline void Usage(const std::string& message) {
  throw Error(ErrorKind::kUsageError, message);
}

inline std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string_view rest = text;
  for (;;) {
    const auto comma = rest.find(',');
    out.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string Braced(const std::vector<std::string>& names) { return "{" + Join(names, ",") + "}"; }

inline OutputFormat ParseFormat(const std::string& text) {
  if (text == "human") return OutputFormat::kHuman;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  Usage("--format must be human, csv or json");
}

inline std::uint64_t ResolveSeed(const std::string& text) {
  if (text == "entropy") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t seed = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (!text.empty() && ec == std::errc() && end == text.data() + text.size()) return seed;
  Usage("--seed must be a non-negative integer or 'entropy'");
}

inline Instance BuiltinInstance(const std::string& name) {
  if (name == "7-12") return BuildInstance7_12();
  if (name == "19-33") return BuildInstance19_33();
  Usage("unknown builtin instance '" + name + "' (expected 7-12 or 19-33)");
}

inline Instance LoadInstance(const CommandRequest& req) {
  if (req.paper.empty() == req.instance_path.empty()) {
    Usage("give exactly one of --paper NAME or --instance PATH");
  }
  return req.paper.empty() ? ReadInstance(req.instance_path) : BuiltinInstance(req.paper);
}

inline TieBreakPolicy LoadTie(const CommandRequest& req) {
  try {
    return TieBreakPolicy::Parse(req.tie);
  } catch (const Error& e) {
    Usage(e.what());
  }
}

inline std::vector<std::size_t> ParseOrder(const PartitionMatroid& matroid, const std::string& text) {
  const auto names = SplitList(text);
  try {
    return OrderByName(matroid, names).Resolve(matroid.part_count());
  } catch (const Error& e) {
    Usage(std::string("--order: ") + e.what());
  }
}

inline ElementSet ParseSet(const Instance& instance, const std::string& text, const char* flag) {
  try {
    return instance.Set(SplitList(text));
  } catch (const Error& e) {
    Usage(std::string(flag) + ": " + e.what());
  }
}

inline std::vector<std::string> PartNames(const PartitionMatroid& m, const std::vector<std::size_t>& order) {
  std::vector<std::string> out;
  for (std::size_t p : order) out.push_back(m.part_name(p));
  return out;
}

// One rendered report in all three formats.
struct Rendered {
  Json result = Json::object();
  std::string human;
  std::string csv;
};

inline std::string CsvRow(const std::vector<std::string>& cells) { return Join(cells, ",") + "\n"; }

inline Json NumberArray(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

inline Rendered Solve(const CommandRequest& req, const Instance& inst, const TieBreakPolicy& tie,
                      std::uint64_t seed) {
  const auto& m = inst.matroid();
  std::vector<std::size_t> order =
      req.order.empty() ? UniformPermutation(m.part_count(), seed) : ParseOrder(m, req.order);
  TieBreaker ties(tie, m);
  const GreedyTrace trace = RunGreedy(inst, order, ties);

  Rendered r;
  r.result["order"] = PartNames(m, trace.permutation);
  r.result["order_source"] = req.order.empty() ? "uniform" : "explicit";
  r.result["initial_value"] = trace.initial_value;
  Json steps = Json::array();
  r.csv = CsvRow({"step", "part", "element", "gain", "value"});
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    steps.push_back(Json{{"step", i + 1},
                         {"part", m.part_name(s.part)},
                         {"element", m.element_name(s.element)},
                         {"gain", s.gain},
                         {"value", s.value},
                         {"tied", s.tied}});
    r.csv += CsvRow({std::to_string(i + 1), m.part_name(s.part), m.element_name(s.element),
                     FormatNumber(s.gain), FormatNumber(s.value)});
  }
  r.result["steps"] = std::move(steps);
  r.result["final_set"] = m.Names(trace.final_set);
  r.result["final_value"] = trace.final_value;

  r.human = "order: " + Join(PartNames(m, trace.permutation), ",") + "\n";
  if (req.trace) r.human += RenderTrace(inst, trace);
  r.human += "final set: " + Braced(m.Names(trace.final_set)) + "\n";
  r.human += "final value: " + FormatFixed6(trace.final_value) + "\n";
  return r;
}

inline Rendered Opt(const Instance& inst) {
  const OptResult opt = BruteForceOpt(inst);
  const auto names = inst.matroid().Names(opt.base);
  Rendered r;
  r.result["base"] = names;
  r.result["value"] = opt.value;
  r.result["bases"] = opt.bases;
  r.human = "optimum: " + Braced(names) + "\nvalue: " + FormatFixed6(opt.value) +
            "\nbases examined: " + std::to_string(opt.bases) + "\n";
  r.csv = CsvRow({"value", "bases", "base"}) +
          CsvRow({FormatNumber(opt.value), std::to_string(opt.bases), Join(names, ";")});
  return r;
}

inline ExpectationReport Expectation(const CommandRequest& req, const Instance& inst,
                                     const TieBreakPolicy& tie, std::uint64_t seed) {
  const auto limits = EnumerationLimits::FromEnvironment();
  if (req.exact && req.trials) Usage("--exact and --trials are mutually exclusive");
  if (req.trials && *req.trials == 0) Usage("--trials must be at least 1");
  bool exact = req.exact;
  if (!req.exact && !req.trials) {
    exact = detail::FactorialUpTo(inst.part_count(), limits.max_orders).has_value();
  }
  if (exact) return ExactExpectedValues(inst, tie, limits, req.threads);
  return MonteCarloExpectedValues(inst, req.trials.value_or(10000), seed, tie, limits, req.threads);
}

inline void DescribeExpectation(Rendered& r, const ExpectationReport& rep, const Instance& inst) {
  const bool mc = rep.mode == ExpectationReport::Mode::kMonteCarlo;
  r.result["mode"] = mc ? "monte-carlo" : "exact";
  r.result["runs"] = rep.runs;
  if (mc) r.result["seed"] = rep.seed;
  r.result["opt"] = rep.opt;
  r.result["opt_set"] = inst.matroid().Names(rep.opt_set);
  r.result["expected_final"] = rep.expected_final;
  r.result["min_final"] = rep.min_final;
  r.result["max_final"] = rep.max_final;
  r.result["ratio"] = rep.ratio;
  r.result["exact_expected_final"] = rep.exact_expected_final ? Json(rep.exact_expected_final->ToString()) : Json();
  r.result["exact_ratio"] = rep.exact_ratio ? Json(rep.exact_ratio->ToString()) : Json();
}

inline Rendered Ratio(const CommandRequest& req, const Instance& inst, const TieBreakPolicy& tie,
                      std::uint64_t seed) {
  const ExpectationReport rep = Expectation(req, inst, tie, seed);
  const bool mc = rep.mode == ExpectationReport::Mode::kMonteCarlo;
  Rendered r;
  DescribeExpectation(r, rep, inst);
  auto with_fraction = [](double v, const std::optional<Fraction>& f) {
    return FormatFixed6(v) + (f ? " (" + f->ToString() + ")" : "");
  };
  r.human = std::string("mode: ") + (mc ? "monte-carlo" : "exact") + ", " + std::to_string(rep.runs) +
            (mc ? " trials, seed " + std::to_string(rep.seed) : " orders") + "\n";
  r.human += "tie: " + rep.tie + "\n";
  r.human += "opt: " + FormatFixed6(rep.opt) + " at " + Braced(inst.matroid().Names(rep.opt_set)) + "\n";
  r.human += "expected: " + with_fraction(rep.expected_final, rep.exact_expected_final) + "\n";
  r.human += "range: [" + FormatFixed6(rep.min_final) + ", " + FormatFixed6(rep.max_final) + "]\n";
  r.human += "ratio: " + with_fraction(rep.ratio, rep.exact_ratio) + "\n";
  r.csv = CsvRow({"mode", "runs", "seed", "tie", "opt", "expected_final", "min_final", "max_final", "ratio",
                  "exact_ratio"}) +
          CsvRow({mc ? "monte-carlo" : "exact", std::to_string(rep.runs), mc ? std::to_string(rep.seed) : "",
                  rep.tie, FormatNumber(rep.opt), FormatNumber(rep.expected_final),
                  FormatNumber(rep.min_final), FormatNumber(rep.max_final), FormatNumber(rep.ratio),
                  rep.exact_ratio ? rep.exact_ratio->ToString() : ""});
  return r;
}

inline Rendered Curve(const CommandRequest& req, const Instance& inst, const TieBreakPolicy& tie,
                      std::uint64_t seed) {
  const ExpectationReport rep = Expectation(req, inst, tie, seed);
  const bool mc = rep.mode == ExpectationReport::Mode::kMonteCarlo;
  const auto g = GCurve(inst.part_count());
  Rendered r;
  DescribeExpectation(r, rep, inst);
  Json rows = Json::array();
  std::vector<std::string> header = {"i", "expected_value", "lower_bound_g"};
  if (mc) header.push_back("stderr");
  r.csv = CsvRow(header);
  r.human = std::string("i\texpected\tg(i/m)*opt") + (mc ? "\tstderr" : "") + "\n";
  for (std::size_t i = 0; i < rep.step_means.size(); ++i) {
    const double bound = g[i] * rep.opt;
    Json row{{"i", i}, {"expected_value", rep.step_means[i]}, {"lower_bound_g", bound}};
    std::vector<std::string> cells = {std::to_string(i), FormatNumber(rep.step_means[i]), FormatNumber(bound)};
    std::string line = std::to_string(i) + "\t" + FormatFixed6(rep.step_means[i]) + "\t" + FormatFixed6(bound);
    if (mc) {
      row["stderr"] = rep.step_std_errors[i];
      cells.push_back(FormatNumber(rep.step_std_errors[i]));
      line += "\t" + FormatFixed6(rep.step_std_errors[i]);
    }
    rows.push_back(std::move(row));
    r.csv += CsvRow(cells);
    r.human += line + "\n";
  }
  r.result["rows"] = std::move(rows);
  return r;
}

inline Rendered Bound(const CommandRequest& req) {
  BoundSolution s;
  if (req.grid) {
    if (req.p || req.q) Usage("--grid excludes --p and --q");
    try {
      s = BoundGridSearch(*req.grid);
    } catch (const Error& e) {
      Usage(e.what());
    }
  } else {
    if (!req.p || !req.q) Usage("bound needs --p and --q, or --grid N");
    s = BoundFixedPoint({*req.p, *req.q});
  }
  Rendered r;
  r.result["p"] = s.p;
  r.result["q"] = s.q;
  if (req.grid) r.result["grid"] = *req.grid;
  r.result["quadratic"] = Json{{"a", s.quadratic.a}, {"b", s.quadratic.b}, {"c", s.quadratic.c}};
  r.result["c"] = s.c;
  r.result["residual"] = s.c - RatioLowerBound(s.p, s.q, s.c);
  r.human = "p = " + FormatFixed6(s.p) + ", q = " + FormatFixed6(s.q) + "\n";
  r.human += "quadratic: " + FormatFixed6(s.quadratic.a) + " c^2 + (" + FormatFixed6(s.quadratic.b) +
             ") c + (" + FormatFixed6(s.quadratic.c) + ") = 0\n";
  r.human += "c = " + FormatFixed6(s.c) + "\n";
  r.csv = CsvRow({"p", "q", "a", "b", "c0", "c"}) +
          CsvRow({FormatNumber(s.p), FormatNumber(s.q), FormatNumber(s.quadratic.a), FormatNumber(s.quadratic.b),
                  FormatNumber(s.quadratic.c), FormatNumber(s.c)});
  return r;
}

inline Rendered InstanceSummary(const Instance& inst, const std::string& path) {
  Rendered r;
  r.result["name"] = inst.name();
  r.result["parts"] = inst.part_count();
  r.result["elements"] = inst.ground_size();
  r.result["written_to"] = path;
  r.human = "wrote " + inst.name() + " (" + std::to_string(inst.part_count()) + " parts, " +
            std::to_string(inst.ground_size()) + " elements) to " + path + "\n";
  r.csv = CsvRow({"name", "parts", "elements"}) +
          CsvRow({inst.name(), std::to_string(inst.part_count()), std::to_string(inst.ground_size())});
  return r;
}

inline Rendered ReduceSwmCommand(const CommandRequest& req, const Instance& inst, std::uint64_t seed) {
  if (!inst.swm_origin()) {
    throw Error(ErrorKind::kInvariantViolation, "reduce-swm needs an swm-coverage instance file");
  }
  const SwmInstance& swm = *inst.swm_origin();
  const auto& m = inst.matroid();
  const std::vector<std::size_t> order =
      req.order.empty() ? UniformPermutation(swm.item_count(), seed) : ParseOrder(m, req.order);
  const SwmTrace direct = SwmGreedy(swm, PermutationSource::Explicit(order));
  // Bidder-order ties on the reduced side match the direct greedy.
  std::vector<std::string> priority;
  for (const auto& item : swm.items) {
    for (const auto& b : swm.bidders) priority.push_back(item + "@" + b.name);
  }
  const GreedyTrace reduced =
      RandomOrderGreedy(inst, PermutationSource::Explicit(order), TieBreakPolicy::PriorityList(priority));

  Rendered r;
  r.result["items"] = swm.items;
  Json bidders = Json::array();
  for (const auto& b : swm.bidders) bidders.push_back(b.name);
  r.result["bidders"] = std::move(bidders);
  Json parts = Json::array();
  for (const auto& part : m.parts()) parts.push_back(Json{{"name", part.name}, {"elements", part.elements}});
  r.result["parts"] = std::move(parts);
  r.result["order"] = PartNames(m, order);
  Json steps = Json::array();
  r.csv = CsvRow({"item", "bidder", "gain", "welfare"});
  r.human = "reduced: " + std::to_string(m.part_count()) + " parts x " + std::to_string(swm.bidder_count()) +
            " elements\norder: " + Join(PartNames(m, order), ",") + "\n";
  for (const auto& s : direct.steps) {
    steps.push_back(Json{{"item", swm.items[s.item]},
                         {"bidder", swm.bidders[s.bidder].name},
                         {"gain", s.gain},
                         {"welfare", s.welfare}});
    r.csv += CsvRow({swm.items[s.item], swm.bidders[s.bidder].name, FormatNumber(s.gain), FormatNumber(s.welfare)});
    r.human += swm.items[s.item] + " -> " + swm.bidders[s.bidder].name + " (+" + FormatFixed6(s.gain) + ")\n";
  }
  r.result["steps"] = std::move(steps);
  r.result["swm_welfare"] = direct.welfare;
  r.result["reduced_value"] = reduced.final_value;
  r.result["equal"] = direct.welfare == reduced.final_value;
  r.human += "swm greedy welfare: " + FormatFixed6(direct.welfare) + "\nreduced greedy value: " +
             FormatFixed6(reduced.final_value) + "\n";
  return r;
}

inline Rendered Verify(const CommandRequest& req, const Instance& inst, std::uint64_t seed) {
  if (req.exhaustive && req.trials) Usage("--exhaustive and --trials are mutually exclusive");
  const bool exhaustive = req.exhaustive || (!req.trials && inst.ground_size() <= req.cap);
  PropertyReport rep;
  if (exhaustive) {
    rep = VerifyProperties(*inst.oracle(), ExhaustiveMode{req.cap});
  } else {
    SampledMode mode;
    mode.trials = req.trials.value_or(mode.trials);
    mode.seed = seed;
    rep = VerifyProperties(*inst.oracle(), mode);
  }
  const auto& m = inst.matroid();
  Rendered r;
  r.result["mode"] = exhaustive ? "exhaustive" : "sampled";
  if (!exhaustive) r.result["seed"] = seed;
  r.result["checked"] = rep.checked;
  r.result["queries"] = rep.queries;
  r.result["cases"] = rep.cases;
  r.result["notes"] = rep.notes;
  r.result["ok"] = rep.ok();
  Json violations = Json::array();
  r.csv = CsvRow({"property", "witnesses", "values"});
  for (const auto& v : rep.violations) {
    Json w = Json::array();
    std::vector<std::string> wt;
    for (const auto& s : v.witnesses) {
      w.push_back(m.Names(s));
      wt.push_back(Braced(m.Names(s)));
    }
    std::vector<std::string> vals;
    for (double x : v.values) vals.push_back(FormatNumber(x));
    violations.push_back(Json{{"property", v.property}, {"witnesses", std::move(w)}, {"values", NumberArray(v.values)}});
    r.csv += CsvRow({v.property, Join(wt, ";"), Join(vals, ";")});
  }
  r.result["violations"] = std::move(violations);
  r.human = std::string("mode: ") + (exhaustive ? "exhaustive" : "sampled") + "\nchecked: " +
            Join(rep.checked, ", ") + "\nqueries: " + std::to_string(rep.queries) + "\n";
  for (const auto& note : rep.notes) r.human += "note: " + note + "\n";
  r.human += "violations: " + std::to_string(rep.violations.size()) + "\n";
  for (const auto& v : rep.violations) {
    std::vector<std::string> wt;
    for (const auto& s : v.witnesses) wt.push_back(Braced(m.Names(s)));
    std::vector<std::string> vals;
    for (double x : v.values) vals.push_back(FormatFixed6(x));
    r.human += "  " + v.property + " " + Join(wt, " ") + " values " + Join(vals, " ") + "\n";
  }
  return r;
}

inline Rendered CheckPotential(const CommandRequest& req, const Instance& inst, const TieBreakPolicy& tie,
                               std::uint64_t seed) {
  const auto& m = inst.matroid();
  const auto limits = EnumerationLimits::FromEnvironment();
  const ElementSet s = req.set.empty() ? m.EmptySet() : ParseSet(inst, req.set, "--set");
  const ElementSet t = req.base.empty() ? BruteForceOpt(inst, limits).base : ParseSet(inst, req.base, "--base");
  const std::size_t parts = inst.part_count();
  const auto orders = detail::FactorialUpTo(parts, limits.max_orders);
  const bool all = orders.has_value() && !req.trials;
  const std::uint64_t runs = all ? *orders : req.trials.value_or(1000);

  Rendered r;
  r.result["mode"] = all ? "all-orders" : "sampled";
  if (!all) r.result["seed"] = seed;
  r.result["set"] = m.Names(s);
  r.result["base"] = m.Names(t);
  Json rows = Json::array();
  r.csv = CsvRow({"order", "final_value", "monotone", "final_bound", "potentials"});
  std::uint64_t passed = 0;
  std::vector<std::size_t> order(parts);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::uint64_t k = 0; k < runs; ++k) {
    if (!all) order = UniformPermutation(parts, seed, k);
    TieBreaker ties(tie, m, k);
    const GreedyTrace trace = RunGreedy(inst, order, ties);
    const PotentialCheck check = CheckPotentialMonotone(inst, trace, s, t);
    passed += check.ok() ? 1 : 0;
    const auto names = PartNames(m, order);
    rows.push_back(Json{{"order", names},
                        {"final_value", trace.final_value},
                        {"potentials", NumberArray(check.potentials)},
                        {"monotone", check.monotone},
                        {"final_bound", check.final_bound}});
    std::vector<std::string> pots;
    for (double v : check.potentials) pots.push_back(FormatNumber(v));
    r.csv += CsvRow({Join(names, " "), FormatNumber(trace.final_value), check.monotone ? "true" : "false",
                     check.final_bound ? "true" : "false", Join(pots, ";")});
    if (!check.ok()) {
      r.human += "FAIL " + Join(names, ",") +
                 (check.first_violation ? " potential drops at step " + std::to_string(*check.first_violation) : "") +
                 (check.final_bound ? "" : " final bound fails") + "\n";
    }
    if (all) std::next_permutation(order.begin(), order.end());
  }
  r.result["rows"] = std::move(rows);
  r.result["passed"] = passed;
  r.result["runs"] = runs;
  r.human = std::string(all ? "all " : "sampled ") + std::to_string(runs) + " orders, S = " + Braced(m.Names(s)) +
            ", T = " + Braced(m.Names(t)) + "\n" + r.human + "passed: " + std::to_string(passed) + "/" +
            std::to_string(runs) + "\n";
  return r;
}

inline std::string Finish(const CommandRequest& req, OutputFormat format, Rendered rendered,
                          const std::optional<std::string>& instance_name, const std::optional<std::string>& tie,
                          const std::optional<std::uint64_t>& seed) {
  switch (format) {
    case OutputFormat::kHuman: return rendered.human;
    case OutputFormat::kCsv: return rendered.csv;
    case OutputFormat::kJson: {
      Json doc;
      doc["command"] = req.subcommand;
      doc["version"] = SGL_VERSION;
      doc["instance"] = instance_name ? Json(*instance_name) : Json();
      doc["tie"] = tie ? Json(*tie) : Json();
      doc["seed"] = seed ? Json(*seed) : Json();
      doc["result"] = std::move(rendered.result);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

inline std::string Execute(const CommandRequest& req) {
  const OutputFormat format = ParseFormat(req.format);
  const std::uint64_t seed = ResolveSeed(req.seed);
  const std::string& cmd = req.subcommand;

  if (cmd == "bound") return Finish(req, format, Bound(req), std::nullopt, std::nullopt, std::nullopt);

  if (cmd == "paper") {
    const Instance inst = BuiltinInstance(req.paper);
    if (req.out.empty()) return SerializeInstance(inst);
    WriteInstance(inst, req.out);
    return Finish(req, format, InstanceSummary(inst, req.out), inst.name(), std::nullopt, std::nullopt);
  }

  const Instance inst = LoadInstance(req);
  const TieBreakPolicy tie = LoadTie(req);

  if (cmd == "extend" || cmd == "compose") {
    const Instance made = cmd == "extend" ? ExtendWithDummies(inst, req.dummies) : ComposeCopies(inst, req.copies);
    if (req.out.empty()) return SerializeInstance(made);
    WriteInstance(made, req.out);
    return Finish(req, format, InstanceSummary(made, req.out), made.name(), std::nullopt, std::nullopt);
  }
  if (cmd == "solve") {
    const std::optional<std::uint64_t> used_seed = req.order.empty() ? std::optional(seed) : std::nullopt;
    return Finish(req, format, Solve(req, inst, tie, seed), inst.name(), tie.ToString(), used_seed);
  }
  if (cmd == "opt") return Finish(req, format, Opt(inst), inst.name(), std::nullopt, std::nullopt);
  if (cmd == "ratio" || cmd == "curve") {
    Rendered r = cmd == "ratio" ? Ratio(req, inst, tie, seed) : Curve(req, inst, tie, seed);
    const bool mc = r.result["mode"] == "monte-carlo";
    return Finish(req, format, std::move(r), inst.name(), tie.ToString(),
                  mc ? std::optional(seed) : std::nullopt);
  }
  if (cmd == "reduce-swm") {
    const std::optional<std::uint64_t> used_seed = req.order.empty() ? std::optional(seed) : std::nullopt;
    return Finish(req, format, ReduceSwmCommand(req, inst, seed), inst.name(), "bidder-order", used_seed);
  }
  if (cmd == "verify") {
    Rendered r = Verify(req, inst, seed);
    const bool sampled = r.result["mode"] == "sampled";
    return Finish(req, format, std::move(r), inst.name(), std::nullopt,
                  sampled ? std::optional(seed) : std::nullopt);
  }
  if (cmd == "check-potential") {
    Rendered r = CheckPotential(req, inst, tie, seed);
    const bool sampled = r.result["mode"] == "sampled";
    return Finish(req, format, std::move(r), inst.name(), tie.ToString(),
                  sampled ? std::optional(seed) : std::nullopt);
  }
  Usage("unknown subcommand '" + cmd + "'");
}

}  // namespace cli

// Parses `args` (without the program name) and runs the command.
inline CommandOutput RunCommand(const std::vector<std::string>& args) {
  CommandRequest req;
  CLI::App app{"Random-order greedy over partition matroids", "sgl"};
  app.footer(cli::kCsvHelp);
  app.require_subcommand(1);

  auto instance_opts = [&](CLI::App* sub) {
    sub->add_option("--paper", req.paper, "Builtin instance: 7-12 or 19-33");
    sub->add_option("--instance", req.instance_path, "Instance file (JSON)");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "human, csv or json")->capture_default_str();
    sub->add_option("--out", req.out, "Output path");
  };
  auto tie_opt = [&](CLI::App* sub) {
    sub->add_option("--tie", req.tie, "first-name | last-index | priority:LIST | random[:SEED]")
        ->capture_default_str();
  };
  auto seed_opt = [&](CLI::App* sub) {
    sub->add_option("--seed", req.seed, "Seed (integer or 'entropy')")->capture_default_str();
  };
  auto trials_opt = [&](CLI::App* sub) {
    sub->add_option("--trials", req.trials, "Number of random trials");
  };

  auto* solve = app.add_subcommand("solve", "One greedy run");
  instance_opts(solve);
  common(solve);
  tie_opt(solve);
  seed_opt(solve);
  solve->add_option("--order", req.order, "Comma-separated part names (default: uniform from --seed)");
  solve->add_flag("--trace", req.trace, "Print one tab-separated line per step");

  auto* opt = app.add_subcommand("opt", "Brute-force optimum over all bases");
  instance_opts(opt);
  common(opt);

  for (const char* name : {"ratio", "curve"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "ratio"
                                             ? "Expected greedy value over random orders vs the optimum"
                                             : "Per-step expected values against g(i/m) * opt");
    instance_opts(sub);
    common(sub);
    tie_opt(sub);
    seed_opt(sub);
    trials_opt(sub);
    sub->add_flag("--exact", req.exact, "Enumerate all m! orders");
    sub->add_option("--threads", req.threads, "Worker threads (0 = hardware)");
  }

  auto* bound = app.add_subcommand("bound", "Ratio bound fixed point for (p, q), or the best over a grid");
  common(bound);
  bound->add_option("--p", req.p, "p in (0, 1]");
  bound->add_option("--q", req.q, "q in (0, 1)");
  bound->add_option("--grid", req.grid, "Grid resolution N >= 2");

  auto* paper = app.add_subcommand("paper", "Export a builtin instance");
  paper->add_option("name", req.paper, "7-12 or 19-33")->required();
  common(paper);

  auto* reduce = app.add_subcommand("reduce-swm", "Reduce an SWM file and compare both greedy runs");
  instance_opts(reduce);
  common(reduce);
  seed_opt(reduce);
  reduce->add_option("--order", req.order, "Comma-separated item names");

  auto* extend = app.add_subcommand("extend", "Pad with dummy singleton parts");
  instance_opts(extend);
  common(extend);
  extend->add_option("--dummies", req.dummies, "Number of dummy parts")->required();

  auto* compose = app.add_subcommand("compose", "Disjoint union of copies");
  instance_opts(compose);
  common(compose);
  compose->add_option("--copies", req.copies, "Number of copies")->required();

  auto* verify = app.add_subcommand("verify", "Check oracle properties");
  instance_opts(verify);
  common(verify);
  seed_opt(verify);
  trials_opt(verify);
  verify->add_flag("--exhaustive", req.exhaustive, "Check every subset");
  verify->add_option("--cap", req.cap, "Largest ground set for exhaustive mode")->capture_default_str();

  auto* potential = app.add_subcommand("check-potential", "Potential monotonicity along greedy runs");
  instance_opts(potential);
  common(potential);
  tie_opt(potential);
  seed_opt(potential);
  trials_opt(potential);
  potential->add_option("--set", req.set, "S as comma-separated elements (default empty)");
  potential->add_option("--base", req.base, "Base T as comma-separated elements (default optimum)");

  CommandOutput result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: UsageError: ") + e.what() + "\n";
    return result;
  }
  for (auto* sub : app.get_subcommands()) req.subcommand = sub->get_name();

  try {
    std::string text = cli::Execute(req);
    const bool writes_instance =
        req.subcommand == "paper" || req.subcommand == "extend" || req.subcommand == "compose";
    if (!req.out.empty() && !writes_instance) {
      std::ofstream out(req.out, std::ios::binary | std::ios::trunc);
      if (!out || !(out << text)) throw Error(ErrorKind::kIoError, "cannot write '" + req.out + "'");
    } else {
      result.out = std::move(text);
    }
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::kUsageError ? 2 : 1;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace sgl

#endif  // SGL_CLI_HPP_
