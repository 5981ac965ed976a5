// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "groves/dominance.hpp"
#include "groves/errors.hpp"
#include "groves/fixtures.hpp"
#include "groves/mechanism.hpp"
#include "groves/numerics.hpp"
#include "groves/oel.hpp"
#include "groves/spec_io.hpp"
#include "groves/transforms.hpp"

namespace groves::cli {

namespace {

using nlohmann::json;

struct Output {
  bool json = false;
  std::string json_out;
};

std::string tuple(std::span<const Rational> v) { return "(" + join(v) + ")"; }

json rational_list(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split(s)) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw ContractViolation(flag + ": " + e.what());
    }
  }
  return out;
}

// 1-based agent numbers to 0-based indices.
std::vector<std::size_t> parse_agents(const std::string& s, const std::string& flag) {
  std::vector<std::size_t> out;
  for (const auto& item : split(s)) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0) throw ContractViolation(flag + ": '" + item + "' is not an agent number");
    out.push_back(v - 1);
  }
  return out;
}

std::string_view redistribution_kind(const GrovesMechanism& m) {
  switch (m.redistribution().index()) {
    case 0:
      return "tabulated";
    case 1:
      return "anonymous_tabulated";
    default:
      return "linear_anonymous";
  }
}

std::string describe(const GrovesMechanism& m) {
  return m.domain().describe() + ", n=" + std::to_string(m.agents()) + ", grid {" + join(m.grid().values()) +
         "}, " + std::string(redistribution_kind(m));
}

json setting_json(const GrovesMechanism& m) {
  return json{{"domain", std::string(m.domain().kind())},
              {"n", m.agents()},
              {"grid", rational_list(m.grid().values())},
              {"redistribution", std::string(redistribution_kind(m))}};
}

json witness_json(const Witness& w) {
  json out{{"profile", rational_list(w.profile)}, {"value", w.value.to_string()}};
  if (w.agent) out["agent"] = *w.agent + 1;
  if (w.deviation) out["deviation"] = w.deviation->to_string();
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ContractViolation("cannot write '" + path + "'");
  f << content;
}

void emit(const Output& o, const std::string& text, const json& report, std::ostream& out) {
  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
  if (!o.json_out.empty()) write_file(o.json_out, report.dump(2) + "\n");
}

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json, "Print the machine-readable report instead of text");
  cmd->add_option("--json-out", o.json_out, "Also write the machine-readable report to this file");
}

// verify

const std::vector<std::string> kChecks = {"non_deficit", "pay_only", "strategy_proof", "undominated"};

std::string check_witness_text(const std::string& check, const Witness& w) {
  std::ostringstream s;
  if (check == "non_deficit") {
    s << "profile " << tuple(w.profile) << " has total payment " << w.value;
  } else if (check == "pay_only") {
    s << "profile " << tuple(w.profile) << ": agent " << *w.agent + 1 << " pays " << w.value;
  } else if (check == "strategy_proof") {
    s << "profile " << tuple(w.profile) << ": agent " << *w.agent + 1 << " gains " << w.value
      << " by reporting " << *w.deviation;
  } else {
    s << "agent " << *w.agent + 1 << ", others " << tuple(w.profile) << ": slack " << w.value;
  }
  return s.str();
}

int cmd_verify(const std::string& path, const std::string& checks, const Output& o, std::ostream& out) {
  const GrovesMechanism mech = load_mechanism_file(path);
  std::vector<std::string> names = checks.empty() ? kChecks : split(checks);
  for (const auto& n : names) {
    if (std::find(kChecks.begin(), kChecks.end(), n) == kChecks.end()) {
      throw ContractViolation("--checks: unknown check '" + n + "'");
    }
  }
  std::ostringstream text;
  text << "mechanism: " << describe(mech) << "\n";
  json report{{"command", "verify"}, {"spec", path}, {"setting", setting_json(mech)}, {"checks", json::array()}};
  bool all = true;
  for (const auto& name : names) {
    Verdict v;
    if (name == "non_deficit") {
      v = is_non_deficit(mech);
    } else if (name == "pay_only") {
      v = is_pay_only(mech);
    } else if (name == "strategy_proof") {
      v = is_strategy_proof(mech);
    } else {
      v = is_individually_undominated(mech);
    }
    all = all && v.holds;
    text << std::left << std::setw(16) << name << (v.holds ? "pass" : "FAIL");
    json entry{{"name", name}, {"holds", v.holds}};
    if (v.witness) {
      text << "  " << check_witness_text(name, *v.witness);
      entry["witness"] = witness_json(*v.witness);
    }
    text << "\n";
    report["checks"].push_back(std::move(entry));
  }
  const int code = all ? kExitPass : kExitFailure;
  report["exit_code"] = code;
  emit(o, text.str(), report, out);
  return code;
}

// audit

std::string verdict_sentence(Comparison c) {
  switch (c) {
    case Comparison::dominates:
      return "A dominates B";
    case Comparison::dominated_by:
      return "B dominates A";
    case Comparison::equal:
      return "equal";
    case Comparison::incomparable:
      return "incomparable";
  }
  return "unknown";
}

json dominance_witness_json(const DominanceWitness& w) {
  json out{{"point", rational_list(w.point)}, {"a", w.first.to_string()}, {"b", w.second.to_string()}};
  if (w.agent) out["agent"] = *w.agent + 1;
  return out;
}

std::string dominance_witness_text(const DominanceWitness& w) {
  std::ostringstream s;
  if (w.agent) {
    s << "agent " << *w.agent + 1 << ", others " << tuple(w.point);
  } else {
    s << "profile " << tuple(w.point);
  }
  s << ": A=" << w.first << " B=" << w.second;
  return s.str();
}

int cmd_audit(const std::string& a_path, const std::string& b_path, const std::string& relation,
              const std::string& probe, std::size_t witness_count, const Output& o, std::ostream& out) {
  const GrovesMechanism a = load_mechanism_file(a_path);
  const GrovesMechanism b = load_mechanism_file(b_path);
  if (!(a.setting() == b.setting())) {
    throw ContractViolation("A and B are defined over different settings: " + describe(a) + " vs " + describe(b));
  }
  std::vector<Relation> relations;
  if (relation == "individual" || relation == "both") relations.push_back(Relation::individual);
  if (relation == "collective" || relation == "both") relations.push_back(Relation::collective);

  std::ostringstream text;
  text << "A: " << a_path << "\nB: " << b_path << "\nsetting: " << describe(a) << "\n";
  json report{{"command", "audit"}, {"a", a_path}, {"b", b_path}, {"setting", setting_json(a)},
              {"verdicts", json::array()}};
  for (const Relation rel : relations) {
    const DominanceVerdict v = rel == Relation::individual ? compare_individual(a, b) : compare_collective(a, b);
    const char* unit = rel == Relation::individual ? "keys" : "profiles";
    text << to_string(rel) << ": " << verdict_sentence(v.result) << " (A > B at " << v.strict_count << " " << unit
         << ", A < B at " << v.violation_count << ")\n";
    for (std::size_t j = 0; j < std::min(witness_count, v.strict_witnesses.size()); ++j) {
      text << "  A > B  " << dominance_witness_text(v.strict_witnesses[j]) << "\n";
    }
    for (std::size_t j = 0; j < std::min(witness_count, v.violation_witnesses.size()); ++j) {
      text << "  A < B  " << dominance_witness_text(v.violation_witnesses[j]) << "\n";
    }
    json entry{{"relation", std::string(to_string(rel))},
               {"result", std::string(to_string(v.result))},
               {"summary", verdict_sentence(v.result)},
               {"strict_count", v.strict_count},
               {"violation_count", v.violation_count},
               {"strict_witnesses", json::array()},
               {"violation_witnesses", json::array()}};
    for (const auto& w : v.strict_witnesses) entry["strict_witnesses"].push_back(dominance_witness_json(w));
    for (const auto& w : v.violation_witnesses) entry["violation_witnesses"].push_back(dominance_witness_json(w));
    report["verdicts"].push_back(std::move(entry));
  }
  if (!probe.empty()) {
    const auto point = parse_rationals(probe, "--probe");
    json p{{"point", rational_list(point)}};
    if (point.size() == a.agents()) {
      const std::size_t code = a.setting().profile_code(point);
      const Rational sa = a.redistribution_total(code);
      const Rational sb = b.redistribution_total(code);
      text << "probe profile " << tuple(point) << ": sum A=" << sa << " sum B=" << sb << "\n";
      p["sum_a"] = sa.to_string();
      p["sum_b"] = sb.to_string();
    } else if (point.size() + 1 == a.agents()) {
      const std::size_t code = a.setting().others_code(point);
      p["agents"] = json::array();
      for (std::size_t i = 0; i < a.agents(); ++i) {
        text << "probe agent " << i + 1 << ", others " << tuple(point) << ": A=" << a.r(i, code)
             << " B=" << b.r(i, code) << "\n";
        p["agents"].push_back(json{{"agent", i + 1}, {"a", a.r(i, code).to_string()}, {"b", b.r(i, code).to_string()}});
      }
    } else {
      throw ContractViolation("--probe needs n or n-1 values");
    }
    report["probe"] = std::move(p);
  }
  report["exit_code"] = kExitPass;
  emit(o, text.str(), report, out);
  return kExitPass;
}

// improve

struct ImproveArgs {
  std::string spec;
  std::string technique = "bcgc";
  std::size_t agent = 0;
  std::string order;
  std::size_t max_steps = 50;
  std::string residual_bound = "0";
  std::string out_path;
  std::string trace_path;
};

int cmd_improve(const ImproveArgs& args, const Output& o, std::ostream& out) {
  const GrovesMechanism mech = load_mechanism_file(args.spec);
  std::ostringstream text;
  json report{{"command", "improve"}, {"spec", args.spec}, {"technique", args.technique}, {"out", args.out_path}};
  if (!args.trace_path.empty() && args.technique != "iterate") {
    throw ContractViolation("--trace is only produced by the iterate technique");
  }
  std::optional<GrovesMechanism> result;
  if (args.technique == "bcgc") {
    if (!is_non_deficit(mech)) {
      const Verdict v = is_non_deficit(mech);
      throw DeficitError(v.witness->profile, v.witness->value);
    }
    result = bcgc(mech);
  } else if (args.technique == "bcgc-j") {
    if (args.agent == 0 || args.agent > mech.agents()) {
      throw ContractViolation("--agent must be between 1 and " + std::to_string(mech.agents()));
    }
    const Verdict v = is_non_deficit(mech);
    if (!v) throw DeficitError(v.witness->profile, v.witness->value);
    result = bcgc_j(mech, args.agent - 1);
    report["agent"] = args.agent;
  } else if (args.technique == "priority") {
    const PriorityOrder order = args.order.empty() ? PriorityOrder::identity(mech.agents())
                                                   : PriorityOrder::from_sequence(parse_agents(args.order, "--order"));
    result = priority_improve(mech, order);
    json seq = json::array();
    for (std::size_t a : order.sequence()) seq.push_back(a + 1);
    report["order"] = std::move(seq);
  } else if (args.technique == "iterate") {
    Rational bound;
    try {
      bound = Rational::parse(args.residual_bound);
    } catch (const std::invalid_argument& e) {
      throw ContractViolation(std::string("--residual-bound: ") + e.what());
    }
    IterationResult it = iterate_until(mech, args.max_steps, bound);
    const Rational n(static_cast<long>(mech.agents()));
    const Rational factor = (n - 1) / n;
    std::ostringstream csv;
    csv << "step,residual,contraction_bound,contracts\n";
    json steps = json::array();
    for (std::size_t j = 0; j < it.trace.steps.size(); ++j) {
      const auto& st = it.trace.steps[j];
      json row{{"step", st.step}, {"residual", st.residual.to_string()}};
      csv << st.step << "," << st.residual << ",";
      if (j > 0) {
        const Rational bnd = factor * it.trace.steps[j - 1].residual;
        const bool ok = st.residual <= bnd;
        csv << bnd << "," << (ok ? "true" : "false");
        row["contraction_bound"] = bnd.to_string();
        row["contracts"] = ok;
      } else {
        csv << ",";
      }
      csv << "\n";
      steps.push_back(std::move(row));
    }
    if (!args.trace_path.empty()) write_file(args.trace_path, csv.str());
    report["steps"] = std::move(steps);
    report["steps_taken"] = it.trace.steps_taken();
    report["stop_reason"] = std::string(to_string(it.trace.reason));
    text << "iterate: " << it.trace.steps_taken() << " steps, stopped by " << to_string(it.trace.reason)
         << ", final residual " << it.trace.steps.back().residual << "\n";
    result = std::move(it.mechanism);
  } else {
    throw ContractViolation("--technique must be one of bcgc, bcgc-j, priority, iterate");
  }
  save_mechanism_file(*result, args.out_path);
  text << args.technique << ": wrote " << args.out_path << " (" << redistribution_kind(*result) << ")\n";
  if (!args.trace_path.empty()) text << "trace: " << args.trace_path << "\n";
  report["result"] = setting_json(*result);
  report["exit_code"] = kExitPass;
  emit(o, text.str(), report, out);
  return kExitPass;
}

// oel

struct OelArgs {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::string lower = "0";
  std::string upper;
  std::string values;
  std::string out_path;
  bool check = false;
};

int cmd_oel(const OelArgs& args, const Output& o, std::ostream& out) {
  OELSpec spec;
  spec.agents = args.n;
  spec.units = args.m;
  spec.index = args.k;
  try {
    spec.lower = Rational::parse(args.lower);
    spec.upper = Rational::parse(args.upper);
  } catch (const std::invalid_argument& e) {
    throw ContractViolation(std::string("--L/--U: ") + e.what());
  }
  const LinearRedistribution c = oel_coefficients(spec);
  std::ostringstream text;
  text << "OEL n=" << spec.agents << " m=" << spec.units << " k=" << spec.index << " L=" << spec.lower
       << " U=" << spec.upper << "\n";
  text << "c_0 = " << c.constant << "\n";
  for (std::size_t j = 0; j < c.coefficients.size(); ++j) text << "c_" << j + 1 << " = " << c.coefficients[j] << "\n";
  json report{{"command", "oel"},
              {"n", spec.agents},
              {"m", spec.units},
              {"k", spec.index},
              {"L", spec.lower.to_string()},
              {"U", spec.upper.to_string()},
              {"constant", c.constant.to_string()},
              {"coefficients", rational_list(c.coefficients)}};
  int code = kExitPass;
  if (!args.out_path.empty() || args.check) {
    if (args.values.empty()) throw ContractViolation("--values is required with --out or --check");
    const TypeGrid grid(spec.agents, parse_rationals(args.values, "--values"));
    const GrovesMechanism mech = oel_mechanism(spec, grid);
    if (!args.out_path.empty()) {
      save_mechanism_file(mech, args.out_path);
      text << "wrote " << args.out_path << "\n";
      report["out"] = args.out_path;
    }
    if (args.check) {
      const Verdict nd = is_non_deficit(mech);
      const Verdict und = is_individually_undominated(mech);
      const BudgetScenarioReport bb = oel_budget_scenarios(spec, grid);
      text << std::left << std::setw(16) << "non_deficit" << (nd.holds ? "pass" : "FAIL") << "\n";
      text << std::left << std::setw(16) << "undominated" << (und.holds ? "pass" : "FAIL") << "\n";
      text << std::left << std::setw(16) << "budget_balance" << (bb.holds ? "pass" : "FAIL") << "  ("
           << bb.profiles_checked << " scenario profiles)\n";
      json checks = json::array();
      checks.push_back(json{{"name", "non_deficit"}, {"holds", nd.holds}});
      checks.push_back(json{{"name", "undominated"}, {"holds", und.holds}});
      checks.push_back(json{{"name", "budget_balance"}, {"holds", bb.holds}, {"profiles_checked", bb.profiles_checked}});
      if (nd.witness) checks[0]["witness"] = witness_json(*nd.witness);
      if (und.witness) checks[1]["witness"] = witness_json(*und.witness);
      if (bb.witness) checks[2]["witness"] = witness_json(*bb.witness);
      report["checks"] = std::move(checks);
      if (!nd.holds || !und.holds || !bb.holds) code = kExitFailure;
    }
  }
  report["exit_code"] = code;
  emit(o, text.str(), report, out);
  return code;
}

// surplus

int cmd_surplus(const std::string& path, const std::string& out_path, std::ostream& out) {
  const GrovesMechanism mech = load_mechanism_file(path);
  const auto table = surplus_table(mech);
  std::ostringstream csv;
  csv << "agent";
  for (std::size_t j = 1; j < mech.agents(); ++j) csv << ",other_" << j;
  csv << ",surplus\n";
  for (std::size_t a = 0; a < mech.agents(); ++a) {
    for (std::size_t o = 0; o < mech.keys().others_count(); ++o) {
      csv << a + 1;
      for (const auto& x : mech.setting().others_values(o)) csv << "," << x;
      csv << "," << table[a][o] << "\n";
    }
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_file(out_path, csv.str());
  }
  return kExitPass;
}

// search

int cmd_search(const std::string& path, std::size_t budget, std::uint64_t seed, const std::string& out_path,
               const Output& o, std::ostream& out) {
  const GrovesMechanism mech = load_mechanism_file(path);
  SearchOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  const SearchReport r = search_collective_dominator(mech, opts);
  std::ostringstream text;
  text << "candidates " << r.candidates << ", improving directions " << r.improving_directions << ", dominators "
       << r.dominators << "\n";
  json report{{"command", "search"},
              {"spec", path},
              {"budget", budget},
              {"seed", seed},
              {"candidates", r.candidates},
              {"improving_directions", r.improving_directions},
              {"dominators", r.dominators}};
  if (r.first_dominator && !out_path.empty()) {
    save_mechanism_file(*r.first_dominator, out_path);
    text << "wrote first dominator to " << out_path << "\n";
    report["out"] = out_path;
  }
  const int code = r.dominators == 0 ? kExitPass : kExitFailure;
  report["exit_code"] = code;
  emit(o, text.str(), report, out);
  return code;
}

// fixture

int cmd_fixture_list(std::ostream& out) {
  for (const auto& name : fixture_names()) out << name << "\n";
  return kExitPass;
}

int cmd_fixture_export(const std::string& name, const std::string& dir, std::ostream& out) {
  const Fixture f = fixture(name);
  std::filesystem::create_directories(dir);
  for (std::size_t j = 0; j < f.mechanisms.size(); ++j) {
    const auto path = (std::filesystem::path(dir) / (f.name + "_" + f.mechanism_names[j] + ".json")).string();
    save_mechanism_file(f.mechanisms[j], path);
    out << "wrote " << path << "\n";
  }
  for (const auto& fact : f.facts) out << "fact: " << fact.statement << " [" << fact.basis << "]\n";
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Groves redistribution mechanisms", "groves"};
  app.require_subcommand(1);

  Output verify_out;
  std::string verify_spec;
  std::string verify_checks;
  auto* verify = app.add_subcommand("verify", "Check non-deficit, pay-only, strategy-proofness and undominance");
  verify->add_option("spec", verify_spec, "Mechanism spec file")->required();
  verify->add_option("--checks", verify_checks, "Comma-separated subset of non_deficit,pay_only,strategy_proof,undominated");
  add_output_flags(verify, verify_out);

  Output audit_out;
  std::string audit_a;
  std::string audit_b;
  std::string audit_relation = "both";
  std::string audit_probe;
  std::size_t audit_witnesses = 5;
  auto* audit = app.add_subcommand("audit", "Compare two mechanisms under the dominance orders");
  audit->add_option("a", audit_a, "Spec file A")->required();
  audit->add_option("b", audit_b, "Spec file B")->required();
  audit->add_option("--relation", audit_relation, "individual, collective or both")
      ->check(CLI::IsMember({"individual", "collective", "both"}));
  audit->add_option("--probe", audit_probe, "Print both mechanisms at this profile (n values) or key (n-1 values)");
  audit->add_option("--witnesses", audit_witnesses, "Witnesses shown per direction in the text report");
  add_output_flags(audit, audit_out);

  Output improve_out;
  ImproveArgs improve_args;
  auto* improve = app.add_subcommand("improve", "Apply an improvement technique and write the result");
  improve->add_option("spec", improve_args.spec, "Mechanism spec file")->required();
  improve->add_option("--technique", improve_args.technique, "bcgc, bcgc-j, priority or iterate")
      ->check(CLI::IsMember({"bcgc", "bcgc-j", "priority", "iterate"}));
  improve->add_option("--agent", improve_args.agent, "Agent (1-based) for bcgc-j");
  improve->add_option("--order", improve_args.order, "Agents from highest to lowest priority, e.g. 2,1,3");
  improve->add_option("--max-steps", improve_args.max_steps, "Step cap for iterate");
  improve->add_option("--residual-bound", improve_args.residual_bound, "Stop iterate once the residual is at most this");
  improve->add_option("--out", improve_args.out_path, "Output spec file")->required();
  improve->add_option("--trace", improve_args.trace_path, "Residual trace CSV (iterate only)");
  add_output_flags(improve, improve_out);

  Output oel_out;
  OelArgs oel_args;
  auto* oel = app.add_subcommand("oel", "Generate OEL coefficients and optionally the mechanism");
  oel->add_option("--n", oel_args.n, "Agents")->required();
  oel->add_option("--m", oel_args.m, "Units")->required();
  oel->add_option("--k", oel_args.k, "Index, with k - m odd")->required();
  oel->add_option("--L", oel_args.lower, "Lower type bound");
  oel->add_option("--U", oel_args.upper, "Upper type bound")->required();
  oel->add_option("--values", oel_args.values, "Grid values, comma-separated, from L to U");
  oel->add_option("--out", oel_args.out_path, "Write the mechanism spec file");
  oel->add_flag("--check", oel_args.check, "Check non-deficit, undominance and budget balance on the grid");
  add_output_flags(oel, oel_out);

  std::string surplus_spec;
  std::string surplus_out_path;
  auto* surplus = app.add_subcommand("surplus", "Dump the surplus guarantee table as CSV");
  surplus->add_option("spec", surplus_spec, "Mechanism spec file")->required();
  surplus->add_option("--out", surplus_out_path, "CSV file (stdout if omitted)");

  Output search_out;
  std::string search_spec;
  std::size_t search_budget = 10000;
  std::uint64_t search_seed = 1;
  std::string search_out_path;
  auto* search = app.add_subcommand("search", "Randomized search for a collectively dominating mechanism");
  search->add_option("spec", search_spec, "Anonymous non-deficit base mechanism")->required();
  search->add_option("--budget", search_budget, "Number of candidates");
  search->add_option("--seed", search_seed, "Random seed");
  search->add_option("--out", search_out_path, "Write the first dominator found");
  add_output_flags(search, search_out);

  std::string fixture_name;
  std::string fixture_dir = ".";
  auto* fixture_cmd = app.add_subcommand("fixture", "List or export reference instances");
  fixture_cmd->require_subcommand(1);
  auto* fixture_list = fixture_cmd->add_subcommand("list", "List fixture names");
  auto* fixture_export = fixture_cmd->add_subcommand("export", "Write a fixture's mechanisms as spec files");
  fixture_export->add_option("name", fixture_name, "Fixture name")->required();
  fixture_export->add_option("--out-dir", fixture_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_spec, verify_checks, verify_out, out);
    if (audit->parsed()) {
      return cmd_audit(audit_a, audit_b, audit_relation, audit_probe, audit_witnesses, audit_out, out);
    }
    if (improve->parsed()) return cmd_improve(improve_args, improve_out, out);
    if (oel->parsed()) return cmd_oel(oel_args, oel_out, out);
    if (surplus->parsed()) return cmd_surplus(surplus_spec, surplus_out_path, out);
    if (search->parsed()) return cmd_search(search_spec, search_budget, search_seed, search_out_path, search_out, out);
    if (fixture_list->parsed()) return cmd_fixture_list(out);
    if (fixture_export->parsed()) return cmd_fixture_export(fixture_name, fixture_dir, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DeficitError& e) {
    err << "error: input mechanism runs a deficit at profile " << tuple(e.witness()) << " (total payment "
        << e.total_payment() << ")\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace groves::cli
