// Copyright 2026 The dlorder Authors
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

#include "dlorder/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dlorder/allen.hpp"
#include "dlorder/core.hpp"
#include "dlorder/engine.hpp"
#include "dlorder/oracle.hpp"
#include "dlorder/transform.hpp"

namespace dlorder::cli {
namespace {

using nlohmann::json;

struct Invocation {
  std::string program_path;
  std::string model;
  std::string goal;
  std::string tuple;
  std::vector<std::string> binds;
  std::string from;
  std::string to;
  bool json = false;
  std::optional<std::uint64_t> max_steps;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Program load(const Invocation& inv) {
  Program p = parse(read_file(inv.program_path));
  require_valid(p);
  return p;
}

OrderModel model_of(const Invocation& inv, const Program& p, const std::string& fallback) {
  OrderModel m = OrderModel::parse(inv.model.empty() ? fallback : inv.model);
  for (const auto& b : inv.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("--bind expects name=element, got '" + b + "'");
    const std::string name = trim(b.substr(0, eq));
    if (std::find(p.constants.begin(), p.constants.end(), name) == p.constants.end()) {
      throw UsageError("--bind of undeclared constant '" + name + "'");
    }
    m.bind(name, m.parse_element(trim(b.substr(eq + 1))));
  }
  return m;
}

SaturationOptions options_of(const Invocation& inv) {
  SaturationOptions o;
  if (inv.max_steps) o.max_insertions = *inv.max_steps;
  return o;
}

std::vector<Element> parse_tuple(const std::string& text, const OrderModel& m) {
  std::vector<Element> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(m.parse_element(trim(item)));
  return out;
}

// Names for the positions of `symbol` in `p`: the head variables of its
// first rule when they are distinct, X1..Xk otherwise.
std::vector<std::string> position_names(const Program& p, const std::string& symbol) {
  for (const Rule& r : p.rules) {
    if (r.head.symbol != symbol) continue;
    std::vector<std::string> names;
    for (const Term& t : r.head.args) {
      if (!t.is_var() || std::find(names.begin(), names.end(), t.name) != names.end()) return {};
      names.push_back(t.name);
    }
    return names;
  }
  return {};
}

int cmd_check(const Invocation& inv, std::ostream& out) {
  const Program p = load(inv);
  const OrderModel m = model_of(inv, p, "int");
  const bool yes = Analysis(p, options_of(inv)).nonempty(inv.goal, m);
  if (inv.json) {
    out << json{{"goal", inv.goal}, {"model", m.spec()}, {"nonempty", yes}}.dump() << "\n";
  } else {
    out << (yes ? "NONEMPTY" : "EMPTY") << "\n";
  }
  return yes ? kYes : kNo;
}

int cmd_tuple(const Invocation& inv, std::ostream& out) {
  const Program p = load(inv);
  const OrderModel m = model_of(inv, p, "int");
  const auto tuple = parse_tuple(inv.tuple, m);
  const bool yes = Analysis(p, options_of(inv)).contains(inv.goal, tuple, m);
  if (inv.json) {
    json t = json::array();
    for (const auto& e : tuple) t.push_back(e.str());
    out << json{{"goal", inv.goal}, {"model", m.spec()}, {"tuple", t}, {"member", yes}}.dump()
        << "\n";
  } else {
    out << (yes ? "TRUE" : "FALSE") << "\n";
  }
  return yes ? kYes : kNo;
}

int cmd_types(const Invocation& inv, std::ostream& out) {
  const Program p = load(inv);
  Analysis a(p, options_of(inv));
  std::vector<std::string> goals;
  if (!inv.goal.empty()) {
    goals.push_back(inv.goal);
  } else {
    goals = p.idb_symbols();
  }
  const bool with_model = !inv.model.empty();
  const OrderModel m = model_of(inv, p, "int");
  json listing = json::object();
  for (const auto& g : goals) {
    const std::string lowered = a.lowered_goal(g);
    std::vector<types::CompleteType> ts;
    std::vector<std::string> names = position_names(a.lowered(), lowered);
    if (with_model && !p.constants.empty()) {
      ts = a.goal_types(g, m);
      if (!names.empty()) names.erase(names.begin(), names.begin() + p.constants.size());
    } else {
      ts = a.saturation(with_model && m.is_dense()).types.types_of(lowered);
    }
    json rows = json::array();
    for (const auto& t : ts) {
      const std::string text = types::to_string(t, names);
      rows.push_back(text);
      if (!inv.json) out << (inv.goal.empty() ? g + ": " : "") << text << "\n";
    }
    listing[g] = rows;
  }
  if (inv.json) out << json{{"types", listing}}.dump() << "\n";
  return kYes;
}

int cmd_stats(const Invocation& inv, std::ostream& out) {
  const Program p = load(inv);
  Analysis a(p, options_of(inv));
  const OrderModel m = model_of(inv, p, "int");
  SaturationOptions o = options_of(inv);
  o.dense = !inv.model.empty() && m.is_dense();
  const SaturationResult r = saturate(a.lowered(), o);
  const auto& s = r.stats;
  if (inv.json) {
    out << json{{"steps", s.steps},
                {"insertions", s.insertions},
                {"max_rank", s.max_rank()},
                {"fixpoint", s.fixpoint_reached},
                {"applications", s.applications},
                {"max_rank_per_step", s.max_rank_per_step},
                {"types", r.types.size()}}
               .dump()
        << "\n";
  } else {
    out << "steps: " << s.steps << "\n"
        << "insertions: " << s.insertions << "\n"
        << "max_rank: " << s.max_rank() << "\n"
        << "fixpoint: " << (s.fixpoint_reached ? "true" : "false") << "\n"
        << "applications: " << s.applications << "\n"
        << "types: " << r.types.size() << "\n";
  }
  if (!s.fixpoint_reached) {
    throw StepCapExceeded("saturation stopped after " + std::to_string(s.insertions) +
                          " insertions without reaching a fixpoint");
  }
  return kYes;
}

int cmd_oracle(const Invocation& inv, std::ostream& out) {
  Program p = load(inv);
  if (p.has_interval_atoms()) p = allen::interval_to_order(p);
  const OrderModel m = model_of(inv, p, "");
  std::map<std::string, Element> bindings = m.bindings();
  for (const auto& b : p.bindings) {
    if (!bindings.count(b.constant)) bindings[b.constant] = m.parse_element(b.element);
  }
  const GroundRelationStore store = naive_eval(p, m, bindings);
  if (inv.json) {
    json rel = json::object();
    for (const auto& sym : p.idb_symbols()) {
      if (!inv.goal.empty() && sym != inv.goal) continue;
      rel[sym] = json::array();
      for (const auto& t : store.relation(sym)) rel[sym].push_back(t);
    }
    out << json{{"model", m.spec()}, {"stages", store.stage()}, {"relations", rel}}.dump() << "\n";
    return kYes;
  }
  if (inv.goal.empty()) {
    out << dump(p, store);
  } else {
    Program only;
    only.idb_arity[inv.goal] = p.arity(inv.goal).value_or(0);
    out << dump(only, store);
  }
  return kYes;
}

std::string report_comment(const TransformReport& r) {
  std::ostringstream s;
  auto row = [&](const char* name, int before, int after) {
    s << "% " << name << ": " << before << " -> " << after << "\n";
  };
  s << "% type-disjoint transform\n";
  row("n_I", r.before.n_idb, r.after.n_idb);
  row("n_R", r.before.n_rules, r.after.n_rules);
  row("m_L", r.before.max_arity, r.after.max_arity);
  row("m_R", r.before.max_rule_vars, r.after.max_rule_vars);
  row("m_I", r.before.max_body_idbs, r.after.max_body_idbs);
  for (const auto& [sym, copies] : r.copies) {
    s << "% copies of " << sym << ":";
    for (const auto& c : copies) s << " " << c.first;
    s << "\n";
  }
  return s.str();
}

int cmd_translate(const Invocation& inv, std::ostream& out) {
  Program p = load(inv);
  const bool interval = p.has_interval_atoms();
  if (inv.from == "allen" && p.has_order_atoms()) throw UsageError("--from allen but program has order atoms");
  if (inv.from == "order" && interval) throw UsageError("--from order but program has interval atoms");
  std::string text;
  json report;
  if (inv.to == "order") {
    text = print(interval ? allen::interval_to_order(p) : p);
  } else if (inv.to == "allen") {
    text = print(interval ? p : allen::order_to_interval(p));
  } else if (inv.to == "constant-free") {
    text = print(eliminate_constants(interval ? allen::interval_to_order(p) : p, p.constants));
  } else if (inv.to == "type-disjoint") {
    Program q = interval ? allen::interval_to_order(p) : p;
    if (!q.constants.empty()) q = eliminate_constants(q, q.constants);
    auto [td, r] = to_type_disjoint(q);
    text = print(td) + report_comment(r);
    report = {{"n_I", r.after.n_idb},
              {"n_R", r.after.n_rules},
              {"m_L", r.after.max_arity},
              {"m_R", r.after.max_rule_vars},
              {"m_I", r.after.max_body_idbs}};
  } else {
    throw UsageError("unknown translation target '" + inv.to + "'");
  }
  if (inv.json) {
    json j{{"program", text}};
    if (!report.is_null()) j["report"] = report;
    out << j.dump() << "\n";
  } else {
    out << text;
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide datalog programs over linear orders", "dlorder"};
  app.require_subcommand(1);
  Invocation inv;
  std::uint64_t max_steps = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--program,-p", inv.program_path, "Program file")->required();
    sub->add_flag("--json", inv.json, "Structured output");
    sub->add_option("--max-steps", max_steps, "Antichain insertion cap")->check(CLI::PositiveNumber);
    sub->add_option("--bind", inv.binds, "Constant interpretation name=element");
  };
  auto* check = app.add_subcommand("check", "Decide nonemptiness of a goal");
  common(check);
  check->add_option("--goal,-g", inv.goal, "Goal IDB")->required();
  check->add_option("--model,-m", inv.model, "finite:N, nat, int or rat (default int)");

  auto* tuple = app.add_subcommand("tuple", "Decide membership of a tuple");
  common(tuple);
  tuple->add_option("--goal,-g", inv.goal, "Goal IDB")->required();
  tuple->add_option("--model,-m", inv.model, "finite:N, nat, int or rat (default int)");
  tuple->add_option("--tuple,-t", inv.tuple, "Comma separated elements")->required();

  auto* types_cmd = app.add_subcommand("types", "List saturated types");
  common(types_cmd);
  types_cmd->add_option("--goal,-g", inv.goal, "Goal IDB (default: all)");
  types_cmd->add_option("--model,-m", inv.model, "Instantiate constants in this model");

  auto* translate = app.add_subcommand("translate", "Rewrite a program");
  common(translate);
  translate->add_option("--from", inv.from, "order or allen")
      ->check(CLI::IsMember({"order", "allen"}));
  translate->add_option("--to", inv.to, "type-disjoint, order, allen or constant-free")->required();

  auto* stats = app.add_subcommand("stats", "Saturation statistics");
  common(stats);
  stats->add_option("--model,-m", inv.model, "rat selects dense saturation");

  auto* oracle = app.add_subcommand("oracle", "Reference evaluation on a finite model");
  common(oracle);
  oracle->add_option("--model,-m", inv.model, "finite:N")->required();
  oracle->add_option("--goal,-g", inv.goal, "Only this IDB");

  std::vector<std::string> argv_store{"dlorder"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kYes;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (max_steps > 0) inv.max_steps = max_steps;

  try {
    if (check->parsed()) return cmd_check(inv, out);
    if (tuple->parsed()) return cmd_tuple(inv, out);
    if (types_cmd->parsed()) return cmd_types(inv, out);
    if (translate->parsed()) return cmd_translate(inv, out);
    if (stats->parsed()) return cmd_stats(inv, out);
    if (oracle->parsed()) return cmd_oracle(inv, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const StepCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kStepCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dlorder::cli
