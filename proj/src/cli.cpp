// Copyright 2026 The persuade-lab Authors
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

#include "persuade/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "persuade/belief.hpp"
#include "persuade/dictatorship.hpp"
#include "persuade/equilibrium_lab.hpp"
#include "persuade/errors.hpp"
#include "persuade/mechanisms.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/scenario.hpp"

namespace persuade::cli {

using nlohmann::json;

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string member_label(int index) { return "m" + std::to_string(index + 1); }

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << "\r\n";
}

void write_text_table(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) {
        out << std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

json outcome_to_json(const OutcomeStats& o) {
  json j = json::object();
  j["p_enact_good"] = o.p_enact_good;
  j["p_enact_bad"] = o.p_enact_bad;
  j["p_enact"] = o.p_enact;
  j["expected_cost"] = o.expected_cost;
  return j;
}

json distribution_to_json(const BeliefDistribution& d) {
  json j = json::object();
  j["support"] = d.support;
  j["weights"] = d.weights;
  return j;
}

// Shared outcome-row schema: scenario_id, mechanism, p_enact_good,
// p_enact_bad, p_enact, cost_1..cost_N, verdict, then command extras.
std::vector<std::string> outcome_csv_header(int n_members,
                                            const std::vector<std::string>& extras) {
  std::vector<std::string> h = {"scenario_id", "mechanism", "p_enact_good",
                                "p_enact_bad", "p_enact"};
  for (int i = 0; i < n_members; ++i) {
    h.push_back("cost_" + std::to_string(i + 1));
  }
  h.push_back("verdict");
  h.insert(h.end(), extras.begin(), extras.end());
  return h;
}

std::vector<std::string> outcome_csv_row(const std::string& scenario_id,
                                         const std::string& mechanism,
                                         const OutcomeStats& o,
                                         const std::string& verdict,
                                         const std::vector<std::string>& extras) {
  std::vector<std::string> row = {scenario_id, mechanism, fmt_g(o.p_enact_good),
                                  fmt_g(o.p_enact_bad), fmt_g(o.p_enact)};
  for (double c : o.expected_cost) row.push_back(fmt_g(c));
  row.push_back(verdict);
  row.insert(row.end(), extras.begin(), extras.end());
  return row;
}

struct CommandIO {
  const Scenario* scenario = nullptr;
  std::string format = "text";
  std::ostream* out = nullptr;
};

int cmd_thresholds(const CommandIO& io) {
  const Scenario& s = *io.scenario;
  const Committee c = s.committee();
  const auto th = persuasion_thresholds_batch(c.members, s.grid_n);

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "thresholds";
    j["scenario"] = s.id;
    json rows = json::array();
    for (int i = 0; i < c.size(); ++i) {
      json r = json::object();
      r["member"] = i;
      r["u"] = c.members[i].u;
      r["q_low"] = th[i].q_low;
      r["q_high"] = th[i].q_high;
      r["indifference"] = indifference_threshold(c.members[i]);
      r["flat_contact"] = th[i].flat_contact;
      rows.push_back(std::move(r));
    }
    j["members"] = std::move(rows);
    *io.out << j.dump(2) << '\n';
    return 0;
  }

  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < c.size(); ++i) {
    rows.push_back({member_label(i), fmt_g(c.members[i].u), fmt_g(th[i].q_low),
                    fmt_g(th[i].q_high),
                    fmt_g(indifference_threshold(c.members[i])),
                    th[i].flat_contact ? "yes" : "no"});
  }
  const std::vector<std::string> header = {"member", "u",            "q_low",
                                           "q_high", "indifference", "flat_contact"};
  if (io.format == "csv") {
    write_csv_row(*io.out, header);
    for (const auto& r : rows) write_csv_row(*io.out, r);
  } else {
    write_text_table(*io.out, header, rows);
  }
  return 0;
}

int cmd_dictatorship(const CommandIO& io, int member, const std::string& plot_path) {
  const Scenario& s = *io.scenario;
  const Committee c = s.committee();
  if (member < 0 || member >= c.size()) {
    throw ValidationError("dictatorship: member index out of range");
  }
  const DictatorshipEquilibrium eq = dictatorship_equilibrium(c, member, s.grid_n);
  const std::string mechName = "dictatorship(" + member_label(member) + ")";

  if (!plot_path.empty()) {
    std::ofstream plot(plot_path);
    if (!plot) throw ValidationError("cannot open plot output file: " + plot_path);
    write_csv_row(plot, {"r", "zeta", "zeta_hat"});
    for (int k = 0; k < eq.enactment_fn.n; ++k) {
      const double r = eq.enactment_fn.x(k);
      write_csv_row(plot, {fmt_g(r), fmt_g(eq.enactment_fn.values[k]),
                           fmt_g(zeta_envelope_value(eq.thresholds, r))});
    }
  }

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "dictatorship";
    j["scenario"] = s.id;
    j["member"] = member;
    j["thresholds"] = {{"q_low", eq.thresholds.q_low},
                       {"q_high", eq.thresholds.q_high},
                       {"flat_contact", eq.thresholds.flat_contact}};
    j["lobbyist_signal"] = distribution_to_json(eq.lobbyist_signal);
    j["outcome"] = outcome_to_json(eq.outcome);
    j["lobbyist_payoff"] = eq.lobbyist_payoff;
    *io.out << j.dump(2) << '\n';
    return 0;
  }
  if (io.format == "csv") {
    write_csv_row(*io.out, outcome_csv_header(c.size(), {"q_low", "q_high", "payoff"}));
    write_csv_row(*io.out,
                  outcome_csv_row(s.id, mechName, eq.outcome, "",
                                  {fmt_g(eq.thresholds.q_low),
                                   fmt_g(eq.thresholds.q_high), fmt_g(eq.lobbyist_payoff)}));
    return 0;
  }
  std::ostream& out = *io.out;
  out << mechName << " equilibrium (scenario " << s.id << ")\n";
  out << "  thresholds of persuasion: [" << fmt_g(eq.thresholds.q_low) << ", "
      << fmt_g(eq.thresholds.q_high) << "]"
      << (eq.thresholds.degenerate() ? " (degenerate)" : "") << '\n';
  out << "  lobbyist signal: " << eq.lobbyist_signal.to_string() << '\n';
  out << "  P(enact | good) = " << fmt_g(eq.outcome.p_enact_good) << '\n';
  out << "  P(enact | bad)  = " << fmt_g(eq.outcome.p_enact_bad) << '\n';
  out << "  P(enact)        = " << fmt_g(eq.outcome.p_enact) << '\n';
  out << "  lobbyist payoff = " << fmt_g(eq.lobbyist_payoff) << '\n';
  out << "  information costs:";
  for (int i = 0; i < c.size(); ++i) {
    out << ' ' << member_label(i) << "=" << fmt_g(eq.outcome.expected_cost[i]);
  }
  out << '\n';
  return 0;
}

int cmd_audit(const CommandIO& io) {
  const Scenario& s = *io.scenario;
  const Committee c = s.committee();
  std::vector<VotingMechanism> catalog = s.mechanism_list();
  if (catalog.empty()) catalog = full_catalog(c.size());

  EquilibriumCheckOptions opts;
  opts.seed = s.seed;
  opts.threshold_grid_n = s.grid_n;
  const AuditTable table = dominance_audit(c, catalog, opts);

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "audit";
    j["scenario"] = s.id;
    j["mhat_index"] = table.mhat_index;
    j["q_hat"] = table.q_hat;
    j["mhat_outcome"] = outcome_to_json(table.mhat_outcome);
    json rows = json::array();
    for (const AuditRow& r : table.rows) {
      json row = json::object();
      row["mechanism"] = r.mechanism;
      row["dictator"] = r.dictator;
      row["strategies_ok"] = r.strategies_ok;
      row["max_strategy_violation"] = r.max_strategy_violation;
      row["outcome"] = outcome_to_json(r.outcome);
      row["lobbyist_payoff"] = r.lobbyist_payoff;
      row["benchmark_payoff"] = r.benchmark_payoff;
      row["payoff_at_least_benchmark"] = r.payoff_at_least_benchmark;
      row["verdict"] = to_string(r.verdict);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["all_dominated_or_tied"] = table.all_dominated_or_tied();
    *io.out << j.dump(2) << '\n';
    return 0;
  }
  if (io.format == "csv") {
    write_csv_row(*io.out, outcome_csv_header(c.size(), {}));
    for (const AuditRow& r : table.rows) {
      write_csv_row(*io.out, outcome_csv_row(s.id, r.mechanism, r.outcome,
                                             to_string(r.verdict), {}));
    }
    return 0;
  }
  std::ostream& out = *io.out;
  out << "most demanding member: " << member_label(table.mhat_index)
      << " (q_hat = " << fmt_g(table.q_hat) << ")\n";
  std::vector<std::vector<std::string>> rows;
  for (const AuditRow& r : table.rows) {
    rows.push_back({r.mechanism, r.strategies_ok ? "ok" : "VIOLATED",
                    fmt_g(r.outcome.p_enact_good), fmt_g(r.outcome.p_enact_bad),
                    fmt_g(r.outcome.p_enact), fmt_g(r.lobbyist_payoff),
                    to_string(r.verdict)});
  }
  write_text_table(out,
                   {"mechanism", "strategies", "p_enact_good", "p_enact_bad",
                    "p_enact", "payoff", "verdict"},
                   rows);
  out << (table.all_dominated_or_tied()
              ? "most-demanding dictatorship dominates or ties every row\n"
              : "WARNING: some row is not dominated\n");
  return 0;
}

int cmd_blackwell(const CommandIO& io, int a, int b) {
  const Scenario& s = *io.scenario;
  const int n = static_cast<int>(s.menu.size());
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw ValidationError("blackwell: menu index out of range");
  }
  const ConvexOrder order = convex_order_compare(s.menu[a], s.menu[b]);
  if (io.format == "json") {
    json j = json::object();
    j["command"] = "blackwell";
    j["scenario"] = s.id;
    j["a"] = a;
    j["b"] = b;
    j["verdict"] = to_string(order);
    *io.out << j.dump(2) << '\n';
  } else if (io.format == "csv") {
    write_csv_row(*io.out, {"scenario_id", "a", "b", "verdict"});
    write_csv_row(*io.out,
                  {s.id, std::to_string(a), std::to_string(b), to_string(order)});
  } else {
    *io.out << "menu[" << a << "] vs menu[" << b << "]: " << to_string(order)
            << '\n';
  }
  return 0;
}

int cmd_constrained(const CommandIO& io) {
  const Scenario& s = *io.scenario;
  const Committee c = s.committee();
  const ExperimentMenu menu = s.experiment_menu();

  std::vector<VotingMechanism> dictatorships;
  for (const VotingMechanism& mech : s.mechanism_list()) {
    if (is_dictatorship(mech)) dictatorships.push_back(mech);
  }
  if (dictatorships.empty()) {
    for (int i = 0; i < c.size(); ++i) {
      dictatorships.push_back(make_catalog_mechanism(Dictatorship{i}, c.size()));
    }
  }

  struct Row {
    std::string mechanism;
    ConstrainedBest best;
  };
  std::vector<Row> rows;
  for (const VotingMechanism& mech : dictatorships) {
    rows.push_back({mech.name, constrained_lobbyist_best(c, mech, menu, s.grid_n)});
  }

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "constrained";
    j["scenario"] = s.id;
    json rowsJson = json::array();
    for (const Row& r : rows) {
      json row = json::object();
      row["mechanism"] = r.mechanism;
      row["chosen_index"] = r.best.chosen_index;
      row["chosen"] = distribution_to_json(r.best.chosen);
      row["payoff"] = r.best.payoff;
      row["outcome"] = outcome_to_json(r.best.outcome);
      rowsJson.push_back(std::move(row));
    }
    j["rows"] = std::move(rowsJson);
    *io.out << j.dump(2) << '\n';
    return 0;
  }
  if (io.format == "csv") {
    write_csv_row(*io.out, outcome_csv_header(c.size(), {"chosen_index", "payoff"}));
    for (const Row& r : rows) {
      write_csv_row(*io.out,
                    outcome_csv_row(s.id, r.mechanism, r.best.outcome, "",
                                    {std::to_string(r.best.chosen_index),
                                     fmt_g(r.best.payoff)}));
    }
    return 0;
  }
  std::vector<std::vector<std::string>> textRows;
  for (const Row& r : rows) {
    textRows.push_back({r.mechanism, "menu[" + std::to_string(r.best.chosen_index) + "]",
                        fmt_g(r.best.payoff), fmt_g(r.best.outcome.p_enact_good),
                        fmt_g(r.best.outcome.p_enact_bad)});
  }
  write_text_table(*io.out,
                   {"mechanism", "chosen", "payoff", "p_enact_good", "p_enact_bad"},
                   textRows);
  return 0;
}

int cmd_counterexample(const CommandIO& io, bool have_scenario) {
  GoldenReport report;
  std::string id = "builtin";
  if (have_scenario) {
    const Scenario& s = *io.scenario;
    id = s.id;
    report = counterexample_check(s.committee(), s.experiment_menu(), s.grid_n,
                                  s.tolerance);
  } else {
    report = counterexample_check();
  }

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "counterexample";
    j["scenario"] = id;
    json rows = json::array();
    for (const GoldenEntry& e : report.entries) {
      json row = json::object();
      row["name"] = e.name;
      if (e.numeric) {
        row["expected"] = e.expected;
        row["actual"] = e.actual;
        row["abs_err"] = e.abs_err;
        row["tolerance"] = e.tolerance;
      } else {
        row["expected"] = e.expected_label;
        row["actual"] = e.actual_label;
      }
      row["pass"] = e.pass;
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["all_pass"] = report.all_pass();
    *io.out << j.dump(2) << '\n';
  } else if (io.format == "csv") {
    write_csv_row(*io.out, {"name", "expected", "actual", "abs_err", "tolerance", "pass"});
    for (const GoldenEntry& e : report.entries) {
      if (e.numeric) {
        write_csv_row(*io.out, {e.name, fmt_g(e.expected), fmt_g(e.actual),
                                fmt_g(e.abs_err), fmt_g(e.tolerance),
                                e.pass ? "true" : "false"});
      } else {
        write_csv_row(*io.out, {e.name, e.expected_label, e.actual_label, "", "",
                                e.pass ? "true" : "false"});
      }
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const GoldenEntry& e : report.entries) {
      rows.push_back({e.pass ? "[PASS]" : "[FAIL]", e.name,
                      e.numeric ? fmt_g(e.expected) : e.expected_label,
                      e.numeric ? fmt_g(e.actual) : e.actual_label,
                      e.numeric ? fmt_g(e.abs_err) : ""});
    }
    write_text_table(*io.out, {"", "check", "expected", "actual", "abs_err"}, rows);
  }
  return report.all_pass() ? 0 : 2;
}

int cmd_sweep(const CommandIO& io, const std::string& param, double from,
              double to, int steps) {
  const Scenario& base = *io.scenario;
  if (steps < 1) throw ValidationError("sweep: steps must be >= 1");

  int memberIdx = -1;
  if (param != "prior") {
    if (param.size() < 2 || param[0] != 'u') {
      throw ValidationError("sweep: param must be 'prior' or 'u<k>' (1-based member)");
    }
    try {
      memberIdx = std::stoi(param.substr(1)) - 1;
    } catch (...) {
      throw ValidationError("sweep: cannot parse member number in '" + param + "'");
    }
    if (memberIdx < 0 || memberIdx >= static_cast<int>(base.members.size())) {
      throw ValidationError("sweep: member index out of range in '" + param + "'");
    }
  }

  struct Row {
    double value;
    int mhat;
    double q_hat;
    OutcomeStats outcome;
  };
  std::vector<Row> rows;
  for (int k = 0; k < steps; ++k) {
    const double value =
        steps == 1 ? from : from + (to - from) * static_cast<double>(k) / (steps - 1);
    Scenario s = base;
    if (memberIdx < 0) {
      s.prior = value;
      if (!(value > 0.0 && value < 1.0)) {
        throw ValidationError("sweep: prior value outside (0, 1)");
      }
    } else {
      if (!(value >= 0.0)) throw ValidationError("sweep: u value must be >= 0");
      s.members[memberIdx].u = value;
    }
    const Committee c = s.committee();
    const MostDemanding mhat = most_demanding(c, s.grid_n);
    const DictatorshipEquilibrium eq =
        dictatorship_equilibrium(c, mhat.index, s.grid_n);
    rows.push_back({value, mhat.index, mhat.q_hat, eq.outcome});
  }

  auto rowId = [&](double v) { return base.id + "[" + param + "=" + fmt_g(v) + "]"; };
  auto mechName = [&](int i) { return "dictatorship(" + member_label(i) + ")"; };

  if (io.format == "json") {
    json j = json::object();
    j["command"] = "sweep";
    j["scenario"] = base.id;
    j["param"] = param;
    json rowsJson = json::array();
    for (const Row& r : rows) {
      json row = json::object();
      row["value"] = r.value;
      row["mechanism"] = mechName(r.mhat);
      row["q_hat"] = r.q_hat;
      row["outcome"] = outcome_to_json(r.outcome);
      rowsJson.push_back(std::move(row));
    }
    j["rows"] = std::move(rowsJson);
    *io.out << j.dump(2) << '\n';
    return 0;
  }
  const int n = static_cast<int>(base.members.size());
  if (io.format == "csv") {
    write_csv_row(*io.out, outcome_csv_header(n, {"param", "value", "q_hat"}));
    for (const Row& r : rows) {
      write_csv_row(*io.out,
                    outcome_csv_row(rowId(r.value), mechName(r.mhat), r.outcome, "",
                                    {param, fmt_g(r.value), fmt_g(r.q_hat)}));
    }
    return 0;
  }
  std::vector<std::vector<std::string>> textRows;
  for (const Row& r : rows) {
    textRows.push_back({fmt_g(r.value), mechName(r.mhat), fmt_g(r.q_hat),
                        fmt_g(r.outcome.p_enact_good), fmt_g(r.outcome.p_enact_bad),
                        fmt_g(r.outcome.p_enact)});
  }
  write_text_table(*io.out,
                   {param, "mechanism", "q_hat", "p_enact_good", "p_enact_bad",
                    "p_enact"},
                   textRows);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"committee persuasion and voting-mechanism laboratory",
               "persuade_lab"};
  app.fallthrough();

  std::string scenarioPath;
  std::string format = "text";
  app.add_option("--scenario", scenarioPath, "scenario JSON file");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.require_subcommand(1);

  CLI::App* thresholdsCmd =
      app.add_subcommand("thresholds", "per-member persuasion thresholds");
  int member = 0;
  std::string plotPath;
  CLI::App* dictCmd = app.add_subcommand(
      "dictatorship", "closed-form equilibrium of one member's dictatorship");
  dictCmd->add_option("--member", member, "member index (0-based)")->required();
  dictCmd->add_option("--emit-plot", plotPath,
                      "write (r, zeta, zeta_hat) CSV to this file");
  CLI::App* auditCmd = app.add_subcommand(
      "audit", "dominance audit of the scenario mechanisms (or the full catalog)");
  int blackwellA = 0, blackwellB = 0;
  CLI::App* blackwellCmd = app.add_subcommand(
      "blackwell", "convex-order comparison of two menu distributions");
  blackwellCmd->add_option("--a", blackwellA, "first menu index")->required();
  blackwellCmd->add_option("--b", blackwellB, "second menu index")->required();
  CLI::App* constrainedCmd = app.add_subcommand(
      "constrained", "menu-constrained lobbyist optimum per dictatorship");
  CLI::App* counterCmd = app.add_subcommand(
      "counterexample",
      "golden check of the built-in constrained-menu committee");
  std::string sweepParam;
  double sweepFrom = 0.0, sweepTo = 0.0;
  int sweepSteps = 1;
  CLI::App* sweepCmd =
      app.add_subcommand("sweep", "outcome sweep over one scenario parameter");
  sweepCmd->add_option("--param", sweepParam, "'prior' or 'u<k>' (1-based)")
      ->required();
  sweepCmd->add_option("--from", sweepFrom, "first value")->required();
  sweepCmd->add_option("--to", sweepTo, "last value")->required();
  sweepCmd->add_option("--steps", sweepSteps, "number of rows")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Scenario scenario;
    bool haveScenario = false;
    if (!scenarioPath.empty()) {
      scenario = parse_scenario(scenarioPath);
      haveScenario = true;
    }
    CommandIO io{haveScenario ? &scenario : nullptr, format, &out};
    auto needScenario = [&]() {
      if (!haveScenario) {
        throw ValidationError("this command requires --scenario <file>");
      }
    };
    if (thresholdsCmd->parsed()) {
      needScenario();
      return cmd_thresholds(io);
    }
    if (dictCmd->parsed()) {
      needScenario();
      return cmd_dictatorship(io, member, plotPath);
    }
    if (auditCmd->parsed()) {
      needScenario();
      return cmd_audit(io);
    }
    if (blackwellCmd->parsed()) {
      needScenario();
      return cmd_blackwell(io, blackwellA, blackwellB);
    }
    if (constrainedCmd->parsed()) {
      needScenario();
      return cmd_constrained(io);
    }
    if (counterCmd->parsed()) {
      return cmd_counterexample(io, haveScenario);
    }
    if (sweepCmd->parsed()) {
      needScenario();
      return cmd_sweep(io, sweepParam, sweepFrom, sweepTo, sweepSteps);
    }
    err << "error: no command given\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace persuade::cli
