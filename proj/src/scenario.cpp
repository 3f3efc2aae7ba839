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

#include "persuade/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "persuade/errors.hpp"

namespace persuade {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(ctx + ": missing field '" + key + "'");
  }
  return *it;
}

double as_number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ParseError(ctx + ": expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return j.get<int>();
}

std::vector<double> as_number_list(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_number(v, ctx));
  return out;
}

MechanismDescriptor mechanism_from_json(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  MechanismDescriptor desc;
  if (j.contains("table")) {
    const json& tj = j.at("table");
    VotingMechanism mech;
    const json& sets = require_field(tj, "vote_sets", ctx);
    if (!sets.is_array() || sets.empty()) {
      throw ParseError(ctx + ".vote_sets: expected a nonempty array");
    }
    for (const auto& s : sets) {
      std::vector<std::string> labels;
      if (!s.is_array() || s.empty()) {
        throw ParseError(ctx + ".vote_sets: each vote set must be a nonempty array");
      }
      for (const auto& label : s) {
        if (!label.is_string()) {
          throw ParseError(ctx + ".vote_sets: vote labels must be strings");
        }
        labels.push_back(label.get<std::string>());
      }
      mech.vote_sets.push_back(std::move(labels));
    }
    mech.decision.assign(mech.profile_count(), -1.0);
    const json& rows = require_field(tj, "rows", ctx);
    if (!rows.is_array()) throw ParseError(ctx + ".rows: expected an array");
    for (const auto& row : rows) {
      const json& votes = require_field(row, "votes", ctx + ".rows");
      if (!votes.is_array() || votes.size() != mech.vote_sets.size()) {
        throw ParseError(ctx + ".rows: vote profile has wrong length");
      }
      std::vector<int> profile(mech.vote_sets.size());
      for (std::size_t i = 0; i < profile.size(); ++i) {
        const std::string label = votes[i].get<std::string>();
        const auto& labels = mech.vote_sets[i];
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
          throw ParseError(ctx + ".rows: unknown vote label '" + label + "'");
        }
        profile[i] = static_cast<int>(it - labels.begin());
      }
      mech.decision[mech.profile_index(profile)] =
          as_number(require_field(row, "enact", ctx + ".rows"), ctx + ".rows.enact");
    }
    for (double d : mech.decision) {
      if (d < 0.0) {
        throw ValidationError(ctx + ": decision table is not total");
      }
    }
    mech.name = tj.contains("name") ? tj.at("name").get<std::string>() : "table";
    const MechanismValidation v = validate_mechanism(mech);
    if (!v.ok) {
      throw ValidationError(ctx + ": invalid mechanism (" + v.violations.front() + ")");
    }
    desc.table = std::move(mech);
    return desc;
  }

  const std::string kind =
      require_field(j, "kind", ctx).get<std::string>();
  if (kind == "dictatorship") {
    desc.kind = Dictatorship{as_int(require_field(j, "member", ctx), ctx + ".member")};
  } else if (kind == "k_majority") {
    desc.kind = KMajority{as_int(require_field(j, "k", ctx), ctx + ".k")};
  } else if (kind == "unanimity") {
    desc.kind = Unanimity{};
  } else if (kind == "weighted_threshold") {
    WeightedThreshold wt;
    wt.weights = as_number_list(require_field(j, "weights", ctx), ctx + ".weights");
    wt.theta = as_number(require_field(j, "theta", ctx), ctx + ".theta");
    desc.kind = wt;
  } else {
    throw ParseError(ctx + ": unknown mechanism kind '" + kind + "'");
  }
  return desc;
}

json mechanism_to_json(const MechanismDescriptor& desc) {
  json j = json::object();
  if (desc.table) {
    const VotingMechanism& mech = *desc.table;
    json tj = json::object();
    tj["vote_sets"] = mech.vote_sets;
    json rows = json::array();
    std::vector<int> profile(mech.vote_sets.size(), 0);
    bool done = false;
    while (!done) {
      json row = json::object();
      json votes = json::array();
      for (std::size_t i = 0; i < profile.size(); ++i) {
        votes.push_back(mech.vote_sets[i][profile[i]]);
      }
      row["votes"] = std::move(votes);
      row["enact"] = mech.decide(profile);
      rows.push_back(std::move(row));
      done = true;
      for (int i = static_cast<int>(profile.size()) - 1; i >= 0; --i) {
        if (++profile[i] < static_cast<int>(mech.vote_sets[i].size())) {
          done = false;
          break;
        }
        profile[i] = 0;
      }
    }
    tj["rows"] = std::move(rows);
    if (!mech.name.empty()) tj["name"] = mech.name;
    j["table"] = std::move(tj);
    return j;
  }
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Dictatorship>) {
          j["kind"] = "dictatorship";
          j["member"] = k.member;
        } else if constexpr (std::is_same_v<T, KMajority>) {
          j["kind"] = "k_majority";
          j["k"] = k.k;
        } else if constexpr (std::is_same_v<T, Unanimity>) {
          j["kind"] = "unanimity";
        } else {
          j["kind"] = "weighted_threshold";
          j["weights"] = k.weights;
          j["theta"] = k.theta;
        }
      },
      *desc.kind);
  return j;
}

}  // namespace

CostKernel kernel_from_json(const json& j) {
  const std::string family = require_field(j, "family", "kernel").get<std::string>();
  if (family == "quadratic") {
    return CostKernel::quadratic(as_number(require_field(j, "alpha", "kernel"), "kernel.alpha"));
  }
  if (family == "scaled_entropy") {
    return CostKernel::scaled_entropy(as_number(require_field(j, "alpha", "kernel"), "kernel.alpha"));
  }
  if (family == "composite_counterexample") {
    return CostKernel::composite_counterexample(as_number(require_field(j, "u", "kernel"), "kernel.u"));
  }
  if (family == "tabulated_convex") {
    const json& pts = require_field(j, "points", "kernel");
    if (!pts.is_array()) throw ParseError("kernel.points: expected an array");
    std::vector<std::pair<double, double>> points;
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2) {
        throw ParseError("kernel.points: expected [q, c] pairs");
      }
      points.emplace_back(as_number(p[0], "kernel.points.q"),
                          as_number(p[1], "kernel.points.c"));
    }
    return CostKernel::tabulated(std::move(points));
  }
  throw ParseError("kernel: unknown family '" + family + "'");
}

json kernel_to_json(const CostKernel& kernel) {
  json j = json::object();
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, QuadraticKernel>) {
          j["family"] = "quadratic";
          j["alpha"] = k.alpha;
        } else if constexpr (std::is_same_v<T, ScaledEntropyKernel>) {
          j["family"] = "scaled_entropy";
          j["alpha"] = k.alpha;
        } else if constexpr (std::is_same_v<T, CompositeCounterexampleKernel>) {
          j["family"] = "composite_counterexample";
          j["u"] = k.u;
        } else {
          j["family"] = "tabulated_convex";
          json pts = json::array();
          for (std::size_t i = 0; i < k.q.size(); ++i) {
            pts.push_back(json::array({k.q[i], k.c[i]}));
          }
          j["points"] = std::move(pts);
        }
      },
      kernel.family());
  return j;
}

Scenario scenario_from_json(const json& j, const std::string& id) {
  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  Scenario s;
  s.id = id;
  try {
    s.prior = as_number(require_field(j, "prior", "scenario"), "prior");
    const json& members = require_field(j, "members", "scenario");
    if (!members.is_array() || members.empty()) {
      throw ParseError("members: expected a nonempty array");
    }
    int idx = 0;
    for (const auto& mj : members) {
      const std::string ctx = "members[" + std::to_string(idx++) + "]";
      const double u = as_number(require_field(mj, "u", ctx), ctx + ".u");
      CostKernel kernel = kernel_from_json(require_field(mj, "kernel", ctx));
      try {
        s.members.push_back(make_member(u, std::move(kernel)));
      } catch (const ParameterOutOfRange& e) {
        throw ValidationError(ctx + ": " + e.what());
      }
    }
    if (j.contains("mechanisms")) {
      const json& mechs = j.at("mechanisms");
      if (!mechs.is_array()) throw ParseError("mechanisms: expected an array");
      int k = 0;
      for (const auto& mj : mechs) {
        s.mechanisms.push_back(
            mechanism_from_json(mj, "mechanisms[" + std::to_string(k++) + "]"));
      }
    }
    if (j.contains("menu")) {
      const json& menu = j.at("menu");
      if (!menu.is_array()) throw ParseError("menu: expected an array");
      int k = 0;
      for (const auto& dj : menu) {
        const std::string ctx = "menu[" + std::to_string(k++) + "]";
        try {
          s.menu.push_back(make_distribution(
              as_number_list(require_field(dj, "support", ctx), ctx + ".support"),
              as_number_list(require_field(dj, "weights", ctx), ctx + ".weights")));
        } catch (const Error& e) {
          throw ValidationError(ctx + ": " + e.what());
        }
      }
    }
    if (j.contains("grid_n")) s.grid_n = as_int(j.at("grid_n"), "grid_n");
    if (j.contains("tolerance")) s.tolerance = as_number(j.at("tolerance"), "tolerance");
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
        throw ParseError("seed: expected an integer");
      }
      s.seed = j.at("seed").get<std::uint64_t>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }

  // Cross-field invariants.
  if (!(s.prior > 0.0 && s.prior < 1.0)) {
    throw ValidationError("prior must lie in the open interval (0, 1)");
  }
  if (s.grid_n < kMinThresholdGridN) {
    throw ValidationError("grid_n must be at least 1001");
  }
  if (!(s.tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  for (std::size_t k = 0; k < s.menu.size(); ++k) {
    if (std::abs(s.menu[k].mean() - s.prior) > kMeanMatchTolerance) {
      throw ValidationError("menu[" + std::to_string(k) +
                            "] is not Bayes plausible at the prior");
    }
  }
  const int n = static_cast<int>(s.members.size());
  for (std::size_t k = 0; k < s.mechanisms.size(); ++k) {
    const std::string ctx = "mechanisms[" + std::to_string(k) + "]";
    if (s.mechanisms[k].table) {
      if (s.mechanisms[k].table->n_members() != n) {
        throw ValidationError(ctx + ": table size differs from committee size");
      }
    } else {
      try {
        (void)make_catalog_mechanism(*s.mechanisms[k].kind, n);
      } catch (const ParameterOutOfRange& e) {
        throw ValidationError(ctx + ": " + e.what());
      }
    }
  }
  return s;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
  return scenario_from_json(j, std::filesystem::path(path).stem().string());
}

Committee Scenario::committee() const { return make_committee(members, prior); }

ExperimentMenu Scenario::experiment_menu() const { return make_menu(menu); }

std::vector<VotingMechanism> Scenario::mechanism_list() const {
  std::vector<VotingMechanism> out;
  const int n = static_cast<int>(members.size());
  for (const MechanismDescriptor& d : mechanisms) {
    if (d.table) {
      out.push_back(*d.table);
    } else {
      out.push_back(make_catalog_mechanism(*d.kind, n));
    }
  }
  return out;
}

nlohmann::json scenario_to_json(const Scenario& s) {
  json j = json::object();
  j["prior"] = s.prior;
  json members = json::array();
  for (const MemberSpec& m : s.members) {
    json mj = json::object();
    mj["u"] = m.u;
    mj["kernel"] = kernel_to_json(m.kernel);
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  if (!s.mechanisms.empty()) {
    json mechs = json::array();
    for (const MechanismDescriptor& d : s.mechanisms) {
      mechs.push_back(mechanism_to_json(d));
    }
    j["mechanisms"] = std::move(mechs);
  }
  if (!s.menu.empty()) {
    json menu = json::array();
    for (const BeliefDistribution& d : s.menu) {
      json dj = json::object();
      dj["support"] = d.support;
      dj["weights"] = d.weights;
      menu.push_back(std::move(dj));
    }
    j["menu"] = std::move(menu);
  }
  j["grid_n"] = s.grid_n;
  j["tolerance"] = s.tolerance;
  j["seed"] = s.seed;
  return j;
}

}  // namespace persuade
