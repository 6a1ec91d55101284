// Copyright 2026 The famq Authors
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

#include <algorithm>
#include <numbers>
#include <string>

#include <json.hpp>

#include "famq/errors.hpp"
#include "famq/harness.hpp"

namespace famq {
namespace {

using nlohmann::json;
using std::numbers::pi;

std::vector<VariantChoice> standard_variants() {
  return {{Variant::qaoa, false}, {Variant::fam1, true}, {Variant::famp, false}, {Variant::famn, true},
          {Variant::fampn, false}};
}

OptimizerConfig optimizer(OptimizerKind kind, int calls, int iterations) {
  OptimizerConfig o;
  o.kind = kind;
  o.budget = Budget{calls, iterations};
  return o;
}

XAxis parse_axis(std::string_view name) {
  for (auto x : {XAxis::parameters, XAxis::rounds, XAxis::qubits, XAxis::calls, XAxis::phi, XAxis::cz_fidelity}) {
    if (name == to_string(x)) return x;
  }
  throw ConfigError("unknown x axis '" + std::string(name) + "'");
}

Backend parse_backend(std::string_view name) {
  if (name == "agnostic") return Backend::agnostic;
  if (name == "atom") return Backend::atom;
  throw ConfigError("unknown backend '" + std::string(name) + "'");
}

RelaxationModel parse_relaxation(std::string_view name) {
  if (name == "amplitude_damping") return RelaxationModel::amplitude_damping;
  if (name == "symmetric") return RelaxationModel::symmetric;
  throw ConfigError("unknown relaxation model '" + std::string(name) + "'");
}

std::string_view relaxation_name(RelaxationModel m) {
  return m == RelaxationModel::symmetric ? "symmetric" : "amplitude_damping";
}

template <typename T>
void read_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig1",       "fig2",       "fig3", "fig4_atom", "figS1_calls", "figS2_mean", "figS3_phi",
          "verify_cancellation", "verify_exact_solvable"};
}

ExperimentConfig preset_config(std::string_view name) {
  ExperimentConfig c;
  c.preset = std::string(name);
  c.variants = standard_variants();
  c.optimizer = optimizer(OptimizerKind::particle_swarm, 5001, 1000);
  if (name == "fig1") {
    c.errors = {{ZPhaseKind::zero},
                {ZPhaseKind::fixed, 0.1 * pi},
                {ZPhaseKind::qubit_dep, 0, 3},
                {ZPhaseKind::gamma_dep, 0.1 * pi},
                {ZPhaseKind::gamma_qubit_dep, 0, 3}};
    c.x_axis = XAxis::parameters;
  } else if (name == "fig2") {
    c.rounds = {1, 2, 3, 4, 5};
    c.x_axis = XAxis::rounds;
  } else if (name == "fig3" || name == "figS2_mean") {
    c.n_qubits = {3, 4, 5, 6, 7};
    c.cold_starts = 10;
    c.optimizer = optimizer(OptimizerKind::bfgs, 5001, 1000);
    c.x_axis = XAxis::qubits;
  } else if (name == "figS1_calls") {
    c.max_calls = {500, 1000, 2000, 5001, 8000};
    c.x_axis = XAxis::calls;
  } else if (name == "figS3_phi") {
    c.errors.clear();
    for (auto kind : {ZPhaseKind::fixed, ZPhaseKind::gamma_dep}) {
      for (double f : {0.0, 0.05, 0.1, 0.15, 0.2}) c.errors.push_back({kind, f * pi});
    }
    c.x_axis = XAxis::phi;
  } else if (name == "fig4_atom") {
    c.backend = Backend::atom;
    c.rounds = {1, 2};
    c.cz_fidelities = {0.95, 0.975, 0.99, 0.995, 1.0};
    c.cold_starts = 10;
    c.optimizer = optimizer(OptimizerKind::nelder_mead, 1500, 1500);
    c.max_calls = {1500};
    c.x_axis = XAxis::cz_fidelity;
  } else if (name == "verify_cancellation" || name == "verify_exact_solvable") {
    throw ConfigError(std::string(name) + " is a verification, not a sweep; use `famq verify`");
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json variants = json::array();
  for (const auto& v : c.variants) variants.push_back(v.label());
  json errors = json::array();
  for (const auto& e : c.errors) {
    errors.push_back({{"kind", to_string(e.kind)}, {"phi", e.phi}, {"instances", e.instances}, {"max_phi", e.max_phi}});
  }
  const auto& o = c.optimizer;
  const json j = {
      {"preset", c.preset},
      {"variants", variants},
      {"rounds", c.rounds},
      {"n_qubits", c.n_qubits},
      {"sampled_graphs", c.sampled_graphs},
      {"max_graphs", c.max_graphs},
      {"errors", errors},
      {"backend", to_string(c.backend)},
      {"noise",
       {{"t1", c.noise.t1},
        {"t2", c.noise.t2},
        {"microwave_duration", c.noise.microwave_duration},
        {"microwave_depol", c.noise.microwave_depol},
        {"rz_depol", c.noise.rz_depol},
        {"cz_phi", c.noise.cz_phi},
        {"relaxation", relaxation_name(c.noise.relaxation)}}},
      {"cz_fidelities", c.cz_fidelities},
      {"max_calls", c.max_calls},
      {"optimizer",
       {{"kind", to_string(o.kind)},
        {"max_iterations", o.budget.max_iterations},
        {"pso",
         {{"swarm_size", o.pso.swarm_size},
          {"cognitive", o.pso.cognitive},
          {"social", o.pso.social},
          {"inertia_start", o.pso.inertia_start},
          {"inertia_end", o.pso.inertia_end},
          {"velocity_clamp", o.pso.velocity_clamp}}},
        {"nelder_mead",
         {{"initial_step", o.nelder_mead.initial_step},
          {"x_tolerance", o.nelder_mead.x_tolerance},
          {"f_tolerance", o.nelder_mead.f_tolerance}}},
        {"bfgs", {{"fd_step", o.bfgs.fd_step}, {"gradient_tolerance", o.bfgs.gradient_tolerance}}}}},
      {"cold_starts", c.cold_starts},
      {"master_seed", c.master_seed},
      {"x_axis", to_string(c.x_axis)}};
  return j.dump(2);
}

ExperimentConfig config_from_json(std::string_view text, ExperimentConfig c) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {
        "preset",        "variants",  "rounds",    "n_qubits",  "sampled_graphs", "max_graphs",  "errors", "backend",
        "noise",         "cz_fidelities", "max_calls", "optimizer", "cold_starts",    "master_seed", "x_axis"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
    }
    read_if(j, "preset", c.preset);
    if (j.contains("variants")) {
      c.variants.clear();
      for (const auto& v : j.at("variants")) c.variants.push_back(VariantChoice::parse(v.get<std::string>()));
    }
    read_if(j, "rounds", c.rounds);
    read_if(j, "n_qubits", c.n_qubits);
    read_if(j, "sampled_graphs", c.sampled_graphs);
    read_if(j, "max_graphs", c.max_graphs);
    if (j.contains("errors")) {
      c.errors.clear();
      for (const auto& e : j.at("errors")) {
        ErrorSetting s;
        s.kind = parse_zphase_kind(e.at("kind").get<std::string>());
        read_if(e, "phi", s.phi);
        read_if(e, "instances", s.instances);
        read_if(e, "max_phi", s.max_phi);
        c.errors.push_back(s);
      }
    }
    if (j.contains("backend")) c.backend = parse_backend(j.at("backend").get<std::string>());
    if (j.contains("noise")) {
      const json& n = j.at("noise");
      read_if(n, "t1", c.noise.t1);
      read_if(n, "t2", c.noise.t2);
      read_if(n, "microwave_duration", c.noise.microwave_duration);
      read_if(n, "microwave_depol", c.noise.microwave_depol);
      read_if(n, "rz_depol", c.noise.rz_depol);
      read_if(n, "cz_phi", c.noise.cz_phi);
      if (n.contains("relaxation")) c.noise.relaxation = parse_relaxation(n.at("relaxation").get<std::string>());
    }
    read_if(j, "cz_fidelities", c.cz_fidelities);
    read_if(j, "max_calls", c.max_calls);
    if (j.contains("optimizer")) {
      const json& o = j.at("optimizer");
      auto& oc = c.optimizer;
      if (o.contains("kind")) oc.kind = parse_optimizer(o.at("kind").get<std::string>());
      read_if(o, "max_iterations", oc.budget.max_iterations);
      if (o.contains("pso")) {
        const json& p = o.at("pso");
        read_if(p, "swarm_size", oc.pso.swarm_size);
        read_if(p, "cognitive", oc.pso.cognitive);
        read_if(p, "social", oc.pso.social);
        read_if(p, "inertia_start", oc.pso.inertia_start);
        read_if(p, "inertia_end", oc.pso.inertia_end);
        read_if(p, "velocity_clamp", oc.pso.velocity_clamp);
      }
      if (o.contains("nelder_mead")) {
        const json& m = o.at("nelder_mead");
        read_if(m, "initial_step", oc.nelder_mead.initial_step);
        read_if(m, "x_tolerance", oc.nelder_mead.x_tolerance);
        read_if(m, "f_tolerance", oc.nelder_mead.f_tolerance);
      }
      if (o.contains("bfgs")) {
        const json& b = o.at("bfgs");
        read_if(b, "fd_step", oc.bfgs.fd_step);
        read_if(b, "gradient_tolerance", oc.bfgs.gradient_tolerance);
      }
    }
    read_if(j, "cold_starts", c.cold_starts);
    read_if(j, "master_seed", c.master_seed);
    if (j.contains("x_axis")) c.x_axis = parse_axis(j.at("x_axis").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace famq
