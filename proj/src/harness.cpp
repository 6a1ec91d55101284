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

#include "famq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "famq/errors.hpp"

namespace famq {
namespace {

using nlohmann::json;
using std::numbers::pi;

std::string format_pi(double value) {
  std::ostringstream s;
  s << std::setprecision(4) << value / pi << "pi";
  return s.str();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::VectorXd json_vector(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

struct GraphEntry {
  std::string id;
  ProblemInstance instance;
};

std::vector<GraphEntry> graphs_for(const ExperimentConfig& config, int n) {
  std::vector<Graph> graphs = n <= 6 ? connected_atlas(n)
                                     : sample_connected(n, config.sampled_graphs,
                                                        derive_seed(config.master_seed, fnv1a("graphs") + n));
  if (config.max_graphs > 0 && static_cast<int>(graphs.size()) > config.max_graphs) graphs.resize(config.max_graphs);
  std::vector<GraphEntry> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream id;
    id << 'n' << n << '/' << std::setw(3) << std::setfill('0') << i;
    out.push_back({id.str(), maxcut_instance(graphs[i])});
  }
  return out;
}

bool vector_model(ZPhaseKind kind) { return kind == ZPhaseKind::qubit_dep || kind == ZPhaseKind::gamma_qubit_dep; }

ZPhaseModel error_model(const ErrorSetting& e, const Eigen::VectorXd& phis) {
  switch (e.kind) {
    case ZPhaseKind::zero:
      return ZPhaseModel::zero();
    case ZPhaseKind::fixed:
      return ZPhaseModel::fixed(e.phi);
    case ZPhaseKind::gamma_dep:
      return ZPhaseModel::gamma_dependent(e.phi);
    case ZPhaseKind::qubit_dep:
      return ZPhaseModel::qubit_dependent(phis);
    case ZPhaseKind::gamma_qubit_dep:
      return ZPhaseModel::gamma_qubit_dependent(phis);
  }
  throw ConfigError("unknown error model");
}

struct Task {
  int n = 0;
  std::size_t graph = 0;
  std::size_t variant = 0;
  int rounds = 0;
  std::size_t error = 0;
  int instance = 0;
  int calls = 0;
  double fidelity = 1;
  int rep = 0;
};

std::string series_label(const ExperimentConfig& c, const Task& t) {
  std::ostringstream s;
  s << c.variants[t.variant].label() << " p=" << t.rounds;
  const ErrorSetting& e = c.errors[t.error];
  if (c.errors.size() > 1) s << ' ' << (c.x_axis == XAxis::phi ? std::string(to_string(e.kind)) : e.label());
  if (c.x_axis != XAxis::qubits && c.n_qubits.size() > 1) s << " N=" << t.n;
  if (c.x_axis != XAxis::calls && c.max_calls.size() > 1) s << " calls=" << t.calls;
  if (c.x_axis != XAxis::cz_fidelity && c.cz_fidelities.size() > 1) s << " F=" << t.fidelity;
  return s.str();
}

double x_value(const ExperimentConfig& c, const Task& t) {
  switch (c.x_axis) {
    case XAxis::parameters:
      return parameter_count(c.variants[t.variant].spec(t.rounds, t.n));
    case XAxis::rounds:
      return t.rounds;
    case XAxis::qubits:
      return t.n;
    case XAxis::calls:
      return t.calls;
    case XAxis::phi:
      return c.errors[t.error].phi;
    case XAxis::cz_fidelity:
      return t.fidelity;
  }
  return 0;
}

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0 : s / static_cast<double>(v.size());
}

double population_std(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return v.empty() ? 0 : std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace

double approximation_ratio(const QuantumState& state, const ProblemInstance& instance) {
  if (!(instance.c_min < 0)) throw MetricError("approximation ratio needs a negative ground energy");
  return expectation(state, instance.diagonal) / instance.c_min;
}

double success_probability(const QuantumState& state, const ProblemInstance& instance) {
  return ground_overlap(state, std::span<const Eigen::Index>(instance.ground_set));
}

std::string VariantChoice::label() const { return spec(1, 1).label(); }

VariantChoice VariantChoice::parse(std::string_view label) {
  constexpr std::string_view suffix = "(scaled)";
  VariantChoice v;
  if (label.size() > suffix.size() && label.substr(label.size() - suffix.size()) == suffix) {
    v.scaled = true;
    label.remove_suffix(suffix.size());
  }
  v.variant = parse_variant(label);
  v.spec(1, 1).validate();
  return v;
}

std::string ErrorSetting::label() const {
  std::string out(to_string(kind));
  if (kind == ZPhaseKind::fixed || kind == ZPhaseKind::gamma_dep) out += " phi=" + format_pi(phi);
  if (vector_model(kind)) out += " max=" + format_pi(max_phi);
  return out;
}

std::string_view to_string(Backend b) { return b == Backend::atom ? "atom" : "agnostic"; }

std::string_view to_string(XAxis x) {
  switch (x) {
    case XAxis::parameters: return "parameters";
    case XAxis::rounds: return "rounds";
    case XAxis::qubits: return "qubits";
    case XAxis::calls: return "calls";
    case XAxis::phi: return "phi";
    case XAxis::cz_fidelity: return "cz_fidelity";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (variants.empty() || rounds.empty() || n_qubits.empty() || errors.empty() || cz_fidelities.empty() ||
      max_calls.empty()) {
    throw ConfigError("every sweep axis needs at least one value");
  }
  if (cold_starts < 1) throw ConfigError("cold_starts must be >= 1");
  if (sampled_graphs < 1 || max_graphs < 0) throw ConfigError("graph counts must be positive");
  for (int n : n_qubits) {
    if (n < 2 || n > kMaxQubits) throw ConfigError("n_qubits outside [2, " + std::to_string(kMaxQubits) + "]");
  }
  for (int p : rounds) {
    if (p < 1) throw ConfigError("rounds must be >= 1");
  }
  for (const auto& v : variants) v.spec(1, 2).validate();
  for (int c : max_calls) Budget{c, optimizer.budget.max_iterations}.validate();
  for (const auto& e : errors) {
    if (e.instances < 1) throw ConfigError("error instances must be >= 1");
    if (backend == Backend::atom && e.kind != ZPhaseKind::zero) {
      throw ConfigError("the atom backend runs without injected Z-phase errors");
    }
  }
  for (double f : cz_fidelities) {
    NoiseParams n = noise;
    n.cz_fidelity = f;
    n.validate();
  }
  if (backend == Backend::agnostic && (cz_fidelities.size() != 1 || cz_fidelities.front() != 1.0)) {
    throw ConfigError("CZ fidelities only apply to the atom backend");
  }
}

int default_thread_count() {
  if (const char* env = std::getenv("FAMQ_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();

  std::map<int, std::vector<GraphEntry>> graphs;
  for (int n : config.n_qubits) graphs[n] = graphs_for(config, n);

  std::vector<Task> tasks;
  for (int n : config.n_qubits) {
    for (std::size_t g = 0; g < graphs[n].size(); ++g) {
      for (std::size_t v = 0; v < config.variants.size(); ++v) {
        for (int p : config.rounds) {
          for (std::size_t e = 0; e < config.errors.size(); ++e) {
            const int instances = vector_model(config.errors[e].kind) ? config.errors[e].instances : 1;
            for (int i = 0; i < instances; ++i) {
              for (int calls : config.max_calls) {
                for (double f : config.cz_fidelities) {
                  for (int rep = 0; rep < config.cold_starts; ++rep) tasks.push_back({n, g, v, p, e, i, calls, f, rep});
                }
              }
            }
          }
        }
      }
    }
  }

  auto run_task = [&](const Task& t) {
    const GraphEntry& entry = graphs[t.n][t.graph];
    const ErrorSetting& setting = config.errors[t.error];
    const AnsatzSpec spec = config.variants[t.variant].spec(t.rounds, t.n);

    Eigen::VectorXd phis;
    if (vector_model(setting.kind)) {
      phis = random_phase_vector(t.n, setting.max_phi,
                                 derive_seed(derive_seed(config.master_seed, fnv1a("errors")), t.instance));
    }
    const ZPhaseModel model = error_model(setting, phis);
    const PhaseInjector hook = model.kind == ZPhaseKind::zero ? PhaseInjector{} : inject(model, t.n);
    NoiseParams noise = config.noise;
    noise.cz_fidelity = t.fidelity;
    const GridLayout layout = GridLayout::near_square(t.n);

    auto final_state = [&](const Eigen::VectorXd& x) {
      if (config.backend == Backend::atom) return simulate_noisy(compile(spec, x, entry.instance.graph, layout), noise);
      return evolve(spec, x, entry.instance.diagonal, hook);
    };
    int counted = 0;
    const CostFunction f = [&](const Eigen::VectorXd& x) {
      ++counted;
      return expectation(final_state(x), entry.instance.diagonal);
    };

    // Starting points depend on (graph, variant, p, repetition) only, so every
    // error setting, budget and CZ fidelity sees the same initial conditions.
    std::ostringstream key;
    key << entry.id << '|' << config.variants[t.variant].label() << "|p" << t.rounds;
    const ColdStartPlan plan{config.cold_starts, derive_seed(config.master_seed, fnv1a(key.str())),
                             default_bounds(spec)};
    OptimizerConfig optimizer = config.optimizer;
    optimizer.budget.max_calls = t.calls;
    const OptResult r = run_repetition(optimizer, plan, t.rep, f);

    const QuantumState state = final_state(r.best_params);
    RunRecord rec;
    rec.graph_id = entry.id;
    rec.n_qubits = t.n;
    rec.variant = spec.label();
    rec.rounds = t.rounds;
    rec.repetition = t.rep;
    rec.error_model = setting.label();
    rec.error_instance = t.instance;
    rec.phi = phis;
    rec.cz_fidelity = t.fidelity;
    rec.max_calls = t.calls;
    rec.series = series_label(config, t);
    rec.x_value = x_value(config, t);
    rec.params = r.best_params;
    rec.cost = r.best_cost;
    rec.approximation_ratio = approximation_ratio(state, entry.instance);
    rec.success_probability = success_probability(state, entry.instance);
    rec.calls_used = r.calls_used;
    rec.calls_counted = counted;
    rec.seed = derive_seed(plan.seed, static_cast<std::uint64_t>(t.rep));
    return rec;
  };

  std::vector<RunRecord> records(tasks.size());
  const int threads = std::max(1, std::min<int>(options.threads > 0 ? options.threads : default_thread_count(),
                                                static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0}, done{0};
  std::exception_ptr failure;
  std::mutex mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        records[i] = run_task(tasks[i]);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
      const std::size_t finished = ++done;
      if (options.progress) {
        std::lock_guard lock(mutex);
        options.progress(finished, tasks.size());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
  // (series, x) -> graph -> error instance -> per-repetition (AR, SP)
  using Reps = std::vector<std::pair<double, double>>;
  std::vector<std::pair<std::string, double>> order;
  std::map<std::pair<std::string, double>, std::map<std::string, std::map<int, Reps>>> groups;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.series, r.x_value);
    if (!groups.contains(key)) order.push_back(key);
    groups[key][r.graph_id][r.error_instance].emplace_back(r.approximation_ratio, r.success_probability);
  }
  std::vector<AggregateRow> rows;
  for (const auto& key : order) {
    std::vector<double> best_ar, best_sp, avg_ar, avg_sp;
    for (const auto& [graph, instances] : groups[key]) {
      std::vector<double> b_ar, b_sp, a_ar, a_sp;
      for (const auto& [instance, reps] : instances) {
        double bar = -1e300, bsp = -1e300;
        std::vector<double> ars, sps;
        for (const auto& [ar, sp] : reps) {
          bar = std::max(bar, ar);
          bsp = std::max(bsp, sp);
          ars.push_back(ar);
          sps.push_back(sp);
        }
        b_ar.push_back(bar);
        b_sp.push_back(bsp);
        a_ar.push_back(mean(ars));
        a_sp.push_back(mean(sps));
      }
      best_ar.push_back(mean(b_ar));
      best_sp.push_back(mean(b_sp));
      avg_ar.push_back(mean(a_ar));
      avg_sp.push_back(mean(a_sp));
    }
    const int n = static_cast<int>(best_ar.size());
    rows.push_back({key.first, key.second, "AR", mean(best_ar), population_std(best_ar), mean(avg_ar),
                    population_std(avg_ar), n});
    rows.push_back({key.first, key.second, "SP", mean(best_sp), population_std(best_sp), mean(avg_sp),
                    population_std(avg_sp), n});
  }
  return rows;
}

void write_records(std::ostream& out, const std::vector<RunRecord>& records) {
  for (const auto& r : records) {
    const json j = {{"graph_id", r.graph_id},
                    {"n_qubits", r.n_qubits},
                    {"variant", r.variant},
                    {"rounds", r.rounds},
                    {"repetition", r.repetition},
                    {"error_model", r.error_model},
                    {"error_instance", r.error_instance},
                    {"phi", vector_json(r.phi)},
                    {"cz_fidelity", r.cz_fidelity},
                    {"max_calls", r.max_calls},
                    {"series", r.series},
                    {"x_value", r.x_value},
                    {"params", vector_json(r.params)},
                    {"cost", r.cost},
                    {"approximation_ratio", r.approximation_ratio},
                    {"success_probability", r.success_probability},
                    {"calls_used", r.calls_used},
                    {"calls_counted", r.calls_counted},
                    {"seed", r.seed}};
    out << j.dump() << '\n';
  }
}

std::vector<RunRecord> read_records(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      RunRecord r;
      r.graph_id = j.at("graph_id");
      r.n_qubits = j.at("n_qubits");
      r.variant = j.at("variant");
      r.rounds = j.at("rounds");
      r.repetition = j.at("repetition");
      r.error_model = j.at("error_model");
      r.error_instance = j.at("error_instance");
      r.phi = json_vector(j.at("phi"));
      r.cz_fidelity = j.at("cz_fidelity");
      r.max_calls = j.at("max_calls");
      r.series = j.at("series");
      r.x_value = j.at("x_value");
      r.params = json_vector(j.at("params"));
      r.cost = j.at("cost");
      r.approximation_ratio = j.at("approximation_ratio");
      r.success_probability = j.at("success_probability");
      r.calls_used = j.at("calls_used");
      r.calls_counted = j.at("calls_counted");
      r.seed = j.at("seed");
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad record line: ") + e.what());
    }
  }
  return out;
}

void write_aggregate(std::ostream& out, const std::vector<AggregateRow>& rows) {
  const auto precision = out.precision(10);
  out << "variant,x_value,metric,best_mean,best_std,avg_mean,avg_std,n_graphs\n";
  for (const auto& r : rows) {
    out << '"' << r.series << "\"," << r.x_value << ',' << r.metric << ',' << r.best_mean << ',' << r.best_std << ','
        << r.avg_mean << ',' << r.avg_std << ',' << r.n_graphs << '\n';
  }
  out.precision(precision);
}

void persist_run(const std::string& directory, const ExperimentConfig& config, const std::vector<RunRecord>& records) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  auto open = [&](const char* name) {
    std::ofstream f(fs::path(directory) / name);
    if (!f) throw Error("cannot write " + (fs::path(directory) / name).string());
    return f;
  };
  auto cfg = open("config.json");
  cfg << config_to_json(config) << '\n';
  auto rec = open("records.jsonl");
  write_records(rec, records);
  auto agg = open("aggregate.csv");
  write_aggregate(agg, aggregate(records));
  if (!cfg || !rec || !agg) throw Error("failed writing results to " + directory);
}

CancellationReport verify_cancellation(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  CancellationReport report;
  report.trials = trials;
  report.min_control_deviation = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int p = 1 + static_cast<int>(rng() % 3);
    const auto inst = maxcut_instance(sample_connected(n, 1, rng()).front());
    std::vector<Eigen::VectorXd> phis;
    for (int k = 0; k < p; ++k) {
      phis.push_back(Eigen::VectorXd::NullaryExpr(n, [&] { return pi * (2 * unit(rng) - 1); }));
    }
    const Eigen::VectorXd gammas = Eigen::VectorXd::NullaryExpr(p, [&] { return 2 * pi * unit(rng); });
    const Eigen::VectorXd betas = Eigen::VectorXd::NullaryExpr(p, [&] { return pi * (0.1 + 0.3 * unit(rng)); });

    const AnsatzSpec qaoa{Variant::qaoa, p, n};
    const RVector<double> reference = probabilities(evolve(qaoa, pack_params(qaoa, gammas, betas), inst.diagonal));

    const CancellationPlan plan = cancellation_plan(phis);
    const AnsatzSpec fampn{Variant::fampn, p, n};
    Eigen::VectorXd thetas(p * n);
    for (int k = 0; k < p; ++k) thetas.segment(k * n, n) = plan.theta_rounds[k];
    const PhaseInjector hook = [&](int k, double) { return phis[k - 1]; };
    auto deviation = [&](const Eigen::VectorXd& th) {
      const auto out = evolve(fampn, pack_params(fampn, gammas, betas, th), inst.diagonal, hook);
      return (probabilities(out) - reference).cwiseAbs().maxCoeff();
    };
    report.max_deviation = std::max(report.max_deviation, deviation(thetas));
    Eigen::VectorXd perturbed = thetas;
    perturbed.head(n).array() += 0.1;
    report.min_control_deviation = std::min(report.min_control_deviation, deviation(perturbed));
  }
  report.passed = report.max_deviation <= 1e-10 && report.min_control_deviation > 1e-3;
  return report;
}

double qaoa_grid_max_sp(const DiagonalObservable& diagonal, Eigen::Index target, int steps) {
  // ⟨z*|U_M(β) e^{-iγH}|+⟩ = 2^{-N/2} Σ_d cos^{N-d}β (-i sinβ)^d S_d(γ), where
  // S_d sums e^{-iγ H_z} over bitstrings at Hamming distance d from z*.
  const int n = diagonal.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<std::vector<Complex>> weights(steps, std::vector<Complex>(n + 1));
  for (int j = 0; j < steps; ++j) {
    const double beta = pi * j / steps;
    const double c = std::cos(beta), s = std::sin(beta);
    for (int d = 0; d <= n; ++d) weights[j][d] = std::pow(c, n - d) * std::pow(Complex(0, -s), d);
  }
  const double norm = std::pow(2.0, -n);
  double best = 0;
  std::vector<Complex> sums(n + 1);
  for (int i = 0; i < 2 * steps; ++i) {
    const double gamma = pi * i / steps;
    std::fill(sums.begin(), sums.end(), Complex(0));
    for (Eigen::Index z = 0; z < dim; ++z) {
      sums[std::popcount(static_cast<std::uint64_t>(z ^ target))] += std::polar(1.0, -gamma * diagonal[z]);
    }
    for (int j = 0; j < steps; ++j) {
      Complex amp(0);
      for (int d = 0; d <= n; ++d) amp += weights[j][d] * sums[d];
      best = std::max(best, std::norm(amp) * norm);
    }
  }
  return best;
}

ExactReport verify_exact_solvable(std::uint64_t seed, int instances) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  ExactReport report;
  report.instances = instances;

  auto certificate_sp = [](const ExactInstance& inst, int n) {
    const AnsatzSpec famn{Variant::famn, 1, n};
    const auto& c = inst.certificate;
    const ParamVector params =
        pack_params(famn, Eigen::VectorXd::Constant(1, c.gamma), Eigen::VectorXd::Constant(1, c.beta), c.thetas);
    return ground_overlap(evolve(famn, params, inst.diagonal), std::span<const Eigen::Index>(inst.ground_set));
  };

  for (int accepted = 0; accepted < instances;) {
    ExactSolvableSpec spec;
    const int n = 3 + static_cast<int>(rng() % 2);
    spec.alphas = Eigen::VectorXd::NullaryExpr(n, [&] { return 2 * unit(rng) - 1; });
    spec.gamma = 0.5 + unit(rng);
    spec.m = static_cast<int>(rng() % 2);
    const int terms = static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      ManyBodyTerm term;
      for (int q = 0; q < n; ++q) {
        if (rng() & 1) term.qubits.push_back(q);
      }
      if (term.qubits.size() < 2) continue;
      term.multiplier = (rng() & 1) ? 1 : -1;
      spec.manybody_terms.push_back(term);
    }
    std::optional<ExactInstance> inst;
    try {
      inst = exact_instance(spec);
    } catch (const CertificateError&) {
      ++report.rejected_degenerate;
      continue;
    }
    ++accepted;
    report.min_certificate_sp = std::min(report.min_certificate_sp, certificate_sp(*inst, n));
    report.max_qaoa_sp = std::max(report.max_qaoa_sp, qaoa_grid_max_sp(inst->diagonal, inst->certificate.target));
  }

  ExactSolvableSpec uniform;
  uniform.alphas = Eigen::VectorXd::Ones(4);
  uniform.gamma = 1;
  const ExactInstance inst = exact_instance(uniform);
  report.uniform_certificate_sp = certificate_sp(inst, 4);
  report.uniform_qaoa_sp = qaoa_grid_max_sp(inst.diagonal, inst.certificate.target);

  report.passed = report.min_certificate_sp >= 1 - 1e-8 && report.max_qaoa_sp < 1 - 1e-3 &&
                  report.uniform_certificate_sp >= 1 - 1e-8 && report.uniform_qaoa_sp >= 1 - 1e-8;
  return report;
}

std::string report_to_json(const CancellationReport& r) {
  return json{{"check", "cancellation"},
              {"trials", r.trials},
              {"max_deviation", r.max_deviation},
              {"min_control_deviation", r.min_control_deviation},
              {"passed", r.passed}}
      .dump(2);
}

std::string report_to_json(const ExactReport& r) {
  return json{{"check", "exact_solvable"},
              {"instances", r.instances},
              {"rejected_degenerate", r.rejected_degenerate},
              {"min_certificate_sp", r.min_certificate_sp},
              {"max_qaoa_sp", r.max_qaoa_sp},
              {"uniform_certificate_sp", r.uniform_certificate_sp},
              {"uniform_qaoa_sp", r.uniform_qaoa_sp},
              {"passed", r.passed}}
      .dump(2);
}

}  // namespace famq
