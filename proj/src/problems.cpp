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

#include "famq/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace famq {

Graph::Graph(int n_nodes) : n_nodes_(n_nodes) {
  if (n_nodes < 0) throw RangeError("negative node count");
}

Graph::Graph(int n_nodes, const std::vector<Edge>& edges) : Graph(n_nodes) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_nodes_ || v >= n_nodes_) throw RangeError("edge endpoint out of range");
  if (u == v) throw RangeError("self-loop");
  const Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw RangeError("duplicate edge");
  edges_.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
}

bool Graph::is_connected() const {
  if (n_nodes_ <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_nodes_));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_nodes_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_nodes_;
}

std::uint64_t Graph::adjacency_bits() const {
  std::uint64_t bits = 0;
  for (auto [u, v] : edges_) bits |= std::uint64_t{1} << (u * n_nodes_ + v);
  return bits;
}

namespace {

// Index of pair (i, j), i < j, in row-major upper-triangle order.
int pair_index(int i, int j, int n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

std::uint64_t Graph::canonical_code() const {
  std::vector<int> perm(static_cast<std::size_t>(n_nodes_));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges_) {
      const int a = perm[static_cast<std::size_t>(u)];
      const int b = perm[static_cast<std::size_t>(v)];
      code |= std::uint64_t{1} << pair_index(std::min(a, b), std::max(a, b), n_nodes_);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n_nodes() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::optional<Graph> read_one(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!blank(line) && line[0] != '#') break;
  }
  if (!in && line.empty()) return std::nullopt;
  if (blank(line)) return std::nullopt;
  std::istringstream header(line);
  int n = 0;
  if (!(header >> n) || n < 1) throw ConfigError("graph file: bad node count line '" + line + "'");
  Graph g(n);
  while (std::getline(in, line)) {
    if (blank(line)) break;
    if (line[0] == '#') continue;
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v)) throw ConfigError("graph file: bad edge line '" + line + "'");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto g = read_one(in);
  if (!g) throw ConfigError("graph file is empty");
  return *g;
}

void write_graphs(std::ostream& out, const std::vector<Graph>& graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << '\n';
    write_graph(out, graphs[i]);
  }
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  while (auto g = read_one(in)) out.push_back(std::move(*g));
  return out;
}

std::pair<double, std::vector<Eigen::Index>> ground_states(const DiagonalObservable& diagonal) {
  const double c_min = diagonal.values().minCoeff();
  std::vector<Eigen::Index> ground;
  for (Eigen::Index z = 0; z < diagonal.size(); ++z) {
    if (diagonal[z] <= c_min + Tolerances::ground_energy) ground.push_back(z);
  }
  return {c_min, std::move(ground)};
}

ProblemInstance maxcut_instance(const Graph& graph) {
  check_qubit_count(graph.n_nodes());
  const Eigen::Index dim = Eigen::Index{1} << graph.n_nodes();
  Eigen::VectorXd d(dim);
  for (Eigen::Index z = 0; z < dim; ++z) {
    int cut = 0;
    for (auto [u, v] : graph.edges()) cut += ((z >> u) & 1) != ((z >> v) & 1);
    d[z] = -cut;
  }
  DiagonalObservable diagonal(std::move(d));
  auto [c_min, ground] = ground_states(diagonal);
  return ProblemInstance{graph, std::move(diagonal), c_min, std::move(ground)};
}

std::vector<Graph> connected_atlas(int n_nodes) {
  if (n_nodes < 2 || n_nodes > 6) throw RangeError("atlas supports 2 <= n <= 6");
  std::vector<Graph::Edge> pairs;
  for (int i = 0; i < n_nodes; ++i) {
    for (int j = i + 1; j < n_nodes; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Graph>> reps;
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto edge_count = static_cast<std::size_t>(std::popcount(mask));
    if (edge_count + 1 < static_cast<std::size_t>(n_nodes)) continue;
    Graph g(n_nodes);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
    }
    if (!g.is_connected()) continue;
    const std::pair<std::size_t, std::uint64_t> key{edge_count, g.canonical_code()};
    if (seen.insert(key).second) reps.emplace_back(key, std::move(g));
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> sample_connected(int n_nodes, int count, std::uint64_t seed) {
  if (n_nodes < 2) throw RangeError("sampling needs at least 2 nodes");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(out.size()) < count) {
    Graph g(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
      for (int j = i + 1; j < n_nodes; ++j) {
        if (rng() & 1) g.add_edge(i, j);
      }
    }
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

DiagonalObservable exact_solvable_diagonal(const ExactSolvableSpec& spec) {
  const int n = static_cast<int>(spec.alphas.size());
  check_qubit_count(n);
  if (spec.gamma == 0.0) throw CertificateError("gamma must be nonzero");
  const double unit = 2 * std::numbers::pi * spec.m / spec.gamma;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd d(dim);
  for (Eigen::Index z = 0; z < dim; ++z) {
    double e = 0;
    for (int q = 0; q < n; ++q) e += ((z >> q) & 1) ? -spec.alphas[q] : spec.alphas[q];
    for (const auto& term : spec.manybody_terms) {
      int parity = 0;
      for (int q : term.qubits) parity ^= static_cast<int>((z >> q) & 1);
      e += unit * term.multiplier * (parity ? -1.0 : 1.0);
    }
    d[z] = e;
  }
  return DiagonalObservable(std::move(d));
}

ExactInstance exact_instance(const ExactSolvableSpec& spec, std::optional<Eigen::Index> target) {
  for (const auto& term : spec.manybody_terms) {
    if (term.qubits.size() < 2) throw ConfigError("many-body terms act on at least two qubits");
    for (int q : term.qubits) {
      if (q < 0 || q >= spec.alphas.size()) throw RangeError("many-body term qubit out of range");
    }
  }
  DiagonalObservable diagonal = exact_solvable_diagonal(spec);
  auto [c_min, ground] = ground_states(diagonal);
  if (ground.size() != 1) throw CertificateError("ground state is degenerate");
  const Eigen::Index z_star = target.value_or(ground.front());
  if (z_star != ground.front()) throw CertificateError("target is not the ground state");

  // With β = π/4, qubit n lands on |z*_n⟩ when θ_n = (−1)^{z*_n} π/2 − 2γα_n;
  // the many-body terms contribute phases 2π·integer.
  const int n = static_cast<int>(spec.alphas.size());
  ExactSolutionCertificate cert;
  cert.beta = std::numbers::pi / 4;
  cert.gamma = spec.gamma;
  cert.target = z_star;
  cert.thetas.resize(n);
  for (int q = 0; q < n; ++q) {
    const double sign = ((z_star >> q) & 1) ? -1.0 : 1.0;
    const double theta = sign * std::numbers::pi / 2 - 2 * spec.gamma * spec.alphas[q];
    cert.thetas[q] = theta - 2 * std::numbers::pi * std::floor(theta / (2 * std::numbers::pi));
    cert.theta_sigma += sign * cert.thetas[q];
  }
  return ExactInstance{std::move(diagonal), c_min, std::move(ground), std::move(cert)};
}

}  // namespace famq
