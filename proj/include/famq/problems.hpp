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

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "famq/simcore.hpp"

namespace famq {

/// Simple undirected graph; edges are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  explicit Graph(int n_nodes = 0);
  Graph(int n_nodes, const std::vector<Edge>& edges);

  /// Throws on self-loops, duplicates and out-of-range nodes.
  void add_edge(int u, int v);

  int n_nodes() const { return n_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  bool is_connected() const;

  /// Bit i·n + j set for every edge (i, j); a labelled-graph key.
  std::uint64_t adjacency_bits() const;
  /// Minimum over node permutations of the upper-triangle edge mask; equal for isomorphic graphs.
  std::uint64_t canonical_code() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_nodes_ = 0;
  std::vector<Edge> edges_;
};

/// Graph file: first line n_nodes, then one "u v" line per edge.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
/// Several graphs separated by blank lines.
void write_graphs(std::ostream& out, const std::vector<Graph>& graphs);
std::vector<Graph> read_graphs(std::istream& in);

struct ProblemInstance {
  Graph graph;
  DiagonalObservable diagonal;
  double c_min = 0;
  std::vector<Eigen::Index> ground_set;
};

/// H = Σ_{(n,m)∈E} (Z_n Z_m − I)/2, i.e. diagonal[z] = −(edges cut by z).
ProblemInstance maxcut_instance(const Graph& graph);

/// Minimum entry and every index within Tolerances::ground_energy of it.
std::pair<double, std::vector<Eigen::Index>> ground_states(const DiagonalObservable& diagonal);

/// One representative per isomorphism class of connected graphs on n nodes
/// (2 ≤ n ≤ 6), ordered by edge count then canonical code.
std::vector<Graph> connected_atlas(int n_nodes);

/// `count` labelled connected graphs, uniform over labelled connected graphs,
/// by rejection sampling of uniform edge subsets.
std::vector<Graph> sample_connected(int n_nodes, int count, std::uint64_t seed);

struct ManyBodyTerm {
  std::vector<int> qubits;  // size >= 2
  int multiplier = 1;
};

/// H = Σ α_n Z_n + (2πm/γ) Σ_terms multiplier · Π Z.
struct ExactSolvableSpec {
  Eigen::VectorXd alphas;
  double gamma = 1;
  int m = 0;
  std::vector<ManyBodyTerm> manybody_terms;
};

/// Single-round N-FAM angles that prepare the target exactly.
struct ExactSolutionCertificate {
  double beta = 0;
  double gamma = 0;
  Eigen::VectorXd thetas;
  double theta_sigma = 0;  // Σ (−1)^{z*_n} θ_n
  Eigen::Index target = 0;
};

struct ExactInstance {
  DiagonalObservable diagonal;
  double c_min = 0;
  std::vector<Eigen::Index> ground_set;
  ExactSolutionCertificate certificate;
};

DiagonalObservable exact_solvable_diagonal(const ExactSolvableSpec& spec);

/// Builds the instance and its certificate. Without a target the unique ground
/// state is used. Throws CertificateError if the ground state is degenerate or
/// differs from the requested target.
ExactInstance exact_instance(const ExactSolvableSpec& spec, std::optional<Eigen::Index> target = std::nullopt);

}  // namespace famq
