#pragma once

// Simple undirected graphs, threshold graphs on point sets, degree
// statistics and exact chromatic numbers.

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cspoly/ratmath.hpp"

namespace cspoly {

struct PointConfiguration;
struct HullStructure;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  /// Ignores loops and duplicate edges.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0; }
  const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return nbrs_[static_cast<std::size_t>(v)].size(); }

  /// Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  static Graph complete(std::size_t n);

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_;
};

Graph threshold_graph(const PointConfiguration& config, const Rational& t);

struct DegreeProfile {
  std::optional<std::size_t> regular_degree;
  std::vector<std::size_t> degrees;
  std::size_t edges = 0;
};
DegreeProfile degree_profile(const Graph& g);

enum class ProofStatus { exact, bounded };

struct ColoringResult {
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::vector<int> coloring;  // witness using exactly upper_bound colors
  ProofStatus status = ProofStatus::bounded;
  std::size_t clique_size = 0;         // size of the greedy clique
  std::size_t independence_number = 0; // 0 when not computed
  std::size_t nodes = 0;               // search nodes explored
  double seconds = 0;

  std::optional<std::size_t> chromatic_number() const {
    if (status == ProofStatus::exact) return upper_bound;
    return std::nullopt;
  }
};

/// DSATUR upper bound; lower bound max(clique, ceil(n / alpha)); then
/// exhausts (k-1)-colorings by branch and bound. When n = k * alpha a
/// k-coloring is a partition into maximum independent sets and is searched
/// for as an exact cover. Returns bounds when the time limit is hit.
ColoringResult chromatic_number(const Graph& g, std::chrono::duration<double> time_limit = std::chrono::seconds(600));

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);

/// A clique found greedily (deterministic, used as a lower bound).
std::vector<int> greedy_clique(const Graph& g);

/// A maximum independent set (exact branch and bound on the complement).
std::vector<int> maximum_independent_set(const Graph& g);

/// All independent sets with exactly `size` vertices, each sorted.
std::vector<std::vector<int>> independent_sets(const Graph& g, std::size_t size);

/// Deterministic DSATUR coloring; ties broken by lowest vertex index.
std::vector<int> dsatur_coloring(const Graph& g);

struct EdgeRuleCheck {
  bool holds = true;
  std::size_t hull_edges = 0;
  std::size_t positive_pairs = 0;
  std::optional<std::pair<int, int>> counterexample;
};

/// Compares the hull's 1-skeleton with the graph of pairs with positive
/// inner product.
EdgeRuleCheck verify_edge_rule(const PointConfiguration& config, const HullStructure& h);

}  // namespace cspoly
