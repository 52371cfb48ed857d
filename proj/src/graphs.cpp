#include "cspoly/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cspoly/errors.hpp"
#include "cspoly/hull.hpp"

namespace cspoly {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), nbrs_(n) {}

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
  if (a >= n_ || b >= n_) throw PreconditionError("edge endpoint out of range");
  if (adj_[a * n_ + b]) return;
  adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
  nbrs_[a].insert(std::lower_bound(nbrs_[a].begin(), nbrs_[a].end(), v), v);
  nbrs_[b].insert(std::lower_bound(nbrs_[b].begin(), nbrs_[b].end(), u), u);
  ++edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
  return out;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph threshold_graph(const PointConfiguration& config, const Rational& t) {
  if (config.size() == 0) throw PreconditionError("threshold graph of an empty configuration");
  Graph g(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j)
      if (dot(config.points[i], config.points[j]) > t) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.edges = g.edge_count();
  for (std::size_t v = 0; v < g.size(); ++v) p.degrees.push_back(g.degree(static_cast<int>(v)));
  if (!p.degrees.empty() && std::all_of(p.degrees.begin(), p.degrees.end(), [&](std::size_t x) { return x == p.degrees.front(); }))
    p.regular_degree = p.degrees.front();
  return p;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (coloring.size() != g.size()) return false;
  if (std::any_of(coloring.begin(), coloring.end(), [](int c) { return c < 0; })) return false;
  for (auto [u, v] : g.edges())
    if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::vector<int> greedy_clique(const Graph& g) {
  // Best of the cliques grown greedily from every start vertex.
  std::vector<int> best;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<int> clique{static_cast<int>(s)};
    std::vector<int> cand = g.neighbors(static_cast<int>(s));
    while (!cand.empty()) {
      // Candidate with the most neighbours among the remaining candidates.
      int pick = -1;
      std::size_t pick_deg = 0;
      for (int c : cand) {
        std::size_t deg = 0;
        for (int o : cand) deg += g.adjacent(c, o) ? 1 : 0;
        if (pick < 0 || deg > pick_deg) {
          pick = c;
          pick_deg = deg;
        }
      }
      clique.push_back(pick);
      std::vector<int> next;
      for (int c : cand)
        if (c != pick && g.adjacent(c, pick)) next.push_back(c);
      cand = std::move(next);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

// Saturation bookkeeping shared by the heuristic and the exact search.
class ColoringState {
 public:
  ColoringState(const Graph& g, std::size_t max_colors)
      : g_(g), k_(max_colors), color_(g.size(), -1), count_(g.size() * max_colors, 0), sat_(g.size(), 0), uncolored_deg_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) uncolored_deg_[v] = g.degree(static_cast<int>(v));
  }

  bool can_use(int v, int c) const { return count_[static_cast<std::size_t>(v) * k_ + static_cast<std::size_t>(c)] == 0; }

  void assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (int u : g_.neighbors(v)) {
      auto& cnt = count_[static_cast<std::size_t>(u) * k_ + static_cast<std::size_t>(c)];
      if (cnt++ == 0) ++sat_[static_cast<std::size_t>(u)];
      --uncolored_deg_[static_cast<std::size_t>(u)];
    }
  }

  void unassign(int v) {
    int c = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = -1;
    for (int u : g_.neighbors(v)) {
      auto& cnt = count_[static_cast<std::size_t>(u) * k_ + static_cast<std::size_t>(c)];
      if (--cnt == 0) --sat_[static_cast<std::size_t>(u)];
      ++uncolored_deg_[static_cast<std::size_t>(u)];
    }
  }

  // Uncolored vertex of maximum saturation, then maximum uncolored degree,
  // then lowest index; -1 when all are colored.
  int select() const {
    int best = -1;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0) {
        best = static_cast<int>(v);
        continue;
      }
      auto b = static_cast<std::size_t>(best);
      if (sat_[v] > sat_[b] || (sat_[v] == sat_[b] && uncolored_deg_[v] > uncolored_deg_[b])) best = static_cast<int>(v);
    }
    return best;
  }

  std::size_t saturation(int v) const { return sat_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::size_t k_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<std::size_t> sat_;
  std::vector<std::size_t> uncolored_deg_;
};

class ExactColoring {
 public:
  ExactColoring(const Graph& g, std::chrono::steady_clock::time_point deadline) : g_(g), deadline_(deadline) {}

  // Searches for a coloring with at most k colors, with the clique vertices
  // fixed to colors 0..|clique|-1. nullopt on timeout.
  std::optional<bool> colorable(std::size_t k, const std::vector<int>& clique) {
    ColoringState state(g_, k);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (i >= k) return false;
      state.assign(clique[i], static_cast<int>(i));
    }
    k_ = k;
    timed_out_ = false;
    bool found = dfs(state, clique.size(), clique.size());
    if (timed_out_) return std::nullopt;
    if (found) witness_ = found_;
    return found;
  }

  const std::vector<int>& witness() const { return witness_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool dfs(ColoringState& state, std::size_t colored, std::size_t used) {
    if (colored == g_.size()) {
      found_ = state.colors();
      return true;
    }
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return false;
    }
    int v = state.select();
    if (state.saturation(v) >= k_) return false;
    // Colors beyond `used` are interchangeable: only try the first fresh one.
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!state.can_use(v, static_cast<int>(c))) continue;
      state.assign(v, static_cast<int>(c));
      bool ok = dfs(state, colored + 1, std::max(used, c + 1));
      state.unassign(v);
      if (ok || timed_out_) return ok;
    }
    return false;
  }

  const Graph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t k_ = 0;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
  std::vector<int> found_;
  std::vector<int> witness_;
};

std::size_t colors_used(const std::vector<int>& coloring) {
  return coloring.empty() ? 0 : static_cast<std::size_t>(*std::max_element(coloring.begin(), coloring.end())) + 1;
}

// Maximum clique of the graph with adjacency `adj` (greedy-coloring bound).
template <typename Adj>
class MaxClique {
 public:
  MaxClique(std::size_t n, Adj adj) : n_(n), adj_(adj) {}

  std::vector<int> run() {
    std::vector<int> all(n_);
    std::iota(all.begin(), all.end(), 0);
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<int> cand) {
    while (!cand.empty()) {
      // Greedy coloring of the candidates; vertices sorted by color.
      std::vector<std::vector<int>> classes;
      for (int v : cand) {
        std::size_t c = 0;
        while (c < classes.size() &&
               std::any_of(classes[c].begin(), classes[c].end(), [&](int u) { return adj_(u, v); }))
          ++c;
        if (c == classes.size()) classes.emplace_back();
        classes[c].push_back(v);
      }
      std::vector<std::pair<int, std::size_t>> order;
      for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) order.emplace_back(v, c + 1);
      for (std::size_t idx = order.size(); idx-- > 0;) {
        auto [v, bound] = order[idx];
        if (cur_.size() + bound <= best_.size()) return;
        cur_.push_back(v);
        std::vector<int> next;
        for (std::size_t t = 0; t < idx; ++t)
          if (adj_(order[t].first, v)) next.push_back(order[t].first);
        if (next.empty()) {
          if (cur_.size() > best_.size()) best_ = cur_;
        } else {
          expand(next);
        }
        cur_.pop_back();
        cand.erase(std::find(cand.begin(), cand.end(), v));
      }
      return;
    }
  }

  std::size_t n_;
  Adj adj_;
  std::vector<int> cur_, best_;
};

// Partition of the vertex set into blocks drawn from `sets` (exact cover,
// most constrained vertex first). nullopt on timeout.
class ExactCover {
 public:
  ExactCover(std::size_t n, const std::vector<std::vector<int>>& sets, std::chrono::steady_clock::time_point deadline)
      : n_(n), sets_(sets), by_vertex_(n), covered_(n, 0), deadline_(deadline) {
    for (std::size_t s = 0; s < sets.size(); ++s)
      for (int v : sets[s]) by_vertex_[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
  }

  std::optional<bool> solve() {
    bool found = dfs(0);
    if (timed_out_) return std::nullopt;
    return found;
  }
  const std::vector<int>& chosen() const { return chosen_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool usable(int s) const {
    for (int v : sets_[static_cast<std::size_t>(s)])
      if (covered_[static_cast<std::size_t>(v)]) return false;
    return true;
  }

  bool dfs(std::size_t done) {
    if (done == n_) return true;
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return false;
    }
    int pick = -1;
    std::size_t pick_count = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (covered_[v]) continue;
      std::size_t count = 0;
      for (int s : by_vertex_[v]) count += usable(s) ? 1 : 0;
      if (pick < 0 || count < pick_count) {
        pick = static_cast<int>(v);
        pick_count = count;
        if (count == 0) return false;
      }
    }
    for (int s : by_vertex_[static_cast<std::size_t>(pick)]) {
      if (!usable(s)) continue;
      for (int v : sets_[static_cast<std::size_t>(s)]) covered_[static_cast<std::size_t>(v)] = 1;
      chosen_.push_back(s);
      bool ok = dfs(done + sets_[static_cast<std::size_t>(s)].size());
      if (ok) return true;
      chosen_.pop_back();
      for (int v : sets_[static_cast<std::size_t>(s)]) covered_[static_cast<std::size_t>(v)] = 0;
      if (timed_out_) return false;
    }
    return false;
  }

  std::size_t n_;
  const std::vector<std::vector<int>>& sets_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<char> covered_;
  std::vector<int> chosen_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
};

void extend_independent(const Graph& g, std::size_t size, std::vector<int>& cur, int next,
                        std::vector<std::vector<int>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (int v = next; static_cast<std::size_t>(v) < g.size(); ++v) {
    if (std::any_of(cur.begin(), cur.end(), [&](int u) { return g.adjacent(u, v); })) continue;
    cur.push_back(v);
    extend_independent(g, size, cur, v + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g) {
  auto non_adjacent = [&g](int u, int v) { return u != v && !g.adjacent(u, v); };
  return MaxClique<decltype(non_adjacent)>(g.size(), non_adjacent).run();
}

std::vector<std::vector<int>> independent_sets(const Graph& g, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (size == 0) return {{}};
  extend_independent(g, size, cur, 0, out);
  return out;
}

std::vector<int> dsatur_coloring(const Graph& g) {
  ColoringState state(g, std::max<std::size_t>(g.size(), 1));
  for (std::size_t i = 0; i < g.size(); ++i) {
    int v = state.select();
    int c = 0;
    while (!state.can_use(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

ColoringResult chromatic_number(const Graph& g, std::chrono::duration<double> time_limit) {
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(time_limit);
  ColoringResult result;
  if (g.size() == 0) {
    result.status = ProofStatus::exact;
    return result;
  }
  result.coloring = dsatur_coloring(g);
  result.upper_bound = colors_used(result.coloring);
  std::vector<int> clique = greedy_clique(g);
  result.clique_size = clique.size();
  result.lower_bound = clique.size();
  std::size_t alpha = 0;
  if (result.lower_bound < result.upper_bound) {
    alpha = maximum_independent_set(g).size();
    result.independence_number = alpha;
    result.lower_bound = std::max(result.lower_bound, (g.size() + alpha - 1) / alpha);
  }

  ExactColoring search(g, deadline);
  std::size_t cover_nodes = 0;
  while (result.lower_bound < result.upper_bound) {
    const std::size_t k = result.upper_bound - 1;
    std::optional<bool> ok;
    if (k == result.lower_bound && k * alpha == g.size()) {
      // Every color class must be a maximum independent set.
      auto sets = independent_sets(g, alpha);
      ExactCover cover(g.size(), sets, deadline);
      ok = cover.solve();
      cover_nodes += cover.nodes();
      if (ok && *ok) {
        result.coloring.assign(g.size(), -1);
        for (std::size_t c = 0; c < cover.chosen().size(); ++c)
          for (int v : sets[static_cast<std::size_t>(cover.chosen()[c])]) result.coloring[static_cast<std::size_t>(v)] = static_cast<int>(c);
        result.upper_bound = colors_used(result.coloring);
        continue;
      }
    } else {
      ok = search.colorable(k, clique);
      if (ok && *ok) {
        result.coloring = search.witness();
        result.upper_bound = colors_used(result.coloring);
        continue;
      }
    }
    if (!ok) break;  // timed out: keep the bounds
    result.lower_bound = result.upper_bound;
  }
  result.nodes = search.nodes() + cover_nodes;
  if (result.lower_bound == result.upper_bound) result.status = ProofStatus::exact;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

EdgeRuleCheck verify_edge_rule(const PointConfiguration& config, const HullStructure& h) {
  const std::size_t n = config.size();
  Graph hull_graph(n);
  for (auto [i, j] : hull_edges(h)) hull_graph.add_edge(i, j);
  Graph positive = threshold_graph(config, Rational(0));
  EdgeRuleCheck out;
  out.hull_edges = hull_graph.edge_count();
  out.positive_pairs = positive.edge_count();
  for (std::size_t i = 0; i < n && out.holds; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (hull_graph.adjacent(static_cast<int>(i), static_cast<int>(j)) != positive.adjacent(static_cast<int>(i), static_cast<int>(j))) {
        out.holds = false;
        out.counterexample = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        break;
      }
  return out;
}

}  // namespace cspoly
