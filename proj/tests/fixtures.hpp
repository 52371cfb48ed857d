#pragma once

// Small configurations, complexes and brute-force oracles shared by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cspoly/complex.hpp"
#include "cspoly/graph.hpp"
#include "cspoly/hull.hpp"
#include "cspoly/search.hpp"

namespace fixtures {

using cspoly::Rational;
using cspoly::RatVector;

inline cspoly::PointConfiguration config_of(std::vector<RatVector> pts) {
  cspoly::PointConfiguration c;
  c.dim = pts.front().size();
  c.points = std::move(pts);
  if (auto p = c.detect_pairing()) c.pairing = *p;
  return c;
}

inline cspoly::PointConfiguration cube3() {
  std::vector<RatVector> pts;
  for (int m = 0; m < 8; ++m) pts.push_back({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1});
  return config_of(pts);
}

inline cspoly::PointConfiguration cross_polytope(std::size_t d) {
  std::vector<RatVector> pts;
  for (int s : {1, -1})
    for (std::size_t i = 0; i < d; ++i) {
      RatVector p(d, 0);
      p[i] = s;
      pts.push_back(p);
    }
  return config_of(pts);
}

// (0,±1,±t) and cyclic shifts; combinatorially an icosahedron for t near the golden ratio.
inline cspoly::PointConfiguration icosahedron(const Rational& t) {
  std::vector<RatVector> pts;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Rational a = s1, b = s2 * t;
      pts.push_back({0, a, b});
      pts.push_back({a, b, 0});
      pts.push_back({b, 0, a});
    }
  return config_of(pts);
}

inline cspoly::FloatConfig icosahedron_float() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  cspoly::FloatConfig out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      double a = s1, b = s2 * phi;
      out.push_back(Eigen::Vector3d(0, a, b).normalized());
      out.push_back(Eigen::Vector3d(a, b, 0).normalized());
      out.push_back(Eigen::Vector3d(b, 0, a).normalized());
    }
  return out;
}

inline cspoly::SimplicialComplex simplex_boundary(std::size_t n) {
  std::vector<cspoly::Face> facets;
  for (std::size_t skip = 0; skip < n; ++skip) {
    cspoly::Face f;
    for (std::size_t v = 0; v < n; ++v)
      if (v != skip) f.push_back(static_cast<int>(v));
    facets.push_back(f);
  }
  return cspoly::SimplicialComplex(n, facets);
}

// Seven-vertex torus.
inline cspoly::SimplicialComplex torus7() {
  std::vector<cspoly::Face> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  for (auto& f : facets) std::sort(f.begin(), f.end());
  return cspoly::SimplicialComplex(7, facets);
}

inline cspoly::SimplicialComplex random_complex(std::mt19937_64& rng, int n, int k, int count) {
  std::vector<cspoly::Face> facets;
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::shuffle(verts.begin(), verts.end(), rng);
    cspoly::Face f(verts.begin(), verts.begin() + k + 1);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return cspoly::SimplicialComplex::generated_by(static_cast<std::size_t>(n), facets);
}

inline cspoly::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  cspoly::Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline cspoly::Graph cycle(int n) {
  cspoly::Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline cspoly::Graph petersen() {
  cspoly::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Kneser graph K(n,2): pairs, adjacent when disjoint. Chromatic number n-2.
inline cspoly::Graph kneser2(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  cspoly::Graph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

// Mycielski construction: triangle-free when g is, chromatic number one higher.
inline cspoly::Graph mycielski(const cspoly::Graph& g) {
  const int n = static_cast<int>(g.size());
  cspoly::Graph m(static_cast<std::size_t>(2 * n + 1));
  for (auto [u, v] : g.edges()) {
    m.add_edge(u, v);
    m.add_edge(u, n + v);
    m.add_edge(n + u, v);
  }
  for (int i = 0; i < n; ++i) m.add_edge(n + i, 2 * n);
  return m;
}

inline cspoly::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  cspoly::Graph g(static_cast<std::size_t>(n));
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline bool colorable_brute(const cspoly::Graph& g, int k) {
  std::vector<int> color(g.size(), -1);
  std::function<bool(int)> go = [&](int v) {
    if (v == static_cast<int>(g.size())) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && color[static_cast<std::size_t>(u)] == c) ok = false;
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline std::size_t chromatic_brute(const cspoly::Graph& g) {
  int k = 1;
  while (!colorable_brute(g, k)) ++k;
  return static_cast<std::size_t>(k);
}

inline std::size_t independence_brute(const cspoly::Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((m >> u & 1) && (m >> v & 1) && g.adjacent(static_cast<int>(u), static_cast<int>(v))) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
  }
  return best;
}

}  // namespace fixtures
