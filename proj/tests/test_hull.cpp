#include <doctest.h>

#include <random>
#include <set>

#include "cspoly/constructions.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/hull.hpp"
#include "fixtures.hpp"

using namespace cspoly;

namespace {

std::set<std::vector<int>> facet_sets(const HullStructure& h, const std::vector<int>& relabel) {
  std::set<std::vector<int>> out;
  for (const auto& f : h.facets) {
    std::vector<int> v;
    for (int i : f.vertices) v.push_back(relabel[static_cast<std::size_t>(i)]);
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

// Facets by brute force: affinely spanning d-subsets whose hyperplane supports every point.
std::set<std::vector<int>> brute_force_facets(const PointConfiguration& c) {
  const std::size_t n = c.size(), d = c.dim;
  std::set<std::vector<int>> out;
  std::vector<int> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      RatMatrix m(d, d + 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) m(r, k) = c.points[static_cast<std::size_t>(idx[r])][k];
        m(r, d) = 1;
      }
      if (rank(m) < d) return;
      // Normal from cofactors of the augmented matrix.
      RatVector normal(d + 1);
      for (std::size_t col = 0; col <= d; ++col) {
        RatMatrix minor(d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t k = 0, kk = 0; k <= d; ++k)
            if (k != col) minor(r, kk++) = m(r, k);
        normal[col] = (col % 2 ? -1 : 1) * det(minor);
      }
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (std::size_t i = 0; i < n; ++i) {
        Rational s = normal[d];
        for (std::size_t k = 0; k < d; ++k) s += normal[k] * c.points[i][k];
        if (s > 0) ++pos;
        if (s < 0) ++neg;
        if (s == 0) on.push_back(static_cast<int>(i));
      }
      if (pos == 0 || neg == 0) out.insert(on);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = static_cast<int>(i);
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<int> identity_labels(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("cube hull: 6 square facets and 12 edges") {
  auto h = facet_enumeration(fixtures::cube3());
  CHECK(h.facets.size() == 6);
  for (const auto& f : h.facets) CHECK(f.vertices.size() == 4);
  CHECK(hull_vertices(h).size() == 8);
  CHECK(hull_edges(h).size() == 12);
  CHECK_FALSE(is_simplicial(h).simplicial);
  CHECK(validate_hull(h).empty());
}

TEST_CASE("cross-polytope hull has 2^d simplex facets") {
  for (std::size_t d = 2; d <= 6; ++d) {
    auto h = facet_enumeration(fixtures::cross_polytope(d));
    CHECK(h.facets.size() == (1u << d));
    CHECK(is_simplicial(h).simplicial);
    CHECK(hull_edges(h).size() == 2 * d * (d - 1));
  }
}

TEST_CASE("hull matches brute force on random point sets") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<RatVector> pts(9, RatVector(d));
    for (auto& p : pts)
      for (auto& x : p) x = Rational(coord(rng), 1 + trial % 2);
    PointConfiguration c;
    c.dim = d;
    c.points = pts;
    auto h = facet_enumeration(c);
    CHECK(validate_hull(h).empty());
    CHECK(facet_sets(h, identity_labels(c.size())) == brute_force_facets(c));
  }
}

TEST_CASE("interior points are not vertices") {
  auto c = fixtures::cube3();
  c.points.push_back({0, 0, 0});
  c.points.push_back({Rational(1, 2), 0, 0});
  c.points.push_back({1, 0, 0});
  c.pairing.clear();
  auto h = facet_enumeration(c);
  CHECK(hull_vertices(h).size() == 8);
  CHECK(h.facets.size() == 6);
}

TEST_CASE("degenerate configurations are rejected") {
  PointConfiguration c;
  c.dim = 3;
  c.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK_THROWS_AS(facet_enumeration(c), DegenerateConfiguration);
  c.points.resize(2);
  CHECK_THROWS_AS(facet_enumeration(c), PreconditionError);
}

TEST_CASE("rational icosahedron is simplicial with 20 facets") {
  auto h = facet_enumeration(fixtures::icosahedron(Rational(8, 5)));
  CHECK(h.facets.size() == 20);
  CHECK(is_simplicial(h).simplicial);
  CHECK(hull_edges(h).size() == 30);
}

TEST_CASE("hull is independent of insertion order") {
  const auto base = build_p648();
  const auto reference = facet_sets(facet_enumeration(base), identity_labels(base.size()));
  CHECK(reference.size() == 1424);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    auto perm = fixtures::random_permutation(rng, base.size());
    PointConfiguration shuffled;
    shuffled.dim = base.dim;
    for (int i : perm) shuffled.points.push_back(base.points[static_cast<std::size_t>(i)]);
    CHECK(facet_sets(facet_enumeration(shuffled), perm) == reference);
  }
}

TEST_CASE("facet hyperplanes are primitive and support every point") {
  auto h = facet_enumeration(build_p648());
  for (const auto& f : h.facets) {
    Integer g = f.plane.offset;
    for (const auto& x : f.plane.normal) g = gcd(g, x);
    CHECK(abs(g) == 1);
    for (std::size_t i = 0; i < h.config.size(); ++i) {
      Rational v = f.plane.evaluate(h.config.points[i]);
      bool on = std::binary_search(f.vertices.begin(), f.vertices.end(), static_cast<int>(i));
      CHECK((on ? v == 0 : v != 0));
    }
  }
}
