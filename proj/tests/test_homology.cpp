#include <doctest.h>

#include <random>

#include "cspoly/constructions.hpp"
#include "cspoly/homology.hpp"
#include "fixtures.hpp"

using namespace cspoly;

namespace {

SimplicialComplex rp2() {
  auto ico = fixtures::icosahedron(Rational(8, 5));
  return antipodal_quotient(boundary_complex(facet_enumeration(ico)), Involution{ico.pairing});
}

void check_boundaries_compose(const SimplicialComplex& c) {
  auto ms = boundary_matrices(c);
  for (std::size_t k = 1; k < ms.size(); ++k) CHECK(composes_to_zero(ms[k - 1], ms[k]));
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes") {
  check_boundaries_compose(fixtures::simplex_boundary(6));
  check_boundaries_compose(fixtures::torus7());
  check_boundaries_compose(rp2());
  auto p = build_p648();
  auto b = boundary_complex(facet_enumeration(p));
  check_boundaries_compose(b);
  check_boundaries_compose(antipodal_quotient(b, Involution{p.pairing}));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) check_boundaries_compose(fixtures::random_complex(rng, 9, 3, 10));
}

TEST_CASE("spheres, torus and projective plane") {
  CHECK(betti_mod2(fixtures::simplex_boundary(5)) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(integer_homology(fixtures::simplex_boundary(5)).to_string() == "(Z, 0, 0, Z)");
  CHECK(betti_mod2(fixtures::torus7()) == std::vector<std::size_t>{1, 2, 1});
  CHECK(integer_homology(fixtures::torus7()).to_string() == "(Z, Z^2, Z)");
  CHECK(betti_mod2(rp2()) == std::vector<std::size_t>{1, 1, 1});
  auto h = integer_homology(rp2());
  CHECK(h.to_string() == "(Z, Z/2, 0)");
  CHECK(homology_euler_characteristic(h) == euler_characteristic(rp2()));
}

TEST_CASE("disjoint union and cone") {
  std::vector<Face> two_circles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  SimplicialComplex c(6, two_circles);
  CHECK(betti_mod2(c) == std::vector<std::size_t>{2, 2});
  std::vector<Face> cone;
  const auto torus = fixtures::torus7();
  for (auto f : torus.facets()) {
    f.push_back(7);
    cone.push_back(f);
  }
  CHECK(integer_homology(SimplicialComplex(8, cone)).to_string() == "(Z, 0, 0, 0)");
}

TEST_CASE("invariant factors of small matrices") {
  BoundaryMatrix m;
  m.rows = 2;
  m.cols = 2;
  m.columns = {{{0, 2}, {1, 6}}, {{0, 4}, {1, 8}}};
  CHECK(invariant_factors(m) == std::vector<Integer>{2, 4});
  BoundaryMatrix z;
  z.rows = 3;
  z.cols = 1;
  z.columns = {{{0, 6}, {2, 10}}};
  CHECK(invariant_factors(z) == std::vector<Integer>{2});
}

TEST_CASE("mod-2 and rational ranks agree with integer homology") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = fixtures::random_complex(rng, 8, 2, 9);
    auto h = integer_homology(c);
    auto b2 = betti_mod2(c);
    REQUIRE(b2.size() == h.groups.size());
    for (std::size_t k = 0; k < b2.size(); ++k) {
      std::size_t even_torsion = 0, even_below = 0;
      for (const auto& t : h.groups[k].torsion) even_torsion += t % 2 == 0 ? 1 : 0;
      if (k > 0)
        for (const auto& t : h.groups[k - 1].torsion) even_below += t % 2 == 0 ? 1 : 0;
      // Universal coefficients over Z/2.
      CHECK(b2[k] == h.groups[k].betti + even_torsion + even_below);
    }
    CHECK(homology_euler_characteristic(h) == euler_characteristic(c));
  }
}

TEST_CASE("homology of the 24-vertex RP^5") {
  auto p = build_p648();
  auto q = antipodal_quotient(boundary_complex(facet_enumeration(p)), Involution{p.pairing});
  CHECK(betti_mod2(q) == std::vector<std::size_t>(6, 1));
  CHECK(integer_homology(q).to_string() == "(Z, Z/2, 0, Z/2, 0, Z)");
}
