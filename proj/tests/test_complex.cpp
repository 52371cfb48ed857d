#include <doctest.h>

#include <random>

#include "cspoly/constructions.hpp"
#include "cspoly/errors.hpp"
#include "fixtures.hpp"

using namespace cspoly;

namespace {

SimplicialComplex icosahedron_boundary() { return boundary_complex(facet_enumeration(fixtures::icosahedron(Rational(8, 5)))); }

Involution pairing_of(const PointConfiguration& c) { return Involution{c.pairing}; }

}  // namespace

TEST_CASE("simplex boundary f-vector and Euler characteristic") {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto c = fixtures::simplex_boundary(n);
    auto f = f_vector(c);
    REQUIRE(f.size() == n - 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
      // C(n, k+1)
      std::size_t binom = 1;
      for (std::size_t i = 0; i <= k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(f[k] == binom);
    }
    CHECK(euler_characteristic(c) == (n % 2 ? 0 : 2));
  }
}

TEST_CASE("faces, stars and links of the octahedron boundary") {
  auto oct = fixtures::cross_polytope(3);
  auto c = boundary_complex(facet_enumeration(oct));
  CHECK(f_vector(c) == std::vector<std::size_t>{6, 12, 8});
  auto lk = link(c, {0});
  CHECK(f_vector(lk) == std::vector<std::size_t>{4, 4});
  CHECK_FALSE(lk.contains_face({0}));
  CHECK_FALSE(lk.contains_face({3}));
  auto st = star(c, {0});
  CHECK(st.facets().size() == 4);
  CHECK(st.contains_face({0, 1}));
  CHECK(c.faces(1).size() == 12);
}

TEST_CASE("octahedron fails the disjoint-star condition; icosahedron satisfies it") {
  auto oct = fixtures::cross_polytope(3);
  auto r = check_disjoint_stars(boundary_complex(facet_enumeration(oct)), pairing_of(oct));
  CHECK_FALSE(r.holds);
  CHECK(r.methods_agree);
  CHECK(r.violations.size() == 3);

  auto ico = fixtures::icosahedron(Rational(8, 5));
  auto ok = check_disjoint_stars(icosahedron_boundary(), pairing_of(ico));
  CHECK(ok.holds);
  CHECK(ok.methods_agree);
}

TEST_CASE("antipodal quotient of the icosahedron is the 6-vertex projective plane") {
  auto ico = fixtures::icosahedron(Rational(8, 5));
  auto q = antipodal_quotient(icosahedron_boundary(), pairing_of(ico));
  CHECK(f_vector(q) == std::vector<std::size_t>{6, 15, 10});
  CHECK(euler_characteristic(q) == 1);
  CHECK(skeleton_graph(q) == Graph::complete(6));
}

TEST_CASE("quotient rejects an involution violating the star condition") {
  auto oct = fixtures::cross_polytope(3);
  CHECK_THROWS_AS(antipodal_quotient(boundary_complex(facet_enumeration(oct)), pairing_of(oct)), PreconditionError);
}

TEST_CASE("involution validation") {
  auto validate = [](std::vector<int> map, std::size_t n) { Involution{std::move(map)}.validate(n); };
  CHECK_NOTHROW(validate({1, 0, 3, 2}, 4));
  CHECK_THROWS_AS(validate({1, 2, 0}, 3), PreconditionError);
  CHECK_THROWS_AS(validate({0, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(validate({1, 0}, 3), PreconditionError);
}

TEST_CASE("complex constructor rejects malformed facets") {
  auto make = [](std::vector<Face> facets) { return SimplicialComplex(3, std::move(facets)); };
  CHECK_THROWS_AS(make({{0, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(make({{0, 5}}), PreconditionError);
}

TEST_CASE("canonical form is invariant under relabeling") {
  auto p = build_p648();
  auto q = antipodal_quotient(boundary_complex(facet_enumeration(p)), Involution{p.pairing});
  const auto reference = canonical_form(q);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto perm = fixtures::random_permutation(rng, q.n_vertices());
    auto form = canonical_form(relabel(q, perm));
    CHECK(form.same_type(reference));
  }
}

TEST_CASE("canonical form separates non-isomorphic complexes") {
  CHECK(isomorphic(fixtures::torus7(), relabel(fixtures::torus7(), {3, 1, 4, 0, 6, 5, 2})));
  CHECK_FALSE(isomorphic(fixtures::torus7(), fixtures::simplex_boundary(7)));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = fixtures::random_complex(rng, 8, 2, 6);
    auto perm = fixtures::random_permutation(rng, 8);
    auto b = relabel(a, perm);
    CHECK(isomorphic(a, b));
    CHECK(f_vector(a) == f_vector(b));
  }
}

TEST_CASE("automorphism groups of small complexes") {
  CHECK(automorphism_group(fixtures::simplex_boundary(5)).order == 120);
  CHECK(automorphism_group(boundary_complex(facet_enumeration(fixtures::cross_polytope(3)))).order == 48);
  CHECK(automorphism_group(icosahedron_boundary()).order == 120);
  // Seven-vertex torus: AGL(1,7) of order 42.
  auto g = automorphism_group(fixtures::torus7());
  CHECK(g.order == 42);
  REQUIRE(g.elements);
  for (const auto& p : *g.elements) CHECK(is_automorphism(fixtures::torus7(), p));
}

TEST_CASE("link classification of the icosahedron boundary") {
  auto c = icosahedron_boundary();
  auto v = classify_face_links(c, 0);
  REQUIRE(v.size() == 1);
  CHECK(v[0].count == 12);
  CHECK(v[0].sample_f_vector == std::vector<std::size_t>{5, 5});
  auto e = classify_face_links(c, 1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].count == 30);
}

TEST_CASE("permutation group closure and Schreier-Sims") {
  std::vector<Permutation> sym6{{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}};
  auto g = group_closure(sym6, 6);
  CHECK(g.order == 720);
  REQUIRE(g.elements);
  CHECK(g.elements->size() == 720);
  CHECK(schreier_sims_order(sym6, 6) == 720);
  std::vector<Permutation> sym9{{1, 0, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7, 8, 0}};
  CHECK(schreier_sims_order(sym9, 9) == 362880);
  auto capped = group_closure(sym9, 9, 1000);
  CHECK(capped.order == 362880);
  CHECK_FALSE(capped.elements);
  // Dihedral group of the 8-gon.
  CHECK(group_closure({{1, 2, 3, 4, 5, 6, 7, 0}, {0, 7, 6, 5, 4, 3, 2, 1}}, 8).order == 16);
  Permutation a{2, 0, 1, 3}, b{1, 0, 3, 2};
  CHECK(compose(a, inverse(a)) == identity_permutation(4));
  CHECK(compose(a, b)[0] == a[b[0]]);
  CHECK_FALSE(is_permutation({0, 0, 1}));
}
