#include <doctest.h>

#include <random>

#include "cspoly/constructions.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/search.hpp"
#include "fixtures.hpp"

using namespace cspoly;

namespace {

// Best approximation with denominator <= n by exhaustive search over denominators.
Rational best_rational_brute(double x, long n) {
  Rational best;
  double err = 1e300;
  for (long q = 1; q <= n; ++q) {
    for (long p : {static_cast<long>(std::floor(x * q)), static_cast<long>(std::ceil(x * q))}) {
      double e = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
      if (e < err - 1e-15) {
        err = e;
        best = Rational(p, q);
        best.canonicalize();
      }
    }
  }
  return best;
}

FloatConfig half_of(const FloatConfig& pts) {
  FloatConfig out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool seen = false;
    for (const auto& q : out) seen = seen || (q + pts[i]).norm() < 1e-12;
    if (!seen) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("float hull of the icosahedron") {
  auto ico = fixtures::icosahedron_float();
  auto edges = float_hull_edges(ico);
  CHECK(edges.size() == 30);
  double smallest = 1;
  for (auto [u, v] : edges) smallest = std::min(smallest, ico[static_cast<std::size_t>(u)].dot(ico[static_cast<std::size_t>(v)]));
  CHECK(smallest == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(minmax_edge_objective(half_of(ico)) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("float hull edges agree with exact hull edges") {
  auto p = build_p648();
  auto exact = hull_edges(facet_enumeration(p));
  const auto all = to_float(p);
  CHECK(float_hull_edges(all) == exact);
  FloatConfig half(all.begin(), all.begin() + 24);
  CHECK(minmax_edge_objective(normalized(half)) == doctest::Approx(6.0 / 25).epsilon(1e-12));
}

TEST_CASE("antipodal closure") {
  FloatConfig half{Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)};
  auto all = antipodal_closure(half);
  REQUIRE(all.size() == 4);
  CHECK((all[0] + all[2]).norm() == 0);
  CHECK((all[1] + all[3]).norm() == 0);
}

TEST_CASE("degenerate float configurations are rejected") {
  FloatConfig flat{Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)};
  CHECK_THROWS_AS(float_hull_edges(antipodal_closure(flat)), DegenerateFloatConfiguration);
}

TEST_CASE("annealing is deterministic with a monotone best-so-far trace") {
  AnnealingSchedule s;
  auto a = minmax_edge_search(12, 3, 7, 20000, s);
  auto b = minmax_edge_search(12, 3, 7, 20000, s);
  CHECK(a.best_objective == b.best_objective);
  CHECK(a.trace == b.trace);
  for (std::size_t i = 1; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].first >= a.trace[i - 1].first);
    CHECK(a.trace[i].second >= a.trace[i - 1].second);
  }
  CHECK(a.trace.back().second == a.best_objective);
  CHECK(a.best_objective <= 1 / std::sqrt(5.0) + 1e-9);
  for (const auto& p : a.best_points) CHECK(p.norm() == doctest::Approx(1));
  CHECK_THROWS_AS(minmax_edge_search(6, 3, 1, 10), PreconditionError);
  CHECK_THROWS_AS(minmax_edge_search(13, 3, 1, 10), PreconditionError);
}

TEST_CASE("best rational approximation agrees with exhaustive search") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    double x = u(rng);
    long n = 1 + trial % 40;
    CHECK(best_rational(x, n) == best_rational_brute(x, n));
  }
  CHECK(best_rational(3.0 / 7 + 1e-13, 7) == Rational(3, 7));
  CHECK(best_rational(M_PI, 1000) == Rational(355, 113));
}

TEST_CASE("rationalize symmetrizes near-antipodes") {
  FloatConfig pts{Eigen::Vector2d(3.0 / 7 + 1e-12, -4.0 / 7), Eigen::Vector2d(-3.0 / 7, 4.0 / 7 + 1e-12),
                  Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(-0.5, -0.5)};
  auto c = rationalize(pts, 7);
  CHECK(c.has_pairing());
  CHECK(c.points[0] == RatVector{Rational(3, 7), Rational(-4, 7)});
  CHECK(c.points[1] == negate(c.points[0]));
}

TEST_CASE("random rotations are orthogonal with determinant one") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto q = random_rotation(6, seed);
    CHECK((q * q.transpose() - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
    CHECK(q.determinant() == doctest::Approx(1));
  }
}

TEST_CASE("L1 sparsification recovers the coordinate frame") {
  auto p = to_float(build_p648());
  CHECK(l1_objective(Eigen::MatrixXd::Identity(6, 6), p) == doctest::Approx(576.0 / 7).epsilon(1e-12));
  auto scrambled = apply_frame(random_rotation(6, 3), p);
  CHECK(l1_objective(Eigen::MatrixXd::Identity(6, 6), scrambled) > 576.0 / 7 + 1);
  auto r = l1_sparsify(scrambled, 1);
  CHECK(r.value <= 576.0 / 7 + 0.5);
  CHECK(r.frame.orthogonality_error() < 1e-10);
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] <= r.history[i - 1] + 1e-12);
  std::size_t zeros = 0;
  for (const auto& x : apply_frame(r.frame.q, scrambled))
    for (Eigen::Index k = 0; k < x.size(); ++k) zeros += std::abs(x[k]) < 1e-6 ? 1 : 0;
  CHECK(zeros >= 144);
}
