#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "cspoly/commands.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/io.hpp"

using namespace cspoly;

namespace {

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("cspoly_test_" + name)).string(); }

}  // namespace

TEST_CASE("verify-rp5 defaults pass in canonical order") {
  VerifyRp5Options o;
  auto r = cmd_verify_rp5(o);
  CHECK(r.passed());
  REQUIRE(r.find("f-vector"));
  CHECK(r.find("f-vector")->actual.find("(48,552,2432,4776,4272,1424)") == 0);
  CHECK(r.find("homology-integer")->status == CheckStatus::skipped);
  CHECK(r.find("chromatic-numbers")->status == CheckStatus::skipped);
  const std::vector<std::string> order{"construction", "squared-norm", "central-symmetry", "hull", "simplicial", "f-vector",
                                       "disjoint-stars", "quotient", "quotient-f-vector", "quotient-skeleton", "homology-mod2"};
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(r.checks[i].name == order[i]);
  CHECK(same_outcome(r, cmd_verify_rp5(o)));
}

TEST_CASE("verify-rp5 rejects invalid parameters before computing") {
  VerifyRp5Options o;
  o.params.beta = o.params.alpha;
  CHECK_THROWS_AS(cmd_verify_rp5(o), PreconditionError);
}

TEST_CASE("verify-rp5 on other parameters reports failures and skips dependents") {
  VerifyRp5Options o;
  o.params = {Rational(1, 5), Rational(2, 5), Rational(3, 5)};
  auto r = cmd_verify_rp5(o);
  CHECK(r.find("squared-norm")->status == CheckStatus::pass);
  CHECK(r.find("construction")->status == CheckStatus::pass);
}

TEST_CASE("verify-rp5 on a degenerate file fails without crashing") {
  const auto path = temp_path("flat.txt");
  PointConfiguration flat;
  flat.dim = 6;
  for (int i = 0; i < 48; ++i) {
    RatVector v(6, 0);
    v[static_cast<std::size_t>(i % 5)] = i < 24 ? 1 + i : -(1 + i - 24);
    flat.points.push_back(v);
  }
  save_points(path, flat);
  VerifyRp5Options o;
  o.points_file = path;
  auto r = cmd_verify_rp5(o);
  CHECK_FALSE(r.passed());
  CHECK(r.find("hull")->status == CheckStatus::fail);
  CHECK(r.find("simplicial")->status == CheckStatus::skipped);
  CHECK(r.find("quotient")->status == CheckStatus::skipped);
  std::filesystem::remove(path);
}

TEST_CASE("analyze threshold rows") {
  AnalyzeOptions o;
  o.thresholds = {Rational(19, 49), Rational(15, 49), Rational(2)};
  auto r = cmd_analyze(o);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].regular_degree == 10u);
  CHECK(r.rows[0].coloring->upper_bound == 4);
  CHECK(r.rows[1].coloring->upper_bound == 7);
  CHECK(r.rows[2].regular_degree == 0u);
  CHECK(r.rows[2].edges == 0);
  CHECK(r.rows[2].coloring->upper_bound == 1);
  CHECK(r.to_json()["thresholds"][2]["chromatic_status"] == "exact");
}

TEST_CASE("analyze surfaces parse errors") {
  const auto path = temp_path("bad.txt");
  {
    std::ofstream out(path);
    out << "2 2\n1 2\n3 x\n";
  }
  AnalyzeOptions o;
  o.points_file = path;
  CHECK_THROWS_AS(cmd_analyze(o), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("quotient, homology and automorphism commands") {
  const auto out = temp_path("q.txt");
  QuotientOptions q;
  q.out = out;
  auto j = cmd_quotient(q);
  CHECK(j["f_vector"] == nlohmann::json::array({24, 276, 1216, 2388, 2136, 712}));
  HomologyOptions h;
  h.input.facets_file = out;
  CHECK(cmd_homology(h)["betti_mod2"] == nlohmann::json::array({1, 1, 1, 1, 1, 1}));
  AutomorphismOptions a;
  CHECK(cmd_automorphisms(a)["order"] == "192");
  a.input.facets_file = out;
  CHECK(cmd_automorphisms(a)["order"] == "96");
  std::filesystem::remove(out);
}

TEST_CASE("sparsify then rationalize reproduces the verification outcome") {
  const auto sp = temp_path("sparse.txt"), ra = temp_path("exact.txt");
  SparsifyOptions s;
  s.scramble = 5;
  s.out = sp;
  auto js = cmd_sparsify(s);
  CHECK(js["final_f"].get<double>() <= 576.0 / 7 + 0.5);
  CHECK(js["near_zero_coordinates"].get<std::size_t>() >= 144);
  RationalizeOptions r;
  r.points_file = sp;
  r.max_den = 7;
  r.out = ra;
  auto jr = cmd_rationalize(r);
  CHECK(jr["centrally_symmetric"] == true);
  VerifyRp5Options o;
  o.points_file = ra;
  std::string why;
  CHECK_MESSAGE(same_outcome(cmd_verify_rp5({}), cmd_verify_rp5(o), &why), why);
  std::filesystem::remove(sp);
  std::filesystem::remove(ra);
}

TEST_CASE("search summary") {
  SearchOptions o;
  o.seed = 7;
  o.iterations = 5000;
  auto j = cmd_search(o);
  CHECK(j["best_objective"].get<double>() >= j["initial_objective"].get<double>());
  CHECK(j["trace"].size() > 0);
}

TEST_CASE("analyze summarizes a facets file") {
  const auto path = temp_path("torus.txt");
  {
    std::ofstream out(path);
    for (int i = 0; i < 7; ++i) {
      std::vector<int> a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      out << a[0] << " " << a[1] << " " << a[2] << "\n" << b[0] << " " << b[1] << " " << b[2] << "\n";
    }
  }
  AnalyzeOptions o;
  o.facets_file = path;
  auto r = cmd_analyze(o);
  REQUIRE(r.facets);
  CHECK(r.rows.empty());
  CHECK(r.facets->f_vector == std::vector<std::size_t>{7, 21, 14});
  CHECK(r.facets->missing_edges == 0);
  CHECK(r.facets->automorphism_order == 42);
  std::filesystem::remove(path);
}
