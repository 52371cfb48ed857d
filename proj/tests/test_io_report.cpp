#include <doctest.h>

#include <sstream>

#include "cspoly/constructions.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/io.hpp"
#include "cspoly/report.hpp"
#include "fixtures.hpp"

using namespace cspoly;

namespace {

std::string parse_error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_points(in, "mem");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("points round trip") {
  auto p = build_p648();
  std::stringstream s;
  write_points(s, p);
  auto q = read_points(s, "mem");
  CHECK(q.points == p.points);
  CHECK(q.dim == 6);
  CHECK(q.pairing == p.pairing);
  CHECK(points_checksum(q) == points_checksum(p));
}

TEST_CASE("points parsing with comments and errors") {
  std::istringstream ok("# header\n2 2\n1/2 -1/2 # trailing\n-1/2 1/2\n");
  auto c = read_points(ok, "mem");
  CHECK(c.size() == 2);
  CHECK(c.points[0][0] == Rational(1, 2));
  CHECK(c.has_pairing());
  CHECK(parse_error_of("2 2\n1 2\n3\n").find("mem:3") == 0);
  CHECK(parse_error_of("2 2\n1 2\n3 1/0\n").find("mem:3") == 0);
  CHECK(parse_error_of("2 3\n1 2\n3 4\n").find("mem") == 0);
  CHECK(parse_error_of("x 2\n").find("mem:1") == 0);
  CHECK_FALSE(parse_error_of("").empty());
}

TEST_CASE("facets round trip and validation") {
  auto c = fixtures::torus7();
  std::stringstream s;
  write_facets(s, c);
  auto d = read_facets(s, "mem");
  CHECK(d == c);
  CHECK(facets_checksum(d) == facets_checksum(c));
  std::istringstream nonpure("0 1 2\n2 3\n");
  CHECK_THROWS_AS(read_facets(nonpure, "mem"), ParseError);
  std::istringstream nonpure2("0 1 2\n2 3\n");
  CHECK(read_facets(nonpure2, "mem", true).facets().size() == 2);
  std::istringstream repeated("0 1 1\n");
  CHECK_THROWS_AS(read_facets(repeated, "mem"), ParseError);
  std::istringstream negative("0 -1 2\n");
  CHECK_THROWS_AS(read_facets(negative, "mem"), ParseError);
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("report verdict and JSON round trip") {
  ReportBuilder rb("demo");
  rb.checksum("input", "abc");
  rb.run("one", "1", [] { return std::pair{true, std::string("1")}; });
  rb.skip("two", "2", "not requested");
  rb.run("three", "3", [] { return std::pair{true, std::string("3")}; }, true);
  auto r = rb.finish();
  CHECK(r.passed());
  auto back = VerificationReport::from_json(nlohmann::ordered_json::parse(r.to_json().dump()));
  CHECK(back == r);
  CHECK(r.to_json()["verdict"] == "pass");

  ReportBuilder bad("demo");
  bad.run("one", "1", []() -> std::pair<bool, std::string> { throw PreconditionError("boom"); });
  auto f = bad.finish();
  CHECK_FALSE(f.passed());
  CHECK(f.checks[0].actual == "error: boom");
  CHECK(f.to_text().find("verdict: FAIL") != std::string::npos);
  CHECK_THROWS_AS(VerificationReport::from_json(nlohmann::ordered_json::parse("{\"title\": 1}")), ParseError);
}

TEST_CASE("same_outcome ignores timings and frame-dependent checks") {
  auto make = [](const std::string& frame_value, const std::string& value) {
    ReportBuilder rb("demo");
    rb.run("a", "x", [&] { return std::pair{true, value}; });
    rb.run("frame", "x", [&] { return std::pair{true, frame_value}; }, true);
    return rb.finish();
  };
  auto a = make("p", "x"), b = make("q", "x"), c = make("p", "y");
  b.checks[0].elapsed_ms = 1e6;
  CHECK(same_outcome(a, b));
  std::string why;
  CHECK_FALSE(same_outcome(a, c, &why));
  CHECK(why.find("a:") == 0);
}
