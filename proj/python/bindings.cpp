#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cspoly/commands.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/homology.hpp"

namespace py = pybind11;
using namespace cspoly;

namespace {

P648Parameters params(const std::string& alpha, const std::string& beta, const std::string& gamma) {
  return {parse_rational(alpha), parse_rational(beta), parse_rational(gamma)};
}

SimplicialComplex complex_of(const std::vector<std::vector<int>>& facets) {
  int n = 0;
  for (const auto& f : facets)
    for (int v : f) n = std::max(n, v + 1);
  std::vector<Face> sorted;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    sorted.push_back(std::move(f));
  }
  return SimplicialComplex(static_cast<std::size_t>(n), std::move(sorted));
}

ComplexInput input(const std::optional<std::string>& points, const std::optional<std::string>& facets, const std::string& alpha,
                   const std::string& beta, const std::string& gamma) {
  return {points, facets, params(alpha, beta, gamma)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toolkit for centrally symmetric polytopes; functions return JSON text";
  m.attr("__version__") = kToolkitVersion;
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def(
      "verify_rp5",
      [](const std::string& alpha, const std::string& beta, const std::string& gamma, std::optional<std::string> points,
         bool integer_homology, bool chromatic, double time_limit) {
        VerifyRp5Options o;
        o.params = params(alpha, beta, gamma);
        o.points_file = std::move(points);
        o.integer_homology = integer_homology;
        o.chromatic = chromatic;
        o.time_limit_seconds = time_limit;
        py::gil_scoped_release release;
        return cmd_verify_rp5(o).to_json().dump();
      },
      py::arg("alpha") = "3/7", py::arg("beta") = "4/7", py::arg("gamma") = "5/7", py::arg("points") = py::none(),
      py::arg("integer_homology") = false, py::arg("chromatic") = false, py::arg("time_limit") = 600.0);

  m.def(
      "verify_rp6",
      [](const std::string& source, std::optional<std::string> points, std::uint64_t seed, int max_tries, bool integer_homology) {
        VerifyRp6Options o;
        if (source == "builtin-p790") {
          o.source = Rp6Source::builtin_p790;
        } else if (source == "points-file") {
          o.source = Rp6Source::points_file;
        } else if (source == "cone-cylinder") {
          o.source = Rp6Source::cone_cylinder;
        } else {
          throw PreconditionError("unknown source '" + source + "'");
        }
        o.points_file = std::move(points);
        o.cone.seed = seed;
        o.max_tries = max_tries;
        o.integer_homology = integer_homology;
        py::gil_scoped_release release;
        return cmd_verify_rp6(o).to_json().dump();
      },
      py::arg("source") = "builtin-p790", py::arg("points") = py::none(), py::arg("seed") = 1, py::arg("max_tries") = 32,
      py::arg("integer_homology") = false);

  m.def(
      "analyze",
      [](std::optional<std::string> points, std::optional<std::string> facets, std::vector<std::string> thresholds, bool chromatic,
         double time_limit) {
        AnalyzeOptions o;
        o.points_file = std::move(points);
        o.facets_file = std::move(facets);
        for (const auto& t : thresholds) o.thresholds.push_back(parse_rational(t));
        o.chromatic = chromatic;
        o.time_limit_seconds = time_limit;
        py::gil_scoped_release release;
        return cmd_analyze(o).to_json().dump();
      },
      py::arg("points") = py::none(), py::arg("facets") = py::none(), py::arg("thresholds") = std::vector<std::string>{},
      py::arg("chromatic") = true, py::arg("time_limit") = 600.0);

  m.def(
      "search",
      [](std::size_t n, std::size_t dim, std::uint64_t seed, std::size_t iterations, std::optional<std::string> out) {
        SearchOptions o;
        o.n = n;
        o.dim = dim;
        o.seed = seed;
        o.iterations = iterations;
        o.out = std::move(out);
        py::gil_scoped_release release;
        return cmd_search(o).dump();
      },
      py::arg("n") = 12, py::arg("dim") = 3, py::arg("seed") = 1, py::arg("iterations") = 100000, py::arg("out") = py::none());

  m.def(
      "sparsify",
      [](std::optional<std::string> points, std::uint64_t seed, std::optional<std::uint64_t> scramble, std::optional<std::string> out) {
        SparsifyOptions o;
        o.points_file = std::move(points);
        o.seed = seed;
        o.scramble = scramble;
        o.out = std::move(out);
        py::gil_scoped_release release;
        return cmd_sparsify(o).dump();
      },
      py::arg("points") = py::none(), py::arg("seed") = 1, py::arg("scramble") = py::none(), py::arg("out") = py::none());

  m.def(
      "rationalize",
      [](const std::string& points, long max_den, std::optional<std::string> out) {
        RationalizeOptions o;
        o.points_file = points;
        o.max_den = max_den;
        o.out = std::move(out);
        return cmd_rationalize(o).dump();
      },
      py::arg("points"), py::arg("max_den") = 1000, py::arg("out") = py::none());

  m.def(
      "quotient",
      [](std::optional<std::string> points, std::optional<std::string> out) {
        QuotientOptions o;
        o.input = input(points, std::nullopt, "3/7", "4/7", "5/7");
        o.out = std::move(out);
        py::gil_scoped_release release;
        return cmd_quotient(o).dump();
      },
      py::arg("points") = py::none(), py::arg("out") = py::none());

  m.def(
      "homology",
      [](std::optional<std::string> points, std::optional<std::string> facets, bool integer) {
        HomologyOptions o;
        o.input = input(points, facets, "3/7", "4/7", "5/7");
        o.integer = integer;
        py::gil_scoped_release release;
        return cmd_homology(o).dump();
      },
      py::arg("points") = py::none(), py::arg("facets") = py::none(), py::arg("integer") = false);

  m.def(
      "automorphisms",
      [](std::optional<std::string> points, std::optional<std::string> facets) {
        AutomorphismOptions o;
        o.input = input(points, facets, "3/7", "4/7", "5/7");
        py::gil_scoped_release release;
        return cmd_automorphisms(o).dump();
      },
      py::arg("points") = py::none(), py::arg("facets") = py::none());

  m.def(
      "build_p648",
      [](const std::string& alpha, const std::string& beta, const std::string& gamma) {
        std::vector<std::vector<std::string>> out;
        for (const auto& p : build_p648(params(alpha, beta, gamma)).points) {
          std::vector<std::string> row;
          for (const auto& x : p) row.push_back(to_string(x));
          out.push_back(std::move(row));
        }
        return out;
      },
      py::arg("alpha") = "3/7", py::arg("beta") = "4/7", py::arg("gamma") = "5/7");

  m.def("f_vector", [](const std::vector<std::vector<int>>& facets) { return f_vector(complex_of(facets)); }, py::arg("facets"));
  m.def("betti_mod2", [](const std::vector<std::vector<int>>& facets) { return betti_mod2(complex_of(facets)); }, py::arg("facets"));
  m.def(
      "integer_homology", [](const std::vector<std::vector<int>>& facets) { return integer_homology(complex_of(facets)).to_string(); },
      py::arg("facets"));

  m.def(
      "chromatic_number",
      [](std::size_t n, const std::vector<std::pair<int, int>>& edges, double time_limit) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        auto r = chromatic_number(g, std::chrono::duration<double>(time_limit));
        py::dict d;
        d["lower"] = r.lower_bound;
        d["upper"] = r.upper_bound;
        d["exact"] = r.status == ProofStatus::exact;
        d["coloring"] = r.coloring;
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("time_limit") = 600.0);

  m.def(
      "best_rational",
      [](double x, long max_den) {
        Rational r = best_rational(x, max_den);
        return std::make_pair(r.get_num().get_str(), r.get_den().get_str());
      },
      py::arg("x"), py::arg("max_den"));
}
