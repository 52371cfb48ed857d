#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cspoly/commands.hpp"
#include "cspoly/errors.hpp"

namespace {

enum ExitCode { kPass = 0, kCheckFailure = 1, kParseError = 2, kPreconditionError = 3 };

struct Common {
  std::string alpha, beta, gamma;
  std::string points, facets;
  std::string json;
};

void add_params(CLI::App* app, Common& c) {
  app->add_option("--alpha", c.alpha, "first coordinate value (p/q)");
  app->add_option("--beta", c.beta, "second coordinate value (p/q)");
  app->add_option("--gamma", c.gamma, "third coordinate value (p/q)");
}

cspoly::P648Parameters params(const Common& c) {
  cspoly::P648Parameters p;
  if (!c.alpha.empty()) p.alpha = cspoly::parse_rational(c.alpha);
  if (!c.beta.empty()) p.beta = cspoly::parse_rational(c.beta);
  if (!c.gamma.empty()) p.gamma = cspoly::parse_rational(c.gamma);
  return p;
}

std::optional<std::string> opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

cspoly::ComplexInput complex_input(const Common& c) {
  return {opt(c.points), opt(c.facets), params(c)};
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw cspoly::PreconditionError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int emit_report(const cspoly::VerificationReport& r, const Common& c) {
  if (c.json != "-") std::cout << r.to_text();
  write_json(c.json, r.to_json());
  return r.passed() ? kPass : kCheckFailure;
}

int emit_summary(const nlohmann::ordered_json& j, const Common& c) {
  if (c.json != "-") std::cout << j.dump(2) << "\n";
  write_json(c.json, j);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for centrally symmetric polytopes and their antipodal quotients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cspoly::kToolkitVersion));
  Common c;
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", c.json, "write the JSON document to PATH ('-' for stdout)"); };

  cspoly::VerifyRp5Options rp5;
  auto* v5 = app.add_subcommand("verify-rp5", "verify the 48-point polytope and its RP^5 quotient");
  add_params(v5, c);
  v5->add_option("--points", c.points, "verify a points file instead of the built-in construction");
  v5->add_flag("--integer-homology", rp5.integer_homology, "compute integer homology");
  v5->add_flag("--chromatic", rp5.chromatic, "compute exact chromatic numbers of the threshold graphs");
  v5->add_option("--time-limit", rp5.time_limit_seconds, "seconds per chromatic computation")->check(CLI::PositiveNumber);
  add_json(v5);

  cspoly::VerifyRp6Options rp6;
  std::string source = "builtin-p790";
  std::string apex, delta;
  auto* v6 = app.add_subcommand("verify-rp6", "verify a 7-dimensional polytope and its RP^6 quotient");
  v6->add_option("--source", source, "builtin-p790, points-file or cone-cylinder")
      ->check(CLI::IsMember({"builtin-p790", "points-file", "cone-cylinder"}));
  add_params(v6, c);
  v6->add_option("--points", c.points, "input (points-file) or base configuration (cone-cylinder)");
  v6->add_option("--seed", rp6.cone.seed, "first perturbation seed");
  v6->add_option("--max-tries", rp6.max_tries, "perturbation seeds to try")->check(CLI::PositiveNumber);
  v6->add_option("--apex-height", apex, "apex height (p/q)");
  v6->add_option("--delta", delta, "perturbation scale (p/q)");
  v6->add_flag("--integer-homology", rp6.integer_homology, "compute integer homology");
  add_json(v6);

  cspoly::AnalyzeOptions an;
  std::vector<std::string> thresholds;
  bool no_chromatic = false;
  auto* a = app.add_subcommand("analyze", "threshold graphs of a configuration, or a facets summary");
  add_params(a, c);
  a->add_option("--points", c.points, "points file (default: the built-in construction)");
  a->add_option("--facets", c.facets, "facets file to summarize");
  a->add_option("--threshold", thresholds, "threshold p/q (repeatable)");
  a->add_flag("--no-chromatic", no_chromatic, "skip chromatic numbers");
  a->add_option("--time-limit", an.time_limit_seconds, "seconds per chromatic computation")->check(CLI::PositiveNumber);
  add_json(a);

  cspoly::SearchOptions se;
  std::string init;
  auto* s = app.add_subcommand("search", "anneal n antipodal unit vectors to maximize the minimum edge inner product");
  s->add_option("--n", se.n, "number of points (even)");
  s->add_option("--dim", se.dim, "ambient dimension");
  s->add_option("--seed", se.seed, "random seed");
  s->add_option("--iters", se.iterations, "annealing iterations");
  s->add_option("--points", init, "warm start from a points file");
  s->add_option("--out", se.out, "write the best configuration (float points file)");
  add_json(s);

  cspoly::SparsifyOptions sp;
  auto* sparsify = app.add_subcommand("sparsify", "rotate a float configuration to minimize its L1 norm");
  add_params(sparsify, c);
  sparsify->add_option("--points", sp.points_file, "points file (default: the built-in construction)");
  sparsify->add_option("--seed", sp.seed, "random seed for restarts");
  sparsify->add_option("--iters", sp.max_sweeps, "maximum sweeps");
  sparsify->add_option("--restarts", sp.restarts, "extra random starts");
  sparsify->add_option("--scramble", sp.scramble, "rotate by a random rotation with this seed first");
  sparsify->add_option("--out", sp.out, "write the rotated configuration");
  add_json(sparsify);

  cspoly::RationalizeOptions ra;
  long max_den = 1000;
  auto* r = app.add_subcommand("rationalize", "round a float configuration to exact rationals");
  r->add_option("--points", ra.points_file, "float points file")->required();
  r->add_option("--max-den", max_den, "largest denominator")->check(CLI::PositiveNumber);
  r->add_option("--out", ra.out, "write the exact points file");
  add_json(r);

  cspoly::QuotientOptions qu;
  auto* q = app.add_subcommand("quotient", "antipodal quotient of a polytope boundary");
  add_params(q, c);
  q->add_option("--points", c.points, "points file (default: the built-in construction)");
  q->add_option("--out", qu.out, "write the quotient facets");
  add_json(q);

  cspoly::HomologyOptions ho;
  auto* h = app.add_subcommand("homology", "homology of a facets file or of a polytope's antipodal quotient");
  add_params(h, c);
  h->add_option("--points", c.points, "points file (default: the built-in construction)");
  h->add_option("--facets", c.facets, "facets file");
  h->add_flag("--integer-homology", ho.integer, "compute integer homology");
  add_json(h);

  auto* au = app.add_subcommand("automorphisms", "combinatorial automorphism group of a complex");
  add_params(au, c);
  au->add_option("--points", c.points, "points file (default: the built-in construction)");
  au->add_option("--facets", c.facets, "facets file");
  add_json(au);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kParseError;
  }

  try {
    if (v5->parsed()) {
      rp5.params = params(c);
      rp5.points_file = opt(c.points);
      return emit_report(cspoly::cmd_verify_rp5(rp5), c);
    }
    if (v6->parsed()) {
      rp6.source = source == "builtin-p790"  ? cspoly::Rp6Source::builtin_p790
                   : source == "points-file" ? cspoly::Rp6Source::points_file
                                             : cspoly::Rp6Source::cone_cylinder;
      rp6.points_file = opt(c.points);
      rp6.params = params(c);
      if (!apex.empty()) rp6.cone.apex_height = cspoly::parse_rational(apex);
      if (!delta.empty()) rp6.cone.delta = cspoly::parse_rational(delta);
      return emit_report(cspoly::cmd_verify_rp6(rp6), c);
    }
    if (a->parsed()) {
      an.points_file = opt(c.points);
      an.facets_file = opt(c.facets);
      an.params = params(c);
      an.chromatic = !no_chromatic;
      for (const auto& t : thresholds) an.thresholds.push_back(cspoly::parse_rational(t));
      auto result = cspoly::cmd_analyze(an);
      if (c.json != "-") std::cout << result.to_text();
      write_json(c.json, result.to_json());
      return kPass;
    }
    if (s->parsed()) {
      se.initial_points = opt(init);
      return emit_summary(cspoly::cmd_search(se), c);
    }
    if (sparsify->parsed()) {
      sp.params = params(c);
      return emit_summary(cspoly::cmd_sparsify(sp), c);
    }
    if (r->parsed()) {
      ra.max_den = max_den;
      return emit_summary(cspoly::cmd_rationalize(ra), c);
    }
    if (q->parsed()) {
      qu.input = complex_input(c);
      return emit_summary(cspoly::cmd_quotient(qu), c);
    }
    if (h->parsed()) {
      ho.input = complex_input(c);
      return emit_summary(cspoly::cmd_homology(ho), c);
    }
    if (au->parsed()) return emit_summary(cspoly::cmd_automorphisms({complex_input(c)}), c);
  } catch (const cspoly::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const cspoly::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPreconditionError;
  }
  return kPass;
}
