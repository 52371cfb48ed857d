#include "cspoly/commands.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cspoly/complex.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/homology.hpp"
#include "cspoly/io.hpp"

namespace cspoly {

namespace {

// Reference values of the 48-point polytope and its quotient.
const std::vector<std::size_t> kP648FVector{48, 552, 2432, 4776, 4272, 1424};
const std::vector<std::size_t> kRp5FVector{24, 276, 1216, 2388, 2136, 712};
constexpr std::size_t kP648GroupOrder = 192;
constexpr const char* kRp5Homology = "(Z, Z/2, 0, Z/2, 0, Z)";
constexpr const char* kRp6Homology = "(Z, Z/2, 0, Z/2, 0, Z/2, 0)";

struct ReferenceRow {
  Rational t;
  std::size_t degree, edges, chi;
};
const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {Rational(19, 49), 10, 240, 4}, {Rational(17, 49), 11, 264, 6}, {Rational(15, 49), 15, 360, 7}, {Rational(11, 49), 23, 552, 12}};
  return rows;
}

std::string format_ints(const std::vector<long>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::vector<std::size_t> halved(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x / 2);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string pairs_string(const std::vector<std::pair<int, int>>& pairs, std::size_t limit = 10) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < pairs.size() && i < limit; ++i)
    parts.push_back("(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")");
  if (pairs.size() > limit) parts.push_back("...");
  return join(parts, " ");
}

std::string coloring_string(const ColoringResult& r) {
  if (r.status == ProofStatus::exact) return std::to_string(r.upper_bound);
  return "[" + std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]";
}

}  // namespace

std::string format_counts(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::vector<Rational> reference_thresholds() {
  std::vector<Rational> out;
  for (const auto& r : reference_rows()) out.push_back(r.t);
  return out;
}

VerificationReport cmd_verify_rp5(const VerifyRp5Options& o) {
  const bool builtin = !o.points_file;
  PointConfiguration config = builtin ? build_p648(o.params) : load_points(*o.points_file);
  const P648Parameters ref = builtin ? o.params : P648Parameters{};
  const Rational norm = ref.alpha * ref.alpha + ref.beta * ref.beta + ref.gamma * ref.gamma;

  ReportBuilder rb("verify-rp5");
  rb.checksum(builtin ? "builtin-48" : *o.points_file, points_checksum(config));
  const std::string needs = "prerequisite failed";

  const bool shape = rb.run("construction", "48 points in R^6", [&] {
    return std::pair{config.size() == 48 && config.dim == 6,
                     std::to_string(config.size()) + " points in R^" + std::to_string(config.dim)};
  });
  rb.run("squared-norm", "every point has squared norm " + to_string(norm), [&] {
    std::set<Rational> norms;
    for (const auto& p : config.points) norms.insert(squared_norm(p));
    std::string actual;
    if (norms.size() == 1) {
      actual = "every point has squared norm " + to_string(*norms.begin());
    } else {
      actual = std::to_string(norms.size()) + " distinct squared norms, from " + to_string(*norms.begin()) + " to " +
               to_string(*norms.rbegin());
    }
    return std::pair{norms.size() == 1 && *norms.begin() == norm, actual};
  });
  const bool symmetric = rb.run("central-symmetry", "24 antipodal pairs", [&] {
    if (builtin && config.pairing != PointConfiguration::half_shift_pairing(48)) return std::pair{false, std::string("pairing is not i <-> i+24")};
    config.validate();
    if (!config.has_pairing()) return std::pair{false, std::string("no antipodal pairing")};
    return std::pair{config.size() == 48, std::to_string(config.size() / 2) + " antipodal pairs"};
  });

  std::optional<HullStructure> hull;
  const bool have_hull = shape && rb.run("hull", "1424 facets; all 48 points are vertices", [&] {
    hull = facet_enumeration(config);
    std::string invalid = validate_hull(*hull);
    if (!invalid.empty()) return std::pair{false, "invalid hull: " + invalid};
    return std::pair{hull->hull_vertices.size() == 48 && hull->facets.size() == 1424,
                     std::to_string(hull->facets.size()) + " facets; " + std::to_string(hull->hull_vertices.size()) + " of " +
                         std::to_string(config.size()) + " points are vertices"};
  });
  if (!shape) rb.skip("hull", "1424 facets; all 48 points are vertices", needs);

  std::optional<SimplicialComplex> boundary;
  const bool simplicial = have_hull && rb.run("simplicial", "every facet is a 5-simplex", [&] {
    auto s = is_simplicial(*hull);
    if (!s.simplicial) return std::pair{false, "facet " + std::to_string(*s.witness) + " has " +
                                                   std::to_string(hull->facets[static_cast<std::size_t>(*s.witness)].vertices.size()) + " vertices"};
    boundary = boundary_complex(*hull);
    return std::pair{true, std::string("every facet is a 5-simplex")};
  });
  if (!have_hull) rb.skip("simplicial", "every facet is a 5-simplex", needs);

  if (simplicial) {
    rb.run("f-vector", format_counts(kP648FVector), [&] {
      auto fv = f_vector(*boundary);
      return std::pair{fv == kP648FVector, format_counts(fv) + ", Euler characteristic " + std::to_string(euler_characteristic(*boundary))};
    });
  } else {
    rb.skip("f-vector", format_counts(kP648FVector), needs);
  }

  const bool stars = simplicial && symmetric && rb.run("disjoint-stars", "holds for all 24 pairs; both methods agree", [&] {
    auto r = check_disjoint_stars(*boundary, Involution{config.pairing});
    if (!r.methods_agree) return std::pair{false, std::string("methods disagree")};
    if (!r.holds) return std::pair{false, std::to_string(r.violations.size()) + " violating pairs: " + pairs_string(r.violations)};
    return std::pair{true, std::string("holds for all 24 pairs; both methods agree")};
  });
  if (!(simplicial && symmetric)) rb.skip("disjoint-stars", "holds for all 24 pairs; both methods agree", needs);

  std::optional<SimplicialComplex> quotient;
  if (stars) {
    rb.run("quotient", "24 vertices", [&] {
      quotient = antipodal_quotient(*boundary, Involution{config.pairing});
      return std::pair{quotient->used_vertices().size() == 24, std::to_string(quotient->used_vertices().size()) + " vertices"};
    });
  } else {
    rb.skip("quotient", "24 vertices", needs);
  }
  if (quotient) {
    rb.run("quotient-f-vector", format_counts(kRp5FVector), [&] {
      auto fv = f_vector(*quotient);
      auto full = f_vector(*boundary);
      bool half = fv == halved(full);
      return std::pair{fv == kRp5FVector && half, format_counts(fv) + (half ? ", half of every entry" : ", not half of the cover")};
    });
    rb.run("quotient-skeleton", "complete graph K_24", [&] {
      auto p = degree_profile(skeleton_graph(*quotient));
      bool complete = p.regular_degree == 23u && p.edges == 276;
      return std::pair{complete, complete ? std::string("complete graph K_24")
                                          : std::to_string(p.edges) + " edges, not complete"};
    });
    rb.run("homology-mod2", "(1,1,1,1,1,1)", [&] {
      auto b = betti_mod2(*quotient);
      std::vector<long> v(b.begin(), b.end());
      return std::pair{b == std::vector<std::size_t>(6, 1), format_ints(v)};
    });
    if (o.integer_homology) {
      rb.run("homology-integer", kRp5Homology, [&] {
        auto h = integer_homology(*quotient);
        return std::pair{h.to_string() == kRp5Homology, h.to_string()};
      });
    } else {
      rb.skip("homology-integer", kRp5Homology, "not requested");
    }
  } else {
    for (const char* name : {"quotient-f-vector", "quotient-skeleton", "homology-mod2", "homology-integer"}) rb.skip(name, "", needs);
  }

  // Symmetry.
  std::optional<PermutationGroup> aut;
  if (simplicial) {
    rb.run("automorphism-group", "order " + std::to_string(kP648GroupOrder), [&] {
      aut = automorphism_group(*boundary);
      for (const auto& g : *aut->elements)
        if (!is_automorphism(*boundary, g)) return std::pair{false, std::string("element does not preserve the facets")};
      return std::pair{aut->order == kP648GroupOrder, "order " + aut->order.get_str()};
    });
  } else {
    rb.skip("automorphism-group", "order 192", needs);
  }
  if (aut) {
    rb.run("linear-symmetries", "all 192 automorphisms are linear", [&] {
      auto lin = linear_symmetries(config, *aut->elements);
      return std::pair{lin.size() == aut->elements->size() && aut->order == kP648GroupOrder,
                       std::to_string(lin.size()) + " of " + aut->order.get_str() + " automorphisms are linear"};
    });
  } else {
    rb.skip("linear-symmetries", "all 192 automorphisms are linear", needs);
  }
  // b and c are specific to the built-in coordinates.
  {
    std::optional<Permutation> pb, pc;
    std::string why;
    try {
      pb = matrix_action(generator_matrix_b(), config);
      pc = matrix_action(generator_matrix_c(), config);
    } catch (const PreconditionError& e) {
      why = e.what();
    }
    const std::string expected = "b, c stabilize the points; closure of order 192 equals the automorphism group";
    if (!pb && !builtin) {
      rb.skip("generator-matrices", expected, "b and c do not act on this frame", true);
    } else {
      rb.run(
          "generator-matrices", expected,
          [&] {
            if (!pb) return std::pair{false, why};
            auto g = group_closure({*pb, *pc}, config.size());
            bool equal = aut && aut->elements && g.elements && *g.elements == *aut->elements;
            return std::pair{g.order == kP648GroupOrder && equal,
                             "closure of order " + g.order.get_str() + (equal ? ", equal to the automorphism group" : ", differs from the automorphism group")};
          },
          true);
    }
  }

  // Links.
  if (simplicial) {
    rb.run("vertex-links", "1 type: 48 links with 23 vertices and 178 facets", [&] {
      auto classes = classify_face_links(*boundary, 0);
      const auto& first = classes.front();
      std::string actual = std::to_string(classes.size()) + (classes.size() == 1 ? " type" : " types") + ": " +
                           std::to_string(first.count) + " links with " + std::to_string(first.sample_f_vector[0]) +
                           " vertices and " + std::to_string(first.sample_f_vector.back()) + " facets";
      return std::pair{classes.size() == 1 && first.count == 48 && first.sample_f_vector[0] == 23 && first.sample_f_vector.back() == 178,
                       actual};
    });
    rb.run("two-face-links", "9 types", [&] {
      auto classes = classify_face_links(*boundary, 2);
      std::vector<std::string> counts;
      for (const auto& c : classes) counts.push_back(std::to_string(c.count));
      return std::pair{classes.size() == 9, std::to_string(classes.size()) + " types (sizes " + join(counts, ", ") + ")"};
    });
  } else {
    rb.skip("vertex-links", "1 type", needs);
    rb.skip("two-face-links", "9 types", needs);
  }

  // Supports.
  SupportPartition partition = support_partition(config);
  const std::string family = "supports {1,2,3},{1,4,5},{1,4,6},{2,3,4},{2,5,6},{3,5,6}";
  if (!builtin && !partition.unexpected_supports.empty()) {
    rb.skip("support-family", family, "coordinates are not in the built-in frame", true);
  } else {
    rb.run(
        "support-family", family,
        [&] {
          return std::pair{partition.unexpected_supports.empty() && partition.classes.size() == 6,
                           partition.unexpected_supports.empty() ? std::string("all supports in the expected family")
                                                                 : std::to_string(partition.unexpected_supports.size()) + " unexpected supports"};
        },
        true);
  }
  rb.run("support-classes", "6 classes of 8 vertices, each a combinatorial 3-cube, supports match up to relabeling", [&] {
    bool cubes = partition.classes.size() == 6;
    std::size_t cube_count = 0;
    for (const auto& c : partition.classes) {
      bool ok = c.vertices.size() == 8 && c.sign_cube_graph && c.hull_is_cube;
      cube_count += ok ? 1 : 0;
      cubes = cubes && ok;
    }
    bool match = supports_match_expected(partition, config.dim);
    return std::pair{cubes && match, std::to_string(partition.classes.size()) + " classes, " + std::to_string(cube_count) +
                                         " of them 3-cubes on 8 vertices; supports " + (match ? "match" : "do not match") +
                                         " up to relabeling"};
  });
  if (have_hull) {
    rb.run("facet-cube-contribution", "at most 2 vertices (an edge) per facet and class", [&] {
      auto m = max_facet_class_contribution(*hull, partition);
      return std::pair{m <= 2, "at most " + std::to_string(m) + " vertices per facet and class"};
    });
    rb.run("edge-rule", "hull edges = pairs with positive inner product (552)", [&] {
      auto r = verify_edge_rule(config, *hull);
      std::string actual = std::to_string(r.hull_edges) + " hull edges, " + std::to_string(r.positive_pairs) + " positive pairs";
      if (r.counterexample) actual += ", first mismatch " + pairs_string({*r.counterexample});
      return std::pair{r.holds && r.hull_edges == 552, actual};
    });
  } else {
    rb.skip("facet-cube-contribution", "at most 2", needs);
    rb.skip("edge-rule", "holds", needs);
  }

  // Threshold graphs.
  std::vector<std::string> expected_rows, expected_chi;
  for (const auto& r : reference_rows()) {
    expected_rows.push_back(to_string(r.t) + ": " + std::to_string(r.degree) + "-regular, " + std::to_string(r.edges) + " edges");
    expected_chi.push_back(to_string(r.t) + ": " + std::to_string(r.chi));
  }
  std::vector<Graph> graphs;
  rb.run("threshold-graphs", join(expected_rows, "; "), [&] {
    bool ok = true;
    std::vector<std::string> rows;
    for (const auto& r : reference_rows()) {
      graphs.push_back(threshold_graph(config, r.t));
      auto p = degree_profile(graphs.back());
      ok = ok && p.regular_degree == r.degree && p.edges == r.edges;
      rows.push_back(to_string(r.t) + ": " + (p.regular_degree ? std::to_string(*p.regular_degree) + "-regular" : std::string("irregular")) +
                     ", " + std::to_string(p.edges) + " edges");
    }
    return std::pair{ok, join(rows, "; ")};
  });
  rb.run("positive-graph", "equal to the 11/49 graph; each vertex adjacent to exactly one of every other antipodal pair", [&] {
    Graph zero = threshold_graph(config, 0);
    bool same = zero == threshold_graph(config, Rational(11, 49));
    bool tight = config.has_pairing();
    for (std::size_t w = 0; w < config.size() && tight; ++w)
      for (std::size_t v = 0; v < config.size(); ++v) {
        auto tv = static_cast<std::size_t>(config.pairing[v]);
        if (v == w || tv == w || v > tv) continue;
        if (zero.adjacent(static_cast<int>(w), static_cast<int>(v)) == zero.adjacent(static_cast<int>(w), static_cast<int>(tv))) {
          tight = false;
          break;
        }
      }
    return std::pair{same && tight, std::string(same ? "equal to the 11/49 graph" : "differs from the 11/49 graph") + "; " +
                                        (tight ? "each vertex adjacent to exactly one of every other antipodal pair" : "not tight")};
  });
  if (o.chromatic) {
    rb.run("chromatic-numbers", join(expected_chi, "; ") + " (exact)", [&] {
      bool ok = graphs.size() == reference_rows().size();
      std::vector<std::string> rows;
      bool exact = true;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto c = chromatic_number(graphs[i], std::chrono::duration<double>(o.time_limit_seconds));
        ok = ok && is_proper_coloring(graphs[i], c.coloring) && c.chromatic_number() == reference_rows()[i].chi;
        exact = exact && c.status == ProofStatus::exact;
        rows.push_back(to_string(reference_rows()[i].t) + ": " + coloring_string(c));
      }
      return std::pair{ok, join(rows, "; ") + (exact ? " (exact)" : " (bounds only)")};
    });
  } else {
    rb.skip("chromatic-numbers", join(expected_chi, "; ") + " (exact)", "not requested");
  }
  return rb.finish();
}

VerificationReport cmd_verify_rp6(const VerifyRp6Options& o) {
  ReportBuilder rb("verify-rp6");
  std::optional<PointConfiguration> config;
  std::optional<HullStructure> hull;
  std::size_t expected_n = 0;
  std::string source;
  const std::string needs = "prerequisite failed";
  switch (o.source) {
    case Rp6Source::builtin_p790:
      source = "builtin-p790";
      expected_n = 90;
      break;
    case Rp6Source::points_file:
      if (!o.points_file) throw PreconditionError("points-file source needs a points file");
      source = *o.points_file;
      break;
    case Rp6Source::cone_cylinder:
      source = "cone-cylinder";
      expected_n = 98;
      break;
  }
  if (o.source == Rp6Source::points_file) {
    config = load_points(*o.points_file);
    expected_n = config->size();
  }
  const std::string shape = std::to_string(expected_n) + " points in R^7";
  bool built = rb.run("construction", shape, [&] {
    std::string extra;
    if (o.source == Rp6Source::builtin_p790) {
      config = build_p790();
    } else if (o.source == Rp6Source::cone_cylinder) {
      PointConfiguration base = o.points_file ? load_points(*o.points_file) : build_p648(o.params);
      if (o.points_file) expected_n = 2 * base.size() + 2;
      ConeCylinderResult r = find_simplicial_cone_cylinder(base, o.cone, o.max_tries);
      config = std::move(r.config);
      hull = std::move(r.hull);
      extra = "; seed " + std::to_string(r.seed) + " after " + std::to_string(r.attempts.size()) + " rejected seeds";
    }
    return std::pair{config->size() == expected_n && config->dim == 7,
                     std::to_string(config->size()) + " points in R^" + std::to_string(config->dim) + extra};
  });
  if (config) rb.checksum(source, points_checksum(*config));
  const std::size_t half = expected_n / 2;

  bool symmetric = built && rb.run("central-symmetry", std::to_string(half) + " antipodal pairs", [&] {
    config->validate();
    if (!config->has_pairing()) return std::pair{false, std::string("no antipodal pairing")};
    return std::pair{true, std::to_string(config->size() / 2) + " antipodal pairs"};
  });
  if (!built) rb.skip("central-symmetry", "", needs);

  bool have_hull = built && rb.run("hull-vertices", "all " + std::to_string(expected_n) + " points are vertices", [&] {
    if (!hull) hull = facet_enumeration(*config);
    std::string invalid = validate_hull(*hull);
    if (!invalid.empty()) return std::pair{false, "invalid hull: " + invalid};
    return std::pair{hull->hull_vertices.size() == config->size(),
                     std::to_string(hull->hull_vertices.size()) + " of " + std::to_string(config->size()) + " points are vertices; " +
                         std::to_string(hull->facets.size()) + " facets"};
  });
  if (!built) rb.skip("hull-vertices", "", needs);

  std::optional<SimplicialComplex> boundary;
  bool simplicial = have_hull && rb.run("simplicial", "every facet is a 6-simplex", [&] {
    auto s = is_simplicial(*hull);
    if (!s.simplicial) return std::pair{false, "facet " + std::to_string(*s.witness) + " has " +
                                                   std::to_string(hull->facets[static_cast<std::size_t>(*s.witness)].vertices.size()) + " vertices"};
    boundary = boundary_complex(*hull);
    return std::pair{true, std::string("every facet is a 6-simplex")};
  });
  if (!have_hull) rb.skip("simplicial", "", needs);

  if (simplicial) {
    rb.run("f-vector", "recorded; Euler characteristic 2", [&] {
      auto fv = f_vector(*boundary);
      long chi = euler_characteristic(*boundary);
      return std::pair{chi == 2, format_counts(fv) + ", Euler characteristic " + std::to_string(chi)};
    });
  } else {
    rb.skip("f-vector", "", needs);
  }

  bool stars = simplicial && symmetric && rb.run("disjoint-stars", "holds for all pairs; both methods agree", [&] {
    auto r = check_disjoint_stars(*boundary, Involution{config->pairing});
    if (!r.methods_agree) return std::pair{false, std::string("methods disagree")};
    if (!r.holds) return std::pair{false, std::to_string(r.violations.size()) + " violating pairs: " + pairs_string(r.violations)};
    return std::pair{true, std::string("holds for all pairs; both methods agree")};
  });
  if (!(simplicial && symmetric)) rb.skip("disjoint-stars", "", needs);

  std::optional<SimplicialComplex> quotient;
  if (stars) {
    rb.run("quotient", std::to_string(half) + " vertices", [&] {
      quotient = antipodal_quotient(*boundary, Involution{config->pairing});
      auto fv = f_vector(*quotient);
      bool halves = fv == halved(f_vector(*boundary));
      return std::pair{quotient->used_vertices().size() == half && halves,
                       std::to_string(quotient->used_vertices().size()) + " vertices; f-vector " + format_counts(fv) +
                           (halves ? "" : " (not half of the cover)")};
    });
  } else {
    rb.skip("quotient", std::to_string(half) + " vertices", needs);
  }
  if (quotient) {
    rb.run("homology-mod2", "(1,1,1,1,1,1,1)", [&] {
      auto b = betti_mod2(*quotient);
      std::vector<long> v(b.begin(), b.end());
      return std::pair{b == std::vector<std::size_t>(7, 1), format_ints(v)};
    });
    if (o.integer_homology) {
      rb.run("homology-integer", kRp6Homology, [&] {
        auto h = integer_homology(*quotient);
        return std::pair{h.to_string() == kRp6Homology, h.to_string()};
      });
    } else {
      rb.skip("homology-integer", kRp6Homology, "not requested");
    }
  } else {
    rb.skip("homology-mod2", "(1,1,1,1,1,1,1)", needs);
    rb.skip("homology-integer", kRp6Homology, needs);
  }
  return rb.finish();
}

FacetSummary summarize_facets(const SimplicialComplex& c, const std::string& source) {
  FacetSummary s;
  s.source = source;
  s.f_vector = f_vector(c);
  s.n_vertices = c.used_vertices().size();
  s.skeleton_edges = s.f_vector.size() > 1 ? s.f_vector[1] : 0;
  s.missing_edges = s.n_vertices * (s.n_vertices - 1) / 2 - s.skeleton_edges;
  s.euler_characteristic = euler_characteristic(c);
  auto g = automorphism_group(c);
  s.automorphism_order = g.order;
  s.generators = g.generators.size();
  return s;
}

AnalyzeResult cmd_analyze(const AnalyzeOptions& o) {
  AnalyzeResult out;
  if (o.facets_file) out.facets = summarize_facets(load_facets(*o.facets_file), *o.facets_file);
  if (o.facets_file && !o.points_file) return out;
  PointConfiguration config = o.points_file ? load_points(*o.points_file) : build_p648(o.params);
  for (const auto& t : o.thresholds.empty() ? reference_thresholds() : o.thresholds) {
    ThresholdRow row;
    row.threshold = t;
    Graph g = threshold_graph(config, t);
    auto p = degree_profile(g);
    row.regular_degree = p.regular_degree;
    row.edges = p.edges;
    if (o.chromatic) row.coloring = chromatic_number(g, std::chrono::duration<double>(o.time_limit_seconds));
    out.rows.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json AnalyzeResult::to_json() const {
  nlohmann::ordered_json j;
  j["thresholds"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["threshold"] = to_string(r.threshold);
    e["regular_degree"] = r.regular_degree ? nlohmann::ordered_json(*r.regular_degree) : nlohmann::ordered_json(nullptr);
    e["edges"] = r.edges;
    if (r.coloring) {
      e["chromatic_lower"] = r.coloring->lower_bound;
      e["chromatic_upper"] = r.coloring->upper_bound;
      e["chromatic_status"] = r.coloring->status == ProofStatus::exact ? "exact" : "bounded";
      e["coloring"] = r.coloring->coloring;
      e["seconds"] = r.coloring->seconds;
    }
    j["thresholds"].push_back(std::move(e));
  }
  if (facets) {
    nlohmann::ordered_json f;
    f["source"] = facets->source;
    f["f_vector"] = facets->f_vector;
    f["vertices"] = facets->n_vertices;
    f["edges"] = facets->skeleton_edges;
    f["missing_edges"] = facets->missing_edges;
    f["euler_characteristic"] = facets->euler_characteristic;
    f["automorphism_order"] = facets->automorphism_order.get_str();
    j["facets"] = std::move(f);
  }
  return j;
}

std::string AnalyzeResult::to_text() const {
  std::ostringstream s;
  if (!rows.empty()) {
    s << "threshold  regular  edges  chromatic\n";
    for (const auto& r : rows) {
      std::string t = to_string(r.threshold);
      std::string deg = r.regular_degree ? std::to_string(*r.regular_degree) : "-";
      std::string chi = r.coloring ? coloring_string(*r.coloring) + (r.coloring->status == ProofStatus::exact ? "" : " (bounds)") : "-";
      s << t << std::string(t.size() < 11 ? 11 - t.size() : 1, ' ') << deg << std::string(deg.size() < 9 ? 9 - deg.size() : 1, ' ')
        << r.edges << std::string(std::to_string(r.edges).size() < 7 ? 7 - std::to_string(r.edges).size() : 1, ' ') << chi << "\n";
    }
  }
  if (facets) {
    s << "facets " << facets->source << ": f-vector " << format_counts(facets->f_vector) << ", " << facets->skeleton_edges
      << " edges (" << facets->missing_edges << " short of complete), automorphism order " << facets->automorphism_order.get_str()
      << "\n";
  }
  return s.str();
}

namespace {

FloatConfig pair_representatives(const PointConfiguration& config) {
  FloatConfig all = to_float(config);
  if (!config.has_pairing()) throw PreconditionError("warm start needs a centrally symmetric configuration");
  FloatConfig out;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (static_cast<std::size_t>(config.pairing[i]) > i) out.push_back(all[i]);
  return out;
}

FloatPoints to_rows(const FloatConfig& pts) {
  FloatPoints out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

FloatConfig from_rows(const FloatPoints& rows) {
  FloatConfig out;
  for (const auto& r : rows) out.push_back(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())));
  return out;
}

SimplicialComplex load_complex(const ComplexInput& in, std::string& description) {
  if (in.facets_file) {
    description = *in.facets_file;
    return load_facets(*in.facets_file);
  }
  PointConfiguration config = in.points_file ? load_points(*in.points_file) : build_p648(in.params);
  description = in.points_file ? "boundary of " + *in.points_file : "boundary of the built-in 48-point polytope";
  return boundary_complex(facet_enumeration(config));
}

SimplicialComplex load_quotient(const ComplexInput& in, std::string& description) {
  if (in.facets_file) {
    description = *in.facets_file;
    return load_facets(*in.facets_file);
  }
  PointConfiguration config = in.points_file ? load_points(*in.points_file) : build_p648(in.params);
  if (!config.has_pairing()) throw PreconditionError("configuration is not centrally symmetric");
  description = "antipodal quotient of " + (in.points_file ? *in.points_file : std::string("the built-in 48-point polytope"));
  return antipodal_quotient(boundary_complex(facet_enumeration(config)), Involution{config.pairing});
}

}  // namespace

nlohmann::ordered_json cmd_search(const SearchOptions& o) {
  std::optional<FloatConfig> initial;
  nlohmann::ordered_json j;
  if (o.initial_points) {
    PointConfiguration start = load_points(*o.initial_points);
    initial = pair_representatives(start);
    // Raw objective uses the unnormalized points as given.
    FloatConfig raw = *initial;
    j["initial_raw_objective"] = minmax_edge_objective(raw);
  }
  SearchState s = minmax_edge_search(o.n, o.dim, o.seed, o.iterations, o.schedule, initial);
  j["n"] = o.n;
  j["dim"] = o.dim;
  j["seed"] = o.seed;
  j["iterations"] = s.iterations;
  j["accepted"] = s.accepted;
  j["initial_objective"] = s.trace.front().second;
  j["final_objective"] = s.objective;
  j["best_objective"] = s.best_objective;
  j["final_temperature"] = s.temperature;
  j["trace"] = nlohmann::ordered_json::array();
  for (auto [it, v] : s.trace) j["trace"].push_back({it, v});
  if (o.out) {
    save_float_points(*o.out, to_rows(antipodal_closure(s.best_points)));
    j["output"] = *o.out;
  }
  return j;
}

nlohmann::ordered_json cmd_sparsify(const SparsifyOptions& o) {
  FloatConfig pts = o.points_file ? from_rows(load_float_points(*o.points_file)) : to_float(build_p648(o.params));
  if (pts.empty()) throw PreconditionError("empty configuration");
  if (o.scramble) pts = apply_frame(random_rotation(static_cast<std::size_t>(pts.front().size()), *o.scramble), pts);
  const auto d = pts.front().size();
  SparsifyResult r = l1_sparsify(pts, o.seed, o.max_sweeps, o.restarts);
  FloatConfig out = apply_frame(r.frame.q, pts);
  std::size_t zeros = 0;
  for (const auto& p : out)
    for (Eigen::Index k = 0; k < p.size(); ++k) zeros += std::abs(p[k]) < 1e-6 ? 1 : 0;
  nlohmann::ordered_json j;
  j["points"] = pts.size();
  j["initial_f"] = l1_objective(Eigen::MatrixXd::Identity(d, d), pts);
  j["final_f"] = r.value;
  j["sweeps"] = r.sweeps;
  j["rotations"] = r.frame.rotations.size();
  j["near_zero_coordinates"] = zeros;
  j["orthogonality_error"] = r.frame.orthogonality_error();
  if (o.out) {
    save_float_points(*o.out, to_rows(out));
    j["output"] = *o.out;
  }
  return j;
}

nlohmann::ordered_json cmd_rationalize(const RationalizeOptions& o) {
  FloatConfig pts = from_rows(load_float_points(o.points_file));
  PointConfiguration config = rationalize(pts, o.max_den);
  double err = 0;
  Integer max_den = 1;
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t k = 0; k < config.dim; ++k) {
      err = std::max(err, std::abs(config.points[i][k].get_d() - pts[i][static_cast<Eigen::Index>(k)]));
      max_den = std::max(max_den, Integer(config.points[i][k].get_den()));
    }
  nlohmann::ordered_json j;
  j["points"] = config.size();
  j["centrally_symmetric"] = config.has_pairing();
  j["largest_denominator"] = max_den.get_str();
  j["max_abs_error"] = err;
  j["checksum"] = points_checksum(config);
  if (o.out) {
    save_points(*o.out, config);
    j["output"] = *o.out;
  }
  return j;
}

nlohmann::ordered_json cmd_quotient(const QuotientOptions& o) {
  if (o.input.facets_file) throw PreconditionError("quotient needs points (a facets file carries no involution)");
  std::string description;
  SimplicialComplex q = load_quotient(o.input, description);
  nlohmann::ordered_json j;
  j["complex"] = description;
  j["vertices"] = q.used_vertices().size();
  j["f_vector"] = f_vector(q);
  j["euler_characteristic"] = euler_characteristic(q);
  j["checksum"] = facets_checksum(q);
  if (o.out) {
    save_facets(*o.out, q);
    j["output"] = *o.out;
  }
  return j;
}

nlohmann::ordered_json cmd_homology(const HomologyOptions& o) {
  std::string description;
  SimplicialComplex c = load_quotient(o.input, description);
  nlohmann::ordered_json j;
  j["complex"] = description;
  j["f_vector"] = f_vector(c);
  j["betti_mod2"] = betti_mod2(c);
  if (o.integer) {
    auto h = integer_homology(c);
    j["integer_homology"] = h.to_string();
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : h.groups) {
      nlohmann::ordered_json e;
      e["betti"] = g.betti;
      std::vector<std::string> t;
      for (const auto& x : g.torsion) t.push_back(x.get_str());
      e["torsion"] = t;
      groups.push_back(std::move(e));
    }
    j["groups"] = std::move(groups);
  }
  return j;
}

nlohmann::ordered_json cmd_automorphisms(const AutomorphismOptions& o) {
  std::string description;
  SimplicialComplex c = load_complex(o.input, description);
  auto g = automorphism_group(c);
  nlohmann::ordered_json j;
  j["complex"] = description;
  j["order"] = g.order.get_str();
  j["generators"] = g.generators;
  return j;
}

}  // namespace cspoly
