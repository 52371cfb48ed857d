#pragma once

// The toolkit's commands as library calls; the CLI and the Python module are
// thin wrappers around these.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cspoly/constructions.hpp"
#include "cspoly/graph.hpp"
#include "cspoly/report.hpp"
#include "cspoly/search.hpp"

namespace cspoly {

/// The thresholds 19/49, 17/49, 15/49, 11/49.
std::vector<Rational> reference_thresholds();

struct VerifyRp5Options {
  P648Parameters params;
  std::optional<std::string> points_file;  // replaces the built-in construction
  bool integer_homology = false;
  bool chromatic = false;
  double time_limit_seconds = 600;
};

/// Full verification of the 48-point polytope and its RP^5 quotient. Invalid
/// parameters throw PreconditionError before any computation.
VerificationReport cmd_verify_rp5(const VerifyRp5Options& options);

enum class Rp6Source { builtin_p790, points_file, cone_cylinder };

struct VerifyRp6Options {
  Rp6Source source = Rp6Source::builtin_p790;
  std::optional<std::string> points_file;  // input for points_file, base for cone_cylinder
  P648Parameters params;                   // base for cone_cylinder without a file
  ConeCylinderOptions cone;
  int max_tries = 32;
  bool integer_homology = false;
};

VerificationReport cmd_verify_rp6(const VerifyRp6Options& options);

struct ThresholdRow {
  Rational threshold;
  std::optional<std::size_t> regular_degree;
  std::size_t edges = 0;
  std::optional<ColoringResult> coloring;
};

struct FacetSummary {
  std::string source;
  std::vector<std::size_t> f_vector;
  std::size_t n_vertices = 0;
  std::size_t skeleton_edges = 0;
  std::size_t missing_edges = 0;  // C(n,2) - skeleton edges
  long euler_characteristic = 0;
  Integer automorphism_order;
  std::size_t generators = 0;
};

struct AnalyzeOptions {
  std::optional<std::string> points_file;
  std::optional<std::string> facets_file;
  P648Parameters params;
  std::vector<Rational> thresholds;  // empty: reference thresholds
  bool chromatic = true;
  double time_limit_seconds = 600;
};

struct AnalyzeResult {
  std::vector<ThresholdRow> rows;
  std::optional<FacetSummary> facets;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

AnalyzeResult cmd_analyze(const AnalyzeOptions& options);
FacetSummary summarize_facets(const SimplicialComplex& c, const std::string& source);

struct SearchOptions {
  std::size_t n = 12;
  std::size_t dim = 3;
  std::uint64_t seed = 1;
  std::size_t iterations = 100000;
  AnnealingSchedule schedule;
  std::optional<std::string> initial_points;  // warm start (one point per antipodal pair is used)
  std::optional<std::string> out;             // full antipodal set, float points file
};
nlohmann::ordered_json cmd_search(const SearchOptions& options);

struct SparsifyOptions {
  std::optional<std::string> points_file;  // default: the built-in 48 points
  P648Parameters params;
  std::uint64_t seed = 1;
  std::size_t max_sweeps = 200;
  std::size_t restarts = 8;
  std::optional<std::uint64_t> scramble;  // rotate by a seeded random rotation first
  std::optional<std::string> out;
};
nlohmann::ordered_json cmd_sparsify(const SparsifyOptions& options);

struct RationalizeOptions {
  std::string points_file;
  Integer max_den = 1000;
  std::optional<std::string> out;
};
nlohmann::ordered_json cmd_rationalize(const RationalizeOptions& options);

/// Where a complex comes from: a facets file, the boundary of a points
/// file's hull, or the built-in 48-point polytope.
struct ComplexInput {
  std::optional<std::string> points_file;
  std::optional<std::string> facets_file;
  P648Parameters params;
};

struct QuotientOptions {
  ComplexInput input;
  std::optional<std::string> out;
};
nlohmann::ordered_json cmd_quotient(const QuotientOptions& options);

struct HomologyOptions {
  ComplexInput input;  // points inputs use the antipodal quotient
  bool integer = false;
};
nlohmann::ordered_json cmd_homology(const HomologyOptions& options);

struct AutomorphismOptions {
  ComplexInput input;
};
nlohmann::ordered_json cmd_automorphisms(const AutomorphismOptions& options);

std::string format_counts(const std::vector<std::size_t>& v);

}  // namespace cspoly
