#pragma once

// Built-in point configurations: the 48-point (alpha, beta, gamma) family in
// R^6, the 90-point table in R^7 and the cylinder-plus-cones lift, together
// with the symmetry matrices and support analysis of the 48-point polytope.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cspoly/group.hpp"
#include "cspoly/hull.hpp"
#include "cspoly/ratmath.hpp"

namespace cspoly {

struct P648Parameters {
  Rational alpha = Rational(3, 7);
  Rational beta = Rational(4, 7);
  Rational gamma = Rational(5, 7);
};

/// The 48 points in the published order; point i and i+24 are antipodal.
/// Requires 0 < alpha < beta < gamma.
PointConfiguration build_p648(const P648Parameters& params = {});

/// 6x6 signed permutation matrices b and c acting on column vectors.
RatMatrix generator_matrix_b();
RatMatrix generator_matrix_c();

/// The coordinate supports {1,2,3},{1,4,5},{1,4,6},{2,3,4},{2,5,6},{3,5,6}
/// (1-based).
std::vector<std::vector<int>> expected_supports();

struct SupportClass {
  std::vector<int> support;  // 1-based coordinate labels
  std::vector<int> vertices;
  std::size_t cube_edges = 0;      // pairs whose sign vectors differ in one place
  bool sign_cube_graph = false;    // those pairs form a 3-regular graph (Q3)
  bool hull_is_cube = false;       // exact hull in the support coordinates: 6 quads, edges = sign graph
};

struct SupportPartition {
  std::vector<SupportClass> classes;
  std::vector<std::vector<int>> unexpected_supports;  // supports outside the expected family
};

/// Groups points by support. Works for any configuration; for the default
/// frame every support lies in expected_supports().
SupportPartition support_partition(const PointConfiguration& config);

/// True iff some permutation of the coordinates maps the family of supports
/// onto expected_supports() (a frame-independent form of the check).
bool supports_match_expected(const SupportPartition& partition, std::size_t dim);

/// Largest number of vertices any facet shares with a single support class.
std::size_t max_facet_class_contribution(const HullStructure& h, const SupportPartition& partition);

/// Vertex permutation induced by x -> m x; throws PreconditionError naming the
/// first image point that is not in the configuration.
Permutation matrix_action(const RatMatrix& m, const PointConfiguration& config);

/// The linear map x -> A x realizing the vertex permutation p, if one exists
/// (A is determined by a basis of points and then checked on every point).
std::optional<RatMatrix> linear_realization(const PointConfiguration& config, const Permutation& p);

/// The members of `candidates` that are realized by linear maps.
std::vector<Permutation> linear_symmetries(const PointConfiguration& config, const std::vector<Permutation>& candidates);

/// The 90-point configuration; point i and i+45 are antipodal. Verifies the
/// embedded table checksum.
PointConfiguration build_p790();
std::uint64_t p790_table_checksum();

struct ConeCylinderOptions {
  Rational apex_height = 2;
  Rational delta = Rational(1, 1000);
  std::uint64_t seed = 1;
};

/// P x [-1, 1] plus apexes +-(0,...,0,h), each antipodal pair then shifted by
/// a seeded rational perturbation with entries delta*k/10, |k| <= 10.
/// Output order: (p_i, 1) for all i, the upper apex, then their negations.
PointConfiguration cone_cylinder(const PointConfiguration& config, const ConeCylinderOptions& options = {});

struct ConeCylinderResult {
  PointConfiguration config;
  HullStructure hull;
  std::uint64_t seed = 0;
  std::vector<std::string> attempts;  // one diagnostic line per rejected seed
};

/// Tries seeds first_seed, first_seed+1, ... until the perturbed hull is
/// simplicial and satisfies the disjoint-star condition. Throws
/// PreconditionError listing every attempt when all fail.
ConeCylinderResult find_simplicial_cone_cylinder(const PointConfiguration& config, ConeCylinderOptions options = {},
                                                 int max_tries = 32);

/// Minimum vertex count of a triangulated RP^d, d >= 3.
long rp_vertex_lower_bound(int d);

}  // namespace cspoly
