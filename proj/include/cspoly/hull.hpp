#pragma once

// Exact convex hull facet enumeration.
//
// Points are lifted to primitive homogeneous integer vectors (x, w), w > 0,
// so that every predicate is an integer dot product. Construction is
// incremental beneath-beyond over a triangulated boundary; coplanar boundary
// simplices are merged into their supporting facet at the end, so
// non-simplicial facets come out whole.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspoly/complex.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/ratmath.hpp"

namespace cspoly {

struct PointConfiguration {
  std::vector<RatVector> points;
  std::size_t dim = 0;
  /// pairing[i] is the antipode of point i; empty when the configuration
  /// carries no antipodal structure.
  std::vector<int> pairing;

  std::size_t size() const { return points.size(); }
  bool has_pairing() const { return !pairing.empty(); }

  /// Throws PreconditionError if dimensions disagree or a pairing is present
  /// but is not a fixed-point-free involution with point[pairing(i)] = -point[i].
  void validate() const;

  /// Pairing i <-> i + n/2 (the convention of all built-in constructions).
  static std::vector<int> half_shift_pairing(std::size_t n);

  /// Finds the antipodal pairing by exact lookup; nullopt if some point has
  /// no negated partner in the set.
  std::optional<std::vector<int>> detect_pairing() const;
};

/// Supporting hyperplane normal . x <= offset, primitive over the integers
/// and oriented outward.
struct Hyperplane {
  IntVector normal;
  Integer offset;

  bool operator==(const Hyperplane&) const = default;
  bool operator<(const Hyperplane& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
  /// normal . x - offset (sign tells beneath / on / beyond).
  Rational evaluate(const RatVector& x) const;
};

struct Facet {
  std::vector<int> vertices;  // sorted indices of points on the hyperplane
  Hyperplane plane;
};

struct Ridge {
  int facet_a = 0, facet_b = 0;  // facet_a < facet_b
  std::vector<int> vertices;     // points on both hyperplanes
};

struct HullStructure {
  PointConfiguration config;
  std::vector<Facet> facets;
  std::vector<Ridge> ridges;
  std::vector<int> hull_vertices;
};

/// Raised for configurations that do not span R^d affinely.
class DegenerateConfiguration : public PreconditionError {
 public:
  DegenerateConfiguration(std::size_t affine_rank, std::size_t dim);
  std::size_t affine_rank;
};

HullStructure facet_enumeration(const PointConfiguration& config);

struct SimplicialCheck {
  bool simplicial = true;
  std::optional<int> witness;  // index of the first non-simplex facet
};
SimplicialCheck is_simplicial(const HullStructure& h);

std::vector<int> hull_vertices(const HullStructure& h);

/// Pairs {i, j} of hull vertices whose smallest common face has exactly
/// the two vertices i and j (the 1-skeleton of the polytope).
std::vector<std::pair<int, int>> hull_edges(const HullStructure& h);

/// Throws PreconditionError naming the witness facet if the hull is not simplicial.
SimplicialComplex boundary_complex(const HullStructure& h);

/// Checks every structural invariant (containment, incidence, ridge
/// regularity, connectivity). Returns an empty string when valid, otherwise a
/// description of the first violation.
std::string validate_hull(const HullStructure& h);

}  // namespace cspoly
