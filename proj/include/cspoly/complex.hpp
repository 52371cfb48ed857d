#pragma once

// Simplicial complexes given by their facets: face counts, stars and links,
// the disjoint-star condition, antipodal quotients, canonical forms and
// automorphism groups.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cspoly/errors.hpp"
#include "cspoly/graph.hpp"
#include "cspoly/group.hpp"

namespace cspoly {

/// A face is a sorted list of distinct vertex indices.
using Face = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Facets are sorted internally; throws PreconditionError on out-of-range
  /// or repeated vertices, duplicate facets, or a facet contained in another.
  SimplicialComplex(std::size_t n_vertices, std::vector<Face> facets);

  /// Complex generated by arbitrary faces (non-maximal ones are dropped).
  static SimplicialComplex generated_by(std::size_t n_vertices, std::vector<Face> faces);

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  /// Largest facet size minus one; -1 for the empty complex.
  int dim() const { return dim_; }
  bool is_pure() const;
  bool empty() const { return facets_.empty(); }

  bool contains_face(const Face& face) const;
  /// All k-faces, sorted lexicographically.
  std::vector<Face> faces(int k) const;
  /// Vertices that occur in some facet.
  std::vector<int> used_vertices() const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Face> facets_;
  int dim_ = -1;
};

std::vector<std::size_t> f_vector(const SimplicialComplex& c);
long euler_characteristic(const SimplicialComplex& c);

SimplicialComplex star(const SimplicialComplex& c, const Face& face);
SimplicialComplex link(const SimplicialComplex& c, const Face& face);

/// Fixed-point-free involution on vertex labels.
struct Involution {
  std::vector<int> map;

  /// Throws PreconditionError unless map is an involution without fixed
  /// points on [0, n).
  void validate(std::size_t n) const;
};

struct DisjointStarReport {
  bool holds = true;
  /// Pairs (v, tau(v)), v < tau(v), whose stars meet.
  std::vector<std::pair<int, int>> violations;
  bool by_neighbors = true;          // skeleton test: not adjacent, no common neighbor
  bool by_star_intersection = true;  // direct test on star vertex sets
  bool methods_agree = true;
};

/// Runs both the 1-skeleton test and direct star intersection.
DisjointStarReport check_disjoint_stars(const SimplicialComplex& c, const Involution& tau);

/// Identifies v with tau(v); vertices of the quotient are the orbit
/// representatives min(v, tau(v)) renumbered in increasing order. Throws
/// PreconditionError listing the violating pairs if stars are not disjoint.
SimplicialComplex antipodal_quotient(const SimplicialComplex& c, const Involution& tau);

struct CanonicalForm {
  std::size_t n_used = 0;
  std::vector<Face> facets;     // canonical labels 0..n_used-1, sorted
  std::vector<int> relabeling;  // relabeling[old] = canonical label, -1 if unused

  bool same_type(const CanonicalForm& o) const { return n_used == o.n_used && facets == o.facets; }
};

/// Label-invariant representative: equal for two complexes iff they are
/// combinatorially isomorphic (unused vertex labels are ignored).
CanonicalForm canonical_form(const SimplicialComplex& c);

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Full combinatorial automorphism group acting on [0, n_vertices).
PermutationGroup automorphism_group(const SimplicialComplex& c);

bool is_automorphism(const SimplicialComplex& c, const Permutation& p);

/// Applies a vertex relabeling (p[old] = new).
SimplicialComplex relabel(const SimplicialComplex& c, const Permutation& p);

struct LinkClass {
  CanonicalForm type;
  std::size_t count = 0;
  Face sample_face;
  std::vector<std::size_t> sample_f_vector;
};

/// Partitions the links of all k-faces into isomorphism classes (ordered by
/// the canonical form).
std::vector<LinkClass> classify_face_links(const SimplicialComplex& c, int k);

Graph skeleton_graph(const SimplicialComplex& c);

}  // namespace cspoly
