#pragma once

// Simplicial chain complexes and their homology.
//
// Boundary maps use the sorted-vertex orientation:
//   d[v_0 < ... < v_k] = sum_i (-1)^i [v_0 ... v_i-hat ... v_k].
// Mod-2 ranks come from sparse column reduction with clearing; integer
// homology from sparse unit-pivot elimination followed by a dense Smith
// normal form of whatever is left.

#include <cstddef>
#include <vector>

#include "cspoly/complex.hpp"
#include "cspoly/ratmath.hpp"

namespace cspoly {

struct BoundaryMatrix {
  int k = 0;              // maps k-faces to (k-1)-faces
  std::size_t rows = 0;   // number of (k-1)-faces
  std::size_t cols = 0;   // number of k-faces
  /// columns[j] lists (row, +-1) with rows increasing.
  std::vector<std::vector<std::pair<int, int>>> columns;
};

/// Boundary matrices for k = 1..dim, faces indexed as in SimplicialComplex::faces.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c);

/// True iff the product a * b is the zero matrix (a = d_{k}, b = d_{k+1}).
bool composes_to_zero(const BoundaryMatrix& a, const BoundaryMatrix& b);

/// Rank over GF(2).
std::size_t rank_mod2(const BoundaryMatrix& m);

/// Betti numbers over GF(2), k = 0..dim.
std::vector<std::size_t> betti_mod2(const SimplicialComplex& c);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, non-decreasing

  bool operator==(const HomologyGroup&) const = default;
};

struct HomologySummary {
  std::vector<HomologyGroup> groups;  // k = 0..dim
  std::vector<std::size_t> ranks;     // rank of d_k over Q, k = 0..dim (d_0 = 0)

  /// e.g. "(Z, Z/2, 0, Z/2, 0, Z)".
  std::string to_string() const;
};

/// Integer invariant factors (all nonzero diagonal entries of the Smith
/// normal form, including ones) of a boundary matrix.
std::vector<Integer> invariant_factors(const BoundaryMatrix& m);

HomologySummary integer_homology(const SimplicialComplex& c);

/// Euler characteristic from the Betti numbers.
long homology_euler_characteristic(const HomologySummary& h);

}  // namespace cspoly
