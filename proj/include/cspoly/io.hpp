#pragma once

// Text formats shared by the CLI and the Python module.
//
// Points file: header "d n", then n lines of d numbers ("p/q", integers or
// decimals). Facets file: one facet per line, 0-based vertex indices.
// In both, '#' starts a comment and blank lines are ignored.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cspoly/complex.hpp"
#include "cspoly/hull.hpp"

namespace cspoly {

/// Parses a points file; the antipodal pairing is detected automatically
/// (left empty when the set is not centrally symmetric).
PointConfiguration read_points(std::istream& in, const std::string& source = "<input>");
PointConfiguration load_points(const std::string& path);

void write_points(std::ostream& out, const PointConfiguration& config);
void save_points(const std::string& path, const PointConfiguration& config);

/// Float coordinates are written with 17 significant digits, which round-trip.
using FloatPoints = std::vector<std::vector<double>>;
void save_float_points(const std::string& path, const FloatPoints& points);
FloatPoints load_float_points(const std::string& path);

/// Non-pure complexes are rejected unless allow_nonpure is set. The vertex
/// count is one more than the largest index.
SimplicialComplex read_facets(std::istream& in, const std::string& source = "<input>", bool allow_nonpure = false);
SimplicialComplex load_facets(const std::string& path, bool allow_nonpure = false);

void write_facets(std::ostream& out, const SimplicialComplex& c);
void save_facets(const std::string& path, const SimplicialComplex& c);

/// 64-bit FNV-1a hash.
std::uint64_t fnv1a64(std::string_view data);

/// Hex FNV-1a of the points file text of `config`.
std::string points_checksum(const PointConfiguration& config);
std::string facets_checksum(const SimplicialComplex& c);

/// The reference 24-vertex RP^5 facet list, looked up in
/// $CSPOLY_REFERENCE_FACETS, then data/reference_rp5_24.txt in the source tree.
std::optional<std::string> find_reference_facets();

}  // namespace cspoly
