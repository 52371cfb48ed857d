#pragma once

#include <stdexcept>
#include <string>

namespace cspoly {

/// Malformed text input (points/facets files, rationals on the command line).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its domain (bad parameters, degenerate
/// configurations, a complex failing the disjoint-star condition, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cspoly
