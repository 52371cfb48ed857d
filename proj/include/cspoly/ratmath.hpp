#pragma once

// Exact rational scalars, vectors and matrices.
//
// Rationals are GMP mpq_class values kept in canonical form (positive
// denominator, reduced). Determinant and rank use fraction-free (Bareiss)
// elimination over integers after clearing row denominators.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cspoly {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "p/q", "p", or a decimal such as "-0.125" / "1.5e-3" exactly.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" (no denominator when it is 1).
std::string to_string(const Rational& value);

Rational make_rational(long num, long den);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<RatVector> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows() == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const RatVector& row(std::size_t r) const { return rows_[r]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVector operator*(const RatVector& v) const;
  bool operator==(const RatMatrix& other) const;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector negate(const RatVector& v);
Rational squared_norm(const RatVector& v);

Rational det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Sign of det [[p_0, 1], ..., [p_d, 1]] for d+1 points in R^d.
int orientation(const std::vector<RatVector>& points);

// Integer kernels shared with the hull.

/// Bareiss determinant of a square integer matrix (row-major, n*n entries).
Integer det_bareiss(std::vector<Integer> a, std::size_t n);

/// Bareiss rank of an integer matrix (row-major, rows*cols entries).
std::size_t rank_bareiss(std::vector<Integer> a, std::size_t rows, std::size_t cols);

/// Scales v by the lcm of its denominators; result is an integer vector with
/// the same direction (positive multiple of v).
IntVector clear_denominators(const RatVector& v);

/// Divides out the gcd of the entries (no-op on the zero vector).
void make_primitive(IntVector& v);

}  // namespace cspoly
