#include "cspoly/ratmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("malformed number '" + std::string(whole) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    Integer ex = parse_integer(exp_part, text);
    if (!ex.fits_slong_p() || abs(ex) > 4096) throw ParseError("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    int_part = s.substr(0, dot_pos);
    frac_part = s.substr(dot_pos + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    throw ParseError("malformed number '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - static_cast<long>(frac_part.size());
  Rational r;
  if (scale >= 0) {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
    r.canonicalize();
  }
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
      throw ParseError("malformed denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw PreconditionError("ragged matrix rows");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<RatVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    RatVector v;
    v.reserve(r.size());
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return RatMatrix(std::move(out));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows()) throw PreconditionError("matrix product shape mismatch");
  RatMatrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[r][k] == 0) continue;
      for (std::size_t c = 0; c < other.cols(); ++c) out(r, c) += rows_[r][k] * other(k, c);
    }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector shape mismatch");
  RatVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = dot(rows_[r], v);
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return cols_ == other.cols_ && rows_ == other.rows_;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RatVector negate(const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Rational squared_norm(const RatVector& v) { return dot(v, v); }

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer det_bareiss(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Integer d = at(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

std::size_t rank_bareiss(std::vector<Integer> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(rank, c) * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

namespace {

// Row-scaled integer copy of m plus the product of the row scale factors.
std::pair<std::vector<Integer>, Integer> integer_rows(const RatMatrix& m) {
  std::vector<Integer> out;
  out.reserve(m.rows() * m.cols());
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : m.row(r)) out.push_back(x.get_num() * (l / x.get_den()));
    scale *= l;
  }
  return {std::move(out), scale};
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (!m.square()) throw PreconditionError("det of a non-square matrix");
  auto [ints, scale] = integer_rows(m);
  Rational d(det_bareiss(std::move(ints), m.rows()), scale);
  d.canonicalize();
  return d;
}

std::size_t rank(const RatMatrix& m) {
  auto [ints, scale] = integer_rows(m);
  return rank_bareiss(std::move(ints), m.rows(), m.cols());
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw PreconditionError("solve: row count does not match right-hand side");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<RatVector> aug(rows, RatVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a(r, c);
    aug[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t p = prow;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[prow]);
    Rational inv = 1 / aug[prow][c];
    for (std::size_t j = c; j <= cols; ++j) aug[prow][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == prow || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[prow][j];
    }
    pivot_cols.push_back(c);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r)
    if (aug[r][cols] != 0) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

int orientation(const std::vector<RatVector>& points) {
  if (points.empty()) throw PreconditionError("orientation of an empty point list");
  const std::size_t d = points.size() - 1;
  std::vector<RatVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != d) throw PreconditionError("orientation needs d+1 points in R^d");
    RatVector r = p;
    r.emplace_back(1);
    rows.push_back(std::move(r));
  }
  return sgn(det(RatMatrix(std::move(rows))));
}

}  // namespace cspoly
