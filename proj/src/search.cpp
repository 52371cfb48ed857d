#include "cspoly/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

struct FloatFacet {
  std::vector<int> vertices;  // sorted, d entries
  Eigen::VectorXd normal;
  double offset = 0;
  bool alive = true;
};

// Beneath-beyond over a triangulated boundary in floating point.
class FloatHull {
 public:
  FloatHull(const FloatConfig& points, double tol) : pts_(points), tol_(tol) {
    if (pts_.empty()) throw DegenerateFloatConfiguration("empty configuration");
    d_ = static_cast<std::size_t>(pts_.front().size());
    if (pts_.size() < d_ + 1) throw DegenerateFloatConfiguration("fewer than d+1 points");
    initial_simplex();
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (!in_simplex_[i]) insert(static_cast<int>(i));
  }

  std::vector<std::vector<int>> facet_incidences() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      std::vector<int> on;
      for (std::size_t i = 0; i < pts_.size(); ++i)
        if (std::abs(f.normal.dot(pts_[i]) - f.offset) <= tol_) on.push_back(static_cast<int>(i));
      out.push_back(std::move(on));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void initial_simplex() {
    in_simplex_.assign(pts_.size(), 0);
    std::vector<int> chosen{0};
    std::vector<Eigen::VectorXd> basis;  // orthonormal basis of chosen - p0
    for (std::size_t k = 0; k < d_; ++k) {
      int best = -1;
      double best_res = 0;
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        Eigen::VectorXd r = pts_[i] - pts_[static_cast<std::size_t>(chosen[0])];
        for (const auto& b : basis) r -= b.dot(r) * b;
        if (r.norm() > best_res) {
          best_res = r.norm();
          best = static_cast<int>(i);
        }
      }
      if (best < 0 || best_res <= tol_) throw DegenerateFloatConfiguration("points do not span R^d");
      Eigen::VectorXd r = pts_[static_cast<std::size_t>(best)] - pts_[static_cast<std::size_t>(chosen[0])];
      for (const auto& b : basis) r -= b.dot(r) * b;
      basis.push_back(r.normalized());
      chosen.push_back(best);
    }
    interior_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d_));
    for (int c : chosen) {
      interior_ += pts_[static_cast<std::size_t>(c)];
      in_simplex_[static_cast<std::size_t>(c)] = 1;
    }
    interior_ /= static_cast<double>(chosen.size());
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      std::vector<int> face;
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (k != skip) face.push_back(chosen[k]);
      add_facet(std::move(face));
    }
  }

  void add_facet(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const auto& p0 = pts_[static_cast<std::size_t>(vertices[0])];
    Eigen::MatrixXd m(static_cast<Eigen::Index>(d_), static_cast<Eigen::Index>(d_ - 1));
    for (std::size_t k = 1; k < vertices.size(); ++k)
      m.col(static_cast<Eigen::Index>(k - 1)) = pts_[static_cast<std::size_t>(vertices[k])] - p0;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    FloatFacet f;
    f.normal = q.col(static_cast<Eigen::Index>(d_ - 1));
    f.offset = f.normal.dot(p0);
    if (f.normal.dot(interior_) - f.offset > 0) {
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    f.vertices = std::move(vertices);
    facets_.push_back(std::move(f));
  }

  void insert(int p) {
    const auto& x = pts_[static_cast<std::size_t>(p)];
    std::vector<std::size_t> visible;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (facets_[i].alive && facets_[i].normal.dot(x) - facets_[i].offset > tol_) visible.push_back(i);
    if (visible.empty()) return;
    std::map<std::vector<int>, int> ridge_count;
    for (std::size_t i : visible) {
      const auto& v = facets_[i].vertices;
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (k != skip) ridge.push_back(v[k]);
        ++ridge_count[ridge];
      }
      facets_[i].alive = false;
    }
    for (auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> face = ridge;
      face.push_back(p);
      add_facet(std::move(face));
    }
  }

  const FloatConfig& pts_;
  double tol_;
  std::size_t d_ = 0;
  Eigen::VectorXd interior_;
  std::vector<char> in_simplex_;
  std::vector<FloatFacet> facets_;
};

Eigen::VectorXd gaussian_vector(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  return v;
}

Eigen::VectorXd random_unit(std::size_t d, std::mt19937_64& rng) {
  Eigen::VectorXd v;
  do v = gaussian_vector(d, rng);
  while (v.norm() < 1e-12);
  return v.normalized();
}

}  // namespace

std::vector<std::pair<int, int>> float_hull_edges(const FloatConfig& points, double tol) {
  FloatHull hull(points, tol);
  const std::size_t n = points.size();
  const std::size_t words = (n + 63) / 64;
  // common[i*n+j]: intersection of the incidence sets of facets holding i and j.
  std::vector<std::vector<std::uint64_t>> common(n * n);
  for (const auto& f : hull.facet_incidences()) {
    std::vector<std::uint64_t> bits(words, 0);
    for (int v : f) bits[static_cast<std::size_t>(v) / 64] |= 1ULL << (static_cast<std::size_t>(v) % 64);
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        auto& c = common[static_cast<std::size_t>(f[a]) * n + static_cast<std::size_t>(f[b])];
        if (c.empty()) {
          c = bits;
        } else {
          for (std::size_t w = 0; w < words; ++w) c[w] &= bits[w];
        }
      }
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = common[i * n + j];
      if (c.empty()) continue;
      std::size_t count = 0;
      for (auto w : c) count += static_cast<std::size_t>(__builtin_popcountll(w));
      if (count == 2) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return edges;
}

FloatConfig antipodal_closure(const FloatConfig& half) {
  FloatConfig full = half;
  for (const auto& x : half) full.push_back(-x);
  return full;
}

double minmax_edge_objective(const FloatConfig& half, double tol) {
  FloatConfig full = antipodal_closure(half);
  auto edges = float_hull_edges(full, tol);
  if (edges.empty()) throw DegenerateFloatConfiguration("hull has no edges");
  double best = std::numeric_limits<double>::infinity();
  for (auto [i, j] : edges) best = std::min(best, full[static_cast<std::size_t>(i)].dot(full[static_cast<std::size_t>(j)]));
  return best;
}

FloatConfig normalized(const FloatConfig& points) {
  FloatConfig out;
  for (const auto& p : points) out.push_back(p.normalized());
  return out;
}

SearchState minmax_edge_search(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t iterations,
                               const AnnealingSchedule& schedule, const std::optional<FloatConfig>& initial) {
  if (d < 2) throw PreconditionError("dimension must be at least 2");
  if (n % 2 != 0) throw PreconditionError("n must be even");
  if (n < 2 * (d + 1)) throw PreconditionError("n must be at least 2(d+1)");
  if (!(schedule.initial_temperature > 0) || !(schedule.final_temperature > 0))
    throw PreconditionError("temperatures must be positive");
  const std::size_t m = n / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);

  SearchState s;
  s.dim = d;
  s.seed = seed;
  if (initial) {
    if (initial->size() != m) throw PreconditionError("initial configuration must have n/2 points");
    for (const auto& p : *initial)
      if (static_cast<std::size_t>(p.size()) != d || p.norm() == 0) throw PreconditionError("initial point has wrong dimension or is zero");
    s.points = normalized(*initial);
  } else {
    for (std::size_t i = 0; i < m; ++i) s.points.push_back(random_unit(d, rng));
  }
  // Degenerate starts are nudged until the hull is full-dimensional.
  for (int attempt = 0;; ++attempt) {
    try {
      s.objective = minmax_edge_objective(s.points);
      break;
    } catch (const DegenerateFloatConfiguration&) {
      if (attempt == 100) throw;
      for (auto& p : s.points) p = (p + 1e-6 * gaussian_vector(d, rng)).normalized();
    }
  }
  s.best_objective = s.objective;
  s.best_points = s.points;
  s.temperature = schedule.initial_temperature;
  const double cooling =
      iterations ? std::pow(schedule.final_temperature / schedule.initial_temperature, 1.0 / static_cast<double>(iterations)) : 1.0;
  const std::size_t stride = std::max<std::size_t>(1, iterations / std::max<std::size_t>(1, schedule.trace_points));
  s.trace.emplace_back(0, s.best_objective);

  for (std::size_t it = 1; it <= iterations; ++it) {
    const std::size_t k = pick(rng);
    const double step =
        std::max(schedule.min_step, schedule.initial_step * std::sqrt(s.temperature / schedule.initial_temperature));
    Eigen::VectorXd old = s.points[k];
    Eigen::VectorXd cand = old + step * gaussian_vector(d, rng);
    const double u = unit(rng);
    if (cand.norm() > 1e-12) {
      s.points[k] = cand.normalized();
      bool accepted = false;
      try {
        double value = minmax_edge_objective(s.points);
        double delta = value - s.objective;
        if (delta >= 0 || u < std::exp(delta / s.temperature)) {
          s.objective = value;
          accepted = true;
        }
      } catch (const DegenerateFloatConfiguration&) {
      }
      if (accepted) {
        ++s.accepted;
        if (s.objective > s.best_objective) {
          s.best_objective = s.objective;
          s.best_points = s.points;
        }
      } else {
        s.points[k] = old;
      }
    }
    s.temperature *= cooling;
    s.iterations = it;
    if (it % stride == 0 || it == iterations) s.trace.emplace_back(it, s.best_objective);
  }
  return s;
}

double OrthogonalFrame::orthogonality_error() const {
  const auto n = q.rows();
  return (q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

double l1_objective(const Eigen::MatrixXd& q, const FloatConfig& points) {
  double f = 0;
  for (const auto& x : points) f += (q * x).lpNorm<1>();
  return f;
}

FloatConfig apply_frame(const Eigen::MatrixXd& q, const FloatConfig& points) {
  FloatConfig out;
  for (const auto& x : points) out.push_back(q * x);
  return out;
}

Eigen::MatrixXd random_rotation(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

namespace {

// Contribution of rows i and j of y to the L1 norm after rotating them by phi.
double pair_l1(const Eigen::MatrixXd& y, Eigen::Index i, Eigen::Index j, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  double f = 0;
  for (Eigen::Index k = 0; k < y.cols(); ++k) {
    const double a = y(i, k), b = y(j, k);
    f += std::abs(c * a - s * b) + std::abs(s * a + c * b);
  }
  return f;
}

void rotate_rows(Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  Eigen::RowVectorXd ri = m.row(i), rj = m.row(j);
  m.row(i) = c * ri - s * rj;
  m.row(j) = s * ri + c * rj;
}

// Minimizes pair_l1 over one period [-pi/4, pi/4); returns (phi, value).
std::pair<double, double> line_search(const Eigen::MatrixXd& y, Eigen::Index i, Eigen::Index j) {
  constexpr int kGrid = 72;
  const double lo = -std::numbers::pi / 4, h = (std::numbers::pi / 2) / kGrid;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int g = 0; g < kGrid; ++g) {
    double v = pair_l1(y, i, j, lo + g * h);
    if (v < best_val) {
      best_val = v;
      best = g;
    }
  }
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double a = lo + (best - 1) * h, b = lo + (best + 1) * h;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = pair_l1(y, i, j, c), fd = pair_l1(y, i, j, d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = pair_l1(y, i, j, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = pair_l1(y, i, j, d);
    }
  }
  double phi = (a + b) / 2, val = pair_l1(y, i, j, phi);
  if (best_val < val) return {lo + best * h, best_val};
  return {phi, val};
}

SparsifyResult descend(const FloatConfig& points, Eigen::MatrixXd q0, std::size_t max_sweeps) {
  const auto d = q0.rows();
  Eigen::MatrixXd x(d, static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) x.col(static_cast<Eigen::Index>(k)) = points[k];
  SparsifyResult r;
  r.frame.q = q0;
  Eigen::MatrixXd y = q0 * x;
  double f = y.cwiseAbs().sum();
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = f;
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = i + 1; j < d; ++j) {
        const double current = pair_l1(y, i, j, 0.0);
        auto [phi, val] = line_search(y, i, j);
        if (val < current) {
          rotate_rows(y, i, j, phi);
          rotate_rows(r.frame.q, i, j, phi);
          r.frame.rotations.push_back({static_cast<int>(i), static_cast<int>(j), phi});
          f = y.cwiseAbs().sum();
        }
      }
    r.history.push_back(f);
    r.sweeps = sweep + 1;
    if (before - f < 1e-10) break;
  }
  r.value = l1_objective(r.frame.q, points);
  return r;
}

}  // namespace

SparsifyResult l1_sparsify(const FloatConfig& points, std::uint64_t seed, std::size_t max_sweeps, std::size_t restarts) {
  if (points.empty()) throw PreconditionError("empty configuration");
  const auto d = static_cast<std::size_t>(points.front().size());
  SparsifyResult best = descend(points, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)), max_sweeps);
  for (std::size_t r = 0; r < restarts; ++r) {
    SparsifyResult cand = descend(points, random_rotation(d, seed + r), max_sweeps);
    if (cand.value < best.value - 1e-12) best = std::move(cand);
  }
  return best;
}

Rational best_rational(double x, const Integer& max_den) {
  if (max_den < 1) throw PreconditionError("max denominator must be at least 1");
  if (!std::isfinite(x)) throw PreconditionError("cannot rationalize a non-finite value");
  Rational r(x);  // exact binary value
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest admissible semiconvergent versus the last convergent.
      Integer k = (max_den - q0) / q1;
      Rational semi(Integer(p0 + k * p1), Integer(q0 + k * q1));
      Rational conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      Rational exact(x);
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = r - Rational(a);
    if (frac == 0) {
      Rational out(p1, q1);
      out.canonicalize();
      return out;
    }
    r = 1 / frac;
  }
}

PointConfiguration rationalize(const FloatConfig& points, const Integer& max_den) {
  if (max_den < 1) throw PreconditionError("max denominator must be at least 1");
  PointConfiguration out;
  if (points.empty()) return out;
  out.dim = static_cast<std::size_t>(points.front().size());
  const std::size_t n = points.size();
  // Mutual nearest antipodes within a relative tolerance.
  std::vector<int> partner(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double dist = (points[i] + points[j]).norm();
      if (dist < best) {
        best = dist;
        partner[i] = static_cast<int>(j);
      }
    }
    if (best > 1e-6 * std::max(1.0, points[i].norm())) partner[i] = -1;
  }
  bool paired = true;
  for (std::size_t i = 0; i < n; ++i)
    if (partner[i] < 0 || partner[static_cast<std::size_t>(partner[i])] != static_cast<int>(i)) paired = false;

  out.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (paired && static_cast<std::size_t>(partner[i]) < i) continue;
    Eigen::VectorXd v = paired ? Eigen::VectorXd((points[i] - points[static_cast<std::size_t>(partner[i])]) / 2) : points[i];
    RatVector p;
    for (Eigen::Index k = 0; k < v.size(); ++k) p.push_back(best_rational(v[k], max_den));
    if (paired) out.points[static_cast<std::size_t>(partner[i])] = negate(p);
    out.points[i] = std::move(p);
  }
  if (auto pairing = out.detect_pairing()) out.pairing = *pairing;
  return out;
}

FloatConfig to_float(const PointConfiguration& config) {
  FloatConfig out;
  for (const auto& p : config.points) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) v[static_cast<Eigen::Index>(k)] = p[k].get_d();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cspoly
