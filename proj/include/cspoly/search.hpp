#pragma once

// Floating-point search for centrally symmetric spherical configurations:
// simulated annealing on the minimal hull-edge inner product, L1
// sparsification over rotations, and rationalization to exact coordinates.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cspoly/hull.hpp"

namespace cspoly {

using FloatConfig = std::vector<Eigen::VectorXd>;

/// Incidence tolerance of the floating-point hull.
inline constexpr double kHullTolerance = 1e-9;

/// Thrown by the float hull when the points do not span R^d.
class DegenerateFloatConfiguration : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Edges of the convex hull of `points` (pairs whose smallest common
/// tolerance-facet contains exactly those two points).
std::vector<std::pair<int, int>> float_hull_edges(const FloatConfig& points, double tol = kHullTolerance);

/// The full antipodal set {x_i} followed by {-x_i}.
FloatConfig antipodal_closure(const FloatConfig& half);

/// min <x_i, x_j> over hull edges of the antipodal closure.
double minmax_edge_objective(const FloatConfig& half, double tol = kHullTolerance);

struct AnnealingSchedule {
  double initial_temperature = 0.02;
  double final_temperature = 1e-6;
  double initial_step = 0.3;   // Gaussian step at the initial temperature
  double min_step = 1e-5;
  std::size_t trace_points = 200;  // best-so-far samples kept in the trace
};

struct SearchState {
  FloatConfig points;              // n/2 unit vectors, antipodes implicit
  std::size_t dim = 0;
  double objective = 0;            // objective of `points`
  double best_objective = 0;
  FloatConfig best_points;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  double temperature = 0;
  std::size_t accepted = 0;
  /// (iteration, best-so-far) samples, non-decreasing in both.
  std::vector<std::pair<std::size_t, double>> trace;
};

/// Simulated annealing over n/2 free unit vectors in R^d (n even,
/// n >= 2(d+1)). Starts from `initial` when given (normalized), otherwise
/// from seeded Gaussian points. Deterministic for fixed arguments.
SearchState minmax_edge_search(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t iterations,
                               const AnnealingSchedule& schedule = {},
                               const std::optional<FloatConfig>& initial = std::nullopt);

struct GivensRotation {
  int i = 0, j = 0;
  double angle = 0;
};

struct OrthogonalFrame {
  Eigen::MatrixXd q;
  std::vector<GivensRotation> rotations;  // q = G_k ... G_1 (applied in order)

  double orthogonality_error() const;
};

/// sum_i ||q x_i||_1
double l1_objective(const Eigen::MatrixXd& q, const FloatConfig& points);

struct SparsifyResult {
  OrthogonalFrame frame;
  double value = 0;
  std::size_t sweeps = 0;
  std::vector<double> history;  // f after each sweep of the best start
};

/// Givens-angle coordinate descent on f(Q) = sum ||Q x_i||_1 with a grid
/// plus golden-section line search per angle; sweeps stop when an entire
/// sweep improves f by less than 1e-10. `restarts` extra starts from seeded
/// random rotations are tried; the best result is returned.
SparsifyResult l1_sparsify(const FloatConfig& points, std::uint64_t seed = 1, std::size_t max_sweeps = 200,
                           std::size_t restarts = 8);

FloatConfig apply_frame(const Eigen::MatrixXd& q, const FloatConfig& points);

/// Haar-random rotation from a seed.
Eigen::MatrixXd random_rotation(std::size_t d, std::uint64_t seed);

/// Best rational approximation with denominator <= max_den.
Rational best_rational(double x, const Integer& max_den);

/// Rounds every coordinate to its best rational approximation. When the
/// points pair up into near-antipodes, each pair is first symmetrized to
/// (x_i - x_j)/2 so the result has an exact pairing.
PointConfiguration rationalize(const FloatConfig& points, const Integer& max_den);

FloatConfig to_float(const PointConfiguration& config);
FloatConfig normalized(const FloatConfig& points);

}  // namespace cspoly
