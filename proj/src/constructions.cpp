#include "cspoly/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cspoly/complex.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/io.hpp"

namespace cspoly {

namespace {

#include "p790_table.inc"

// Published pattern of the 48 points: a/b/g stand for alpha/beta/gamma.
constexpr const char* kP648Pattern[48] = {
    "0 g a b 0 0",   "a 0 0 -g -b 0", "b g -a 0 0 0",  "-b g -a 0 0 0", "-g 0 0 -a -b 0", "0 0 b 0 a -g",
    "0 0 b 0 -g -a", "-g 0 0 -a b 0", "0 b 0 0 -a -g", "0 -g -a b 0 0", "0 -b 0 0 g -a",  "0 -b 0 0 -g a",
    "-g 0 0 a 0 b",  "-g 0 0 a 0 -b", "0 0 b 0 -a g",  "a 0 0 g 0 b",   "0 a -g b 0 0",   "a 0 0 -g b 0",
    "b -a -g 0 0 0", "0 b 0 0 a g",   "0 0 b 0 g a",   "b a g 0 0 0",   "a 0 0 g 0 -b",   "0 a -g -b 0 0",
    "0 -g -a -b 0 0", "-a 0 0 g b 0", "-b -g a 0 0 0", "b -g a 0 0 0",  "g 0 0 a b 0",    "0 0 -b 0 -a g",
    "0 0 -b 0 g a",  "g 0 0 a -b 0",  "0 -b 0 0 a g",  "0 g a -b 0 0",  "0 b 0 0 -g a",   "0 b 0 0 g -a",
    "g 0 0 -a 0 -b", "g 0 0 -a 0 b",  "0 0 -b 0 a -g", "-a 0 0 -g 0 -b", "0 -a g -b 0 0",  "-a 0 0 g -b 0",
    "-b a g 0 0 0",  "0 -b 0 0 -a -g", "0 0 -b 0 -g -a", "-b -a -g 0 0 0", "-a 0 0 -g 0 b", "0 -a g b 0 0",
};

std::vector<int> support_of(const RatVector& p) {
  std::vector<int> s;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

std::vector<int> sign_vector(const RatVector& p) {
  std::vector<int> s;
  for (const auto& x : p)
    if (x != 0) s.push_back(sgn(x));
  return s;
}

}  // namespace

PointConfiguration build_p648(const P648Parameters& params) {
  const auto& [a, b, g] = params;
  if (a <= 0 || b <= 0 || g <= 0) throw PreconditionError("alpha, beta and gamma must be positive");
  if (!(a < b && b < g)) throw PreconditionError("parameters must satisfy alpha < beta < gamma");
  PointConfiguration config;
  config.dim = 6;
  for (const char* row : kP648Pattern) {
    std::istringstream in(row);
    std::string tok;
    RatVector p;
    while (in >> tok) {
      bool neg = tok.front() == '-';
      char sym = tok.back();
      Rational v = sym == 'a' ? a : sym == 'b' ? b : sym == 'g' ? g : Rational(0);
      p.push_back(neg ? Rational(-v) : v);
    }
    config.points.push_back(std::move(p));
  }
  config.pairing = PointConfiguration::half_shift_pairing(48);
  config.validate();
  return config;
}

RatMatrix generator_matrix_b() {
  return RatMatrix::from_ints({{-1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 1, 0}});
}

RatMatrix generator_matrix_c() {
  return RatMatrix::from_ints({{0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, -1, 0, 0, 0, 0},
                               {0, 0, 0, -1, 0, 0},
                               {-1, 0, 0, 0, 0, 0}});
}

std::vector<std::vector<int>> expected_supports() {
  return {{1, 2, 3}, {1, 4, 5}, {1, 4, 6}, {2, 3, 4}, {2, 5, 6}, {3, 5, 6}};
}

SupportPartition support_partition(const PointConfiguration& config) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (std::size_t i = 0; i < config.size(); ++i) groups[support_of(config.points[i])].push_back(static_cast<int>(i));
  const auto expected = expected_supports();
  SupportPartition out;
  for (auto& [support, members] : groups) {
    if (std::find(expected.begin(), expected.end(), support) == expected.end()) out.unexpected_supports.push_back(support);
    SupportClass cls;
    cls.support = support;
    cls.vertices = members;

    Graph sign_graph(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto si = sign_vector(config.points[static_cast<std::size_t>(members[i])]);
        auto sj = sign_vector(config.points[static_cast<std::size_t>(members[j])]);
        if (si.size() != sj.size()) continue;
        std::size_t diff = 0;
        for (std::size_t k = 0; k < si.size(); ++k) diff += si[k] != sj[k] ? 1 : 0;
        if (diff == 1) sign_graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    cls.cube_edges = sign_graph.edge_count();
    auto profile = degree_profile(sign_graph);
    cls.sign_cube_graph = members.size() == 8 && profile.regular_degree == 3u && profile.edges == 12;

    // Exact hull of the class in its support coordinates.
    if (members.size() == 8 && support.size() == 3) {
      PointConfiguration sub;
      sub.dim = 3;
      for (int v : members) {
        RatVector q;
        for (int c : support) q.push_back(config.points[static_cast<std::size_t>(v)][static_cast<std::size_t>(c - 1)]);
        sub.points.push_back(std::move(q));
      }
      try {
        HullStructure h = facet_enumeration(sub);
        bool quads = h.facets.size() == 6 &&
                     std::all_of(h.facets.begin(), h.facets.end(), [](const Facet& f) { return f.vertices.size() == 4; });
        Graph hull_graph(members.size());
        for (auto [i, j] : hull_edges(h)) hull_graph.add_edge(i, j);
        cls.hull_is_cube = quads && h.hull_vertices.size() == 8 && hull_graph == sign_graph;
      } catch (const PreconditionError&) {
        cls.hull_is_cube = false;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::size_t max_facet_class_contribution(const HullStructure& h, const SupportPartition& partition) {
  std::vector<int> class_of(h.config.size(), -1);
  for (std::size_t c = 0; c < partition.classes.size(); ++c)
    for (int v : partition.classes[c].vertices) class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::size_t best = 0;
  for (const auto& f : h.facets) {
    std::vector<std::size_t> count(partition.classes.size(), 0);
    for (int v : f.vertices)
      if (class_of[static_cast<std::size_t>(v)] >= 0) best = std::max(best, ++count[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])]);
  }
  return best;
}

Permutation matrix_action(const RatMatrix& m, const PointConfiguration& config) {
  if (m.rows() != config.dim || m.cols() != config.dim) throw PreconditionError("matrix does not act on the configuration's space");
  std::map<RatVector, int> index;
  for (std::size_t i = 0; i < config.size(); ++i) index.emplace(config.points[i], static_cast<int>(i));
  Permutation p(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    RatVector image = m * config.points[i];
    auto it = index.find(image);
    if (it == index.end()) {
      std::ostringstream msg;
      msg << "matrix does not stabilize the point set: image of point " << i << " is (";
      for (std::size_t k = 0; k < image.size(); ++k) msg << (k ? ", " : "") << to_string(image[k]);
      msg << ")";
      throw PreconditionError(msg.str());
    }
    p[i] = it->second;
  }
  if (!is_permutation(p)) throw PreconditionError("matrix action is not injective on the point set");
  return p;
}

bool supports_match_expected(const SupportPartition& partition, std::size_t dim) {
  auto expected = expected_supports();
  std::sort(expected.begin(), expected.end());
  std::vector<std::vector<int>> family;
  for (const auto& c : partition.classes) family.push_back(c.support);
  if (family.size() != expected.size() || dim != 6) return false;
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<std::vector<int>> mapped;
    for (const auto& s : family) {
      std::vector<int> m;
      for (int c : s) m.push_back(perm[static_cast<std::size_t>(c - 1)]);
      std::sort(m.begin(), m.end());
      mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == expected) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Indices of `dim` linearly independent points, chosen greedily.
std::optional<std::vector<std::size_t>> point_basis(const PointConfiguration& config) {
  std::vector<std::size_t> basis;
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < config.size() && basis.size() < config.dim; ++i) {
    rows.push_back(config.points[i]);
    if (rank(RatMatrix(rows)) == rows.size()) {
      basis.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  if (basis.size() != config.dim) return std::nullopt;
  return basis;
}

}  // namespace

std::optional<RatMatrix> linear_realization(const PointConfiguration& config, const Permutation& p) {
  auto basis = point_basis(config);
  if (!basis || p.size() != config.size()) return std::nullopt;
  const std::size_t d = config.dim;
  // A X = Y with X, Y holding the basis points and their images as columns.
  RatMatrix xt(d, d), yt(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) {
      xt(k, r) = config.points[(*basis)[k]][r];
      yt(k, r) = config.points[static_cast<std::size_t>(p[(*basis)[k]])][r];
    }
  // Rows of A solve X^T a_r = (Y^T) column r.
  RatMatrix a(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    RatVector rhs(d);
    for (std::size_t k = 0; k < d; ++k) rhs[k] = yt(k, r);
    auto row = solve(xt, rhs);
    if (!row) return std::nullopt;
    for (std::size_t c = 0; c < d; ++c) a(r, c) = (*row)[c];
  }
  for (std::size_t i = 0; i < config.size(); ++i)
    if (a * config.points[i] != config.points[static_cast<std::size_t>(p[i])]) return std::nullopt;
  return a;
}

std::vector<Permutation> linear_symmetries(const PointConfiguration& config, const std::vector<Permutation>& candidates) {
  auto basis = point_basis(config);
  if (!basis) throw PreconditionError("configuration does not span R^d linearly");
  const std::size_t d = config.dim;
  RatMatrix xt(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) xt(k, r) = config.points[(*basis)[k]][r];
  // X^{-T} once; then A^T = X^{-T} Y^T for every candidate.
  RatMatrix xinv_t(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    RatVector e(d);
    e[c] = 1;
    auto col = solve(xt, e);
    for (std::size_t r = 0; r < d; ++r) xinv_t(r, c) = (*col)[r];
  }
  std::vector<Permutation> out;
  for (const auto& p : candidates) {
    if (p.size() != config.size()) continue;
    RatMatrix yt(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < d; ++r) yt(k, r) = config.points[static_cast<std::size_t>(p[(*basis)[k]])][r];
    RatMatrix a = (xinv_t * yt).transpose();
    bool ok = true;
    for (std::size_t i = 0; i < config.size() && ok; ++i)
      ok = a * config.points[i] == config.points[static_cast<std::size_t>(p[i])];
    if (ok) out.push_back(p);
  }
  return out;
}

std::uint64_t p790_table_checksum() {
  std::string joined;
  for (std::size_t i = 0; i < std::size(kP790Rows); ++i) {
    if (i) joined += '\n';
    joined += kP790Rows[i];
  }
  return fnv1a64(joined);
}

PointConfiguration build_p790() {
  if (p790_table_checksum() != kP790Checksum) throw PreconditionError("90-point coordinate table failed its checksum");
  PointConfiguration config;
  config.dim = 7;
  for (const char* row : kP790Rows) {
    std::istringstream in(row);
    std::string tok;
    RatVector p;
    while (in >> tok) p.push_back(parse_rational(tok));
    config.points.push_back(std::move(p));
  }
  const std::size_t half = config.points.size();
  for (std::size_t i = 0; i < half; ++i) config.points.push_back(negate(config.points[i]));
  config.pairing = PointConfiguration::half_shift_pairing(config.points.size());
  config.validate();
  return config;
}

PointConfiguration cone_cylinder(const PointConfiguration& config, const ConeCylinderOptions& options) {
  config.validate();
  auto pairing = config.has_pairing() ? std::optional<std::vector<int>>(config.pairing) : config.detect_pairing();
  if (!pairing) throw PreconditionError("cone-cylinder needs a centrally symmetric configuration");
  if (options.apex_height <= 1) throw PreconditionError("apex height must exceed 1");
  if (options.delta < 0) throw PreconditionError("perturbation size must be non-negative");
  const std::size_t d = config.dim, n = config.size();

  // Upper half: (p_i, 1) and the upper apex.
  std::vector<RatVector> upper;
  upper.reserve(n + 1);
  for (const auto& p : config.points) {
    RatVector q = p;
    q.emplace_back(1);
    upper.push_back(std::move(q));
  }
  RatVector apex(d + 1);
  apex[d] = options.apex_height;
  upper.push_back(std::move(apex));

  if (options.delta != 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> step(-10, 10);
    for (auto& q : upper)
      for (auto& x : q) x += options.delta * Rational(step(rng), 10);
  }

  PointConfiguration out;
  out.dim = d + 1;
  out.points = upper;
  for (const auto& q : upper) out.points.push_back(negate(q));
  out.pairing = PointConfiguration::half_shift_pairing(out.points.size());
  out.validate();
  return out;
}

ConeCylinderResult find_simplicial_cone_cylinder(const PointConfiguration& config, ConeCylinderOptions options,
                                                 int max_tries) {
  ConeCylinderResult result;
  const std::uint64_t first = options.seed;
  for (int t = 0; t < max_tries; ++t) {
    options.seed = first + static_cast<std::uint64_t>(t);
    PointConfiguration lifted = cone_cylinder(config, options);
    HullStructure h = facet_enumeration(lifted);
    std::ostringstream diag;
    diag << "seed " << options.seed << ": ";
    if (h.hull_vertices.size() != lifted.size()) {
      diag << h.hull_vertices.size() << " of " << lifted.size() << " points are vertices";
      result.attempts.push_back(diag.str());
      continue;
    }
    if (auto s = is_simplicial(h); !s.simplicial) {
      diag << "facet " << *s.witness << " has " << h.facets[static_cast<std::size_t>(*s.witness)].vertices.size() << " vertices";
      result.attempts.push_back(diag.str());
      continue;
    }
    auto stars = check_disjoint_stars(boundary_complex(h), Involution{lifted.pairing});
    if (!stars.holds) {
      diag << stars.violations.size() << " antipodal pairs with intersecting stars";
      result.attempts.push_back(diag.str());
      continue;
    }
    result.config = std::move(lifted);
    result.hull = std::move(h);
    result.seed = options.seed;
    return result;
  }
  std::ostringstream msg;
  msg << "no simplicial cone-cylinder found in " << max_tries << " seeds:";
  for (const auto& a : result.attempts) msg << "\n  " << a;
  throw PreconditionError(msg.str());
}

long rp_vertex_lower_bound(int d) {
  if (d < 3) throw PreconditionError("the bound applies to d >= 3");
  return static_cast<long>(d + 2) * (d + 1) / 2 + 1;
}

}  // namespace cspoly
