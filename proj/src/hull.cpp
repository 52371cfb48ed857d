#include "cspoly/hull.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace cspoly {

void PointConfiguration::validate() const {
  if (dim == 0) throw PreconditionError("point configuration has dimension 0");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != dim)
      throw PreconditionError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                              ", expected " + std::to_string(dim));
  if (pairing.empty()) return;
  if (pairing.size() != points.size()) throw PreconditionError("pairing size does not match point count");
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    int j = pairing[i];
    if (j < 0 || static_cast<std::size_t>(j) >= points.size() || static_cast<std::size_t>(j) == i ||
        pairing[static_cast<std::size_t>(j)] != static_cast<int>(i))
      throw PreconditionError("pairing is not a fixed-point-free involution at index " + std::to_string(i));
    if (points[static_cast<std::size_t>(j)] != negate(points[i]))
      throw PreconditionError("points " + std::to_string(i) + " and " + std::to_string(j) + " are not antipodal");
  }
}

std::vector<int> PointConfiguration::half_shift_pairing(std::size_t n) {
  if (n % 2 != 0) throw PreconditionError("half-shift pairing needs an even point count");
  std::vector<int> p(n);
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    p[i] = static_cast<int>(i + h);
    p[i + h] = static_cast<int>(i);
  }
  return p;
}

std::optional<std::vector<int>> PointConfiguration::detect_pairing() const {
  std::map<RatVector, int> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], static_cast<int>(i));
  std::vector<int> p(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = index.find(negate(points[i]));
    if (it == index.end() || it->second == static_cast<int>(i)) return std::nullopt;
    p[i] = it->second;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[static_cast<std::size_t>(p[i])] != static_cast<int>(i)) return std::nullopt;  // repeated points
  return p;
}

Rational Hyperplane::evaluate(const RatVector& x) const {
  Rational s = -Rational(offset);
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
  return s;
}

DegenerateConfiguration::DegenerateConfiguration(std::size_t rank, std::size_t dim)
    : PreconditionError("configuration is degenerate: affine rank " + std::to_string(rank) + " in dimension " +
                        std::to_string(dim)),
      affine_rank(rank) {}

namespace {

Integer hdot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

struct Simplex {
  std::vector<int> verts;  // sorted, size d
  std::vector<int> nbr;    // nbr[k] lies across the ridge omitting verts[k]
  IntVector plane;         // homogeneous: plane . q <= 0 on the hull
  bool alive = true;
};

class BeneathBeyond {
 public:
  BeneathBeyond(const std::vector<IntVector>& lifted, std::size_t dim) : q_(lifted), d_(dim) {}

  void run() {
    std::vector<int> initial = initial_simplex();
    interior_ = IntVector(d_ + 1, Integer(0));
    for (int v : initial)
      for (std::size_t c = 0; c <= d_; ++c) interior_[c] += q_[static_cast<std::size_t>(v)][c];

    std::sort(initial.begin(), initial.end());
    for (std::size_t i = 0; i <= d_; ++i) {
      Simplex s;
      for (std::size_t j = 0; j <= d_; ++j)
        if (j != i) s.verts.push_back(initial[j]);
      s.plane = plane_through(s.verts);
      s.nbr.assign(d_, -1);
      simplices_.push_back(std::move(s));
    }
    // Simplex i omits initial[i]; across the ridge omitting initial[j] lies simplex j.
    for (std::size_t i = 0; i <= d_; ++i) {
      auto& s = simplices_[i];
      for (std::size_t k = 0; k < d_; ++k) {
        int omitted = s.verts[k];
        auto j = static_cast<std::size_t>(std::find(initial.begin(), initial.end(), omitted) - initial.begin());
        s.nbr[k] = static_cast<int>(j);
      }
    }
    alive_.resize(d_ + 1);
    for (std::size_t i = 0; i <= d_; ++i) alive_[i] = static_cast<int>(i);

    std::vector<char> used(q_.size(), 0);
    for (int v : initial) used[static_cast<std::size_t>(v)] = 1;
    for (std::size_t p = 0; p < q_.size(); ++p)
      if (!used[p]) insert(static_cast<int>(p));
  }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<int>& alive() const { return alive_; }

 private:
  std::vector<int> initial_simplex() const {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < q_.size() && chosen.size() <= d_; ++i) {
      std::vector<Integer> rows;
      for (int c : chosen) rows.insert(rows.end(), q_[static_cast<std::size_t>(c)].begin(), q_[static_cast<std::size_t>(c)].end());
      rows.insert(rows.end(), q_[i].begin(), q_[i].end());
      if (rank_bareiss(std::move(rows), chosen.size() + 1, d_ + 1) == chosen.size() + 1) chosen.push_back(static_cast<int>(i));
    }
    if (chosen.size() < d_ + 1) throw DegenerateConfiguration(chosen.empty() ? 0 : chosen.size() - 1, d_);
    return chosen;
  }

  // Generalized cross product of the lifted vertices, oriented so that the
  // interior point lies strictly beneath.
  IntVector plane_through(const std::vector<int>& verts) const {
    const std::size_t n = d_;  // rows
    IntVector h(d_ + 1);
    std::vector<Integer> minor;
    minor.reserve(n * n);
    for (std::size_t skip = 0; skip <= d_; ++skip) {
      minor.clear();
      for (int v : verts)
        for (std::size_t c = 0; c <= d_; ++c)
          if (c != skip) minor.push_back(q_[static_cast<std::size_t>(v)][c]);
      Integer m = det_bareiss(minor, n);
      h[skip] = (skip % 2 == 0) ? m : Integer(-m);
    }
    make_primitive(h);
    if (hdot(h, interior_) > 0)
      for (auto& x : h) x = -x;
    return h;
  }

  void insert(int p) {
    const IntVector& qp = q_[static_cast<std::size_t>(p)];
    std::vector<int> visible;
    for (int s : alive_)
      if (sgn(hdot(simplices_[static_cast<std::size_t>(s)].plane, qp)) > 0) visible.push_back(s);
    if (visible.empty()) return;

    for (int s : visible) simplices_[static_cast<std::size_t>(s)].alive = false;

    std::vector<int> created;
    std::map<std::vector<int>, std::pair<int, int>> open_ridges;
    for (int s : visible) {
      for (std::size_t k = 0; k < d_; ++k) {
        const Simplex& vs = simplices_[static_cast<std::size_t>(s)];
        int n = vs.nbr[k];
        if (!simplices_[static_cast<std::size_t>(n)].alive) continue;

        Simplex t;
        t.verts.reserve(d_);
        for (std::size_t j = 0; j < d_; ++j)
          if (j != k) t.verts.push_back(vs.verts[j]);
        t.verts.push_back(p);
        std::sort(t.verts.begin(), t.verts.end());
        t.nbr.assign(d_, -1);
        t.plane = plane_through(t.verts);
        const int tid = static_cast<int>(simplices_.size());
        auto pk = static_cast<std::size_t>(std::find(t.verts.begin(), t.verts.end(), p) - t.verts.begin());
        t.nbr[pk] = n;
        Simplex& ns = simplices_[static_cast<std::size_t>(n)];
        for (auto& x : ns.nbr)
          if (x == s) x = tid;
        for (std::size_t j = 0; j < d_; ++j) {
          if (j == pk) continue;
          std::vector<int> key;
          key.reserve(d_ - 1);
          for (std::size_t i = 0; i < d_; ++i)
            if (i != j) key.push_back(t.verts[i]);
          auto [it, fresh] = open_ridges.try_emplace(std::move(key), tid, static_cast<int>(j));
          if (!fresh) {
            auto [other, oj] = it->second;
            t.nbr[j] = other;
            simplices_[static_cast<std::size_t>(other)].nbr[static_cast<std::size_t>(oj)] = tid;
            open_ridges.erase(it);
          }
        }
        simplices_.push_back(std::move(t));
        created.push_back(tid);
      }
    }
    std::vector<int> next;
    next.reserve(alive_.size() + created.size());
    for (int s : alive_)
      if (simplices_[static_cast<std::size_t>(s)].alive) next.push_back(s);
    next.insert(next.end(), created.begin(), created.end());
    alive_ = std::move(next);
  }

  const std::vector<IntVector>& q_;
  std::size_t d_;
  IntVector interior_;
  std::vector<Simplex> simplices_;
  std::vector<int> alive_;
};

std::vector<IntVector> lift(const PointConfiguration& config) {
  std::vector<IntVector> out;
  out.reserve(config.size());
  for (const auto& p : config.points) {
    RatVector h = p;
    h.emplace_back(1);
    IntVector q = clear_denominators(h);
    make_primitive(q);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> extreme_points(const HullStructure& h) {
  const std::size_t d = h.config.dim;
  std::vector<std::vector<int>> incident(h.config.size());
  for (std::size_t f = 0; f < h.facets.size(); ++f)
    for (int v : h.facets[f].vertices) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  std::vector<int> out;
  for (std::size_t v = 0; v < incident.size(); ++v) {
    if (incident[v].size() < d) continue;
    // A boundary point is a vertex iff the normals of its facets span R^d.
    std::vector<Integer> rows;
    rows.reserve(incident[v].size() * d);
    for (int f : incident[v]) {
      const auto& nrm = h.facets[static_cast<std::size_t>(f)].plane.normal;
      rows.insert(rows.end(), nrm.begin(), nrm.end());
    }
    if (rank_bareiss(std::move(rows), incident[v].size(), d) == d) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

HullStructure facet_enumeration(const PointConfiguration& config) {
  config.validate();
  const std::size_t d = config.dim;
  if (config.size() < d + 1)
    throw DegenerateConfiguration(config.size() == 0 ? 0 : std::min(config.size() - 1, d), d);

  std::vector<IntVector> lifted = lift(config);
  BeneathBeyond bb(lifted, d);
  bb.run();

  const auto& simplices = bb.simplices();
  std::map<IntVector, int> plane_ids;
  std::vector<IntVector> planes;
  std::vector<int> simplex_facet(simplices.size(), -1);
  for (int s : bb.alive()) {
    const auto& plane = simplices[static_cast<std::size_t>(s)].plane;
    auto [it, fresh] = plane_ids.try_emplace(plane, static_cast<int>(planes.size()));
    if (fresh) planes.push_back(plane);
    simplex_facet[static_cast<std::size_t>(s)] = it->second;
  }

  std::vector<Facet> raw(planes.size());
  for (std::size_t f = 0; f < planes.size(); ++f) {
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (sgn(hdot(planes[f], lifted[i])) == 0) raw[f].vertices.push_back(static_cast<int>(i));
    raw[f].plane.normal.assign(planes[f].begin(), planes[f].begin() + static_cast<long>(d));
    raw[f].plane.offset = -planes[f][d];
  }

  // Canonical facet order: by vertex list.
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[static_cast<std::size_t>(a)].vertices < raw[static_cast<std::size_t>(b)].vertices;
  });
  std::vector<int> new_id(raw.size());
  HullStructure h;
  h.config = config;
  h.facets.reserve(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    h.facets.push_back(std::move(raw[static_cast<std::size_t>(order[i])]));
  }

  std::set<std::pair<int, int>> adjacent;
  for (int s : bb.alive()) {
    const auto& sx = simplices[static_cast<std::size_t>(s)];
    int fa = new_id[static_cast<std::size_t>(simplex_facet[static_cast<std::size_t>(s)])];
    for (int n : sx.nbr) {
      int fb = new_id[static_cast<std::size_t>(simplex_facet[static_cast<std::size_t>(n)])];
      if (fa != fb) adjacent.emplace(std::min(fa, fb), std::max(fa, fb));
    }
  }
  h.ridges.reserve(adjacent.size());
  for (auto [a, b] : adjacent)
    h.ridges.push_back(Ridge{a, b, intersect_sorted(h.facets[static_cast<std::size_t>(a)].vertices,
                                                    h.facets[static_cast<std::size_t>(b)].vertices)});
  h.hull_vertices = extreme_points(h);
  return h;
}

SimplicialCheck is_simplicial(const HullStructure& h) {
  for (std::size_t f = 0; f < h.facets.size(); ++f)
    if (h.facets[f].vertices.size() != h.config.dim) return {false, static_cast<int>(f)};
  return {};
}

std::vector<int> hull_vertices(const HullStructure& h) { return h.hull_vertices; }

std::vector<std::pair<int, int>> hull_edges(const HullStructure& h) {
  const std::size_t n = h.config.size();
  std::vector<std::vector<int>> incident(n);
  for (std::size_t f = 0; f < h.facets.size(); ++f)
    for (int v : h.facets[f].vertices) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  std::vector<char> is_vertex(n, 0);
  for (int v : h.hull_vertices) is_vertex[static_cast<std::size_t>(v)] = 1;

  std::vector<std::pair<int, int>> out;
  for (int i : h.hull_vertices) {
    for (int j : h.hull_vertices) {
      if (j <= i) continue;
      std::vector<int> common = intersect_sorted(incident[static_cast<std::size_t>(i)], incident[static_cast<std::size_t>(j)]);
      if (common.empty()) continue;
      std::vector<int> face = h.facets[static_cast<std::size_t>(common.front())].vertices;
      for (std::size_t k = 1; k < common.size() && face.size() > 2; ++k)
        face = intersect_sorted(face, h.facets[static_cast<std::size_t>(common[k])].vertices);
      std::size_t vertices_in_face = 0;
      for (int v : face) vertices_in_face += is_vertex[static_cast<std::size_t>(v)] ? 1 : 0;
      if (vertices_in_face == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

SimplicialComplex boundary_complex(const HullStructure& h) {
  if (auto check = is_simplicial(h); !check.simplicial) {
    const auto& f = h.facets[static_cast<std::size_t>(*check.witness)];
    throw PreconditionError("hull is not simplicial: facet " + std::to_string(*check.witness) + " has " +
                            std::to_string(f.vertices.size()) + " vertices");
  }
  std::vector<Face> facets;
  facets.reserve(h.facets.size());
  for (const auto& f : h.facets) facets.push_back(f.vertices);
  return SimplicialComplex(h.config.size(), std::move(facets));
}

std::string validate_hull(const HullStructure& h) {
  std::ostringstream err;
  const std::size_t d = h.config.dim;
  for (std::size_t f = 0; f < h.facets.size(); ++f) {
    const auto& facet = h.facets[f];
    std::vector<int> on;
    for (std::size_t i = 0; i < h.config.size(); ++i) {
      int s = sgn(facet.plane.evaluate(h.config.points[i]));
      if (s > 0) {
        err << "point " << i << " lies beyond facet " << f;
        return err.str();
      }
      if (s == 0) on.push_back(static_cast<int>(i));
    }
    if (on != facet.vertices) {
      err << "facet " << f << " vertex set differs from its equality set";
      return err.str();
    }
    RatMatrix m(facet.vertices.size(), d + 1);
    for (std::size_t r = 0; r < facet.vertices.size(); ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = h.config.points[static_cast<std::size_t>(facet.vertices[r])][c];
      m(r, d) = 1;
    }
    if (rank(m) != d) {
      err << "facet " << f << " is not (d-1)-dimensional";
      return err.str();
    }
  }
  // Ridge regularity: each ridge joins exactly two facets and no ridge face
  // appears twice.
  std::set<std::vector<int>> ridge_faces;
  std::vector<std::vector<int>> graph(h.facets.size());
  for (const auto& r : h.ridges) {
    if (!ridge_faces.insert(r.vertices).second) {
      err << "ridge shared by more than two facets";
      return err.str();
    }
    graph[static_cast<std::size_t>(r.facet_a)].push_back(r.facet_b);
    graph[static_cast<std::size_t>(r.facet_b)].push_back(r.facet_a);
  }
  if (h.facets.empty()) return "hull has no facets";
  std::vector<char> seen(h.facets.size(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int g : graph[static_cast<std::size_t>(f)])
      if (!seen[static_cast<std::size_t>(g)]) {
        seen[static_cast<std::size_t>(g)] = 1;
        ++reached;
        bfs.push(g);
      }
  }
  if (reached != h.facets.size()) return "facet adjacency graph is disconnected";
  return {};
}

}  // namespace cspoly
