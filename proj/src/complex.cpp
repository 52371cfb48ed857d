#include "cspoly/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cspoly {

namespace {

void check_face(const Face& f, std::size_t n) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= n)
      throw PreconditionError("vertex " + std::to_string(f[i]) + " out of range [0, " + std::to_string(n) + ")");
    if (i > 0 && f[i] == f[i - 1]) throw PreconditionError("repeated vertex " + std::to_string(f[i]) + " in a face");
  }
}

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Index of facets containing each vertex.
std::vector<std::vector<int>> vertex_facets(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out(c.n_vertices());
  for (std::size_t f = 0; f < c.facets().size(); ++f)
    for (int v : c.facets()[f]) out[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  return out;
}

std::string face_string(const Face& f) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < f.size(); ++i) s << (i ? "," : "") << f[i];
  s << '}';
  return s.str();
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n_vertices, std::vector<Face> facets) : n_vertices_(n_vertices) {
  for (auto& f : facets) {
    if (f.empty()) throw PreconditionError("empty facet");
    std::sort(f.begin(), f.end());
    check_face(f, n_vertices);
  }
  std::sort(facets.begin(), facets.end());
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (facets[i] == facets[i - 1]) throw PreconditionError("duplicate facet " + face_string(facets[i]));
  facets_ = std::move(facets);
  for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  if (is_pure()) return;
  // Only strictly smaller facets can be contained in larger ones.
  auto index = vertex_facets(*this);
  for (const auto& f : facets_) {
    for (int g : index[static_cast<std::size_t>(f.front())]) {
      const auto& other = facets_[static_cast<std::size_t>(g)];
      if (other.size() > f.size() && is_subset(f, other))
        throw PreconditionError("facet " + face_string(f) + " is contained in " + face_string(other));
    }
  }
}

SimplicialComplex SimplicialComplex::generated_by(std::size_t n_vertices, std::vector<Face> faces) {
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  std::vector<std::vector<int>> index(n_vertices);
  for (auto& f : faces) {
    if (f.empty()) continue;
    check_face(f, n_vertices);
    bool covered = false;
    for (int g : index[static_cast<std::size_t>(f.front())])
      if (kept[static_cast<std::size_t>(g)].size() > f.size() && is_subset(f, kept[static_cast<std::size_t>(g)])) {
        covered = true;
        break;
      }
    if (covered) continue;
    for (int v : f) index[static_cast<std::size_t>(v)].push_back(static_cast<int>(kept.size()));
    kept.push_back(std::move(f));
  }
  return SimplicialComplex(n_vertices, std::move(kept));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return static_cast<int>(f.size()) == dim_ + 1; });
}

bool SimplicialComplex::contains_face(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces(int k) const {
  std::vector<Face> out;
  if (k < 0 || k > dim_) return out;
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  Face buf(size);
  for (const auto& f : facets_) {
    if (f.size() < size) continue;
    // Enumerate size-subsets of f via an index combination.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      for (std::size_t i = 0; i < size; ++i) buf[i] = f[idx[i]];
      out.push_back(buf);
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == f.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> SimplicialComplex::used_vertices() const {
  std::vector<char> used(n_vertices_, 0);
  for (const auto& f : facets_)
    for (int v : f) used[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (std::size_t v = 0; v < used.size(); ++v)
    if (used[v]) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= c.dim(); ++k) out.push_back(c.faces(k).size());
  return out;
}

long euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  auto f = f_vector(c);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(f[k]);
  return chi;
}

SimplicialComplex star(const SimplicialComplex& c, const Face& face) {
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<Face> out;
  for (const auto& g : c.facets())
    if (is_subset(f, g)) out.push_back(g);
  if (out.empty()) throw PreconditionError("face " + face_string(f) + " is not in the complex");
  return SimplicialComplex(c.n_vertices(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<Face> out;
  bool found = false;
  for (const auto& g : c.facets()) {
    if (!is_subset(f, g)) continue;
    found = true;
    Face rest;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  if (!found) throw PreconditionError("face " + face_string(f) + " is not in the complex");
  return SimplicialComplex::generated_by(c.n_vertices(), std::move(out));
}

void Involution::validate(std::size_t n) const {
  if (map.size() != n) throw PreconditionError("involution has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    int j = map[i];
    if (j < 0 || static_cast<std::size_t>(j) >= n) throw PreconditionError("involution image out of range");
    if (static_cast<std::size_t>(j) == i) throw PreconditionError("involution fixes vertex " + std::to_string(i));
    if (map[static_cast<std::size_t>(j)] != static_cast<int>(i))
      throw PreconditionError("map is not an involution at vertex " + std::to_string(i));
  }
}

DisjointStarReport check_disjoint_stars(const SimplicialComplex& c, const Involution& tau) {
  tau.validate(c.n_vertices());
  DisjointStarReport report;
  const std::size_t n = c.n_vertices();

  // Skeleton test: v and tau(v) not adjacent and without common neighbours.
  Graph g = skeleton_graph(c);
  std::set<std::pair<int, int>> by_neighbors;
  for (std::size_t v = 0; v < n; ++v) {
    int w = tau.map[v];
    if (static_cast<int>(v) > w) continue;
    bool bad = g.adjacent(static_cast<int>(v), w);
    for (int u : g.neighbors(static_cast<int>(v))) {
      if (bad) break;
      bad = g.adjacent(u, w);
    }
    if (bad) by_neighbors.emplace(static_cast<int>(v), w);
  }

  // Direct test: the stars meet iff their vertex sets meet.
  auto index = vertex_facets(c);
  auto star_vertices = [&](int v) {
    std::vector<char> in(n, 0);
    for (int f : index[static_cast<std::size_t>(v)])
      for (int u : c.facets()[static_cast<std::size_t>(f)]) in[static_cast<std::size_t>(u)] = 1;
    return in;
  };
  std::set<std::pair<int, int>> by_stars;
  for (std::size_t v = 0; v < n; ++v) {
    int w = tau.map[v];
    if (static_cast<int>(v) > w) continue;
    if (index[v].empty() || index[static_cast<std::size_t>(w)].empty()) continue;
    auto a = star_vertices(static_cast<int>(v));
    auto b = star_vertices(w);
    for (std::size_t u = 0; u < n; ++u)
      if (a[u] && b[u]) {
        by_stars.emplace(static_cast<int>(v), w);
        break;
      }
  }

  report.by_neighbors = by_neighbors.empty();
  report.by_star_intersection = by_stars.empty();
  report.methods_agree = by_neighbors == by_stars;
  std::set<std::pair<int, int>> all = by_neighbors;
  all.insert(by_stars.begin(), by_stars.end());
  report.violations.assign(all.begin(), all.end());
  report.holds = report.violations.empty();
  return report;
}

SimplicialComplex antipodal_quotient(const SimplicialComplex& c, const Involution& tau) {
  auto report = check_disjoint_stars(c, tau);
  if (!report.holds) {
    std::ostringstream msg;
    msg << "disjoint-star condition fails for " << report.violations.size() << " pair(s):";
    for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i)
      msg << " (" << report.violations[i].first << "," << report.violations[i].second << ")";
    throw PreconditionError(msg.str());
  }
  const std::size_t n = c.n_vertices();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (static_cast<int>(v) < tau.map[v]) label[v] = next++;
  for (std::size_t v = 0; v < n; ++v)
    if (label[v] < 0) label[v] = label[static_cast<std::size_t>(tau.map[v])];
  std::vector<Face> facets;
  facets.reserve(c.facets().size());
  for (const auto& f : c.facets()) {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back(label[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    facets.push_back(std::move(g));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex(static_cast<std::size_t>(next), std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& c, const Permutation& p) {
  if (p.size() != c.n_vertices()) throw PreconditionError("relabeling has the wrong size");
  std::vector<Face> facets;
  facets.reserve(c.facets().size());
  for (const auto& f : c.facets()) {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back(p[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(c.n_vertices(), std::move(facets));
}

bool is_automorphism(const SimplicialComplex& c, const Permutation& p) {
  if (p.size() != c.n_vertices() || !is_permutation(p)) return false;
  for (const auto& f : c.facets()) {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back(p[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    if (!std::binary_search(c.facets().begin(), c.facets().end(), g)) return false;
  }
  return true;
}

Graph skeleton_graph(const SimplicialComplex& c) {
  Graph g(c.n_vertices());
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
  return g;
}

}  // namespace cspoly
