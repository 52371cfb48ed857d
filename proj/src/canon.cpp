// Canonical labeling and automorphisms of simplicial complexes by
// individualization and refinement on the vertex-facet incidence structure.

#include <algorithm>
#include <map>
#include <numeric>

#include "cspoly/complex.hpp"

namespace cspoly {

namespace {

// Complex restricted to its used vertices, renumbered 0..m-1.
struct Compact {
  std::size_t m = 0;
  std::vector<Face> facets;
  std::vector<std::vector<int>> incidence;  // vertex -> facets
  std::vector<int> original;                // compact -> original label
};

Compact compact(const SimplicialComplex& c) {
  Compact out;
  out.original = c.used_vertices();
  out.m = out.original.size();
  std::vector<int> to_compact(c.n_vertices(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) to_compact[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  out.incidence.resize(out.m);
  for (const auto& f : c.facets()) {
    Face g;
    for (int v : f) g.push_back(to_compact[static_cast<std::size_t>(v)]);
    for (int v : g) out.incidence[static_cast<std::size_t>(v)].push_back(static_cast<int>(out.facets.size()));
    out.facets.push_back(std::move(g));
  }
  return out;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

class Refiner {
 public:
  explicit Refiner(const Compact& c) : c_(c) {}

  // Refines `color` (ranks 0..k-1, consistent with the cell order) to the
  // coarsest equitable partition below it. Returns a label-invariant hash of
  // the refinement.
  std::uint64_t refine(std::vector<int>& color) const {
    std::uint64_t trace = 0;
    std::size_t cells = count_cells(color);
    std::vector<std::vector<int>> fsig(c_.facets.size());
    std::vector<std::vector<int>> vsig(c_.m);
    while (true) {
      for (std::size_t f = 0; f < c_.facets.size(); ++f) {
        auto& s = fsig[f];
        s.clear();
        for (int v : c_.facets[f]) s.push_back(color[static_cast<std::size_t>(v)]);
        std::sort(s.begin(), s.end());
      }
      std::vector<int> fcolor = rank_signatures(fsig);
      for (std::size_t v = 0; v < c_.m; ++v) {
        auto& s = vsig[v];
        s.clear();
        s.push_back(color[v]);
        for (int f : c_.incidence[v]) s.push_back(fcolor[static_cast<std::size_t>(f)]);
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<int> next = rank_signatures(vsig);
      std::size_t next_cells = count_cells(next);
      trace = mix(trace, next_cells);
      // Histograms indexed by color are label-invariant.
      std::vector<std::uint64_t> hist(c_.facets.size() + c_.m + 1, 0);
      for (int x : fcolor) ++hist[static_cast<std::size_t>(x)];
      for (int x : next) ++hist[c_.facets.size() + static_cast<std::size_t>(x)];
      for (std::uint64_t x : hist) trace = mix(trace, x);
      color = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return trace;
  }

 private:
  static std::size_t count_cells(const std::vector<int>& color) {
    return color.empty() ? 0 : static_cast<std::size_t>(*std::max_element(color.begin(), color.end())) + 1;
  }

  static std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sig) {
    std::vector<int> order(sig.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    std::vector<int> rank(sig.size());
    int r = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++r;
      rank[static_cast<std::size_t>(order[i])] = r;
    }
    return rank;
  }

  const Compact& c_;
};

std::vector<int> individualize(const std::vector<int>& color, int v) {
  std::vector<int> out(color);
  const int c = color[static_cast<std::size_t>(v)];
  for (std::size_t u = 0; u < out.size(); ++u)
    if (out[u] > c || (out[u] == c && static_cast<int>(u) != v)) ++out[u];
  return out;
}

// Smallest non-singleton cell (lowest color on ties); empty if discrete.
std::vector<int> target_cell(const std::vector<int>& color) {
  std::map<int, std::vector<int>> cells;
  for (std::size_t v = 0; v < color.size(); ++v) cells[color[v]].push_back(static_cast<int>(v));
  const std::vector<int>* best = nullptr;
  for (const auto& [c, members] : cells)
    if (members.size() > 1 && (!best || members.size() < best->size())) best = &members;
  return best ? *best : std::vector<int>{};
}

std::vector<Face> apply_labeling(const Compact& c, const std::vector<int>& label) {
  std::vector<Face> out;
  out.reserve(c.facets.size());
  for (const auto& f : c.facets) {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back(label[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Union-find over compact vertices for orbit pruning at the root.
struct Orbits {
  std::vector<int> parent;
  explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

class Search {
 public:
  explicit Search(const Compact& c) : c_(c), refiner_(c) {}

  // Minimum over leaves of (trace, relabeled facet list).
  void canonical() {
    mode_ = Mode::canonical;
    run();
  }

  // All leaves equivalent to the first leaf: one per automorphism.
  void automorphisms() {
    mode_ = Mode::automorphisms;
    run();
  }

  const std::vector<int>& best_labeling() const { return best_label_; }
  const std::vector<Face>& best_form() const { return best_form_; }
  const std::vector<std::vector<int>>& automorphisms_found() const { return autos_; }

 private:
  enum class Mode { canonical, automorphisms };

  void run() {
    std::vector<int> color(c_.m, 0);
    std::uint64_t t = refiner_.refine(color);
    have_best_ = false;
    orbits_ = Orbits(c_.m);
    path_.assign(1, t);
    descend(color, 0);
  }

  // Lexicographic comparison of the current path prefix with the best path.
  int compare_prefix(std::size_t len) const {
    std::size_t common = std::min(len, best_path_.size());
    for (std::size_t i = 0; i < common; ++i)
      if (path_[i] != best_path_[i]) return path_[i] < best_path_[i] ? -1 : 1;
    if (len == best_path_.size()) return 0;
    return len < best_path_.size() ? 0 : 1;
  }

  void descend(const std::vector<int>& color, std::size_t depth) {
    std::vector<int> cell = target_cell(color);
    if (cell.empty()) {
      leaf(color);
      return;
    }
    for (int v : cell) {
      if (mode_ == Mode::canonical && depth == 0 && orbits_.find(v) != v) continue;
      std::vector<int> child = individualize(color, v);
      std::uint64_t t = refiner_.refine(child);
      path_.resize(depth + 2);
      path_[depth + 1] = t;
      if (have_best_) {
        int cmp = compare_prefix(depth + 2);
        if (mode_ == Mode::automorphisms ? cmp != 0 : cmp > 0) continue;
      }
      descend(child, depth + 1);
    }
  }

  void leaf(const std::vector<int>& label) {
    std::vector<Face> form = apply_labeling(c_, label);
    if (!have_best_) {
      accept(label, std::move(form));
      if (mode_ == Mode::automorphisms) autos_.push_back(identity_permutation(c_.m));
      return;
    }
    const bool same_path = path_ == best_path_;
    if (mode_ == Mode::automorphisms) {
      if (same_path && form == best_form_) autos_.push_back(automorphism(label));
      return;
    }
    if (path_ < best_path_ || (same_path && form < best_form_)) {
      accept(label, std::move(form));
      return;
    }
    if (same_path && form == best_form_) {
      auto a = automorphism(label);
      for (std::size_t v = 0; v < a.size(); ++v) orbits_.unite(static_cast<int>(v), a[v]);
    }
  }

  void accept(const std::vector<int>& label, std::vector<Face> form) {
    best_label_ = label;
    best_form_ = std::move(form);
    best_path_ = path_;
    have_best_ = true;
  }

  // sigma = best^-1 o label maps the complex to itself.
  std::vector<int> automorphism(const std::vector<int>& label) const {
    std::vector<int> best_inv(c_.m);
    for (std::size_t v = 0; v < c_.m; ++v) best_inv[static_cast<std::size_t>(best_label_[v])] = static_cast<int>(v);
    std::vector<int> sigma(c_.m);
    for (std::size_t v = 0; v < c_.m; ++v) sigma[v] = best_inv[static_cast<std::size_t>(label[v])];
    return sigma;
  }

  const Compact& c_;
  Refiner refiner_;
  Mode mode_ = Mode::canonical;
  bool have_best_ = false;
  std::vector<int> best_label_;
  std::vector<Face> best_form_;
  std::vector<std::uint64_t> best_path_;
  std::vector<std::uint64_t> path_;
  std::vector<std::vector<int>> autos_;
  Orbits orbits_{0};
};

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& c) {
  Compact cc = compact(c);
  CanonicalForm out;
  out.n_used = cc.m;
  out.relabeling.assign(c.n_vertices(), -1);
  if (cc.m == 0) return out;
  Search search(cc);
  search.canonical();
  out.facets = search.best_form();
  for (std::size_t v = 0; v < cc.m; ++v)
    out.relabeling[static_cast<std::size_t>(cc.original[v])] = search.best_labeling()[v];
  return out;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return canonical_form(a).same_type(canonical_form(b));
}

PermutationGroup automorphism_group(const SimplicialComplex& c) {
  Compact cc = compact(c);
  PermutationGroup g;
  g.degree = c.n_vertices();
  std::vector<Permutation> elements;
  if (cc.m == 0) {
    elements.push_back(identity_permutation(g.degree));
  } else {
    Search search(cc);
    search.automorphisms();
    for (const auto& sigma : search.automorphisms_found()) {
      Permutation p = identity_permutation(g.degree);
      for (std::size_t v = 0; v < cc.m; ++v)
        p[static_cast<std::size_t>(cc.original[v])] = cc.original[static_cast<std::size_t>(sigma[v])];
      elements.push_back(std::move(p));
    }
  }
  std::sort(elements.begin(), elements.end());
  g.order = static_cast<unsigned long>(elements.size());
  g.generators = extract_generators(elements, g.degree);
  g.elements = std::move(elements);
  return g;
}

std::vector<LinkClass> classify_face_links(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dim()) throw PreconditionError("face dimension out of range");
  std::map<std::pair<std::size_t, std::vector<Face>>, LinkClass> classes;
  for (const auto& face : c.faces(k)) {
    SimplicialComplex lk = link(c, face);
    CanonicalForm form = canonical_form(lk);
    auto key = std::make_pair(form.n_used, form.facets);
    auto [it, fresh] = classes.try_emplace(std::move(key));
    if (fresh) {
      it->second.type = std::move(form);
      it->second.sample_face = face;
      it->second.sample_f_vector = f_vector(lk);
    }
    ++it->second.count;
  }
  std::vector<LinkClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace cspoly
