#include "cspoly/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cspoly/errors.hpp"

namespace cspoly {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (elements) return std::binary_search(elements->begin(), elements->end(), p);
  // Membership against the closure of the generators with p adjoined.
  std::vector<Permutation> gens = generators;
  gens.push_back(p);
  return schreier_sims_order(gens, degree) == order;
}

namespace {

void check_generators(const std::vector<Permutation>& generators, std::size_t degree) {
  for (const auto& g : generators)
    if (g.size() != degree || !is_permutation(g)) throw PreconditionError("generator is not a permutation of the ground set");
}

// Closure by breadth-first search; false if the cap is exceeded.
bool bfs_closure(const std::vector<Permutation>& generators, std::size_t degree, std::size_t cap,
                 std::set<Permutation>& out) {
  out.clear();
  std::deque<Permutation> queue;
  out.insert(identity_permutation(degree));
  queue.push_back(identity_permutation(degree));
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(g, x);
      if (out.insert(y).second) {
        if (out.size() > cap) return false;
        queue.push_back(std::move(y));
      }
    }
  }
  return true;
}

// One level of a stabilizer chain: orbit of `point` with coset
// representatives (rep[b] maps point to b).
struct Level {
  int point = 0;
  std::vector<Permutation> gens;
  std::vector<std::optional<Permutation>> rep;

  void rebuild(std::size_t n) {
    rep.assign(n, std::nullopt);
    rep[static_cast<std::size_t>(point)] = identity_permutation(n);
    std::deque<int> queue{point};
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        int c = g[static_cast<std::size_t>(b)];
        if (!rep[static_cast<std::size_t>(c)]) {
          rep[static_cast<std::size_t>(c)] = compose(g, *rep[static_cast<std::size_t>(b)]);
          queue.push_back(c);
        }
      }
    }
  }
  std::size_t orbit_size() const {
    return static_cast<std::size_t>(std::count_if(rep.begin(), rep.end(), [](const auto& r) { return r.has_value(); }));
  }
};

class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t n) : n_(n) {}

  void add_generator(const Permutation& g) {
    if (g == identity_permutation(n_)) return;
    insert(g, 0);
  }

  Integer order() const {
    Integer o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit_size());
    return o;
  }

 private:
  // Sifts g through levels >= k; returns the residue and the level it stopped at.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t k) const {
    for (std::size_t i = k; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      int b = g[static_cast<std::size_t>(l.point)];
      if (!l.rep[static_cast<std::size_t>(b)]) return {g, i};
      g = compose(inverse(*l.rep[static_cast<std::size_t>(b)]), g);
    }
    return {g, levels_.size()};
  }

  void insert(const Permutation& g, std::size_t k) {
    auto [h, level] = sift(g, k);
    if (h == identity_permutation(n_)) return;
    if (level == levels_.size()) {
      Level l;
      std::size_t moved = 0;
      while (h[moved] == static_cast<int>(moved)) ++moved;
      l.point = static_cast<int>(moved);
      levels_.push_back(std::move(l));
    }
    // Add h at `level` and all levels between k and level (h fixes their points).
    for (std::size_t i = k; i <= level; ++i) {
      levels_[i].gens.push_back(h);
      levels_[i].rebuild(n_);
    }
    // Schreier generators of the enlarged level must lie in the next level.
    for (std::size_t i = level + 1; i-- > k;) {
      auto& l = levels_[i];
      std::vector<Permutation> gens = l.gens;
      for (std::size_t b = 0; b < n_; ++b) {
        if (!levels_[i].rep[b]) continue;
        for (const auto& s : gens) {
          const Permutation& ub = *levels_[i].rep[b];
          Permutation su = compose(s, ub);
          int c = su[static_cast<std::size_t>(levels_[i].point)];
          Permutation schreier = compose(inverse(*levels_[i].rep[static_cast<std::size_t>(c)]), su);
          if (schreier == identity_permutation(n_)) continue;
          auto [res, lv] = sift(schreier, i + 1);
          if (res != identity_permutation(n_)) insert(schreier, i + 1);
        }
      }
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

}  // namespace

Integer schreier_sims_order(const std::vector<Permutation>& generators, std::size_t degree) {
  check_generators(generators, degree);
  StabilizerChain chain(degree);
  for (const auto& g : generators) chain.add_generator(g);
  return chain.order();
}

PermutationGroup group_closure(const std::vector<Permutation>& generators, std::size_t degree, std::size_t cap) {
  check_generators(generators, degree);
  PermutationGroup g;
  g.degree = degree;
  g.generators = generators;
  std::set<Permutation> closure;
  if (bfs_closure(generators, degree, cap, closure)) {
    g.order = static_cast<unsigned long>(closure.size());
    g.elements = std::vector<Permutation>(closure.begin(), closure.end());
  } else {
    g.order = schreier_sims_order(generators, degree);
  }
  return g;
}

std::vector<Permutation> extract_generators(const std::vector<Permutation>& elements, std::size_t degree) {
  std::vector<Permutation> gens;
  std::set<Permutation> closure{identity_permutation(degree)};
  for (const auto& e : elements) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    bfs_closure(gens, degree, elements.size() + 1, closure);
  }
  return gens;
}

}  // namespace cspoly
