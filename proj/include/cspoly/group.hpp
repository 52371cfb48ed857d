#pragma once

// Permutation groups on {0, ..., n-1}.

#include <cstddef>
#include <optional>
#include <vector>

#include "cspoly/ratmath.hpp"

namespace cspoly {

using Permutation = std::vector<int>;

Permutation identity_permutation(std::size_t n);
/// (a * b)(i) = a(b(i)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);

struct PermutationGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  Integer order = 1;
  /// Sorted element listing; absent when the order exceeds the listing cap.
  std::optional<std::vector<Permutation>> elements;

  bool contains(const Permutation& p) const;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// Breadth-first closure up to `cap` elements; past the cap the order comes
/// from a Schreier-Sims stabilizer chain and elements are not listed.
PermutationGroup group_closure(const std::vector<Permutation>& generators, std::size_t degree,
                               std::size_t cap = kDefaultGroupCap);

/// Order from a deterministic Schreier-Sims stabilizer chain.
Integer schreier_sims_order(const std::vector<Permutation>& generators, std::size_t degree);

/// Greedy generating set drawn from `elements` in order.
std::vector<Permutation> extract_generators(const std::vector<Permutation>& elements, std::size_t degree);

}  // namespace cspoly
