#pragma once

// Seeded random presentations and exhaustive enumeration, for tests and
// dataset searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "latknot/arc_presentation.hpp"

namespace latknot {

namespace detail {

// Fisher-Yates on a fixed engine so a seed means the same thing everywhere.
template <typename T>
void shuffle(std::vector<T> &v, std::mt19937_64 &rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

inline std::vector<int> iota_vector(int n, int first = 1) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), first);
  return v;
}

} // namespace detail

/// Uniform random cyclic order of the binding indices with a uniform random
/// page assignment of its a edges.
inline ArcPresentation random_presentation(int a, std::mt19937_64 &rng) {
  auto cycle = detail::iota_vector(a);
  detail::shuffle(cycle, rng);
  auto pages = detail::iota_vector(a);
  detail::shuffle(pages, rng);
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(a));
  for (int e = 0; e < a; ++e) {
    const int u = cycle[static_cast<std::size_t>(e)], v = cycle[static_cast<std::size_t>((e + 1) % a)];
    pairs[static_cast<std::size_t>(pages[static_cast<std::size_t>(e)] - 1)] = {std::min(u, v), std::max(u, v)};
  }
  return validate(pairs);
}

/// Star shaped presentation with a = 2n + 1: the arcs c_i = {i, i+n} on a
/// random permutation of pages.
inline ArcPresentation random_star_presentation(int n, std::mt19937_64 &rng) {
  const int a = 2 * n + 1;
  auto pages = detail::iota_vector(a);
  detail::shuffle(pages, rng);
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    const Arc c(i, mod_star(i + n, a));
    pairs[static_cast<std::size_t>(pages[static_cast<std::size_t>(i - 1)] - 1)] = {c.lo, c.hi};
  }
  return validate(pairs);
}

/// Star shaped presentation with page(c_i) = pages[i-1].
inline ArcPresentation star_presentation(const std::vector<int> &pages) {
  const int a = static_cast<int>(pages.size());
  const int n = (a - 1) / 2;
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    const Arc c(i, mod_star(i + n, a));
    pairs.at(static_cast<std::size_t>(pages[static_cast<std::size_t>(i - 1)] - 1)) = {c.lo, c.hi};
  }
  return validate(pairs);
}

/// Calls f on every valid presentation with a arcs, i.e. every undirected
/// Hamiltonian cycle on 1..a times every page assignment. Stops early when f
/// returns false.
inline void for_each_presentation(int a, const std::function<bool(const ArcPresentation &)> &f) {
  // Cycles through 1: fix 1 first, enumerate the rest, skip reversals.
  auto rest = detail::iota_vector(a - 1, 2);
  do {
    if (a > 2 && rest.front() > rest.back())
      continue;
    std::vector<std::pair<int, int>> edges;
    int prev = 1;
    for (int v : rest) {
      edges.emplace_back(std::min(prev, v), std::max(prev, v));
      prev = v;
    }
    edges.emplace_back(std::min(prev, 1), std::max(prev, 1));
    auto order = detail::iota_vector(a, 0);
    do {
      std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(a));
      for (int e = 0; e < a; ++e)
        pairs[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])] = edges[static_cast<std::size_t>(e)];
      if (!f(validate(pairs)))
        return;
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace latknot
