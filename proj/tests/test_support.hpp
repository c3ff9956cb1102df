#pragma once

// Generators and brute-force oracles shared by the test binaries. The
// oracles here deliberately avoid the library's enumeration code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/poset.hpp"

namespace indpoly::testing {

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Random DAG closure with elements relabelled by a random permutation, so
/// the index order is usually not a linear extension.
inline Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution rel(density);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rel(rng)) pairs.emplace_back(perm[a], perm[b]);
  return Poset::from_relations(n, pairs);
}

inline Poset random_poset(std::size_t max_n, std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const double density = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
  return random_poset(n, density, rng);
}

/// Coefficient k = number of k-subsets with no internal edge, by sweeping
/// all 2^n subsets. n <= 24.
inline Polynomial brute_independence_polynomial(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  std::vector<long> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v & 1U) && (nbr[v] & s)) ok = false;
    if (ok) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  std::vector<BigInt> c(counts.begin(), counts.end());
  return Polynomial(std::move(c));
}

/// Antichain polynomial by sweeping subsets against leq directly.
inline Polynomial brute_antichain_polynomial(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<long> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (a != b && (s >> a & 1U) && (s >> b & 1U) && p.leq(a, b)) ok = false;
    if (ok) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  std::vector<BigInt> c(counts.begin(), counts.end());
  return Polynomial(std::move(c));
}

inline Bitset make_set(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Bitset s(n);
  for (auto v : one_based) s.set(v - 1);
  return s;
}

}  // namespace indpoly::testing
