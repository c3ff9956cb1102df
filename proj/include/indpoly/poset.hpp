#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/bitset.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

/// Strict cover relation: pairs (a, b) with a < b and nothing in between.
struct CoverRelation {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted
  /// below[b] = elements covered by b
  std::vector<Bitset> below;
};

/// Finite partial order on elements 0..n-1 (1-based in text formats).
///
/// Stores the full, transitively closed relation in both directions. The
/// three order axioms are established at construction.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of 0-based pairs (i, j) meaning i <= j.
  /// Throws ValidationError naming one cycle if antisymmetry fails.
  static Poset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Adopts an already closed relation; up[i] = {j : i <= j}. Validates all
  /// three axioms.
  static Poset from_closed(std::vector<Bitset> up);

  static Poset antichain(std::size_t n);
  /// Total order 0 < 1 < ... < m-1. Throws std::invalid_argument if m < 1.
  static Poset chain(std::size_t m);
  /// Subsets of {1..k} under inclusion; element index = subset bitmask.
  /// Throws std::invalid_argument if k > 20.
  static Poset boolean_lattice(std::size_t k);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// {b : a <= b}
  const Bitset& up_set(std::size_t a) const { return up_[a]; }
  /// {b : b <= a}
  const Bitset& down_set(std::size_t a) const { return down_[a]; }
  /// Number of strict pairs a < b.
  std::size_t num_strict_relations() const;
  /// Elements listed so that a < b implies a appears first; ties broken by
  /// smallest index.
  std::vector<std::size_t> linear_extension() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  explicit Poset(std::vector<Bitset> up);
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

CoverRelation covers(const Poset& p);
Graph comparability_graph(const Poset& p);

/// (a, b) <= (a', b') iff a < a', or a == a' and b <= b'. Pair (a, b) gets
/// index a * |p2| + b (0-based form of (a-1)|P2| + b).
Poset lex_product(const Poset& p1, const Poset& p2);
/// Graph lexicographic product with the same index map.
Graph lex_product(const Graph& g1, const Graph& g2);

/// Enumerates antichains via the comparability graph.
void enumerate_antichains(const Poset& p, const std::function<void(const Bitset&)>& visit);
/// Enumeration oracle for A(P, x).
Polynomial antichain_polynomial_oracle(const Poset& p);
bool is_antichain(const Poset& p, const Bitset& s);

/// Parses "poset <n>" followed by "i <= j" / "i < j" lines (1-based).
Poset parse_poset(std::istream& in);
/// Writes the cover relation in the text format.
std::string format_poset(const Poset& p);

}  // namespace indpoly
