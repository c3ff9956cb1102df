#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/bitset.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

/// Subset of a graph's vertices.
using VertexSet = Bitset;

/// Finite simple graph on vertices 0..n-1.
///
/// Vertices are 0-based in the API and 1-based in every text format and
/// rendering (vertex v prints as v+1). Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Builds from 0-based edges. Duplicates and both orientations are fine;
  /// self-loops and out-of-range endpoints throw ValidationError.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  /// Disjoint union; vertices of b are shifted by a.size().
  static Graph disjoint_union(const Graph& a, const Graph& b);

  std::size_t size() const { return adj_.size(); }
  std::size_t num_edges() const;
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  /// Sorted 0-based edge list with u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all_vertices() const { return Bitset::full(size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<Bitset> adj_;
};

/// Throws ValidationError if s has the wrong universe size.
bool is_independent(const Graph& g, const VertexSet& s);

/// Visits every independent set exactly once, including the empty set.
///
/// Output-sensitive: branches on the lowest undecided vertex, excluding it
/// first and then including it (which discards its neighbourhood). Each
/// emitted set costs O(n) branch nodes. The visitor sees a reference that is
/// only valid for the duration of the call.
void enumerate_independent_sets(const Graph& g, const std::function<void(const VertexSet&)>& visit);

/// Coefficient k counts independent sets of size k. Ground-truth oracle
/// built on enumerate_independent_sets; never the fast path.
Polynomial independence_polynomial_oracle(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// old vertex -> new vertex, or npos if dropped
  std::vector<std::size_t> old_to_new;
  std::vector<std::size_t> new_to_old;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Parses "graph <n>" followed by "i j" lines (1-based). '#' starts a comment.
Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g, const std::string& header_comment = "");

}  // namespace indpoly
