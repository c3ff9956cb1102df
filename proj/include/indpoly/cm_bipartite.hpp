#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "indpoly/bitset.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/poset.hpp"

namespace indpoly {

/// Bipartite graph with sides x_1..x_n and y_1..y_n under a fixed labeling.
/// edge(i, j) means (x_i, y_j) is an edge (0-based).
class BipartiteLabeledGraph {
 public:
  BipartiteLabeledGraph() = default;
  explicit BipartiteLabeledGraph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t n() const { return rows_.size(); }
  bool edge(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void add_edge(std::size_t i, std::size_t j) { rows_[i].set(j); }
  const Bitset& row(std::size_t i) const { return rows_[i]; }

  /// Ordinary graph on 2n vertices: x_i -> i, y_j -> n + j.
  Graph to_graph() const;
  /// Inverse of to_graph; throws ValidationError if an edge stays on one side.
  static BipartiteLabeledGraph from_graph(const Graph& g);

 private:
  std::vector<Bitset> rows_;
};

struct LabelingCheck {
  bool ok = true;
  /// 1, 2 or 3 (diagonal, upper triangular, transitivity); 0 when ok.
  int condition = 0;
  std::string detail;
};

/// Herzog-Hibi conditions for the given labeling.
LabelingCheck is_cohen_macaulay_labeling(const BipartiteLabeledGraph& g);

/// x_i <= x_j iff (x_i, y_j) is an edge. Throws ValidationError if the
/// labeling is not Cohen-Macaulay.
Poset poset_from_graph(const BipartiteLabeledGraph& g);

struct CmGraph {
  BipartiteLabeledGraph graph;
  /// poset element -> label index (a linear extension position)
  std::vector<std::size_t> element_to_label;
};

/// G_P relabelled along a linear extension so that edges satisfy i <= j.
CmGraph graph_from_poset(const Poset& p);

struct CmIdentityReport {
  Polynomial independence;  ///< I(G_P, x)
  Polynomial antichain;     ///< A(P, x)
  Polynomial antichain_at_2x;
  bool holds = false;
};

/// Compares I(G_P, x) with A(P, 2x) coefficientwise. I(G_P, x) comes from the
/// graph recursion on the 2n-vertex graph, A(P, x) from the poset fast path.
CmIdentityReport cm_independence_identity(const Poset& p);
bool cm_independence_identity_check(const Poset& p);

/// The standard graph text format with a leading "# cm-bipartite n=<n>" line.
std::string format_cm_graph(const BipartiteLabeledGraph& g);

}  // namespace indpoly
