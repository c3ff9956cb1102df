#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "indpoly/errors.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/monomial_ideal.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/poset.hpp"

namespace indpoly {

/// A pivot violated the decreasing total degree condition
/// sum_deg(I:p) < sum_deg(I) and sum_deg(I+p) < sum_deg(I).
class PivotError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

enum class PivotRule {
  /// Lowest-index variable shared by two generators (graph: lowest live
  /// vertex with a live neighbour).
  FirstSquaredVariable,
  /// Variable in the most generators, lowest index on ties (graph: vertex of
  /// maximum live degree).
  MaxDegreeSquaredVariable,
  /// CoCoA's rule: a most frequent variable chosen at random, two random
  /// generators containing it, pivot = highest power of the variable
  /// dividing both.
  CocoaLike,
  /// Monomial ideals only: a most frequent variable chosen at random, raised
  /// to its smallest exponent among the generators containing it.
  MostFrequentVariablePower,
  /// Caller-supplied pivot; still checked against the degree condition.
  Custom,
};

struct PivotStrategy {
  PivotRule rule = PivotRule::MaxDegreeSquaredVariable;
  std::uint64_t seed = 0;
  std::function<Monomial(const MonomialIdeal&)> custom;

  static PivotStrategy first() { return {PivotRule::FirstSquaredVariable, 0, {}}; }
  static PivotStrategy max_degree() { return {PivotRule::MaxDegreeSquaredVariable, 0, {}}; }
  static PivotStrategy cocoa_like(std::uint64_t seed) { return {PivotRule::CocoaLike, seed, {}}; }
  static PivotStrategy most_frequent_power(std::uint64_t seed) {
    return {PivotRule::MostFrequentVariablePower, seed, {}};
  }

  /// "first", "max-degree", "cocoa-like", "most-frequent-power", "custom".
  std::string name() const;
  /// Throws ValidationError on an unknown name.
  static PivotStrategy parse(const std::string& name, std::uint64_t seed = 0);
};

struct HilbertOptions {
  PivotStrategy strategy;
  bool memo = true;
  /// Graph recursion only: split disconnected live subgraphs into factors.
  bool components = true;
  /// Monomial recursion only: assert at every node that the ideal still has
  /// the modified-edge-ideal shape for this graph.
  const Graph* shape_graph = nullptr;
};

struct RecursionStats {
  std::size_t nodes = 0;
  std::size_t depth = 0;
  std::size_t memo_hits = 0;
  nlohmann::json to_json(const PivotStrategy& s) const;
};

struct HilbertResult {
  Polynomial numerator;
  std::size_t n_vars = 0;
  /// Set for zero-dimensional quotients; numerator == series * (1-z)^n_vars.
  std::optional<Polynomial> series;
  RecursionStats stats;
};

/// Hilbert numerator of k[x_1..x_n]/I by pivot recursion on minimal
/// generators. Base case: pairwise coprime generators give prod (1 - z^deg).
/// The series is filled in when every variable has a pure power generator.
HilbertResult hilbert_numerator(const MonomialIdeal& I, std::size_t n_vars, const HilbertOptions& opts = {});

/// Independence polynomial by the specialised recursion run directly on the
/// live induced subgraph: pivot v, Plus drops v, Colon drops v and its
/// neighbours, result z*HS(Colon) + HS(Plus); no edges gives (1+z)^k.
/// series = I(G, z), numerator = series * (1-z)^n.
HilbertResult independence_polynomial(const Graph& g, const HilbertOptions& opts = {});

/// Independence recursion on the comparability graph.
HilbertResult antichain_hilbert(const Poset& p, const HilbertOptions& opts = {});
Polynomial antichain_polynomial_fast(const Poset& p, const HilbertOptions& opts = {});

}  // namespace indpoly
