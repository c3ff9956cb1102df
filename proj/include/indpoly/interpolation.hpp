#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "indpoly/polynomial.hpp"
#include "indpoly/poset.hpp"

namespace indpoly {

enum class EvaluationRoute {
  /// A(P[K_m], t) from the antichain polynomial of the lexicographic product.
  LexProduct,
  /// A(P, m t) from the antichain polynomial of P.
  Direct,
  /// Both, failing with ConsistencyError if any evaluation differs.
  Both,
};

/// Vandermonde system M_ij = (j t)^(i-1), i, j = 1..n+1, together with the
/// evaluations A(P, j t) that it is solved against.
struct VandermondeSystem {
  Rational t;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> evaluations;
};

struct InterpolationResult {
  VandermondeSystem system;
  /// Direct-route evaluations, filled in by EvaluationRoute::Both.
  std::vector<Rational> cross_check;
  Polynomial recovered;
  nlohmann::json to_json() const;
};

/// Solves sum_k c_k (j t)^k = b_j for j = 1..N exactly by fraction-free
/// elimination. Throws ValidationError if the nodes are not distinct.
std::vector<Rational> solve_vandermonde(const Rational& t, const std::vector<Rational>& rhs);

/// Recovers every coefficient of A(P, x) from evaluations at m t,
/// m = 1..n+1. Throws ValidationError for t == 0 and ConsistencyError when
/// routes disagree or a recovered coefficient is not an integer.
InterpolationResult recover_coefficients(const Poset& p, const Rational& t,
                                         EvaluationRoute route = EvaluationRoute::LexProduct);

/// A(P[K_m], t) == A(P, A(K_m, t) - 1), both sides evaluated exactly.
bool brown_identity_check(const Poset& p, std::size_t m, const Rational& t);

}  // namespace indpoly
