#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indpoly/graph.hpp"

namespace indpoly {

/// Sparse monomial: (variable, exponent) pairs sorted by variable, all
/// exponents positive. The empty monomial is 1. Variables are 0-based;
/// variable v renders as x{v+1}.
class Monomial {
 public:
  using Var = std::uint32_t;
  using Exp = std::uint32_t;
  using Term = std::pair<Var, Exp>;

  Monomial() = default;
  /// Unsorted input with repeats is merged (x1*x1 -> x1^2); zero exponents dropped.
  explicit Monomial(std::vector<Term> terms);
  static Monomial variable(Var v, Exp e = 1);
  static Monomial product(Var a, Var b) { return variable(a) * variable(b); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::size_t degree() const;
  Exp exponent(Var v) const;
  /// Largest variable index + 1, 0 for the monomial 1.
  std::size_t var_bound() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;
  Monomial gcd(const Monomial& m) const;
  Monomial lcm(const Monomial& m) const;
  /// this / gcd(this, p): the generator of <this> : p.
  Monomial colon(const Monomial& p) const;
  /// Exact quotient; precondition d.divides(*this).
  Monomial divided_by(const Monomial& d) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Lexicographic order with x1 > x2 > ...; used as the canonical order.
  friend bool lex_greater(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return lex_greater(a, b); }

  /// "x1^2*x3", or "1".
  std::string to_string() const;
  /// {"1": 2, "3": 1} with 1-based variable keys.
  nlohmann::json to_json() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial ideal held by its minimal generating set in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Interreduces the given generators.
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

  /// "x1^2, x1*x2", or "0" for the zero ideal.
  std::string to_string() const;
  nlohmann::json to_json() const;
  std::size_t hash() const;

 private:
  struct Minimal {};
  MonomialIdeal(std::vector<Monomial> gens, Minimal) : gens_(std::move(gens)) {}
  friend MonomialIdeal interreduce(std::vector<Monomial> gens);
  std::vector<Monomial> gens_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const { return I.hash(); }
};

/// Drops duplicates and every monomial divisible by another one.
MonomialIdeal interreduce(std::vector<Monomial> gens);

/// <x_i x_j : ij in E>
MonomialIdeal edge_ideal(const Graph& g);
/// Edge ideal plus every square x_i^2.
MonomialIdeal modified_edge_ideal(const Graph& g);

/// I : p, generated by m / gcd(m, p).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& p);
MonomialIdeal colon_by_variable(const MonomialIdeal& I, Monomial::Var v);
/// I + <p>
MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& p);
MonomialIdeal add_variable(const MonomialIdeal& I, Monomial::Var v);

bool pairwise_coprime(const MonomialIdeal& I);
/// Sum of the degrees of the minimal generators.
std::size_t sum_deg(const MonomialIdeal& I);

/// Checks the recursion-state shape of a modified edge ideal of g: every
/// variable appears alone to the first or second power, and the remaining
/// generators are x_i*x_j for edges ij of g with both ends squared. Returns
/// a description of the first violation.
std::optional<std::string> edge_ideal_shape_violation(const MonomialIdeal& I, const Graph& g);

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::size_t n_vars = 0;
  /// Interreduction removed or merged input generators.
  bool reduced_on_load = false;
};

/// Parses "x3^2*x5" style text (1-based variables), or "1".
Monomial parse_monomial(const std::string& text, std::size_t n_vars, std::size_t line = 0);
/// "ideal <n_vars>" header, then one monomial per line.
ParsedIdeal parse_ideal(std::istream& in);

}  // namespace indpoly
