#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "indpoly/bitset.hpp"
#include "indpoly/monomial_ideal.hpp"
#include "indpoly/poset.hpp"

namespace indpoly {

/// lead - trail
struct Binomial {
  Monomial lead;
  Monomial trail;
  std::string to_string() const;
};

enum class GeneratorKind {
  Jp,       ///< x_i - x_i * prod_{v_j <= v_i} x_j
  JpCover,  ///< x_i - x_i * prod over v_i and the elements it covers
  Gb,       ///< x_i^2 - x_i and x_i*x_j - x_i for v_j < v_i
};

std::string to_string(GeneratorKind k);

/// One generator of the form x_i - x_i * prod_{j in factors} x_j, up to sign.
/// For Gb members the factor set is {i} (square) or {j} (mixed).
struct StructuredGenerator {
  std::size_t element = 0;
  Bitset factors;
};

struct GeneratorSet {
  GeneratorKind kind = GeneratorKind::Jp;
  std::size_t n = 0;
  std::vector<StructuredGenerator> gens;

  Binomial binomial(std::size_t k) const;
  std::vector<Binomial> binomials() const;
  /// "x2 - x2*x1*x2" for Jp kinds, "x2*x1 - x2" / "x1^2 - x1" for Gb.
  std::string render(std::size_t k) const;
  nlohmann::json to_json() const;
};

GeneratorSet jp_generators(const Poset& p);
GeneratorSet jp_cover_generators(const Poset& p);
/// Universal reduced Groebner basis: squares for every element, then
/// x_i*x_j - x_i for each strict pair v_j < v_i.
GeneratorSet groebner_basis(const Poset& p);
/// Leading terms of the basis, interreduced.
MonomialIdeal leading_term_ideal(const Poset& p);

struct BuchbergerReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool all_remainders_zero = true;
  bool reduced = true;
  bool non_redundant = true;
  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Buchberger's criterion for a set of binomials whose trail strictly
/// divides the lead, so the lead is the leading term under every monomial
/// order. Reduces every S-polynomial to normal form and also checks that
/// the set is reduced and non-redundant.
BuchbergerReport verify_buchberger(const std::vector<Binomial>& basis);
BuchbergerReport verify_buchberger(const Poset& p);

/// Point of {0,1}^n; bit i is the value of x_{i+1}.
using VarietyPoint = Bitset;
/// "a1a2...an"
std::string to_bitstring(const VarietyPoint& a);

bool annihilates(const GeneratorSet& gens, const VarietyPoint& a);
/// All 0/1 points killing every generator, sorted by bitstring. Assigns
/// variables along a dependency order and prunes as soon as a generator is
/// fully assigned. Throws std::invalid_argument if n > 30.
std::vector<VarietyPoint> enumerate_variety(const GeneratorSet& gens);

/// Maximal elements of the support of a. Throws ValidationError if a is not
/// in V(J_P).
Bitset bijection_f(const Poset& p, const VarietyPoint& a);
/// Indicator of the down-set of s. Throws ValidationError if s is not an
/// antichain.
VarietyPoint bijection_g(const Poset& p, const Bitset& s);

/// V(J_P) == V(J'_P) pointwise, and every x_i^2 - x_i vanishes there.
/// Throws std::invalid_argument if n > 12.
bool radical_membership_check(const Poset& p);

}  // namespace indpoly
