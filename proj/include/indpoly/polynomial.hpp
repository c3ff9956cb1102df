#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace indpoly {

using BigInt = mpz_class;
/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" into a canonical rational. Throws ValidationError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Dense univariate polynomial over the integers.
///
/// coeffs()[i] is the coefficient of z^i. The zero polynomial is the empty
/// coefficient vector; every other value has a non-zero leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(const BigInt& c);
  /// c * z^d
  static Polynomial monomial(const BigInt& c, std::size_t d);
  /// (1 + z)^k via binomial coefficients.
  static Polynomial one_plus_z_pow(std::size_t k);
  /// (1 - z)^k via binomial coefficients.
  static Polynomial one_minus_z_pow(std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of z^i, zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Multiply by z^d.
  Polynomial shifted(std::size_t d) const;
  /// p(c*z): coefficient k is scaled by c^k.
  Polynomial scaled_argument(const BigInt& c) const;

  Rational eval(const Rational& t) const;

  /// "c0 + c1*z + c2*z^2", zero terms omitted, "0" for the zero polynomial.
  std::string to_string() const;
  /// Coefficients as decimal strings, lowest degree first.
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial shift(const Polynomial& p, std::size_t d);
/// Quotient r with r*q == p. Throws ConsistencyError on a non-zero remainder
/// or on a non-integral quotient coefficient, std::invalid_argument if q == 0.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);
Rational eval_rational(const Polynomial& p, const Rational& t);

}  // namespace indpoly
