#include "indpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw ValidationError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::monomial(const BigInt& c, std::size_t d) {
  std::vector<BigInt> v(d + 1, 0);
  v[d] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_plus_z_pow(std::size_t k) {
  std::vector<BigInt> v(k + 1);
  for (std::size_t i = 0; i <= k; ++i) mpz_bin_uiui(v[i].get_mpz_t(), k, i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_z_pow(std::size_t k) {
  std::vector<BigInt> v(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    mpz_bin_uiui(v[i].get_mpz_t(), k, i);
    if (i % 2) v[i] = -v[i];
  }
  return Polynomial(std::move(v));
}

BigInt Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::shifted(std::size_t d) const {
  if (is_zero() || d == 0) return *this;
  Polynomial r;
  r.coeffs_.assign(d, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::scaled_argument(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_);
  BigInt power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.get_str());
  return arr;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  std::vector<BigInt> v;
  for (const auto& e : j) {
    BigInt c;
    if (c.set_str(e.get<std::string>(), 10) != 0) throw ValidationError("malformed coefficient");
    v.push_back(c);
  }
  return Polynomial(std::move(v));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial shift(const Polynomial& p, std::size_t d) { return p.shifted(d); }

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree())
    throw ConsistencyError("divide_exact: " + p.to_string() + " not divisible by " + q.to_string());
  std::vector<BigInt> rem = p.coeffs();
  const auto& d = q.coeffs();
  const std::size_t dq = d.size() - 1;
  std::vector<BigInt> quot(rem.size() - dq, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d[dq].get_mpz_t()))
      throw ConsistencyError("divide_exact: non-integral quotient dividing " + p.to_string() + " by " +
                             q.to_string());
    BigInt c = top / d[dq];
    quot[k] = c;
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
  }
  for (const auto& r : rem)
    if (r != 0)
      throw ConsistencyError("divide_exact: non-zero remainder dividing " + p.to_string() + " by " +
                             q.to_string());
  return Polynomial(std::move(quot));
}

Rational eval_rational(const Polynomial& p, const Rational& t) { return p.eval(t); }

}  // namespace indpoly
