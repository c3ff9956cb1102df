#include "indpoly/interpolation.hpp"

#include <stdexcept>
#include <utility>

#include "indpoly/errors.hpp"
#include "indpoly/hilbert.hpp"

namespace indpoly {

namespace {

BigInt pow(const BigInt& b, std::size_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& b, std::size_t e) {
  Rational r(pow(b.get_num(), e), pow(b.get_den(), e));
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<Rational> solve_vandermonde(const Rational& t, const std::vector<Rational>& rhs) {
  if (t == 0) throw ValidationError("evaluation point t = 0 makes the Vandermonde system singular");
  const std::size_t size = rhs.size();
  if (size == 0) return {};
  const std::size_t deg = size - 1;
  const BigInt num = t.get_num(), den = t.get_den();

  // Every row (node (m+1) t) is multiplied by den^deg * L, L = lcm of the
  // rhs denominators, which makes the augmented matrix integral.
  BigInt rhs_lcm = 1;
  for (const auto& b : rhs) mpz_lcm(rhs_lcm.get_mpz_t(), rhs_lcm.get_mpz_t(), b.get_den().get_mpz_t());
  const BigInt row_scale = pow(den, deg) * rhs_lcm;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size + 1));
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t k = 0; k <= deg; ++k)
      a[m][k] = pow(BigInt(m + 1), k) * pow(num, k) * pow(den, deg - k) * rhs_lcm;
    Rational scaled = rhs[m] * Rational(row_scale);
    scaled.canonicalize();
    a[m][size] = scaled.get_num();
  }
  // Bareiss elimination on the augmented matrix.
  BigInt prev = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t piv = k;
    while (piv < size && a[piv][k] == 0) ++piv;
    if (piv == size) throw ValidationError("Vandermonde system is singular");
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j <= size; ++j) {
        BigInt v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<Rational> x(size);
  for (std::size_t i = size; i-- > 0;) {
    Rational acc(a[i][size]);
    for (std::size_t j = i + 1; j < size; ++j) acc -= Rational(a[i][j]) * x[j];
    acc /= Rational(a[i][i]);
    acc.canonicalize();
    x[i] = acc;
  }
  return x;
}

nlohmann::json InterpolationResult::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : system.matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    m.push_back(r);
  }
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : system.evaluations) ev.push_back(to_string(e));
  nlohmann::json out = {{"t", to_string(system.t)}, {"matrix", m}, {"evaluations", ev},
                        {"coefficients", recovered.to_json()}};
  if (!cross_check.empty()) {
    nlohmann::json cc = nlohmann::json::array();
    for (const auto& e : cross_check) cc.push_back(to_string(e));
    out["direct_evaluations"] = cc;
  }
  return out;
}

InterpolationResult recover_coefficients(const Poset& p, const Rational& t, EvaluationRoute route) {
  if (t == 0) throw ValidationError("evaluation point t = 0 makes the Vandermonde system singular");
  const std::size_t n = p.size();
  InterpolationResult r;
  r.system.t = t;
  r.system.matrix.assign(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) r.system.matrix[i][j] = pow(Rational(j + 1) * t, i);

  std::vector<Rational> lex, direct;
  if (route != EvaluationRoute::Direct) {
    for (std::size_t m = 1; m <= n + 1; ++m)
      lex.push_back(antichain_polynomial_fast(lex_product(p, Poset::chain(m))).eval(t));
  }
  if (route != EvaluationRoute::LexProduct) {
    const Polynomial a = antichain_polynomial_fast(p);
    for (std::size_t m = 1; m <= n + 1; ++m) direct.push_back(a.eval(Rational(m) * t));
  }
  if (route == EvaluationRoute::Both) {
    for (std::size_t m = 0; m <= n; ++m)
      if (lex[m] != direct[m])
        throw ConsistencyError("A(P[K_" + std::to_string(m + 1) + "], t) = " + to_string(lex[m]) +
                               " but A(P, " + std::to_string(m + 1) + "t) = " + to_string(direct[m]));
    r.cross_check = direct;
  }
  r.system.evaluations = route == EvaluationRoute::Direct ? direct : lex;

  const auto solution = solve_vandermonde(t, r.system.evaluations);
  std::vector<BigInt> coeffs;
  for (std::size_t k = 0; k < solution.size(); ++k) {
    if (solution[k].get_den() != 1)
      throw ConsistencyError("recovered coefficient " + std::to_string(k) + " = " + to_string(solution[k]) +
                             " is not an integer");
    coeffs.push_back(solution[k].get_num());
  }
  r.recovered = Polynomial(std::move(coeffs));
  return r;
}

bool brown_identity_check(const Poset& p, std::size_t m, const Rational& t) {
  if (m < 1) throw std::invalid_argument("brown_identity_check needs m >= 1");
  const Rational lhs = antichain_polynomial_fast(lex_product(p, Poset::chain(m))).eval(t);
  const Rational inner = antichain_polynomial_fast(Poset::chain(m)).eval(t) - 1;
  const Rational rhs = antichain_polynomial_fast(p).eval(inner);
  return lhs == rhs;
}

}  // namespace indpoly
