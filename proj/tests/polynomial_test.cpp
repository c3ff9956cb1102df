#include <doctest.h>

#include <random>

#include "indpoly/errors.hpp"
#include "indpoly/polynomial.hpp"

using namespace indpoly;

namespace {

BigInt random_big(std::mt19937_64& rng) {
  // Up to 2^128 in magnitude so GMP limbs beyond one word are exercised.
  BigInt hi(static_cast<unsigned long>(rng())), lo(static_cast<unsigned long>(rng()));
  BigInt v = (hi << 64) + lo;
  if (rng() % 2) v = -v;
  if (rng() % 5 == 0) v = static_cast<long>(rng() % 7) - 3;
  return v;
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_len = 6) {
  std::vector<BigInt> c(rng() % (max_len + 1));
  for (auto& x : c) x = random_big(rng);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{}.coeffs().empty());
}

TEST_CASE("add") {
  CHECK(add(Polynomial{1, 2}, Polynomial{1, -2}) == Polynomial{2});
  const Polynomial p{3, 0, -7};
  CHECK(add(Polynomial{}, p) == p);
  CHECK(add(Polynomial{1, 3, 1}, Polynomial{0, 0, 1}) == Polynomial{1, 3, 2});
  CHECK(add(Polynomial{1, 1}, Polynomial{0, -1}) == Polynomial{1});
}

TEST_CASE("mul") {
  CHECK(mul(Polynomial{1, -1}, Polynomial{1, 1}) == Polynomial{1, 0, -1});
  const Polynomial p{4, -1, 9};
  CHECK(mul(p, Polynomial{1}) == p);
  CHECK(mul(Polynomial{1, 0, -1}, Polynomial{1, 0, -1}) == Polynomial{1, 0, -2, 0, 1});
  CHECK(mul(p, Polynomial{}).is_zero());
}

TEST_CASE("shift") {
  CHECK(shift(Polynomial{1, 1}, 1) == Polynomial{0, 1, 1});
  const Polynomial p{2, 5};
  CHECK(shift(p, 0) == p);
  CHECK(shift(Polynomial{3}, 2) == Polynomial{0, 0, 3});
  CHECK(shift(Polynomial{}, 4).is_zero());
}

TEST_CASE("divide_exact") {
  // 1 - 3z^2 + 2z^3 = (1 + 2z)(1 - z)^2
  CHECK(divide_exact(Polynomial{1, 0, -3, 2}, Polynomial{1, -2, 1}) == Polynomial{1, 2});
  const Polynomial p{5, 0, 1};
  CHECK(divide_exact(p, Polynomial{1}) == p);
  CHECK(divide_exact(Polynomial{1, 0, -1}, Polynomial{1, 1}) == Polynomial{1, -1});
  CHECK(divide_exact(Polynomial{}, Polynomial{1, 1}).is_zero());

  SUBCASE("non-exact division is an internal error") {
    CHECK_THROWS_AS(divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}), ConsistencyError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1}, Polynomial{0, 2}), ConsistencyError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1, 1}, Polynomial{2}), ConsistencyError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1}, Polynomial{}), std::invalid_argument);
  }
}

TEST_CASE("eval_rational") {
  CHECK(eval_rational(Polynomial{1, 3, 1}, 1) == 5);
  CHECK(eval_rational(Polynomial{7, 3, 1}, 0) == 7);
  CHECK(eval_rational(Polynomial{1, 3}, Rational(1, 2)) == Rational(5, 2));
  CHECK(eval_rational(Polynomial{}, Rational(3)) == 0);
  CHECK(eval_rational(Polynomial{0, 0, 4}, Rational(-1, 2)) == 1);
}

TEST_CASE("closed forms for (1 +- z)^k") {
  CHECK(Polynomial::one_plus_z_pow(0) == Polynomial{1});
  CHECK(Polynomial::one_plus_z_pow(3) == Polynomial{1, 3, 3, 1});
  CHECK(Polynomial::one_minus_z_pow(2) == Polynomial{1, -2, 1});
  Polynomial acc{1};
  for (std::size_t k = 0; k < 12; ++k) {
    CHECK(Polynomial::one_plus_z_pow(k) == acc);
    acc *= Polynomial{1, 1};
  }
}

TEST_CASE("rendering") {
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{1, 5}.to_string() == "1 + 5*z");
  CHECK(Polynomial{1, 0, -3, 2}.to_string() == "1 - 3*z^2 + 2*z^3");
  CHECK(Polynomial{0, -1, 1}.to_string() == "-z + z^2");
  CHECK(Polynomial{1, 3, 1}.to_json().dump() == R"(["1","3","1"])");
  BigInt big("340282366920938463463374607431768211457");
  Polynomial p(std::vector<BigInt>{big, -1});
  CHECK(Polynomial::from_json(p.to_json()) == p);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
}

TEST_CASE("ring axioms on random big-coefficient polynomials") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("divide_exact inverts mul") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    auto q = random_poly(rng);
    if (q.is_zero()) q = Polynomial{1, -1};
    CHECK(divide_exact(p * q, q) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  const Rational points[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(3), Rational(-7, 5)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng);
    for (const auto& t : points) {
      CHECK(eval_rational(p * q, t) == eval_rational(p, t) * eval_rational(q, t));
      CHECK(eval_rational(p + q, t) == eval_rational(p, t) + eval_rational(q, t));
    }
  }
}
