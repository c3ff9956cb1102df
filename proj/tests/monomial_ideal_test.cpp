#include <doctest.h>

#include <sstream>

#include "indpoly/errors.hpp"
#include "indpoly/monomial_ideal.hpp"
#include "test_support.hpp"

using namespace indpoly;

namespace {

Monomial x(Monomial::Var one_based, Monomial::Exp e = 1) { return Monomial::variable(one_based - 1, e); }

MonomialIdeal ideal(std::vector<Monomial> gens) { return interreduce(std::move(gens)); }

bool is_minimal(const MonomialIdeal& I) {
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < I.size(); ++b)
      if (a != b && I.gens()[a].divides(I.gens()[b])) return false;
  return true;
}

// Membership of every monomial of degree <= 2 in n variables, as a fingerprint.
std::vector<bool> low_degree_membership(const MonomialIdeal& I, Monomial::Var n) {
  std::vector<bool> out{I.contains(Monomial())};
  for (Monomial::Var i = 0; i < n; ++i) {
    out.push_back(I.contains(Monomial::variable(i)));
    for (Monomial::Var j = i; j < n; ++j) out.push_back(I.contains(Monomial::variable(i) * Monomial::variable(j)));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = x(1, 2) * x(3);
  CHECK(a.to_string() == "x1^2*x3");
  CHECK(a.degree() == 3);
  CHECK(a.exponent(0) == 2);
  CHECK(a.exponent(1) == 0);
  CHECK(Monomial().to_string() == "1");
  CHECK(x(1).divides(a));
  CHECK_FALSE(x(2).divides(a));
  CHECK(a.gcd(x(1) * x(2)) == x(1));
  CHECK(a.lcm(x(1) * x(2)) == x(1, 2) * x(2) * x(3));
  CHECK(a.colon(x(1, 3)) == x(3));
  CHECK(a.divided_by(x(3)) == x(1, 2));
  CHECK(x(1).coprime(x(2)));
  CHECK(Monomial({{0, 1}, {0, 1}}) == x(1, 2));
  CHECK(a.to_json().dump() == R"({"1":2,"3":1})");
  CHECK(lex_greater(x(1), x(2, 5)));
  CHECK(lex_greater(x(1, 2), x(1) * x(2)));
}

TEST_CASE("edge_ideal") {
  CHECK(edge_ideal(Graph::path(3)).to_string() == "x1*x2, x2*x3");
  CHECK(edge_ideal(Graph(4)).is_zero());
  CHECK(edge_ideal(Graph::complete(3)).size() == 3);
}

TEST_CASE("modified_edge_ideal") {
  CHECK(modified_edge_ideal(Graph::complete(2)) == ideal({x(1, 2), x(2, 2), x(1) * x(2)}));
  CHECK(modified_edge_ideal(Graph(3)) == ideal({x(1, 2), x(2, 2), x(3, 2)}));
  CHECK(modified_edge_ideal(Graph::path(3)) ==
        ideal({x(1, 2), x(2, 2), x(3, 2), x(1) * x(2), x(2) * x(3)}));
}

TEST_CASE("colon_by_variable") {
  const auto edge = ideal({x(1, 2), x(2, 2), x(1) * x(2)});
  CHECK(colon_by_variable(edge, 0) == ideal({x(1), x(2)}));
  CHECK(colon_by_variable(MonomialIdeal(), 2).is_zero());

  const auto p3 = modified_edge_ideal(Graph::path(3));
  const auto c = colon_by_variable(p3, 1);
  CHECK(c == ideal({x(1), x(2), x(3)}));
  // Membership fingerprint: m in (I : x2) iff m*x2 in I.
  std::vector<bool> expect{p3.contains(x(2))};
  for (Monomial::Var i = 0; i < 3; ++i) {
    expect.push_back(p3.contains(Monomial::variable(i) * x(2)));
    for (Monomial::Var j = i; j < 3; ++j)
      expect.push_back(p3.contains(Monomial::variable(i) * Monomial::variable(j) * x(2)));
  }
  CHECK(low_degree_membership(c, 3) == expect);
}

TEST_CASE("add_variable") {
  const auto edge = ideal({x(1, 2), x(2, 2), x(1) * x(2)});
  CHECK(add_variable(edge, 0) == ideal({x(1), x(2, 2)}));
  const auto withx = ideal({x(1), x(2, 2)});
  CHECK(add_variable(withx, 0) == withx);

  const auto p3 = modified_edge_ideal(Graph::path(3));
  const auto plus = add_variable(p3, 1);
  CHECK(plus == ideal({x(1, 2), x(2), x(3, 2)}));
  std::vector<bool> expect = low_degree_membership(p3, 3);
  auto with_x2 = low_degree_membership(ideal({x(2)}), 3);
  for (std::size_t k = 0; k < expect.size(); ++k) expect[k] = expect[k] || with_x2[k];
  CHECK(low_degree_membership(plus, 3) == expect);
}

TEST_CASE("interreduce") {
  CHECK(ideal({x(1), x(1, 2), x(1) * x(2)}) == ideal({x(1)}));
  const auto minimal = ideal({x(1) * x(2), x(2) * x(3)});
  CHECK(interreduce(minimal.gens()) == minimal);
  CHECK(ideal({x(1) * x(2), x(2) * x(3), x(1) * x(2) * x(3)}) == minimal);
  CHECK(ideal({x(2), x(2), x(1, 3)}).size() == 2);
  CHECK(ideal({x(3), x(1), x(2)}).to_string() == "x1, x2, x3");
}

TEST_CASE("pairwise_coprime and sum_deg") {
  CHECK(pairwise_coprime(ideal({x(1, 2), x(2, 2)})));
  CHECK_FALSE(pairwise_coprime(ideal({x(1, 2), x(1) * x(2)})));
  CHECK(pairwise_coprime(MonomialIdeal()));
  CHECK(sum_deg(ideal({x(1, 2), x(2, 2), x(1) * x(2)})) == 6);
  CHECK(sum_deg(MonomialIdeal()) == 0);
  CHECK(sum_deg(ideal({x(1)})) == 1);
}

TEST_CASE("operations stay minimal and keep the edge-ideal shape") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = indpoly::testing::random_graph(n, 0.4, rng);
    MonomialIdeal I = modified_edge_ideal(g);
    // Random walk through colon / add on squared variables.
    for (int step = 0; step < 6; ++step) {
      CHECK_FALSE(edge_ideal_shape_violation(I, g).has_value());
      std::vector<Monomial::Var> squared;
      for (const auto& m : I.gens())
        if (m.terms().size() == 1 && m.terms()[0].second == 2) squared.push_back(m.terms()[0].first);
      if (squared.empty()) break;
      const auto v = squared[rng() % squared.size()];
      const auto c = colon_by_variable(I, v), a = add_variable(I, v);
      CHECK(is_minimal(c));
      CHECK(is_minimal(a));
      CHECK(sum_deg(c) < sum_deg(I));
      CHECK(sum_deg(a) < sum_deg(I));
      I = (rng() % 2) ? c : a;
    }
  }
}

TEST_CASE("shape check rejects foreign generators") {
  const Graph p3 = Graph::path(3);
  CHECK(edge_ideal_shape_violation(ideal({x(1, 3)}), p3).has_value());
  CHECK(edge_ideal_shape_violation(ideal({x(4)}), p3).has_value());
  CHECK_FALSE(edge_ideal_shape_violation(ideal({x(1, 2), x(2), x(3, 2)}), p3).has_value());
  CHECK(edge_ideal_shape_violation(ideal({x(1, 2), x(2)}), p3).has_value());
}

TEST_CASE("ideal file parsing") {
  std::istringstream edge("ideal 2\nx1^2\nx2^2\nx1*x2\n");
  auto parsed = parse_ideal(edge);
  CHECK(parsed.n_vars == 2);
  CHECK(parsed.ideal == modified_edge_ideal(Graph::complete(2)));
  CHECK_FALSE(parsed.reduced_on_load);

  std::istringstream empty("ideal 3\n# nothing\n");
  CHECK(parse_ideal(empty).ideal.is_zero());

  std::istringstream square("ideal 1\nx1*x1\n");
  CHECK(parse_ideal(square).ideal.gens().front() == x(1, 2));

  std::istringstream redundant("ideal 2\nx1\nx1*x2\n");
  CHECK(parse_ideal(redundant).reduced_on_load);

  CHECK(parse_monomial("1", 2) == Monomial());
  CHECK_THROWS_AS(parse_monomial("x3", 2), ValidationError);
  CHECK_THROWS_AS(parse_monomial("x0", 2), ValidationError);
  CHECK_THROWS_AS(parse_monomial("y1", 2), ValidationError);
  CHECK_THROWS_AS(parse_monomial("x1^", 2), ValidationError);
  std::istringstream bad("ideal 2\nx1 x2\n");
  CHECK_THROWS_AS(parse_ideal(bad), ValidationError);
}
