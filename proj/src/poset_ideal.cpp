#include "indpoly/poset_ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "indpoly/errors.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

namespace {

Monomial::Var var(std::size_t i) { return static_cast<Monomial::Var>(i); }

Monomial factor_product(const Bitset& f) {
  std::vector<Monomial::Term> t;
  f.for_each([&](std::size_t j) { t.emplace_back(var(j), 1); });
  return Monomial(std::move(t));
}

// Sparse multivariate polynomial, largest monomial (lex) first.
using SparsePoly = std::map<Monomial, BigInt>;

void add_term(SparsePoly& p, const Monomial& m, const BigInt& c) {
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

std::string render(const SparsePoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p) {
    BigInt mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || m.is_one()) s += mag.get_str() + (m.is_one() ? "" : "*");
    if (!m.is_one()) s += m.to_string();
  }
  return s;
}

SparsePoly normal_form(SparsePoly f, const std::vector<Binomial>& basis) {
  while (true) {
    bool reduced = false;
    for (auto it = f.begin(); it != f.end() && !reduced; ++it) {
      for (const auto& b : basis) {
        if (!b.lead.divides(it->first)) continue;
        // c*m -> c*(m/lead)*trail
        const Monomial q = it->first.divided_by(b.lead);
        const BigInt c = it->second;
        f.erase(it);
        add_term(f, q * b.trail, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) return f;
  }
}

}  // namespace

std::string Binomial::to_string() const { return lead.to_string() + " - " + trail.to_string(); }

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Jp: return "Jp";
    case GeneratorKind::JpCover: return "JpCover";
    case GeneratorKind::Gb: return "Gb";
  }
  return "unknown";
}

Binomial GeneratorSet::binomial(std::size_t k) const {
  const auto& g = gens[k];
  const Monomial xi = Monomial::variable(var(g.element));
  const Monomial product = xi * factor_product(g.factors);
  if (kind == GeneratorKind::Gb) return {product, xi};
  return {xi, product};
}

std::vector<Binomial> GeneratorSet::binomials() const {
  std::vector<Binomial> out;
  out.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) out.push_back(binomial(k));
  return out;
}

std::string GeneratorSet::render(std::size_t k) const {
  const auto& g = gens[k];
  const std::string xi = "x" + std::to_string(g.element + 1);
  if (kind == GeneratorKind::Gb) {
    const std::size_t j = g.factors.find_first();
    if (j == g.element) return xi + "^2 - " + xi;
    return xi + "*x" + std::to_string(j + 1) + " - " + xi;
  }
  std::string s = xi + " - " + xi;
  g.factors.for_each([&](std::size_t j) { s += "*x" + std::to_string(j + 1); });
  return s;
}

nlohmann::json GeneratorSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Binomial b = binomial(k);
    arr.push_back({{"text", render(k)},
                   {"terms",
                    {{{"coeff", "1"}, {"monomial", b.lead.to_json()}},
                     {{"coeff", "-1"}, {"monomial", b.trail.to_json()}}}}});
  }
  return {{"kind", to_string(kind)}, {"n", n}, {"generators", arr}};
}

GeneratorSet jp_generators(const Poset& p) {
  GeneratorSet s{GeneratorKind::Jp, p.size(), {}};
  for (std::size_t i = 0; i < p.size(); ++i) s.gens.push_back({i, p.down_set(i)});
  return s;
}

GeneratorSet jp_cover_generators(const Poset& p) {
  const CoverRelation c = covers(p);
  GeneratorSet s{GeneratorKind::JpCover, p.size(), {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    Bitset f = c.below[i];
    f.set(i);
    s.gens.push_back({i, std::move(f)});
  }
  return s;
}

GeneratorSet groebner_basis(const Poset& p) {
  const std::size_t n = p.size();
  GeneratorSet s{GeneratorKind::Gb, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Bitset f(n);
    f.set(i);
    s.gens.push_back({i, std::move(f)});
  }
  for (std::size_t i = 0; i < n; ++i)
    p.down_set(i).for_each([&](std::size_t j) {
      if (j == i) return;
      Bitset f(n);
      f.set(j);
      s.gens.push_back({i, std::move(f)});
    });
  return s;
}

MonomialIdeal leading_term_ideal(const Poset& p) {
  std::vector<Monomial> leads;
  for (const auto& b : groebner_basis(p).binomials()) leads.push_back(b.lead);
  return interreduce(std::move(leads));
}

nlohmann::json BuchbergerReport::to_json() const {
  return {{"pairs_checked", pairs_checked},
          {"failures", failures},
          {"all_remainders_zero", all_remainders_zero},
          {"reduced", reduced},
          {"non_redundant", non_redundant}};
}

BuchbergerReport verify_buchberger(const std::vector<Binomial>& basis) {
  BuchbergerReport r;
  for (const auto& b : basis) {
    if (b.lead == b.trail || !b.trail.divides(b.lead)) {
      r.failures.push_back("leading term of " + b.to_string() + " depends on the monomial order");
      r.all_remainders_zero = false;
      return r;
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      ++r.pairs_checked;
      const Monomial l = basis[a].lead.lcm(basis[b].lead);
      const Monomial ma = l.divided_by(basis[a].lead), mb = l.divided_by(basis[b].lead);
      SparsePoly s;
      add_term(s, l, 1);
      add_term(s, ma * basis[a].trail, -1);
      add_term(s, l, -1);
      add_term(s, mb * basis[b].trail, 1);
      SparsePoly rem = normal_form(std::move(s), basis);
      if (!rem.empty()) {
        r.all_remainders_zero = false;
        r.failures.push_back("S(" + basis[a].to_string() + ", " + basis[b].to_string() + ") reduces to " +
                             render(rem));
      }
    }
  }
  // Leading coefficients are 1 by construction; trails must be irreducible.
  for (const auto& g : basis)
    for (const auto& h : basis)
      if (h.lead.divides(g.trail)) {
        r.reduced = false;
        r.failures.push_back("trailing term of " + g.to_string() + " divisible by " + h.lead.to_string());
      }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (a != b && basis[a].lead.divides(basis[b].lead)) {
        r.non_redundant = false;
        r.failures.push_back("leading term of " + basis[b].to_string() + " divisible by that of " +
                             basis[a].to_string());
      }
  return r;
}

BuchbergerReport verify_buchberger(const Poset& p) { return verify_buchberger(groebner_basis(p).binomials()); }

std::string to_bitstring(const VarietyPoint& a) {
  std::string s(a.size(), '0');
  a.for_each([&](std::size_t i) { s[i] = '1'; });
  return s;
}

bool annihilates(const GeneratorSet& gens, const VarietyPoint& a) {
  // x_i (1 - prod x_j) vanishes at a 0/1 point iff a_i = 0 or every a_j = 1.
  for (const auto& g : gens.gens)
    if (a.test(g.element) && !g.factors.is_subset_of(a)) return false;
  return true;
}

std::vector<VarietyPoint> enumerate_variety(const GeneratorSet& gens) {
  const std::size_t n = gens.n;
  if (n > 30) throw std::invalid_argument("variety sweep limited to n <= 30, got " + std::to_string(n));

  // Dependency order: factor variables before the generator's element.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& g : gens.gens)
    g.factors.for_each([&](std::size_t j) {
      if (j != g.element) {
        succ[j].push_back(g.element);
        ++indeg[g.element];
      }
    });
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t i = n; i-- > 0;)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
  }
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

  struct Check {
    std::uint32_t element_bit;
    std::uint32_t factor_mask;
  };
  std::vector<std::vector<Check>> checks_at(n);
  for (const auto& g : gens.gens) {
    std::size_t last = position[g.element];
    std::uint32_t mask = 0;
    g.factors.for_each([&](std::size_t j) {
      last = std::max(last, position[j]);
      mask |= std::uint32_t{1} << j;
    });
    checks_at[last].push_back({std::uint32_t{1} << g.element, mask});
  }

  std::vector<std::uint32_t> found;
  auto recurse = [&](auto&& self, std::size_t k, std::uint32_t bits) -> void {
    if (k == n) {
      found.push_back(bits);
      return;
    }
    for (std::uint32_t value = 0; value < 2; ++value) {
      const std::uint32_t next = value ? bits | (std::uint32_t{1} << order[k]) : bits;
      bool ok = true;
      for (const auto& c : checks_at[k])
        if ((next & c.element_bit) && (next & c.factor_mask) != c.factor_mask) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1, next);
    }
  };
  recurse(recurse, 0, 0);

  std::vector<VarietyPoint> points;
  points.reserve(found.size());
  for (auto bits : found) {
    VarietyPoint a(n);
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1U) a.set(i);
    points.push_back(std::move(a));
  }
  std::sort(points.begin(), points.end(),
            [](const VarietyPoint& x, const VarietyPoint& y) { return to_bitstring(x) < to_bitstring(y); });
  return points;
}

Bitset bijection_f(const Poset& p, const VarietyPoint& a) {
  if (a.size() != p.size() || !annihilates(jp_generators(p), a))
    throw ValidationError("point " + to_bitstring(a) + " is not in V(J_P)");
  Bitset s(p.size());
  a.for_each([&](std::size_t i) {
    Bitset above = p.up_set(i) & a;
    above.reset(i);
    if (above.none()) s.set(i);
  });
  return s;
}

VarietyPoint bijection_g(const Poset& p, const Bitset& s) {
  if (!is_antichain(p, s)) throw ValidationError("element set is not an antichain");
  VarietyPoint a(p.size());
  s.for_each([&](std::size_t j) { a |= p.down_set(j); });
  return a;
}

bool radical_membership_check(const Poset& p) {
  if (p.size() > 12) throw std::invalid_argument("radical check limited to n <= 12");
  const auto full = enumerate_variety(jp_generators(p));
  const auto cover = enumerate_variety(jp_cover_generators(p));
  if (full != cover) return false;
  // x_i^2 - x_i evaluated exactly at each point.
  for (const auto& a : cover)
    for (std::size_t i = 0; i < p.size(); ++i) {
      const BigInt x = a.test(i) ? 1 : 0;
      if (x * x - x != 0) return false;
    }
  return true;
}

}  // namespace indpoly
