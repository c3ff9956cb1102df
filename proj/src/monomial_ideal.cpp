#include "indpoly/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "indpoly/errors.hpp"
#include "text_util.hpp"

namespace indpoly {

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [v, e] : terms) {
    if (e == 0) continue;
    if (!terms_.empty() && terms_.back().first == v)
      terms_.back().second += e;
    else
      terms_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(Var v, Exp e) { return Monomial({{v, e}}); }

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

Monomial::Exp Monomial::exponent(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{v, 0});
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.terms_.begin();
  for (const auto& [v, e] : terms_) {
    while (it != m.terms_.end() && it->first < v) ++it;
    if (it == m.terms_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  auto a = terms_.begin();
  auto b = m.terms_.begin();
  while (a != terms_.end() && b != m.terms_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::gcd(const Monomial& m) const {
  Monomial r;
  auto a = terms_.begin();
  auto b = m.terms_.begin();
  while (a != terms_.end() && b != m.terms_.end()) {
    if (a->first == b->first) {
      r.terms_.emplace_back(a->first, std::min(a->second, b->second));
      ++a;
      ++b;
    } else if (a->first < b->first) {
      ++a;
    } else {
      ++b;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial r;
  auto a = terms_.begin();
  auto b = m.terms_.begin();
  while (a != terms_.end() || b != m.terms_.end()) {
    if (b == m.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      r.terms_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::colon(const Monomial& p) const { return divided_by(gcd(p)); }

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial r;
  auto it = d.terms_.begin();
  for (const auto& [v, e] : terms_) {
    while (it != d.terms_.end() && it->first < v) ++it;
    const Exp sub = (it != d.terms_.end() && it->first == v) ? it->second : 0;
    if (e > sub) r.terms_.emplace_back(v, e - sub);
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> t(a.terms_);
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Monomial(std::move(t));
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  for (; x != a.terms_.end() && y != b.terms_.end(); ++x, ++y) {
    if (x->first != y->first) return x->first < y->first;  // a has the earlier variable
    if (x->second != y->second) return x->second > y->second;
  }
  return x != a.terms_.end() && y == b.terms_.end();
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << "*";
    os << "x" << terms_[k].first + 1;
    if (terms_[k].second > 1) os << "^" << terms_[k].second;
  }
  return os.str();
}

nlohmann::json Monomial::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, e] : terms_) j[std::to_string(v + 1)] = e;
  return j;
}

std::size_t Monomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [v, e] : terms_) {
    h ^= (static_cast<std::size_t>(v) << 20 ^ e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) : MonomialIdeal(interreduce(std::move(gens))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += gens_[k].to_string();
  }
  return s;
}

nlohmann::json MonomialIdeal::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : gens_) j.push_back(g.to_json());
  return j;
}

std::size_t MonomialIdeal::hash() const {
  std::size_t h = gens_.size();
  for (const auto& g : gens_) h ^= g.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

MonomialIdeal interreduce(std::vector<Monomial> gens) {
  // A divisor has degree <= its multiple, so scanning by degree suffices.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : lex_greater(a, b);
  });
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  return MonomialIdeal(std::move(kept), MonomialIdeal::Minimal{});
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges())
    gens.push_back(Monomial::product(static_cast<Monomial::Var>(u), static_cast<Monomial::Var>(v)));
  return interreduce(std::move(gens));
}

MonomialIdeal modified_edge_ideal(const Graph& g) {
  std::vector<Monomial> gens = edge_ideal(g).gens();
  for (std::size_t v = 0; v < g.size(); ++v) gens.push_back(Monomial::variable(static_cast<Monomial::Var>(v), 2));
  return interreduce(std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& p) {
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& m : I.gens()) gens.push_back(m.colon(p));
  return interreduce(std::move(gens));
}

MonomialIdeal colon_by_variable(const MonomialIdeal& I, Monomial::Var v) {
  return colon(I, Monomial::variable(v));
}

MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& p) {
  std::vector<Monomial> gens;
  gens.reserve(I.size() + 1);
  for (const auto& m : I.gens())
    if (!p.divides(m)) gens.push_back(m);
  gens.push_back(p);
  return interreduce(std::move(gens));
}

MonomialIdeal add_variable(const MonomialIdeal& I, Monomial::Var v) {
  return add_generator(I, Monomial::variable(v));
}

bool pairwise_coprime(const MonomialIdeal& I) {
  const auto& g = I.gens();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!g[a].coprime(g[b])) return false;
  return true;
}

std::size_t sum_deg(const MonomialIdeal& I) {
  std::size_t s = 0;
  for (const auto& m : I.gens()) s += m.degree();
  return s;
}

std::optional<std::string> edge_ideal_shape_violation(const MonomialIdeal& I, const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> power(n, 0);
  std::vector<const Monomial*> mixed;
  for (const auto& m : I.gens()) {
    if (m.var_bound() > n) return "generator " + m.to_string() + " uses a variable outside the graph";
    const auto& t = m.terms();
    if (t.size() == 1 && t[0].second <= 2) {
      if (power[t[0].first] != 0) return "variable x" + std::to_string(t[0].first + 1) + " appears twice alone";
      power[t[0].first] = static_cast<int>(t[0].second);
    } else if (t.size() == 2 && t[0].second == 1 && t[1].second == 1) {
      mixed.push_back(&m);
    } else {
      return "generator " + m.to_string() + " is neither x_i, x_i^2 nor x_i*x_j";
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (power[v] == 0) return "variable x" + std::to_string(v + 1) + " missing";
  for (const auto* m : mixed) {
    const auto a = m->terms()[0].first, b = m->terms()[1].first;
    if (!g.adjacent(a, b)) return "generator " + m->to_string() + " is not an edge";
    if (power[a] != 2 || power[b] != 2) return "edge generator " + m->to_string() + " has an unsquared end";
  }
  return std::nullopt;
}

Monomial parse_monomial(const std::string& text, std::size_t n_vars, std::size_t line) {
  if (text == "1") return {};
  std::vector<Monomial::Term> terms;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != 'x')
      throw ValidationError("malformed monomial '" + text + "'", line);
    ++pos;
    const auto start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ValidationError("malformed monomial '" + text + "'", line);
    const auto var = detail::parse_index(text.substr(start, pos - start), line);
    if (var < 1 || var > n_vars)
      throw ValidationError("variable x" + std::to_string(var) + " out of range 1.." + std::to_string(n_vars), line);
    std::size_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      const auto es = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == es) throw ValidationError("malformed exponent in '" + text + "'", line);
      exp = detail::parse_index(text.substr(es, pos - es), line);
      if (exp == 0 || exp > 1'000'000) throw ValidationError("exponent out of range in '" + text + "'", line);
    }
    terms.emplace_back(static_cast<Monomial::Var>(var - 1), static_cast<Monomial::Exp>(exp));
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ValidationError("malformed monomial '" + text + "'", line);
    ++pos;
  }
  return Monomial(std::move(terms));
}

ParsedIdeal parse_ideal(std::istream& in) {
  const auto lines = detail::tokenize(in);
  ParsedIdeal out;
  out.n_vars = detail::parse_header(lines, "ideal");
  std::vector<Monomial> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 1) throw ValidationError("expected one monomial per line", line.number);
    gens.push_back(parse_monomial(line.tokens[0], out.n_vars, line.number));
  }
  const auto input_count = gens.size();
  out.ideal = interreduce(std::move(gens));
  out.reduced_on_load = out.ideal.size() != input_count;
  return out;
}

}  // namespace indpoly
