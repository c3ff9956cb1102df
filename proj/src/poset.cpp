#include "indpoly/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "indpoly/errors.hpp"
#include "text_util.hpp"

namespace indpoly {

namespace {

std::vector<Bitset> transpose(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bitset> out(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].for_each([&](std::size_t j) { out[j].set(i); });
  return out;
}

// Shortest path from `from` to `to` (distinct) along the generating pairs.
std::vector<std::size_t> find_path(const std::vector<std::vector<std::size_t>>& succ, std::size_t from,
                                   std::size_t to) {
  const std::size_t unseen = succ.size();
  std::vector<std::size_t> parent(succ.size(), unseen);
  std::queue<std::size_t> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty() && parent[to] == unseen) {
    auto u = q.front();
    q.pop();
    for (auto v : succ[u])
      if (parent[v] == unseen) {
        parent[v] = u;
        q.push(v);
      }
  }
  std::vector<std::size_t> path{to};
  for (auto v = to; v != from;) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset::Poset(std::vector<Bitset> up) : up_(std::move(up)), down_(transpose(up_)) {}

Poset Poset::from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw ValidationError("relation (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                            ") out of range for " + std::to_string(n) + " elements");
    up[a].set(b);
    if (a != b) succ[a].push_back(b);
  }
  // Warshall on bitset rows: if i <= k then up(i) includes up(k).
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up[i].find_next(i); j < n; j = up[i].find_next(j)) {
      if (!up[j].test(i)) continue;
      auto forward = find_path(succ, i, j);
      auto back = find_path(succ, j, i);
      std::string cycle;
      for (auto v : forward) cycle += std::to_string(v + 1) + " <= ";
      for (std::size_t k = 1; k < back.size(); ++k)
        cycle += std::to_string(back[k] + 1) + (k + 1 < back.size() ? " <= " : "");
      throw ValidationError("antisymmetry violated by cycle " + cycle);
    }
  }
  return Poset(std::move(up));
}

Poset Poset::from_closed(std::vector<Bitset> up) {
  const std::size_t n = up.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() != n) throw ValidationError("relation row has the wrong size");
    if (!up[i].test(i)) throw ValidationError("relation not reflexive at " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool bad = false;
    up[i].for_each([&](std::size_t j) {
      if (bad || j == i) return;
      if (up[j].test(i))
        throw ValidationError("antisymmetry violated by cycle " + std::to_string(i + 1) + " <= " +
                              std::to_string(j + 1) + " <= " + std::to_string(i + 1));
      if (!up[j].is_subset_of(up[i])) bad = true;
    });
    if (bad) throw ValidationError("relation not transitive at element " + std::to_string(i + 1));
  }
  return Poset(std::move(up));
}

Poset Poset::antichain(std::size_t n) { return from_relations(n, {}); }

Poset Poset::chain(std::size_t m) {
  if (m < 1) throw std::invalid_argument("chain length must be at least 1");
  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) up[i].set(j);
  return Poset(std::move(up));
}

Poset Poset::boolean_lattice(std::size_t k) {
  if (k > 20) throw std::invalid_argument("boolean lattice rank " + std::to_string(k) + " exceeds 20");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    // Supersets of a: enumerate subsets of the complement.
    const std::size_t comp = (n - 1) & ~a;
    for (std::size_t s = comp;; s = (s - 1) & comp) {
      up[a].set(a | s);
      if (s == 0) break;
    }
  }
  return Poset(std::move(up));
}

std::size_t Poset::num_strict_relations() const {
  std::size_t c = 0;
  for (const auto& row : up_) c += row.count() - 1;
  return c;
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i) pending[i] = down_[i].count() - 1;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    order.push_back(v);
    up_[v].for_each([&](std::size_t w) {
      if (w != v && --pending[w] == 0) ready.push(w);
    });
  }
  return order;
}

CoverRelation covers(const Poset& p) {
  const std::size_t n = p.size();
  CoverRelation c;
  c.n = n;
  c.below.assign(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    Bitset strict_below = p.down_set(b);
    strict_below.reset(b);
    // a is covered by b iff no c in strict_below has a < c.
    strict_below.for_each([&](std::size_t a) {
      Bitset between = p.up_set(a) & strict_below;
      between.reset(a);
      if (between.none()) c.below[b].set(a);
    });
  }
  for (std::size_t b = 0; b < n; ++b) c.below[b].for_each([&](std::size_t a) { c.pairs.emplace_back(a, b); });
  std::sort(c.pairs.begin(), c.pairs.end());
  return c;
}

Graph comparability_graph(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < p.size(); ++a)
    p.up_set(a).for_each([&](std::size_t b) {
      if (b != a) e.emplace_back(a, b);
    });
  return Graph(p.size(), e);
}

Poset lex_product(const Poset& p1, const Poset& p2) {
  const std::size_t n1 = p1.size(), n2 = p2.size(), n = n1 * n2;
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      auto& row = up[a * n2 + b];
      p1.up_set(a).for_each([&](std::size_t a2) {
        if (a2 != a)
          for (std::size_t b2 = 0; b2 < n2; ++b2) row.set(a2 * n2 + b2);
      });
      p2.up_set(b).for_each([&](std::size_t b2) { row.set(a * n2 + b2); });
    }
  return Poset::from_closed(std::move(up));
}

Graph lex_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.size(), n2 = g2.size();
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [a, a2] : g1.edges())
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t b2 = 0; b2 < n2; ++b2) e.emplace_back(a * n2 + b, a2 * n2 + b2);
  for (std::size_t a = 0; a < n1; ++a)
    for (auto [b, b2] : g2.edges()) e.emplace_back(a * n2 + b, a * n2 + b2);
  return Graph(n1 * n2, e);
}

void enumerate_antichains(const Poset& p, const std::function<void(const Bitset&)>& visit) {
  enumerate_independent_sets(comparability_graph(p), visit);
}

Polynomial antichain_polynomial_oracle(const Poset& p) {
  return independence_polynomial_oracle(comparability_graph(p));
}

bool is_antichain(const Poset& p, const Bitset& s) {
  if (s.size() != p.size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    Bitset others = (p.up_set(a) | p.down_set(a)) & s;
    others.reset(a);
    if (others.any()) ok = false;
  });
  return ok;
}

Poset parse_poset(std::istream& in) {
  const auto lines = detail::tokenize(in);
  const std::size_t n = detail::parse_header(lines, "poset");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 3 || (line.tokens[1] != "<=" && line.tokens[1] != "<"))
      throw ValidationError("expected a relation 'i <= j' or 'i < j'", line.number);
    const std::size_t i = detail::parse_index(line.tokens[0], line.number);
    const std::size_t j = detail::parse_index(line.tokens[2], line.number);
    if (i < 1 || i > n || j < 1 || j > n)
      throw ValidationError("element out of range 1.." + std::to_string(n), line.number);
    if (line.tokens[1] == "<" && i == j)
      throw ValidationError("strict relation '" + std::to_string(i) + " < " + std::to_string(j) + "'",
                            line.number);
    pairs.emplace_back(i - 1, j - 1);
  }
  return Poset::from_relations(n, pairs);
}

std::string format_poset(const Poset& p) {
  std::ostringstream os;
  os << "poset " << p.size() << "\n";
  for (auto [a, b] : covers(p).pairs) os << a + 1 << " < " << b + 1 << "\n";
  return os.str();
}

}  // namespace indpoly
