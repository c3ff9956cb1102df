#include "indpoly/hilbert.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

namespace indpoly {

std::string PivotStrategy::name() const {
  switch (rule) {
    case PivotRule::FirstSquaredVariable: return "first";
    case PivotRule::MaxDegreeSquaredVariable: return "max-degree";
    case PivotRule::CocoaLike: return "cocoa-like";
    case PivotRule::MostFrequentVariablePower: return "most-frequent-power";
    case PivotRule::Custom: return "custom";
  }
  return "unknown";
}

PivotStrategy PivotStrategy::parse(const std::string& name, std::uint64_t seed) {
  if (name == "first") return first();
  if (name == "max-degree") return max_degree();
  if (name == "cocoa-like") return cocoa_like(seed);
  if (name == "most-frequent-power") return most_frequent_power(seed);
  throw ValidationError("unknown pivot strategy '" + name + "'");
}

nlohmann::json RecursionStats::to_json(const PivotStrategy& s) const {
  return {{"nodes", nodes}, {"depth", depth}, {"memo_hits", memo_hits}, {"strategy", s.name()}};
}

namespace {

// ---------------------------------------------------------------------------
// General monomial ideals

class NumeratorSolver {
 public:
  explicit NumeratorSolver(const HilbertOptions& opts) : opts_(opts), rng_(opts.strategy.seed) {}

  Polynomial solve(const MonomialIdeal& I, std::size_t depth) {
    ++stats.nodes;
    stats.depth = std::max(stats.depth, depth);
    if (opts_.shape_graph) {
      if (auto bad = edge_ideal_shape_violation(I, *opts_.shape_graph))
        throw ConsistencyError("recursion state lost the edge-ideal shape: " + *bad + " in <" + I.to_string() + ">");
    }
    if (opts_.memo) {
      if (auto it = memo_.find(I); it != memo_.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }
    Polynomial result;
    if (pairwise_coprime(I)) {
      result = Polynomial{1};
      for (const auto& m : I.gens()) result *= Polynomial{1} - Polynomial::monomial(1, m.degree());
    } else {
      const Monomial p = choose_pivot(I);
      const auto total = sum_deg(I);
      MonomialIdeal colon_ideal = colon(I, p);
      MonomialIdeal plus_ideal = add_generator(I, p);
      if (sum_deg(colon_ideal) >= total || sum_deg(plus_ideal) >= total)
        throw PivotError("pivot " + p.to_string() + " from strategy '" + opts_.strategy.name() +
                         "' does not decrease the total degree of <" + I.to_string() + ">");
      result = solve(colon_ideal, depth + 1).shifted(p.degree());
      result += solve(plus_ideal, depth + 1);
    }
    if (opts_.memo) memo_.emplace(I, result);
    return result;
  }

  RecursionStats stats;

 private:
  Monomial choose_pivot(const MonomialIdeal& I) {
    const auto& strategy = opts_.strategy;
    if (strategy.rule == PivotRule::Custom) {
      if (!strategy.custom) throw PivotError("custom pivot strategy without a callback");
      return strategy.custom(I);
    }
    std::size_t bound = 0;
    for (const auto& m : I.gens()) bound = std::max(bound, m.var_bound());
    std::vector<std::size_t> freq(bound, 0);
    for (const auto& m : I.gens())
      for (const auto& t : m.terms()) ++freq[t.first];

    // Some variable is shared by two generators because they are not coprime.
    std::size_t best = 0;
    for (std::size_t v = 0; v < bound; ++v) best = std::max(best, freq[v]);

    if (strategy.rule == PivotRule::FirstSquaredVariable) {
      for (std::size_t v = 0; v < bound; ++v)
        if (freq[v] >= 2) return Monomial::variable(static_cast<Monomial::Var>(v));
    }
    std::vector<Monomial::Var> top;
    for (std::size_t v = 0; v < bound; ++v)
      if (freq[v] == best) top.push_back(static_cast<Monomial::Var>(v));
    if (strategy.rule == PivotRule::MaxDegreeSquaredVariable) return Monomial::variable(top.front());

    const Monomial::Var var = top[rng_() % top.size()];
    std::vector<Monomial::Exp> exps;
    for (const auto& m : I.gens())
      if (auto e = m.exponent(var)) exps.push_back(e);
    if (strategy.rule == PivotRule::MostFrequentVariablePower)
      return Monomial::variable(var, *std::min_element(exps.begin(), exps.end()));

    // CocoaLike: two distinct random generators containing var.
    const std::size_t a = rng_() % exps.size();
    std::size_t b = rng_() % (exps.size() - 1);
    if (b >= a) ++b;
    return Monomial::variable(var, std::min(exps[a], exps[b]));
  }

  const HilbertOptions& opts_;
  std::mt19937_64 rng_;
  std::unordered_map<MonomialIdeal, Polynomial, MonomialIdealHash> memo_;
};

bool zero_dimensional(const MonomialIdeal& I, std::size_t n_vars) {
  std::vector<bool> pure(n_vars, false);
  for (const auto& m : I.gens()) {
    if (m.is_one()) return true;
    if (m.terms().size() == 1 && m.terms()[0].first < n_vars) pure[m.terms()[0].first] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Modified edge ideals, run on the live induced subgraph

class IndependenceSolver {
 public:
  IndependenceSolver(const Graph& g, const HilbertOptions& opts)
      : g_(g), opts_(opts), rng_(opts.strategy.seed), degree_(g.size(), 0) {
    if (opts.strategy.rule == PivotRule::Custom)
      throw PivotError("custom pivots are only supported by the monomial recursion");
  }

  Polynomial solve(const Bitset& live, std::size_t depth) {
    ++stats.nodes;
    stats.depth = std::max(stats.depth, depth);
    const std::size_t k = live.count();
    if (k == 0) return Polynomial{1};
    if (opts_.memo) {
      if (auto it = memo_.find(live); it != memo_.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }
    Polynomial result = solve_uncached(live, k, depth);
    if (opts_.memo) memo_.emplace(live, result);
    return result;
  }

  RecursionStats stats;

 private:
  Polynomial solve_uncached(const Bitset& live, std::size_t k, std::size_t depth) {
    std::size_t twice_edges = 0;
    live.for_each([&](std::size_t v) {
      degree_[v] = g_.neighbors(v).intersection_count(live);
      twice_edges += degree_[v];
    });
    if (twice_edges == 0) return Polynomial::one_plus_z_pow(k);
    if (twice_edges == k * (k - 1)) return Polynomial{1, static_cast<long>(k)};

    if (opts_.components) {
      Bitset first = component_of(live.find_first(), live);
      if (first.count() != k) {
        Polynomial product = solve(first, depth + 1);
        Bitset rest = live - first;
        while (rest.any()) {
          Bitset comp = component_of(rest.find_first(), rest);
          rest.subtract(comp);
          product *= solve(comp, depth + 1);
        }
        return product;
      }
    }

    const std::size_t v = choose_pivot(live);
    Bitset plus = live;
    plus.reset(v);
    Bitset colon_set = plus - g_.neighbors(v);
    Polynomial result = solve(colon_set, depth + 1).shifted(1);
    result += solve(plus, depth + 1);
    return result;
  }

  // Uses degree_ as filled in by solve_uncached for this live set.
  std::size_t choose_pivot(const Bitset& live) {
    std::size_t best = 0;
    live.for_each([&](std::size_t v) { best = std::max(best, degree_[v]); });
    std::vector<std::size_t> top;
    bool done = false;
    live.for_each([&](std::size_t v) {
      if (done) return;
      switch (opts_.strategy.rule) {
        case PivotRule::FirstSquaredVariable:
          if (degree_[v] > 0) {
            top.push_back(v);
            done = true;
          }
          break;
        case PivotRule::MaxDegreeSquaredVariable:
          if (degree_[v] == best) {
            top.push_back(v);
            done = true;
          }
          break;
        default:
          if (degree_[v] == best) top.push_back(v);
      }
    });
    if (top.size() == 1) return top.front();
    // A squared variable with an edge sits in deg+1 generators; any two of
    // them share exactly x_v, so the CoCoA pivot is always the variable.
    return top[rng_() % top.size()];
  }

  Bitset component_of(std::size_t start, const Bitset& live) const {
    Bitset seen(live.size());
    Bitset frontier(live.size());
    seen.set(start);
    frontier.set(start);
    while (frontier.any()) {
      Bitset next(live.size());
      frontier.for_each([&](std::size_t u) { next |= g_.neighbors(u); });
      next &= live;
      next.subtract(seen);
      seen |= next;
      frontier = std::move(next);
    }
    return seen;
  }

  const Graph& g_;
  const HilbertOptions& opts_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> degree_;
  std::unordered_map<Bitset, Polynomial, BitsetHash> memo_;
};

}  // namespace

HilbertResult hilbert_numerator(const MonomialIdeal& I, std::size_t n_vars, const HilbertOptions& opts) {
  for (const auto& m : I.gens())
    if (m.var_bound() > n_vars)
      throw ValidationError("generator " + m.to_string() + " uses a variable beyond n_vars = " +
                            std::to_string(n_vars));
  NumeratorSolver solver(opts);
  HilbertResult r;
  r.n_vars = n_vars;
  r.numerator = solver.solve(I, 0);
  r.stats = solver.stats;
  if (zero_dimensional(I, n_vars)) r.series = divide_exact(r.numerator, Polynomial::one_minus_z_pow(n_vars));
  return r;
}

HilbertResult independence_polynomial(const Graph& g, const HilbertOptions& opts) {
  IndependenceSolver solver(g, opts);
  HilbertResult r;
  r.n_vars = g.size();
  r.series = solver.solve(g.all_vertices(), 0);
  r.numerator = *r.series * Polynomial::one_minus_z_pow(g.size());
  r.stats = solver.stats;
  return r;
}

HilbertResult antichain_hilbert(const Poset& p, const HilbertOptions& opts) {
  return independence_polynomial(comparability_graph(p), opts);
}

Polynomial antichain_polynomial_fast(const Poset& p, const HilbertOptions& opts) {
  return *antichain_hilbert(p, opts).series;
}

}  // namespace indpoly
