#include "indpoly/graph.hpp"

#include <sstream>

#include "indpoly/errors.hpp"
#include "text_util.hpp"

namespace indpoly {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ValidationError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                            ") out of range for " + std::to_string(n) + " vertices");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u + 1));
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.adj_[v] = Bitset::full(n);
    g.adj_[v].reset(v);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.size(), v + a.size());
  return Graph(a.size() + b.size(), e);
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.size() != g.size())
    throw ValidationError("vertex set over " + std::to_string(s.size()) + " vertices used with a graph on " +
                          std::to_string(g.size()));
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

namespace {

class IndependentSetWalker {
 public:
  IndependentSetWalker(const Graph& g, const std::function<void(const VertexSet&)>& visit)
      : g_(g), visit_(visit), current_(g.size()), scratch_(g.size() + 2, Bitset(g.size())) {}

  void run() {
    scratch_[0] = g_.all_vertices();
    walk(0);
  }

 private:
  void walk(std::size_t depth) {
    const Bitset& undecided = scratch_[depth];
    const std::size_t v = undecided.find_first();
    if (v == undecided.size()) {
      visit_(current_);
      return;
    }
    Bitset& next = scratch_[depth + 1];
    next = undecided;
    next.reset(v);
    walk(depth + 1);

    next = undecided;
    next.reset(v);
    next.subtract(g_.neighbors(v));
    current_.set(v);
    walk(depth + 1);
    current_.reset(v);
  }

  const Graph& g_;
  const std::function<void(const VertexSet&)>& visit_;
  VertexSet current_;
  std::vector<Bitset> scratch_;
};

}  // namespace

void enumerate_independent_sets(const Graph& g, const std::function<void(const VertexSet&)>& visit) {
  IndependentSetWalker(g, visit).run();
}

Polynomial independence_polynomial_oracle(const Graph& g) {
  std::vector<unsigned long long> counts(g.size() + 1, 0);
  enumerate_independent_sets(g, [&](const VertexSet& s) { ++counts[s.count()]; });
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (auto k : counts) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, -1, sizeof(k), 0, 0, &k);
    c.push_back(b);
  }
  return Polynomial(std::move(c));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.size(), InducedSubgraph::npos);
  keep.for_each([&](std::size_t v) {
    out.old_to_new[v] = out.new_to_old.size();
    out.new_to_old.push_back(v);
  });
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [u, v] : g.edges())
    if (keep.test(u) && keep.test(v)) e.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph(out.new_to_old.size(), e);
  return out;
}

Graph parse_graph(std::istream& in) {
  const auto lines = detail::tokenize(in);
  const std::size_t n = detail::parse_header(lines, "graph");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2) throw ValidationError("expected an edge 'i j'", line.number);
    const std::size_t i = detail::parse_index(line.tokens[0], line.number);
    const std::size_t j = detail::parse_index(line.tokens[1], line.number);
    if (i < 1 || i > n || j < 1 || j > n)
      throw ValidationError("vertex out of range 1.." + std::to_string(n), line.number);
    if (i == j) throw ValidationError("self-loop at vertex " + std::to_string(i), line.number);
    edges.emplace_back(i - 1, j - 1);
  }
  return Graph(n, edges);
}

std::string format_graph(const Graph& g, const std::string& header_comment) {
  std::ostringstream os;
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  os << "graph " << g.size() << "\n";
  for (auto [u, v] : g.edges()) os << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

}  // namespace indpoly
