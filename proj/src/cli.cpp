#include "indpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "indpoly/cm_bipartite.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/hilbert.hpp"
#include "indpoly/interpolation.hpp"
#include "indpoly/monomial_ideal.hpp"
#include "indpoly/poset.hpp"
#include "indpoly/poset_ideal.hpp"

namespace indpoly::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string strategy = "max-degree";
  std::uint64_t seed = 0;
  std::string memo = "on";
  std::string components = "on";
  bool oracle = false;
  std::string timing = "on";
  std::string generators = "jp";
  std::string route = "both";
  std::string t = "1";
  std::size_t k = 0;
  std::vector<std::string> files;

  bool json() const { return format == "json"; }
  HilbertOptions hilbert() const {
    HilbertOptions h;
    h.strategy = PivotStrategy::parse(strategy, seed);
    h.memo = memo == "on";
    h.components = components == "on";
    return h;
  }
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_engine(CLI::App* sub, Options& o, bool allow_power) {
  std::vector<std::string> names{"first", "max-degree", "cocoa-like"};
  if (allow_power) names.push_back("most-frequent-power");
  sub->add_option("--pivot-strategy", o.strategy, "Pivot strategy")->check(CLI::IsMember(names));
  sub->add_option("--seed", o.seed, "Seed for randomised pivot strategies");
  sub->add_option("--memo", o.memo, "Memoise subproblems")->check(CLI::IsMember({"on", "off"}));
  sub->add_option("--components", o.components, "Factor over connected components")
      ->check(CLI::IsMember({"on", "off"}));
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return in;
}

std::string read_all(const std::string& path) {
  auto in = open(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, typename Parse>
T load(const std::string& path, Parse parse) {
  auto in = open(path);
  try {
    return parse(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) { return load<Graph>(path, [](std::istream& in) { return parse_graph(in); }); }
Poset load_poset(const std::string& path) { return load<Poset>(path, [](std::istream& in) { return parse_poset(in); }); }

std::string set_string(const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  });
  return out + "}";
}

json set_json(const Bitset& s) {
  json a = json::array();
  s.for_each([&](std::size_t i) { a.push_back(i + 1); });
  return a;
}

std::string stats_line(const RecursionStats& s, const PivotStrategy& p) {
  std::ostringstream os;
  os << "nodes=" << s.nodes << " depth=" << s.depth << " memo_hits=" << s.memo_hits << " strategy=" << p.name();
  return os.str();
}

int polynomial_command(const Graph& g, const Options& o, std::ostream& out, std::ostream& err) {
  const auto opts = o.hilbert();
  const HilbertResult r = independence_polynomial(g, opts);
  const Polynomial& series = *r.series;
  std::optional<Polynomial> oracle;
  if (o.oracle) oracle = independence_polynomial_oracle(g);
  if (o.json()) {
    json j = {{"polynomial", series.to_json()},
              {"text", series.to_string()},
              {"count", to_string(series.eval(1))},
              {"stats", r.stats.to_json(opts.strategy)}};
    if (oracle) {
      j["oracle"] = oracle->to_json();
      j["oracle_match"] = *oracle == series;
    }
    out << j.dump(2) << "\n";
  } else {
    out << series.to_string() << "\n";
    if (oracle) out << "oracle: " << oracle->to_string() << (*oracle == series ? " (match)" : " (MISMATCH)") << "\n";
  }
  if (oracle && *oracle != series) {
    err << "error: fast path and enumeration oracle disagree\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_groebner(const Options& o, std::ostream& out, std::ostream& err) {
  const Poset p = load_poset(o.files.at(0));
  const GeneratorSet gb = groebner_basis(p);
  const BuchbergerReport report = verify_buchberger(gb.binomials());
  const MonomialIdeal lt = leading_term_ideal(p);
  const bool lt_ok = lt == modified_edge_ideal(comparability_graph(p));
  if (o.json()) {
    json j = {{"basis", gb.to_json()},
              {"leading_term_ideal", lt.to_json()},
              {"leading_term_ideal_is_modified_edge_ideal", lt_ok},
              {"report", {{"pairs_checked", report.pairs_checked}, {"failures", report.failures}}}};
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < gb.gens.size(); ++k) out << gb.render(k) << "\n";
    out << "leading terms: " << lt.to_string() << "\n";
    out << "pairs_checked=" << report.pairs_checked << " failures=" << report.failures.size() << "\n";
    for (const auto& f : report.failures) out << "failure: " << f << "\n";
  }
  if (!report.ok() || !lt_ok) {
    err << "error: Groebner basis verification failed\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_variety(const Options& o, std::ostream& out, std::ostream& err) {
  const Poset p = load_poset(o.files.at(0));
  if (p.size() > 30) throw ValidationError("variety sweep limited to 30 elements, poset has " + std::to_string(p.size()));
  GeneratorSet gens = o.generators == "cover" ? jp_cover_generators(p)
                      : o.generators == "gb"  ? groebner_basis(p)
                                              : jp_generators(p);
  const auto points = enumerate_variety(gens);
  const auto antichains = antichain_polynomial_fast(p).eval(1);
  bool ok = Rational(points.size()) == antichains;
  json rows = json::array();
  std::ostringstream text;
  for (const auto& a : points) {
    const Bitset s = bijection_f(p, a);
    const bool inverse = bijection_g(p, s) == a;
    ok = ok && inverse;
    rows.push_back({{"point", to_bitstring(a)}, {"antichain", set_json(s)}});
    text << to_bitstring(a) << " -> " << set_string(s) << "\n";
  }
  if (o.json()) {
    out << json{{"generators", to_string(gens.kind)},
                {"points", rows},
                {"count", points.size()},
                {"antichains", to_string(antichains)}}
               .dump(2)
        << "\n";
  } else {
    out << text.str() << "points=" << points.size() << " antichains=" << to_string(antichains) << "\n";
  }
  if (!ok) {
    err << "error: variety does not match the antichains\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream&) {
  const std::string text = read_all(o.files.at(0));
  std::istringstream probe(text);
  std::string keyword;
  for (std::string line; std::getline(probe, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    if (ls >> keyword) break;
  }
  std::istringstream in(text);
  if (keyword == "poset") {
    const Poset p = load<Poset>(o.files[0], [&](std::istream&) { return parse_poset(in); });
    const CmGraph g = graph_from_poset(p);
    const std::string rendered = format_cm_graph(g.graph);
    if (o.json()) {
      json map = json::array();
      for (auto l : g.element_to_label) map.push_back(l + 1);
      out << json{{"kind", "cm-bipartite"}, {"n", g.graph.n()}, {"element_to_label", map}, {"text", rendered}}.dump(2)
          << "\n";
    } else {
      out << rendered;
    }
    return kOk;
  }
  if (keyword == "graph") {
    const Graph g = load<Graph>(o.files[0], [&](std::istream&) { return parse_graph(in); });
    const Poset p = poset_from_graph(BipartiteLabeledGraph::from_graph(g));
    const std::string rendered = format_poset(p);
    if (o.json())
      out << json{{"kind", "poset"}, {"n", p.size()}, {"text", rendered}}.dump(2) << "\n";
    else
      out << rendered;
    return kOk;
  }
  throw ValidationError(o.files[0] + ": expected a 'poset' or 'graph' header");
}

int cmd_lexprod(const Options& o, std::ostream& out, std::ostream&) {
  const Poset product = lex_product(load_poset(o.files.at(0)), load_poset(o.files.at(1)));
  const std::string rendered = format_poset(product);
  if (o.json()) {
    json covers_json = json::array();
    for (auto [a, b] : covers(product).pairs) covers_json.push_back({a + 1, b + 1});
    out << json{{"n", product.size()}, {"covers", covers_json}, {"text", rendered}}.dump(2) << "\n";
  } else {
    out << rendered;
  }
  return kOk;
}

int cmd_interpolate(const Options& o, std::ostream& out, std::ostream& err) {
  const Poset p = load_poset(o.files.at(0));
  const Rational t = parse_rational(o.t);
  const auto route = o.route == "lex" ? EvaluationRoute::LexProduct
                     : o.route == "direct" ? EvaluationRoute::Direct
                                           : EvaluationRoute::Both;
  const InterpolationResult r = recover_coefficients(p, t, route);
  const Polynomial expected = antichain_polynomial_fast(p, o.hilbert());
  if (o.json()) {
    json j = r.to_json();
    j["matches_antichain_polynomial"] = r.recovered == expected;
    out << j.dump(2) << "\n";
  } else {
    out << "t = " << to_string(t) << "\n";
    for (std::size_t m = 0; m < r.system.evaluations.size(); ++m)
      out << "A(P[K" << m + 1 << "], t) = " << to_string(r.system.evaluations[m]) << "\n";
    out << "recovered: " << r.recovered.to_string() << "\n";
  }
  if (r.recovered != expected) {
    err << "error: recovered " << r.recovered.to_string() << " but A(P, x) = " << expected.to_string() << "\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.k > 20) throw ValidationError("boolean lattice rank must be at most 20");
  const Poset p = Poset::boolean_lattice(o.k);
  const auto opts = o.hilbert();
  const auto start = std::chrono::steady_clock::now();
  const HilbertResult r = antichain_hilbert(p, opts);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const Rational count = r.series->eval(1);
  std::optional<Rational> oracle;
  if (o.oracle) oracle = antichain_polynomial_oracle(p).eval(1);
  if (o.json()) {
    json j = {{"k", o.k},
              {"elements", p.size()},
              {"antichains", to_string(count)},
              {"polynomial", r.series->to_json()},
              {"stats", r.stats.to_json(opts.strategy)}};
    if (o.timing == "on") j["time_ms"] = ms;
    if (oracle) j["oracle_antichains"] = to_string(*oracle);
    out << j.dump(2) << "\n";
  } else {
    out << "k=" << o.k << " elements=" << p.size() << " antichains=" << to_string(count) << "\n";
    out << "polynomial: " << r.series->to_string() << "\n";
    out << stats_line(r.stats, opts.strategy) << "\n";
    if (o.timing == "on") out << "time_ms=" << ms << "\n";
    if (oracle) out << "oracle_antichains=" << to_string(*oracle) << "\n";
  }
  if (oracle && *oracle != count) {
    err << "error: fast path and enumeration oracle disagree\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_hn(const Options& o, std::ostream& out, std::ostream& err) {
  const auto parsed = load<ParsedIdeal>(o.files.at(0), [](std::istream& in) { return parse_ideal(in); });
  if (parsed.reduced_on_load) err << "warning: interreduction changed the generator set to <" << parsed.ideal.to_string() << ">\n";
  auto opts = o.hilbert();
  const HilbertResult r = hilbert_numerator(parsed.ideal, parsed.n_vars, opts);
  if (o.json()) {
    json j = {{"ideal", parsed.ideal.to_json()},
              {"n_vars", parsed.n_vars},
              {"numerator", r.numerator.to_json()},
              {"stats", r.stats.to_json(opts.strategy)}};
    j["series"] = r.series ? r.series->to_json() : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "numerator: " << r.numerator.to_string() << "\n";
    if (r.series) out << "series: " << r.series->to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Independence and antichain polynomials via Hilbert series recursion", "hscount"};
  app.require_subcommand(1);

  std::function<int()> action;
  auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->final_callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* indpoly_cmd = add("indpoly", "Independence polynomial of a graph file", [&] {
    return polynomial_command(load_graph(o.files.at(0)), o, out, err);
  });
  indpoly_cmd->add_option("graph", o.files, "Graph file")->required()->expected(1);
  add_engine(indpoly_cmd, o, false);
  indpoly_cmd->add_flag("--oracle", o.oracle, "Cross-check against enumeration");

  auto* antipoly = add("antipoly", "Antichain polynomial of a poset file", [&] {
    return polynomial_command(comparability_graph(load_poset(o.files.at(0))), o, out, err);
  });
  antipoly->add_option("poset", o.files, "Poset file")->required()->expected(1);
  add_engine(antipoly, o, false);
  antipoly->add_flag("--oracle", o.oracle, "Cross-check against enumeration");

  auto* groebner = add("groebner", "Groebner basis of J_P with Buchberger verification", [&] { return cmd_groebner(o, out, err); });
  groebner->add_option("poset", o.files, "Poset file")->required()->expected(1);

  auto* variety = add("variety", "Points of V(J_P) and the antichain bijection", [&] { return cmd_variety(o, out, err); });
  variety->add_option("poset", o.files, "Poset file")->required()->expected(1);
  variety->add_option("--generators", o.generators, "Generator set to sweep")
      ->check(CLI::IsMember({"jp", "cover", "gb"}));

  auto* convert = add("convert", "Poset <-> Cohen-Macaulay bipartite graph", [&] { return cmd_convert(o, out, err); });
  convert->add_option("file", o.files, "Poset or graph file")->required()->expected(1);

  auto* lexprod = add("lexprod", "Lexicographic product of two posets", [&] { return cmd_lexprod(o, out, err); });
  lexprod->add_option("posets", o.files, "Two poset files")->required()->expected(2);

  auto* interpolate =
      add("interpolate", "Recover A(P, x) from evaluations at m*t", [&] { return cmd_interpolate(o, out, err); });
  interpolate->add_option("poset", o.files, "Poset file")->required()->expected(1);
  interpolate->add_option("--t", o.t, "Non-zero rational evaluation point, e.g. 1/2");
  interpolate->add_option("--route", o.route, "Evaluation route")->check(CLI::IsMember({"lex", "direct", "both"}));

  auto* bench = add("bench-boolean", "Count antichains of the Boolean lattice B_k", [&] { return cmd_bench(o, out, err); });
  bench->add_option("k", o.k, "Rank of the Boolean lattice")->required();
  add_engine(bench, o, false);
  bench->add_flag("--oracle", o.oracle, "Cross-check against enumeration");
  bench->add_option("--timing", o.timing, "Report wall time")->check(CLI::IsMember({"on", "off"}));

  auto* hn = add("hn", "Hilbert numerator of a monomial ideal file", [&] { return cmd_hn(o, out, err); });
  hn->add_option("ideal", o.files, "Ideal file")->required()->expected(1);
  add_engine(hn, o, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace indpoly::cli
