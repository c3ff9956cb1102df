#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "indpoly/cli.hpp"

namespace fs = std::filesystem;
using indpoly::cli::ExitCode;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.rfind("@", 0) == 0) a = std::string(INDPOLY_TEST_DATA) + "/" + a.substr(1);
  std::ostringstream out, err;
  const int code = indpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Set INDPOLY_UPDATE_GOLDEN=1 to rewrite the expected files.
void check_golden(const std::string& name, const std::vector<std::string>& args) {
  CAPTURE(name);
  const Run r = run(args);
  CHECK(r.code == ExitCode::kOk);
  const fs::path file = fs::path(INDPOLY_GOLDEN_DIR) / (name + ".txt");
  if (std::getenv("INDPOLY_UPDATE_GOLDEN")) {
    std::ofstream(file, std::ios::binary) << r.out;
    return;
  }
  REQUIRE(fs::exists(file));
  CHECK(r.out == slurp(file));
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"indpoly_path3", {"indpoly", "@path3.graph", "--oracle"}},
      {"indpoly_path3_json", {"indpoly", "@path3.graph", "--format", "json"}},
      {"indpoly_k4_first", {"indpoly", "@k4.graph", "--pivot-strategy", "first"}},
      {"antipoly_chain5", {"antipoly", "@chain5.poset"}},
      {"antipoly_antichain3", {"antipoly", "@antichain3.poset", "--oracle"}},
      {"antipoly_b2", {"antipoly", "@b2.poset"}},
      {"antipoly_b3_json", {"antipoly", "@b3.poset", "--format", "json"}},
      {"antipoly_b4_cocoa", {"antipoly", "@b4.poset", "--pivot-strategy", "cocoa-like", "--seed", "7", "--oracle"}},
      {"antipoly_random6", {"antipoly", "@random6.poset", "--memo", "off", "--components", "off"}},
      {"groebner_chain2", {"groebner", "@chain2.poset"}},
      {"groebner_b2_json", {"groebner", "@b2.poset", "--format", "json"}},
      {"groebner_random6", {"groebner", "@random6.poset"}},
      {"variety_chain2", {"variety", "@chain2.poset"}},
      {"variety_b2_cover", {"variety", "@b2.poset", "--generators", "cover"}},
      {"variety_random6_json", {"variety", "@random6.poset", "--generators", "gb", "--format", "json"}},
      {"convert_chain2", {"convert", "@chain2.poset"}},
      {"convert_random6_json", {"convert", "@random6.poset", "--format", "json"}},
      {"lexprod_chain2_antichain3", {"lexprod", "@chain2.poset", "@antichain3.poset"}},
      {"interpolate_chain2_half", {"interpolate", "@chain2.poset", "--t", "1/2"}},
      {"interpolate_b2_json", {"interpolate", "@b2.poset", "--t", "-2", "--route", "lex", "--format", "json"}},
      {"bench_boolean_3", {"bench-boolean", "3", "--timing", "off", "--oracle"}},
      {"bench_boolean_4_json", {"bench-boolean", "4", "--timing", "off", "--format", "json"}},
      {"hn_edge", {"hn", "@edge.ideal"}},
      {"hn_square_json", {"hn", "@square.ideal", "--format", "json"}},
      {"hn_empty", {"hn", "@empty.ideal"}},
  };
  for (const auto& [name, args] : cases) check_golden(name, args);
}

TEST_CASE("headline outputs") {
  CHECK(run({"antipoly", "@chain5.poset"}).out == "1 + 5*z\n");
  CHECK(run({"bench-boolean", "3", "--timing", "off"}).out.find("antichains=20") != std::string::npos);
  const Run r = run({"indpoly", "--oracle", "@path3.graph"});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.out == "1 + 3*z + z^2\noracle: 1 + 3*z + z^2 (match)\n");
}

TEST_CASE("convert round trips through the graph form") {
  const Run g = run({"convert", "@random6.poset"});
  REQUIRE(g.code == ExitCode::kOk);
  const fs::path tmp = fs::temp_directory_path() / "indpoly_cli_test_roundtrip.graph";
  std::ofstream(tmp) << g.out;
  const Run back = run({"convert", tmp.string()});
  fs::remove(tmp);
  REQUIRE(back.code == ExitCode::kOk);
  // Same antichain polynomial after relabelling.
  const fs::path tmp2 = fs::temp_directory_path() / "indpoly_cli_test_roundtrip.poset";
  std::ofstream(tmp2) << back.out;
  CHECK(run({"antipoly", tmp2.string()}).out == run({"antipoly", "@random6.poset"}).out);
  fs::remove(tmp2);
}

TEST_CASE("ideal files are interreduced with a warning") {
  const Run r = run({"hn", "@square.ideal"});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"hn", "@edge.ideal"}).err.empty());
  CHECK(run({"hn", "@empty.ideal"}).out.find("numerator: 1\n") == 0);
}

TEST_CASE("validation errors exit 1 with a location") {
  const Run cycle = run({"antipoly", "@bad_cycle.poset"});
  CHECK(cycle.code == ExitCode::kValidation);
  CHECK(cycle.err.find("cycle 1 <= 2 <= 3 <= 1") != std::string::npos);

  const Run loop = run({"indpoly", "@bad_loop.graph"});
  CHECK(loop.code == ExitCode::kValidation);
  CHECK(loop.err.find("line 3") != std::string::npos);

  const Run var = run({"hn", "@bad_var.ideal"});
  CHECK(var.code == ExitCode::kValidation);
  CHECK(var.err.find("line 3") != std::string::npos);

  CHECK(run({"antipoly", "@does_not_exist.poset"}).code == ExitCode::kValidation);
  CHECK(run({"interpolate", "@chain2.poset", "--t", "0"}).code == ExitCode::kValidation);
  CHECK(run({"interpolate", "@chain2.poset", "--t", "1/0"}).code == ExitCode::kValidation);
  CHECK(run({"convert", "@edge.ideal"}).code == ExitCode::kValidation);
  CHECK(run({"indpoly", "@chain2.poset"}).code == ExitCode::kValidation);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"antipoly"}).code == ExitCode::kUsage);
  CHECK(run({"antipoly", "@chain2.poset", "--format", "xml"}).code == ExitCode::kUsage);
  CHECK(run({"antipoly", "@chain2.poset", "--pivot-strategy", "best"}).code == ExitCode::kUsage);
  CHECK(run({"lexprod", "@chain2.poset"}).code == ExitCode::kUsage);
  CHECK(run({"bench-boolean", "two"}).code == ExitCode::kUsage);
  CHECK(run({"antipoly", "@chain2.poset", "--no-such-flag"}).code == ExitCode::kUsage);
}

TEST_CASE("strategies agree through the CLI") {
  const std::string reference = run({"antipoly", "@b3.poset"}).out;
  for (const char* s : {"first", "max-degree", "cocoa-like"})
    for (const char* memo : {"on", "off"})
      CHECK(run({"antipoly", "@b3.poset", "--pivot-strategy", s, "--seed", "3", "--memo", memo}).out == reference);
  const std::string numerator = run({"hn", "@square.ideal"}).out;
  for (const char* s : {"first", "max-degree", "cocoa-like", "most-frequent-power"})
    CHECK(run({"hn", "@square.ideal", "--pivot-strategy", s, "--seed", "11"}).out == numerator);
}
