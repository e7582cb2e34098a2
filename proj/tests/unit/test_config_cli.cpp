#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "graphprod/config.hpp"

using namespace graphprod;
using namespace graphprod::cli;

namespace {

const char* kP4 = R"(graph:
  vertices: [a, b, c, d]
  edges: [[a, b], [b, c], [c, d]]
groups: {a: Z, b: Z, c: Z, d: Z}
subgroups:
  H1: {generators: ["a:1.d:1"]}
seed: 5
)";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const ProjectConfig& config, const std::string& command, CommandOptions options) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(config, command, options, out, err);
  return {code, out.str(), err.str()};
}

CommandOptions with_args(std::vector<std::string> args) {
  CommandOptions o;
  o.args = std::move(args);
  return o;
}

}  // namespace

TEST(Config, ParsesMinimalP4) {
  const ProjectConfig c = parse_config(kP4);
  EXPECT_EQ(c.vertices.size(), 4U);
  EXPECT_EQ(c.edges.size(), 3U);
  EXPECT_EQ(c.seed, 5U);
  EXPECT_TRUE(c.warnings.empty());
  const DefiningGraph g = c.graph();
  EXPECT_TRUE(g.adjacent(g.id("a"), g.id("b")));
  EXPECT_EQ(c.subgroup(g, "H1").m_h, 2U);
  EXPECT_THROW(c.subgroup(g, "H9"), InputError);
}

TEST(Config, UndeclaredVertexIsNamed) {
  try {
    parse_config("graph:\n  vertices: [a, b]\n  edges: [[a, e]]\ngroups: {a: Z, b: Z}\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'e'"), std::string::npos);
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Config, ErrorsCarryLineAndField) {
  try {
    parse_config("graph:\n  vertices: [a]\ngroups: {a: Z}\nbudgets: {ball: 10, colour: 3}\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(e.field().find("budgets"), std::string::npos);
  }
  EXPECT_THROW(parse_config("graph:\n  vertices: [a, b]\ngroups: {a: Z}\n"), ConfigError);
  EXPECT_THROW(parse_config("graph:\n  vertices: [a]\ngroups: {a: Q}\n"), ConfigError);
  EXPECT_THROW(parse_config("graph:\n  vertices: [a]\ngroups: {a: Z}\nsubgroups:\n  H: {generators: [\"a:0\"]}\n"),
               ConfigError);
  EXPECT_THROW(parse_config("graph: [\n"), ConfigError);
}

TEST(Config, HypothesisWarnings) {
  const ProjectConfig finite = parse_config("graph:\n  vertices: [a, b]\n  edges: [[a, b]]\ngroups: {a: Z5, b: Z}\n");
  ASSERT_EQ(finite.warnings.size(), 1U);
  EXPECT_NE(finite.warnings[0].find("finite"), std::string::npos);
  const ProjectConfig quiet = parse_config(
      "graph:\n  vertices: [a, b]\n  edges: [[a, b]]\ngroups: {a: Z5, b: Z}\nsuppress_hypothesis_warnings: true\n");
  EXPECT_TRUE(quiet.warnings.empty());
  const ProjectConfig isolated = parse_config("graph:\n  vertices: [a, b]\ngroups: {a: Z, b: Z}\n");
  EXPECT_EQ(isolated.warnings.size(), 1U);
}

TEST(Config, RoundTripAndHash) {
  const ProjectConfig c = parse_config(kP4);
  const std::string text = serialize_config(c);
  const ProjectConfig back = parse_config(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(serialize_config(back), text);
  EXPECT_EQ(config_hash(back), config_hash(c));
  EXPECT_EQ(config_hash(c).size(), 16U);
  ProjectConfig other = c;
  other.seed = 6;
  EXPECT_NE(config_hash(other), config_hash(c));
}

TEST(Config, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "graphprod_config_test.yaml";
  std::ofstream(path) << kP4;
  EXPECT_EQ(load_config(path.string()), parse_config(kP4));
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path.string()), InputError);
}

TEST(Cli, ReduceExample) {
  const Outcome r = run(default_config(), "reduce", with_args({"a:1.b:1.a:1"}));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "a:2.b:1\nlength 2\n");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run(default_config(), "reduce", with_args({"e:1"})).code, kInputError);
  EXPECT_EQ(run(default_config(), "reduce", with_args({})).code, kInputError);
  EXPECT_EQ(run(default_config(), "frobnicate", with_args({})).code, kInputError);
  EXPECT_EQ(run(default_config(), "diagram", with_args({"a:1.c:1"})).code, kInputError);
}

TEST(Cli, BudgetExceeded) {
  CommandOptions o = with_args({"a:1.c:1.b:1.d:1"});
  o.budget = 2;
  const Outcome r = run(default_config(), "geodesics", o);
  EXPECT_EQ(r.code, kBudgetExceeded);
}

TEST(Cli, DiagramSvg) {
  const auto path = std::filesystem::temp_directory_path() / "graphprod_diagram_test.svg";
  CommandOptions o = with_args({"a:1.b:1.a:1.b:-1.a:-2"});
  o.svg = path.string();
  const Outcome r = run(default_config(), "diagram", o);
  EXPECT_EQ(r.code, kOk);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("data-vertex=\"a\""), std::string::npos);
  EXPECT_NE(svg.find("data-vertex=\"b\""), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, AnalyzeIsDeterministic) {
  CommandOptions o = with_args({"H1"});
  o.horizon = 5;
  const Outcome a = run(default_config(), "analyze", o);
  const Outcome b = run(default_config(), "analyze", o);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"config_hash\""), std::string::npos);
}

TEST(Cli, OracleCheckPasses) {
  CommandOptions o;
  o.radius = 2;
  o.samples = 50;
  const Outcome r = run(default_config(), "oracle-check", o);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("oracle-check passed"), std::string::npos);
}
