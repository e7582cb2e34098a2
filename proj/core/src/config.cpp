#include "graphprod/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace graphprod {

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

[[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& what) {
  throw ConfigError(line_of(node), field, what);
}

std::string scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) fail(node, field, "expected a scalar");
  return node.Scalar();
}

template <typename T>
T number(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) fail(node, field, "expected a number");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, field, "expected a nonnegative integer, got '" + node.Scalar() + "'");
  }
}

bool boolean(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) fail(node, field, "expected true or false");
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail(node, field, "expected true or false, got '" + node.Scalar() + "'");
  }
}

void only_keys(const YAML::Node& map, const std::string& field, const std::set<std::string>& allowed) {
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (!allowed.contains(key)) {
      fail(kv.first, field.empty() ? key : field + "." + key, "unknown key");
    }
  }
}

// Flow-style scalar that reads back as the same string.
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& field, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + field + ": " + what), line_(line), field_(field) {}

DefiningGraph ProjectConfig::graph() const { return DefiningGraph(vertices, edges, groups); }

SubgroupSpec ProjectConfig::subgroup(const DefiningGraph& graph, std::string_view name) const {
  for (const auto& s : subgroups) {
    if (s.name != name) continue;
    std::vector<PrismWord> gens;
    for (const auto& text : s.generators) gens.push_back(parse_word(graph, text));
    return SubgroupSpec::make(graph, std::move(gens), s.name);
  }
  throw InputError("unknown subgroup '" + std::string(name) + "'");
}

bool ProjectConfig::operator==(const ProjectConfig& other) const {
  return vertices == other.vertices && edges == other.edges && groups == other.groups &&
         subgroups == other.subgroups && budgets == other.budgets && seed == other.seed &&
         suppress_hypothesis_warnings == other.suppress_hypothesis_warnings;
}

ProjectConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(e.mark.line + 1, "document", e.msg);
  }
  if (!root.IsMap()) throw ConfigError(line_of(root), "document", "expected a mapping at the top level");
  only_keys(root, "", {"graph", "groups", "subgroups", "budgets", "seed", "suppress_hypothesis_warnings"});

  ProjectConfig config;
  const YAML::Node graph = root["graph"];
  if (!graph) throw ConfigError(1, "graph", "missing");
  if (!graph.IsMap()) fail(graph, "graph", "expected a mapping");
  only_keys(graph, "graph", {"vertices", "edges"});
  const YAML::Node vertices = graph["vertices"];
  if (!vertices || !vertices.IsSequence()) fail(vertices ? vertices : graph, "graph.vertices", "expected a list");
  std::set<std::string> declared;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string field = "graph.vertices[" + std::to_string(i) + "]";
    std::string name = scalar(vertices[i], field);
    if (!declared.insert(name).second) fail(vertices[i], field, "duplicate vertex '" + name + "'");
    config.vertices.push_back(std::move(name));
  }
  if (const YAML::Node edges = graph["edges"]) {
    if (!edges.IsSequence()) fail(edges, "graph.edges", "expected a list of pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string field = "graph.edges[" + std::to_string(i) + "]";
      const YAML::Node e = edges[i];
      if (!e.IsSequence() || e.size() != 2) fail(e, field, "expected a pair [u, v]");
      std::string u = scalar(e[0], field);
      std::string v = scalar(e[1], field);
      for (const auto* name : {&u, &v}) {
        if (!declared.contains(*name)) fail(e, field, "undeclared vertex '" + *name + "'");
      }
      config.edges.emplace_back(std::move(u), std::move(v));
    }
  }

  const YAML::Node groups = root["groups"];
  if (!groups) throw ConfigError(line_of(root), "groups", "missing");
  if (!groups.IsMap()) fail(groups, "groups", "expected a mapping from vertex to group");
  for (const auto& kv : groups) {
    const std::string name = kv.first.as<std::string>();
    if (!declared.contains(name)) fail(kv.first, "groups." + name, "undeclared vertex '" + name + "'");
  }
  for (const auto& name : config.vertices) {
    const YAML::Node g = groups[name];
    if (!g) fail(groups, "groups." + name, "vertex '" + name + "' has no group");
    try {
      config.groups.push_back(GroupSpec::parse(scalar(g, "groups." + name)));
    } catch (const ConfigError&) {
      throw;
    } catch (const InputError& e) {
      fail(g, "groups." + name, e.what());
    }
  }

  DefiningGraph built = [&] {
    try {
      return config.graph();
    } catch (const InputError& e) {
      throw ConfigError(line_of(graph), "graph", e.what());
    }
  }();

  if (const YAML::Node subgroups = root["subgroups"]) {
    if (!subgroups.IsMap()) fail(subgroups, "subgroups", "expected a mapping");
    for (const auto& kv : subgroups) {
      SubgroupConfig sub;
      sub.name = kv.first.as<std::string>();
      const std::string field = "subgroups." + sub.name;
      if (!kv.second.IsMap()) fail(kv.second, field, "expected a mapping with 'generators'");
      only_keys(kv.second, field, {"generators"});
      const YAML::Node gens = kv.second["generators"];
      if (!gens || !gens.IsSequence()) fail(kv.second, field + ".generators", "expected a list of words");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string gfield = field + ".generators[" + std::to_string(i) + "]";
        std::string word = scalar(gens[i], gfield);
        try {
          if (geodesic_form(built, parse_word(built, word)).empty()) {
            fail(gens[i], gfield, "generator is trivial");
          }
        } catch (const ConfigError&) {
          throw;
        } catch (const InputError& e) {
          fail(gens[i], gfield, e.what());
        }
        sub.generators.push_back(std::move(word));
      }
      config.subgroups.push_back(std::move(sub));
    }
  }

  if (const YAML::Node budgets = root["budgets"]) {
    if (!budgets.IsMap()) fail(budgets, "budgets", "expected a mapping");
    only_keys(budgets, "budgets", {"ball", "geodesics", "search"});
    if (budgets["ball"]) config.budgets.ball = number<std::size_t>(budgets["ball"], "budgets.ball");
    if (budgets["geodesics"]) {
      config.budgets.geodesics = number<std::size_t>(budgets["geodesics"], "budgets.geodesics");
    }
    if (budgets["search"]) config.budgets.search = number<std::size_t>(budgets["search"], "budgets.search");
  }
  if (const YAML::Node seed = root["seed"]) config.seed = number<std::uint64_t>(seed, "seed");
  if (const YAML::Node flag = root["suppress_hypothesis_warnings"]) {
    config.suppress_hypothesis_warnings = boolean(flag, "suppress_hypothesis_warnings");
  }

  if (!config.suppress_hypothesis_warnings) {
    for (std::size_t v = 0; v < config.vertices.size(); ++v) {
      if (config.groups[v].is_finite()) {
        config.warnings.push_back("vertex '" + config.vertices[v] + "' has a finite group (" +
                                  config.groups[v].tag() +
                                  "); results that assume infinite vertex groups do not apply");
      }
    }
    if (has_isolated_vertices(built)) {
      config.warnings.push_back("the graph has isolated vertices; join-busting results do not apply");
    }
  }
  return config;
}

ProjectConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ProjectConfig& config) {
  std::ostringstream out;
  out << "graph:\n  vertices: [";
  for (std::size_t i = 0; i < config.vertices.size(); ++i) {
    out << (i ? ", " : "") << quoted(config.vertices[i]);
  }
  out << "]\n  edges: [";
  for (std::size_t i = 0; i < config.edges.size(); ++i) {
    out << (i ? ", " : "") << "[" << quoted(config.edges[i].first) << ", " << quoted(config.edges[i].second)
        << "]";
  }
  out << "]\ngroups:\n";
  for (std::size_t i = 0; i < config.vertices.size(); ++i) {
    out << "  " << quoted(config.vertices[i]) << ": " << quoted(config.groups[i].tag()) << "\n";
  }
  if (!config.subgroups.empty()) {
    out << "subgroups:\n";
    for (const auto& s : config.subgroups) {
      out << "  " << quoted(s.name) << ":\n    generators: [";
      for (std::size_t i = 0; i < s.generators.size(); ++i) out << (i ? ", " : "") << quoted(s.generators[i]);
      out << "]\n";
    }
  }
  out << "budgets:\n  ball: " << config.budgets.ball << "\n  geodesics: " << config.budgets.geodesics
      << "\n  search: " << config.budgets.search << "\n";
  out << "seed: " << config.seed << "\n";
  out << "suppress_hypothesis_warnings: " << (config.suppress_hypothesis_warnings ? "true" : "false") << "\n";
  return out.str();
}

std::string config_hash(const ProjectConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_config(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace graphprod
