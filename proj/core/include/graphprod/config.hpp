#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/subgroup.hpp"
#include "graphprod/vertex_group.hpp"

namespace graphprod {

/// Schema violation; the message names the line and the field.
class ConfigError : public InputError {
 public:
  ConfigError(int line, const std::string& field, const std::string& what);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct Budgets {
  std::size_t ball = 100'000;
  std::size_t geodesics = 100'000;
  std::size_t search = 2'000;

  bool operator==(const Budgets&) const = default;
};

struct SubgroupConfig {
  std::string name;
  std::vector<std::string> generators;

  bool operator==(const SubgroupConfig&) const = default;
};

/// Document shape (YAML):
///
///   graph:
///     vertices: [a, b, c, d]
///     edges: [[a, b], [b, c], [c, d]]
///   groups: {a: Z, b: Z, c: Z5, d: F2}
///   subgroups:
///     H1: {generators: ["a:1.d:1"]}
///   budgets: {ball: 100000, geodesics: 100000, search: 2000}
///   seed: 0
///   suppress_hypothesis_warnings: false
///
/// Only graph and groups are required. Every vertex needs a group.
struct ProjectConfig {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  /// Parallel to `vertices`.
  std::vector<GroupSpec> groups;
  std::vector<SubgroupConfig> subgroups;
  Budgets budgets;
  std::uint64_t seed = 0;
  bool suppress_hypothesis_warnings = false;
  /// Filled by parse_config; not serialized.
  std::vector<std::string> warnings;

  DefiningGraph graph() const;
  /// Throws InputError for an unknown name.
  SubgroupSpec subgroup(const DefiningGraph& graph, std::string_view name) const;

  bool operator==(const ProjectConfig& other) const;
};

ProjectConfig parse_config(std::string_view text);
ProjectConfig load_config(const std::string& path);

/// Canonical text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ProjectConfig& config);

/// FNV-1a (64 bit) of the canonical text, as 16 hex digits.
std::string config_hash(const ProjectConfig& config);

}  // namespace graphprod
