#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphprod/vertex_group.hpp"
#include "graphprod/vertex_set.hpp"

namespace graphprod {

/// Finite simple graph with a vertex group on every vertex. Immutable after
/// construction; every query is const and thread-safe.
class DefiningGraph {
 public:
  /// Vertices are named; edges refer to names. Throws InputError on self-loops,
  /// repeated edges, unknown endpoints, duplicate names, or a missing group.
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& edges,
                std::vector<GroupSpec> groups);

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InputError naming the unknown identifier.
  VertexId id(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return neighbours_[u].contains(v); }
  const VertexSet& neighbours(VertexId v) const { return neighbours_[v]; }
  /// Star of a single vertex: {v} together with its neighbours.
  const VertexSet& vertex_star(VertexId v) const { return stars_[v]; }
  const GroupSpec& group(VertexId v) const { return groups_.at(v); }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all() const { return VertexSet::full(vertex_count()); }
  VertexSet set_of(std::initializer_list<std::string_view> names) const;
  VertexSet set_of(const std::vector<std::string>& names) const;
  /// Throws InputError when `s` is not a subset of this graph's vertices.
  void check(const VertexSet& s) const;
  std::string format(const VertexSet& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<GroupSpec> groups_;
  std::vector<VertexSet> neighbours_;
  std::vector<VertexSet> stars_;
};

/// Intersection of the links of the members of s; link of the empty set is V.
VertexSet link(const DefiningGraph& graph, const VertexSet& s);
VertexSet star(const DefiningGraph& graph, const VertexSet& s);

struct JoinPartition {
  VertexSet left;
  VertexSet right;
};

/// Witness that the induced subgraph on s splits as a join: `left` is the
/// complement component containing the least vertex of s.
std::optional<JoinPartition> is_join(const DefiningGraph& graph, const VertexSet& s);

/// A join subgraph containing s, if one exists: s itself when it is a join,
/// otherwise star(s) when link(s) is nonempty.
std::optional<VertexSet> is_contained_in_join(const DefiningGraph& graph, const VertexSet& s);

bool has_isolated_vertices(const DefiningGraph& graph);

/// Path v1 - v2 - ... - vn with the given names.
DefiningGraph path_graph(const std::vector<std::string>& names, GroupSpec group);
/// Cycle v1 - ... - vn - v1.
DefiningGraph cycle_graph(const std::vector<std::string>& names, GroupSpec group);

}  // namespace graphprod
