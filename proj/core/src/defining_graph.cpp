#include "graphprod/defining_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graphprod/errors.hpp"

namespace graphprod {

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             std::vector<GroupSpec> groups)
    : names_(std::move(names)), groups_(std::move(groups)) {
  if (groups_.size() != names_.size()) {
    throw InputError("every vertex needs a group assignment (" + std::to_string(names_.size()) +
                     " vertices, " + std::to_string(groups_.size()) + " groups)");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty vertex name");
    if (n.find_first_of(":.[]() ") != std::string::npos) {
      throw InputError("vertex name '" + n + "' contains a reserved character");
    }
    if (!seen.insert(n).second) throw InputError("duplicate vertex '" + n + "'");
  }
  neighbours_.assign(names_.size(), VertexSet(names_.size()));
  for (const auto& [a, b] : edges) {
    const VertexId u = id(a);
    const VertexId v = id(b);
    if (u == v) throw InputError("self-loop at vertex '" + a + "'");
    if (neighbours_[u].contains(v)) throw InputError("repeated edge " + a + "-" + b);
    neighbours_[u].insert(v);
    neighbours_[v].insert(u);
  }
  stars_ = neighbours_;
  for (VertexId v = 0; v < names_.size(); ++v) stars_[v].insert(v);
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId DefiningGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbours_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet DefiningGraph::set_of(std::initializer_list<std::string_view> names) const {
  VertexSet s = empty_set();
  for (auto n : names) s.insert(id(n));
  return s;
}

VertexSet DefiningGraph::set_of(const std::vector<std::string>& names) const {
  VertexSet s = empty_set();
  for (const auto& n : names) s.insert(id(n));
  return s;
}

void DefiningGraph::check(const VertexSet& s) const {
  if (s.universe() != vertex_count()) {
    throw InputError("vertex set does not belong to this graph");
  }
}

std::string DefiningGraph::format(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.members()) {
    if (!first) out += ",";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

VertexSet link(const DefiningGraph& graph, const VertexSet& s) {
  graph.check(s);
  VertexSet out = graph.all();
  for (VertexId v : s.members()) out &= graph.neighbours(v);
  return out;
}

VertexSet star(const DefiningGraph& graph, const VertexSet& s) { return s | link(graph, s); }

std::optional<JoinPartition> is_join(const DefiningGraph& graph, const VertexSet& s) {
  graph.check(s);
  if (s.empty()) throw InputError("is_join needs a nonempty vertex set");
  const auto members = s.members();
  // Component of the least vertex in the complement of the induced subgraph.
  VertexSet component = graph.empty_set();
  std::vector<VertexId> stack{members.front()};
  component.insert(members.front());
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : members) {
      if (v != u && !graph.adjacent(u, v) && !component.contains(v)) {
        component.insert(v);
        stack.push_back(v);
      }
    }
  }
  if (component == s) return std::nullopt;
  return JoinPartition{component, s - component};
}

std::optional<VertexSet> is_contained_in_join(const DefiningGraph& graph, const VertexSet& s) {
  graph.check(s);
  if (s.empty()) throw InputError("is_contained_in_join needs a nonempty vertex set");
  if (is_join(graph, s)) return s;
  if (VertexSet l = link(graph, s); !l.empty()) return s | l;
  return std::nullopt;
}

bool has_isolated_vertices(const DefiningGraph& graph) {
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.neighbours(v).empty()) return true;
  }
  return false;
}

DefiningGraph path_graph(const std::vector<std::string>& names, GroupSpec group) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) edges.emplace_back(names[i], names[i + 1]);
  return DefiningGraph(names, edges, std::vector<GroupSpec>(names.size(), group));
}

DefiningGraph cycle_graph(const std::vector<std::string>& names, GroupSpec group) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < names.size(); ++i) edges.emplace_back(names[i], names[(i + 1) % names.size()]);
  return DefiningGraph(names, edges, std::vector<GroupSpec>(names.size(), group));
}

}  // namespace graphprod
