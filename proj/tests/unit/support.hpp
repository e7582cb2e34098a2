#pragma once

#include <random>
#include <string>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"
#include "graphprod/word_calculus.hpp"

namespace graphprod::fixtures {

inline DefiningGraph p4(GroupSpec g = GroupSpec::infinite_cyclic()) { return path_graph({"a", "b", "c", "d"}, g); }
inline DefiningGraph c5(GroupSpec g = GroupSpec::infinite_cyclic()) {
  return cycle_graph({"1", "2", "3", "4", "5"}, g);
}
inline DefiningGraph c4(GroupSpec g = GroupSpec::infinite_cyclic()) { return cycle_graph({"a", "b", "c", "d"}, g); }

inline PrismWord W(const DefiningGraph& graph, const std::string& text) { return parse_word(graph, text); }
inline std::string S(const DefiningGraph& graph, const PrismWord& w) { return format_word(graph, w); }

/// Random graph on n vertices named v0..v{n-1}, each edge present with probability p.
inline DefiningGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, GroupSpec g) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(names[i], names[j]);
    }
  }
  return DefiningGraph(names, edges, std::vector<GroupSpec>(n, g));
}

}  // namespace graphprod::fixtures
