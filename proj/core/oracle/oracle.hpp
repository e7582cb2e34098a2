#pragma once

// Reference implementations kept independent of the library's rewriting code:
// a stack normal form, breadth-first search over Cayley graphs, and a
// generator of identity words with a known geodesic part.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"

namespace graphprod::oracle {

/// Reduced word for w: letters are pushed one at a time, each merging with the
/// last letter of its vertex when everything after that letter commutes with it.
PrismWord reduce(const DefiningGraph& graph, const PrismWord& w);

/// Foata layering of a reduced word: (layer, letter) pairs sorted. Two words
/// represent the same element iff their keys agree.
using ElementKey = std::vector<std::pair<std::size_t, Letter>>;
ElementKey key(const DefiningGraph& graph, const PrismWord& w);
PrismWord word_of(const ElementKey& k);

bool equal(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b);

/// Every nontrivial element of every vertex group. Requires finite vertex groups.
std::vector<Letter> prism_generators(const DefiningGraph& graph);

/// Distances from the identity in the prism Cayley graph, up to `radius`.
/// Requires finite vertex groups.
std::map<ElementKey, std::size_t> prism_ball(const DefiningGraph& graph, std::size_t radius);

/// Star-metric distances for targets of prism length <= radius. The star
/// generators are cut down to star-subgroup elements of prism length <= radius,
/// which loses nothing for such targets.
class StarOracle {
 public:
  StarOracle(const DefiningGraph& graph, std::size_t radius);
  /// Throws InputError when the target's prism length exceeds the radius.
  std::size_t distance(const PrismWord& target) const;
  std::size_t generator_count() const { return generators_.size(); }

 private:
  const DefiningGraph* graph_;
  std::size_t radius_;
  std::vector<PrismWord> generators_;
  std::map<ElementKey, std::size_t> ball2_;
};

struct IdentityWord {
  PrismWord g;
  /// Geodesic for g, shuffled by random commutations.
  PrismWord w;
  /// g w^-1; the w^-1 part occupies the last |w| positions.
  PrismWord s;
};

Letter random_letter(const DefiningGraph& graph, std::mt19937_64& rng);
PrismWord random_word(const DefiningGraph& graph, std::mt19937_64& rng, std::size_t length);
/// Random commuting swaps applied to w.
PrismWord shuffle(const DefiningGraph& graph, PrismWord w, std::mt19937_64& rng, std::size_t swaps);

/// g is a random word of length <= max_length with cancelling pieces u u^-1 and
/// conjugates x u x^-1 spliced in.
IdentityWord random_identity_word(const DefiningGraph& graph, std::mt19937_64& rng, std::size_t max_length);

}  // namespace graphprod::oracle
