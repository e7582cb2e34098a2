#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

/// One rewriting step. Swap(i) exchanges the commuting letters at i and i+1;
/// Merge(i) multiplies the same-vertex letters at i and i+1 into one letter,
/// deleting both when the product is the identity.
struct ReductionMove {
  enum class Kind { Swap, Merge };
  Kind kind = Kind::Swap;
  std::size_t position = 0;

  bool operator==(const ReductionMove&) const = default;
};

using ReductionTrace = std::vector<ReductionMove>;

struct Reduction {
  PrismWord geodesic;
  ReductionTrace trace;
};

/// Reduces w to its canonical geodesic: the least violating pair is fixed
/// repeatedly (commute the right letter leftwards, then merge), after which the
/// letters are put into the shortlex-least order among commuting shuffles.
Reduction reduce_to_geodesic(const DefiningGraph& graph, const PrismWord& w);

/// Same result as reduce_to_geodesic(...).geodesic without recording a trace.
PrismWord geodesic_form(const DefiningGraph& graph, const PrismWord& w);

/// Applies `trace` to `w`. Throws InputError on an illegal move.
PrismWord replay(const DefiningGraph& graph, const PrismWord& w, const ReductionTrace& trace);

struct GeodesicViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  bool operator==(const GeodesicViolation&) const = default;
};

/// Nothing iff w is geodesic; otherwise the least pair (i, j) of same-vertex
/// letters with every letter strictly between them in Star(v).
std::optional<GeodesicViolation> is_geodesic(const DefiningGraph& graph, const PrismWord& w);

/// Shortlex-least reordering of a geodesic word under commutation.
PrismWord canonical_order(const DefiningGraph& graph, const PrismWord& geodesic);

inline constexpr std::size_t kDefaultGeodesicLimit = 100'000;

/// Every geodesic word for the element of w, sorted. Throws BudgetExceeded when
/// more than `limit` words exist.
std::vector<PrismWord> geodesic_representatives(const DefiningGraph& graph, const PrismWord& w,
                                                std::size_t limit = kDefaultGeodesicLimit);

/// head * tail == g, both canonical geodesics.
struct ParabolicSplit {
  PrismWord head;
  PrismWord tail;
};

/// Maximal left divisor of g lying in G_a. g is reduced first.
ParabolicSplit head_in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a);
/// As head_in_parabolic, skipping the reduction: `geodesic` must be geodesic.
ParabolicSplit head_of_geodesic(const DefiningGraph& graph, const PrismWord& geodesic,
                                const VertexSet& a);
/// Maximal right divisor in G_a, returned as `tail`; head is the remaining
/// minimal representative of the left coset g G_a.
ParabolicSplit tail_in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a);

bool in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a);

/// x in G_a, y in G_b with x y == g, if such a split exists.
std::optional<ParabolicSplit> in_parabolic_product(const DefiningGraph& graph, const PrismWord& g,
                                                   const VertexSet& a, const VertexSet& b);

std::size_t prism_length(const DefiningGraph& graph, const PrismWord& g);

/// Canonical geodesic of the product a b.
PrismWord product(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b);
/// Canonical geodesic of g^n (n may be negative).
PrismWord power(const DefiningGraph& graph, const PrismWord& g, long n);
bool same_element(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b);

}  // namespace graphprod
