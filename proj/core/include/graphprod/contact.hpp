#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

/// Star length with a memo shared between threads. Lookups take a shared lock;
/// inserts are insert-if-absent, so results do not depend on interleaving.
class StarLength {
 public:
  explicit StarLength(const DefiningGraph& graph) : graph_(&graph) {}
  StarLength(const StarLength&) = delete;
  StarLength& operator=(const StarLength&) = delete;

  /// g is reduced first.
  std::size_t operator()(const PrismWord& g) const;
  /// g must already be a canonical geodesic.
  std::size_t of_canonical(const PrismWord& g) const;

  std::size_t memo_size() const;
  const DefiningGraph& graph() const { return *graph_; }

 private:
  std::optional<std::size_t> lookup(const PrismWord& g) const;

  const DefiningGraph* graph_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<PrismWord, std::size_t, PrismWordHash> memo_;
};

/// One-off star length with a private memo.
std::size_t star_length(const DefiningGraph& graph, const PrismWord& g);

/// Vertex v with the canonical representative of a coset g G_Star(v): the
/// maximal Star(v) tail is stripped from the right.
struct Hyperplane {
  VertexId vertex = 0;
  PrismWord carrier_rep;

  auto operator<=>(const Hyperplane&) const = default;
  bool operator==(const Hyperplane&) const = default;
};

struct HyperplaneHash {
  std::size_t operator()(const Hyperplane& h) const;
};

Hyperplane make_hyperplane(const DefiningGraph& graph, VertexId v, const PrismWord& g);

/// The hyperplane dual to each letter of a geodesic, in order, without
/// repeats. Throws InputError for non-geodesic input.
std::vector<Hyperplane> hyperplanes_crossed(const DefiningGraph& graph, const PrismWord& w);

bool carriers_intersect(const DefiningGraph& graph, const Hyperplane& h1, const Hyperplane& h2);

struct ContactBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// Star length of carrier_rep(h1)^-1 carrier_rep(h2).
  std::size_t star = 0;
};

ContactBounds contact_distance_bounds(const StarLength& star, const Hyperplane& h1, const Hyperplane& h2);

/// Exact distance in the contact subgraph on the hyperplanes (v, r1 p G_Star(v))
/// where p runs over prefixes of the geodesics of r1^-1 r2. This bounds the
/// true contact distance from above. Nothing when the number of geodesics
/// exceeds `budget`.
std::optional<std::size_t> contact_distance_search(const DefiningGraph& graph, const Hyperplane& h1,
                                                   const Hyperplane& h2, std::size_t budget = 2000);

struct EssentialSupport {
  VertexSet support;
  PrismWord conjugator;
  /// conjugator^-1 g conjugator, cyclically reduced.
  PrismWord reduced;
};

/// Cyclic reduction: while some letter x can be commuted to the front and a
/// different letter of the same vertex to the back, g becomes x^-1 g x.
EssentialSupport essential_support(const DefiningGraph& graph, const PrismWord& g);

struct JoinWitness {
  VertexSet join;
  PrismWord conjugator;
};

/// Nothing for the identity and for elements whose essential support lies in
/// no join.
std::optional<JoinWitness> is_conjugate_into_join(const DefiningGraph& graph, const PrismWord& g);

struct OrbitRow {
  long n = 0;
  std::size_t prism = 0;
  std::size_t star = 0;
};

struct OrbitProfile {
  std::vector<OrbitRow> rows;
  /// |g^n_max|_star / n_max; an upper estimate of the stable translation length.
  double translation_estimate = 0.0;
  /// Star length still grows over the second half of the horizon. A
  /// diagnostic only; it certifies nothing.
  bool loxodromic_at_horizon = false;
};

OrbitProfile orbit_profile(const StarLength& star, const PrismWord& g, long n_max);

}  // namespace graphprod
