#include "graphprod/contact.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <set>
#include <unordered_set>

#include "graphprod/errors.hpp"
#include "graphprod/word_calculus.hpp"

namespace graphprod {

namespace {

bool commutes_to_front(const DefiningGraph& graph, const PrismWord& w, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j) {
    if (!graph.adjacent(w[j].vertex, w[i].vertex)) return false;
  }
  return true;
}

bool commutes_to_back(const DefiningGraph& graph, const PrismWord& w, std::size_t i) {
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    if (!graph.adjacent(w[j].vertex, w[i].vertex)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> StarLength::lookup(const PrismWord& g) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(g);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

std::size_t StarLength::operator()(const PrismWord& g) const {
  return of_canonical(geodesic_form(*graph_, g));
}

std::size_t StarLength::of_canonical(const PrismWord& g) const {
  if (g.empty()) return 0;
  if (auto hit = lookup(g)) return *hit;
  const DefiningGraph& graph = *graph_;
  const VertexSet supp = support(graph, g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < graph.vertex_count() && best > 1; ++v) {
    if (supp.is_subset_of(graph.vertex_star(v))) best = 1;
  }
  if (best > 1) {
    std::set<PrismWord> tails;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      ParabolicSplit split = head_of_geodesic(graph, g, graph.vertex_star(v));
      if (!split.head.empty()) tails.insert(std::move(split.tail));
    }
    for (const auto& tail : tails) best = std::min(best, 1 + of_canonical(tail));
  }
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(g, best).first->second;
}

std::size_t StarLength::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::size_t star_length(const DefiningGraph& graph, const PrismWord& g) {
  return StarLength(graph)(g);
}

std::size_t HyperplaneHash::operator()(const Hyperplane& h) const {
  return PrismWordHash{}(h.carrier_rep) * 31 + h.vertex;
}

Hyperplane make_hyperplane(const DefiningGraph& graph, VertexId v, const PrismWord& g) {
  if (v >= graph.vertex_count()) throw InputError("hyperplane vertex outside the graph");
  return Hyperplane{v, tail_in_parabolic(graph, g, graph.vertex_star(v)).head};
}

std::vector<Hyperplane> hyperplanes_crossed(const DefiningGraph& graph, const PrismWord& w) {
  if (auto violation = is_geodesic(graph, w)) {
    throw InputError("word is not geodesic: letters " + std::to_string(violation->first) + " and " +
                     std::to_string(violation->second) + " combine");
  }
  std::vector<Hyperplane> out;
  std::unordered_set<Hyperplane, HyperplaneHash> seen;
  PrismWord prefix;
  for (const auto& l : w) {
    Hyperplane h = make_hyperplane(graph, l.vertex, prefix);
    if (seen.insert(h).second) out.push_back(std::move(h));
    prefix.push_back(l);
  }
  return out;
}

bool carriers_intersect(const DefiningGraph& graph, const Hyperplane& h1, const Hyperplane& h2) {
  if (h1 == h2) return true;
  const PrismWord x = product(graph, inverse(graph, h1.carrier_rep), h2.carrier_rep);
  return in_parabolic_product(graph, x, graph.vertex_star(h1.vertex), graph.vertex_star(h2.vertex))
      .has_value();
}

ContactBounds contact_distance_bounds(const StarLength& star, const Hyperplane& h1, const Hyperplane& h2) {
  if (h1 == h2) return {0, 0, 0};
  const DefiningGraph& graph = star.graph();
  const std::size_t s = star(concat(inverse(graph, h1.carrier_rep), h2.carrier_rep));
  return {s >= 2 ? s - 2 : 0, 2 * s + 2, s};
}

std::optional<std::size_t> contact_distance_search(const DefiningGraph& graph, const Hyperplane& h1,
                                                   const Hyperplane& h2, std::size_t budget) {
  if (h1 == h2) return 0;
  const PrismWord x = product(graph, inverse(graph, h1.carrier_rep), h2.carrier_rep);
  std::vector<PrismWord> reps;
  try {
    reps = geodesic_representatives(graph, x, budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  std::set<PrismWord> points;
  for (const auto& rep : reps) {
    PrismWord prefix = h1.carrier_rep;
    points.insert(geodesic_form(graph, prefix));
    for (const auto& l : rep) {
      prefix.push_back(l);
      points.insert(geodesic_form(graph, prefix));
    }
  }
  std::vector<Hyperplane> nodes{h1, h2};
  std::set<Hyperplane> distinct{h1, h2};
  for (const auto& p : points) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      Hyperplane h = make_hyperplane(graph, v, p);
      if (distinct.insert(h).second) nodes.push_back(std::move(h));
    }
  }
  std::vector<std::size_t> dist(nodes.size(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == 1) return dist[1];
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (dist[v] != std::numeric_limits<std::size_t>::max()) continue;
      if (!carriers_intersect(graph, nodes[u], nodes[v])) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

EssentialSupport essential_support(const DefiningGraph& graph, const PrismWord& g) {
  PrismWord current = geodesic_form(graph, g);
  PrismWord conj;
  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < current.size() && !pick; ++i) {
      if (!commutes_to_front(graph, current, i)) continue;
      for (std::size_t k = 0; k < current.size(); ++k) {
        if (k != i && current[k].vertex == current[i].vertex && commutes_to_back(graph, current, k)) {
          pick = i;
          break;
        }
      }
    }
    if (!pick) break;
    const PrismWord x{current[*pick]};
    current = geodesic_form(graph, concat(concat(inverse(graph, x), current), x));
    conj = product(graph, conj, x);
  }
  return {support(graph, current), std::move(conj), std::move(current)};
}

std::optional<JoinWitness> is_conjugate_into_join(const DefiningGraph& graph, const PrismWord& g) {
  EssentialSupport ess = essential_support(graph, g);
  if (ess.support.empty()) return std::nullopt;
  auto join = is_contained_in_join(graph, ess.support);
  if (!join) return std::nullopt;
  return JoinWitness{std::move(*join), std::move(ess.conjugator)};
}

OrbitProfile orbit_profile(const StarLength& star, const PrismWord& g, long n_max) {
  if (n_max < 1) throw InputError("orbit horizon must be at least 1");
  const DefiningGraph& graph = star.graph();
  const PrismWord base = geodesic_form(graph, g);
  OrbitProfile out;
  PrismWord acc;
  for (long n = 1; n <= n_max; ++n) {
    acc = product(graph, acc, base);
    out.rows.push_back({n, acc.size(), star.of_canonical(acc)});
  }
  const std::size_t last = out.rows.back().star;
  const std::size_t half = out.rows[static_cast<std::size_t>((n_max - 1) / 2)].star;
  out.translation_estimate = static_cast<double>(last) / static_cast<double>(n_max);
  out.loxodromic_at_horizon = n_max >= 2 && last > half;
  return out;
}

}  // namespace graphprod
