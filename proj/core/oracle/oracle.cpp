#include "oracle.hpp"

#include <algorithm>
#include <set>

#include "graphprod/errors.hpp"

namespace graphprod::oracle {

namespace {

void push_letter(const DefiningGraph& graph, std::vector<Letter>& stack, const Letter& l) {
  for (std::size_t k = stack.size(); k-- > 0;) {
    if (stack[k].vertex == l.vertex) {
      const GroupSpec& spec = graph.group(l.vertex);
      GroupElement e = multiply(spec, stack[k].element, l.element);
      if (is_identity(spec, e)) {
        stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        stack[k].element = std::move(e);
      }
      return;
    }
    if (!graph.adjacent(stack[k].vertex, l.vertex)) break;
  }
  stack.push_back(l);
}

void require_finite(const DefiningGraph& graph) {
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.group(v).is_finite()) throw InputError("oracle balls need finite vertex groups");
  }
}

}  // namespace

PrismWord reduce(const DefiningGraph& graph, const PrismWord& w) {
  std::vector<Letter> stack;
  for (const auto& l : w) push_letter(graph, stack, l);
  return PrismWord(std::move(stack));
}

ElementKey key(const DefiningGraph& graph, const PrismWord& w) {
  const PrismWord r = reduce(graph, w);
  std::vector<std::size_t> layer(r.size(), 0);
  ElementKey out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!graph.adjacent(r[j].vertex, r[i].vertex)) layer[i] = std::max(layer[i], layer[j] + 1);
    }
    out.emplace_back(layer[i], r[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrismWord word_of(const ElementKey& k) {
  PrismWord w;
  for (const auto& [layer, l] : k) w.push_back(l);
  return w;
}

bool equal(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b) {
  return key(graph, a) == key(graph, b);
}

std::vector<Letter> prism_generators(const DefiningGraph& graph) {
  require_finite(graph);
  std::vector<Letter> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const GroupSpec& spec = graph.group(v);
    for (std::int64_t r = 1; r < spec.parameter; ++r) out.push_back({v, CyclicValue{r}});
  }
  return out;
}

std::map<ElementKey, std::size_t> prism_ball(const DefiningGraph& graph, std::size_t radius) {
  const std::vector<Letter> gens = prism_generators(graph);
  std::map<ElementKey, std::size_t> dist{{ElementKey{}, 0}};
  std::vector<ElementKey> frontier{ElementKey{}};
  for (std::size_t d = 1; d <= radius; ++d) {
    std::vector<ElementKey> next;
    for (const auto& k : frontier) {
      const PrismWord base = word_of(k);
      for (const auto& s : gens) {
        PrismWord w = base;
        w.push_back(s);
        ElementKey nk = key(graph, w);
        if (dist.try_emplace(nk, d).second) next.push_back(std::move(nk));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

StarOracle::StarOracle(const DefiningGraph& graph, std::size_t radius) : graph_(&graph), radius_(radius) {
  if (radius > 4) throw InputError("the star oracle decides distances up to prism length 4");
  for (const auto& [k, d] : prism_ball(graph, radius)) {
    if (d == 0) continue;
    VertexSet supp = graph.empty_set();
    for (const auto& [layer, l] : k) supp.insert(l.vertex);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      if (supp.is_subset_of(graph.vertex_star(v))) {
        generators_.push_back(word_of(k));
        break;
      }
    }
  }
  ball2_.emplace(ElementKey{}, 0);
  for (const auto& s : generators_) ball2_.emplace(key(graph, s), 1);
  for (const auto& s : generators_) {
    for (const auto& t : generators_) ball2_.try_emplace(key(graph, concat(s, t)), 2);
  }
}

std::size_t StarOracle::distance(const PrismWord& target) const {
  const DefiningGraph& graph = *graph_;
  const PrismWord t = reduce(graph, target);
  if (t.size() > radius_) throw InputError("target lies outside the oracle radius");
  if (auto it = ball2_.find(key(graph, t)); it != ball2_.end()) return it->second;
  for (const auto& s : generators_) {
    if (ball2_.contains(key(graph, concat(inverse(graph, s), t)))) return 3;
  }
  // Star length never exceeds prism length, and radius <= 4.
  return t.size();
}

Letter random_letter(const DefiningGraph& graph, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick_vertex(0, static_cast<VertexId>(graph.vertex_count() - 1));
  const VertexId v = pick_vertex(rng);
  const GroupSpec& spec = graph.group(v);
  for (;;) {
    GroupElement e;
    switch (spec.kind) {
      case GroupKind::InfiniteCyclic: {
        std::uniform_int_distribution<std::int64_t> d(-3, 3);
        e = CyclicValue{d(rng)};
        break;
      }
      case GroupKind::FiniteCyclic: {
        std::uniform_int_distribution<std::int64_t> d(0, spec.parameter - 1);
        e = CyclicValue{d(rng)};
        break;
      }
      case GroupKind::FreeAbelian: {
        std::uniform_int_distribution<std::int64_t> d(-2, 2);
        LatticeVector x;
        for (int i = 0; i < spec.parameter; ++i) x.coords.push_back(d(rng));
        e = x;
        break;
      }
      case GroupKind::Free: {
        std::uniform_int_distribution<int> len(1, 2);
        std::uniform_int_distribution<int> gen(1, spec.parameter);
        std::bernoulli_distribution sign;
        FreeWord x;
        for (int i = len(rng); i > 0; --i) x.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
        e = x;
        break;
      }
    }
    e = canonicalize(spec, std::move(e));
    if (!is_identity(spec, e)) return {v, std::move(e)};
  }
}

PrismWord random_word(const DefiningGraph& graph, std::mt19937_64& rng, std::size_t length) {
  PrismWord w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(random_letter(graph, rng));
  return w;
}

PrismWord shuffle(const DefiningGraph& graph, PrismWord w, std::mt19937_64& rng, std::size_t swaps) {
  if (w.size() < 2) return w;
  std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
  for (std::size_t k = 0; k < swaps; ++k) {
    const std::size_t i = pos(rng);
    if (graph.adjacent(w[i].vertex, w[i + 1].vertex)) std::swap(w[i], w[i + 1]);
  }
  return w;
}

IdentityWord random_identity_word(const DefiningGraph& graph, std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> target_length(1, std::max<std::size_t>(max_length, 1));
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> piece(1, 3);
  const std::size_t target = target_length(rng);
  IdentityWord out;
  while (out.g.size() < target) {
    const std::size_t room = target - out.g.size();
    const int k = kind(rng);
    if (k == 2 && room >= 2) {
      const PrismWord u = random_word(graph, rng, std::min(piece(rng), room / 2));
      out.g = concat(out.g, concat(u, inverse(graph, u)));
    } else if (k == 3 && room >= 3) {
      const PrismWord x = random_word(graph, rng, 1);
      const PrismWord u = random_word(graph, rng, std::min(piece(rng), room - 2));
      out.g = concat(out.g, concat(concat(x, u), inverse(graph, x)));
    } else {
      out.g.push_back(random_letter(graph, rng));
    }
  }
  const PrismWord reduced = reduce(graph, out.g);
  out.w = shuffle(graph, reduced, rng, 4 * reduced.size());
  out.s = concat(out.g, inverse(graph, out.w));
  return out;
}

}  // namespace graphprod::oracle
