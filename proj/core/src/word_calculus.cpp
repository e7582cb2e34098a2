#include "graphprod/word_calculus.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

std::optional<GeodesicViolation> least_violation(const DefiningGraph& graph,
                                                 const std::vector<Letter>& letters,
                                                 std::size_t from) {
  const std::size_t n = letters.size();
  for (std::size_t i = from; i < n; ++i) {
    const VertexId v = letters[i].vertex;
    for (std::size_t k = i + 1; k < n; ++k) {
      const VertexId u = letters[k].vertex;
      if (u == v) return GeodesicViolation{i, k};
      if (!graph.adjacent(v, u)) break;
    }
  }
  return std::nullopt;
}

// Moves letters into shortlex-least order by adjacent commuting swaps.
void sort_shortlex(const DefiningGraph& graph, std::vector<Letter>& letters, ReductionTrace* trace) {
  const std::size_t n = letters.size();
  for (std::size_t k = 0; k < n; ++k) {
    VertexSet passable = graph.all();
    std::size_t best = k;
    for (std::size_t p = k; p < n; ++p) {
      const VertexId v = letters[p].vertex;
      if (passable.contains(v) && v < letters[best].vertex) best = p;
      passable &= graph.neighbours(v);
      if (passable.empty()) break;
    }
    for (std::size_t q = best; q > k; --q) {
      std::swap(letters[q - 1], letters[q]);
      if (trace != nullptr) trace->push_back({ReductionMove::Kind::Swap, q - 1});
    }
  }
}

std::vector<Letter> reduce_letters(const DefiningGraph& graph, std::vector<Letter> letters,
                                   ReductionTrace* trace) {
  std::size_t from = 0;
  while (auto violation = least_violation(graph, letters, from)) {
    const auto [i, j] = *violation;
    for (std::size_t k = j; k > i + 1; --k) {
      std::swap(letters[k - 1], letters[k]);
      if (trace != nullptr) trace->push_back({ReductionMove::Kind::Swap, k - 1});
    }
    const auto& spec = graph.group(letters[i].vertex);
    GroupElement merged = multiply(spec, letters[i].element, letters[i + 1].element);
    if (trace != nullptr) trace->push_back({ReductionMove::Kind::Merge, i});
    const auto at = letters.begin() + static_cast<std::ptrdiff_t>(i);
    if (is_identity(spec, merged)) {
      letters.erase(at, at + 2);
      // A deletion can unblock scans that started before i.
      from = 0;
    } else {
      letters[i].element = std::move(merged);
      letters.erase(at + 1);
      from = i;
    }
  }
  sort_shortlex(graph, letters, trace);
  return letters;
}

ParabolicSplit split_head(const DefiningGraph& graph, const std::vector<Letter>& letters,
                          const VertexSet& a) {
  std::vector<Letter> head;
  std::vector<Letter> tail;
  VertexSet passable = graph.all();  // vertices commuting with every tail letter so far
  for (const auto& l : letters) {
    if (a.contains(l.vertex) && passable.contains(l.vertex)) {
      head.push_back(l);
    } else {
      tail.push_back(l);
      passable &= graph.neighbours(l.vertex);
    }
  }
  sort_shortlex(graph, head, nullptr);
  sort_shortlex(graph, tail, nullptr);
  return {PrismWord(std::move(head)), PrismWord(std::move(tail))};
}

}  // namespace

Reduction reduce_to_geodesic(const DefiningGraph& graph, const PrismWord& w) {
  validate(graph, w);
  Reduction out;
  out.geodesic = PrismWord(reduce_letters(graph, w.letters(), &out.trace));
  return out;
}

PrismWord geodesic_form(const DefiningGraph& graph, const PrismWord& w) {
  validate(graph, w);
  return PrismWord(reduce_letters(graph, w.letters(), nullptr));
}

PrismWord replay(const DefiningGraph& graph, const PrismWord& w, const ReductionTrace& trace) {
  std::vector<Letter> letters = w.letters();
  for (const auto& move : trace) {
    const std::size_t i = move.position;
    if (i + 1 >= letters.size()) throw InputError("trace move position out of range");
    Letter& x = letters[i];
    Letter& y = letters[i + 1];
    if (move.kind == ReductionMove::Kind::Swap) {
      if (!graph.adjacent(x.vertex, y.vertex)) {
        throw InputError("swap at " + std::to_string(i) + " exchanges non-commuting letters");
      }
      std::swap(x, y);
    } else {
      if (x.vertex != y.vertex) {
        throw InputError("merge at " + std::to_string(i) + " combines different vertex groups");
      }
      const auto& spec = graph.group(x.vertex);
      GroupElement merged = multiply(spec, x.element, y.element);
      const auto at = letters.begin() + static_cast<std::ptrdiff_t>(i);
      if (is_identity(spec, merged)) {
        letters.erase(at, at + 2);
      } else {
        x.element = std::move(merged);
        letters.erase(at + 1);
      }
    }
  }
  return PrismWord(std::move(letters));
}

std::optional<GeodesicViolation> is_geodesic(const DefiningGraph& graph, const PrismWord& w) {
  validate(graph, w);
  return least_violation(graph, w.letters(), 0);
}

PrismWord canonical_order(const DefiningGraph& graph, const PrismWord& geodesic) {
  std::vector<Letter> letters = geodesic.letters();
  sort_shortlex(graph, letters, nullptr);
  return PrismWord(std::move(letters));
}

std::vector<PrismWord> geodesic_representatives(const DefiningGraph& graph, const PrismWord& w,
                                                std::size_t limit) {
  PrismWord start = geodesic_form(graph, w);
  std::unordered_set<PrismWord, PrismWordHash> seen{start};
  std::deque<PrismWord> queue{start};
  while (!queue.empty()) {
    PrismWord current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (!graph.adjacent(current[i].vertex, current[i + 1].vertex)) continue;
      PrismWord next = current;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw BudgetExceeded("more than " + std::to_string(limit) + " geodesic representatives");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<PrismWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicSplit head_in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a) {
  graph.check(a);
  return split_head(graph, geodesic_form(graph, g).letters(), a);
}

ParabolicSplit head_of_geodesic(const DefiningGraph& graph, const PrismWord& geodesic,
                                const VertexSet& a) {
  return split_head(graph, geodesic.letters(), a);
}

ParabolicSplit tail_in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a) {
  graph.check(a);
  std::vector<Letter> reversed = geodesic_form(graph, g).letters();
  std::reverse(reversed.begin(), reversed.end());
  // Splitting the reversed word from the left is splitting g from the right.
  ParabolicSplit mirrored = split_head(graph, reversed, a);
  auto unreverse = [&](PrismWord w) {
    std::reverse(w.letters().begin(), w.letters().end());
    return canonical_order(graph, w);
  };
  return {unreverse(std::move(mirrored.tail)), unreverse(std::move(mirrored.head))};
}

bool in_parabolic(const DefiningGraph& graph, const PrismWord& g, const VertexSet& a) {
  graph.check(a);
  return support(graph, geodesic_form(graph, g)).is_subset_of(a);
}

std::optional<ParabolicSplit> in_parabolic_product(const DefiningGraph& graph, const PrismWord& g,
                                                   const VertexSet& a, const VertexSet& b) {
  graph.check(b);
  ParabolicSplit split = head_in_parabolic(graph, g, a);
  if (!support(graph, split.tail).is_subset_of(b)) return std::nullopt;
  return split;
}

std::size_t prism_length(const DefiningGraph& graph, const PrismWord& g) {
  return geodesic_form(graph, g).size();
}

PrismWord product(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b) {
  return geodesic_form(graph, concat(a, b));
}

PrismWord power(const DefiningGraph& graph, const PrismWord& g, long n) {
  const PrismWord base = n < 0 ? inverse(graph, g) : g;
  PrismWord acc;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) acc = product(graph, acc, base);
  return acc;
}

bool same_element(const DefiningGraph& graph, const PrismWord& a, const PrismWord& b) {
  return geodesic_form(graph, concat(a, inverse(graph, b))).empty();
}

}  // namespace graphprod
