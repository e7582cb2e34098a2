#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/vertex_group.hpp"

namespace graphprod {

/// Nontrivial element of one vertex group, tagged by its vertex.
struct Letter {
  VertexId vertex = 0;
  GroupElement element;

  auto operator<=>(const Letter&) const = default;
};

/// Finite sequence of letters. The ambient graph is passed explicitly to every
/// operation; `validate` checks a word against it.
class PrismWord {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  PrismWord() = default;
  explicit PrismWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  PrismWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>& letters() { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  void push_back(Letter l) { letters_.push_back(std::move(l)); }

  /// letters [first, first + count)
  PrismWord subword(std::size_t first, std::size_t count) const;

  auto operator<=>(const PrismWord&) const = default;
  bool operator==(const PrismWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct PrismWordHash {
  std::size_t operator()(const PrismWord& w) const;
};

/// Letter with a validated, nontrivial element. Throws InputError otherwise.
Letter make_letter(const DefiningGraph& graph, VertexId vertex, GroupElement element);
/// Convenience for cyclic groups: make_letter(graph, graph.id(name), CyclicValue{value}).
Letter make_letter(const DefiningGraph& graph, std::string_view vertex, std::int64_t value);

/// Throws InputError unless every letter names a vertex of `graph` and carries a
/// canonical nontrivial payload of that vertex's group.
void validate(const DefiningGraph& graph, const PrismWord& w);

PrismWord concat(const PrismWord& a, const PrismWord& b);
/// Formal inverse: letters reversed and inverted (no reduction).
PrismWord inverse(const DefiningGraph& graph, const PrismWord& w);
Letter inverse(const DefiningGraph& graph, const Letter& l);
VertexSet support(const DefiningGraph& graph, const PrismWord& w);

/// "a:1.b:1.a:-2"; the empty word is "1".
std::string format_word(const DefiningGraph& graph, const PrismWord& w);
std::string format_letter(const DefiningGraph& graph, const Letter& l);
PrismWord parse_word(const DefiningGraph& graph, std::string_view text);

}  // namespace graphprod
