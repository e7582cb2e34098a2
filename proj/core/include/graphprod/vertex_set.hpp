#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace graphprod {

using VertexId = std::uint32_t;

/// Subset of the vertices {0, ..., universe-1} of a defining graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(VertexId v) const {
    return v < universe_ && ((bits_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  bool empty() const;
  std::size_t size() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  std::vector<VertexId> members() const;
  /// Least member; undefined on the empty set.
  VertexId front() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;
  /// Orders by sorted member list, then by universe.
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::size_t hash() const;

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace graphprod
