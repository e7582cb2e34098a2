#include "graphprod/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graphprod/errors.hpp"

namespace graphprod {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (VertexId v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) {
    throw InputError("vertex index " + std::to_string(v) + " outside graph of " +
                     std::to_string(universe_) + " vertices");
  }
  bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(VertexId v) {
  if (v < universe_) bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

bool VertexSet::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & other.bits_[i]) != 0) return true;
  }
  return false;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w != 0) {
      out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexId VertexSet::front() const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) return static_cast<VertexId>(i * 64 + std::countr_zero(bits_[i]));
  }
  return static_cast<VertexId>(universe_);
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  auto a = members();
  auto b = other.members();
  if (auto c = a <=> b; c != 0) return c;
  return universe_ <=> other.universe_;
}

std::size_t VertexSet::hash() const {
  std::size_t h = universe_;
  for (std::uint64_t w : bits_) h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(w);
  return h;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("vertex sets over different graphs (" + std::to_string(universe_) +
                     " vs " + std::to_string(other.universe_) + " vertices)");
  }
}

}  // namespace graphprod
