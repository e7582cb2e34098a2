#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"
#include "graphprod/word_calculus.hpp"

namespace graphprod {

/// Block of boundary positions sharing one vertex group; roots are sorted.
struct DualGraph {
  VertexId vertex = 0;
  std::vector<std::size_t> roots;

  bool operator==(const DualGraph&) const = default;
};

/// Combinatorial disk diagram: a cyclic boundary word and a partition of its
/// positions into dual graphs.
struct DiskDiagram {
  PrismWord boundary;
  std::vector<DualGraph> blocks;
  std::optional<ReductionTrace> provenance;

  std::size_t size() const { return boundary.size(); }
  /// Block index per boundary position (npos where uncovered).
  std::vector<std::size_t> block_of() const;
};

/// Cyclic interval of boundary positions [start, start + length) mod N.
struct BoundaryRange {
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t at(std::size_t offset, std::size_t n) const { return (start + offset) % n; }
  bool contains(std::size_t position, std::size_t n) const {
    return n > 0 && (position + n - start) % n < length;
  }
};

/// Blocks come from the canonical reduction of s to the empty word: every merge
/// unites the ancestry classes of the two letters. Throws InputError("not an
/// identity word") when s is not trivial.
DiskDiagram build_diagram(const DefiningGraph& graph, const PrismWord& s);

/// Every broken diagram invariant, as text. When `geodesic_range` is given,
/// each block may root at most once inside it.
std::vector<std::string> validate(const DefiningGraph& graph, const DiskDiagram& d,
                                  const std::optional<BoundaryRange>& geodesic_range = std::nullopt);

/// Glues d1 and d2 along r1 (spelling b in d1) and r2 (spelling b^-1 in d2).
/// The boundary keeps d1's letters before r1, then d2's letters after r2 read
/// cyclically, then d1's letters after r1. Throws InputError when the ranges
/// do not spell inverse words.
DiskDiagram concatenate(const DefiningGraph& graph, const DiskDiagram& d1, BoundaryRange r1,
                        const DiskDiagram& d2, BoundaryRange r2);

/// For a boundary g.w^-1 with w^-1 on `w_range`: w_i sits at position
/// start + (m-1-i), g_j at start + m + j (mod N).
struct CombingFunctions {
  std::vector<std::size_t> beginning;
  std::vector<std::size_t> ending;

  bool operator==(const CombingFunctions&) const = default;
};

/// Throws InvalidDiagram when a block of some w_i has no root among the g letters.
CombingFunctions combing_functions(const DefiningGraph& graph, const DiskDiagram& d,
                                   BoundaryRange w_range);

/// w read off the diagram: the inverse of the letters on `w_range`.
PrismWord range_word(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range);

/// Swaps the letters at positions i and i+1 (mod N); blocks follow their letters.
/// Throws InputError("letters do not commute") for nonadjacent vertices.
DiskDiagram commuting_operation(const DefiningGraph& graph, const DiskDiagram& d, std::size_t i);

struct CombResult {
  DiskDiagram diagram;
  /// The reordered w.
  PrismWord word;
  /// word[k] is the original w[permutation[k]].
  std::vector<std::size_t> permutation;
};

/// Bubble sort on w: repeatedly swaps the least adjacent pair whose beginnings
/// (resp. endings) are out of order, until they increase strictly.
CombResult left_comb(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range);
CombResult right_comb(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range);

bool is_left_combed(const CombingFunctions& f);
bool is_right_combed(const CombingFunctions& f);

/// Geodesic of the boundary arc strictly between roots[gap] and the next root
/// of the block, cyclically. Throws InvalidDiagram when it leaves G_Link(v).
PrismWord carrier_word(const DefiningGraph& graph, const DiskDiagram& d, std::size_t block,
                       std::size_t gap);

/// With segment[j] the generator index of g_j: whether (R - L) * m_H >= r - l,
/// where L and R are the segments containing beginning(l) and beginning(r).
/// Indices are 0-based with l < r < |w|. Throws InputError when d is not
/// left-combed with respect to w_range.
bool reduction_control_check(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range,
                             std::size_t l, std::size_t r, const std::vector<std::size_t>& segment,
                             std::size_t m_h);

/// The counting bound behind the previous check: the r - l + 1 distinct
/// beginnings fit into generators L..R, so (R - L + 1) * m_H >= r - l + 1.
/// Same preconditions. Unlike the stated form it cannot fail on a valid
/// combed diagram; the stated form fails e.g. when l and r begin in one
/// generator of length >= 2.
bool reduction_control_bound(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range,
                             std::size_t l, std::size_t r, const std::vector<std::size_t>& segment,
                             std::size_t m_h);

}  // namespace graphprod
