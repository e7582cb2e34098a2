#include "graphprod/disk_diagram.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// Blocks from a labelling of positions by class representative; ordered by
// least root so that output is canonical.
std::vector<DualGraph> blocks_from_classes(const PrismWord& boundary, UnionFind& uf) {
  std::vector<std::size_t> index(boundary.size(), npos);
  std::vector<DualGraph> blocks;
  for (std::size_t p = 0; p < boundary.size(); ++p) {
    const std::size_t root = uf.find(p);
    if (index[root] == npos) {
      index[root] = blocks.size();
      blocks.push_back(DualGraph{boundary[p].vertex, {}});
    }
    blocks[index[root]].roots.push_back(p);
  }
  return blocks;
}

// Arc label of every position relative to the roots of one block; positions
// after the last root share the arc before the first.
std::vector<std::size_t> arcs_of(const DualGraph& block, std::size_t n) {
  std::vector<std::size_t> arc(n, 0);
  std::size_t current = 0;
  std::size_t next = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (next < block.roots.size() && block.roots[next] == p) {
      ++next;
      current = next == block.roots.size() ? 0 : next;
      arc[p] = npos;
      continue;
    }
    arc[p] = current;
  }
  return arc;
}

std::size_t w_position(BoundaryRange w_range, std::size_t i, std::size_t n) {
  return w_range.at(w_range.length - 1 - i, n);
}

void check_range(const DiskDiagram& d, BoundaryRange range) {
  if (range.length > d.size() || (d.size() > 0 && range.start >= d.size()) ||
      (d.size() == 0 && (range.start != 0 || range.length != 0))) {
    throw InputError("boundary range out of bounds");
  }
}

CombResult comb(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range, bool left) {
  check_range(d, w_range);
  const std::size_t n = d.size();
  const std::size_t m = w_range.length;
  CombResult out{d, {}, std::vector<std::size_t>(m)};
  std::iota(out.permutation.begin(), out.permutation.end(), 0);
  CombingFunctions f = combing_functions(graph, d, w_range);
  std::vector<std::size_t>& key = left ? f.beginning : f.ending;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < m && key[i] < key[i + 1]) ++i;
    if (i + 1 >= m) break;
    if (key[i] == key[i + 1]) {
      throw InvalidDiagram("two letters of w share a partner in g");
    }
    // w_i and w_{i+1} sit at p and p-1 on the boundary.
    const std::size_t p = w_position(w_range, i + 1, n);
    try {
      out.diagram = commuting_operation(graph, out.diagram, p);
    } catch (const InputError&) {
      throw InvalidDiagram("out-of-order letters of w do not commute");
    }
    std::swap(f.beginning[i], f.beginning[i + 1]);
    std::swap(f.ending[i], f.ending[i + 1]);
    std::swap(out.permutation[i], out.permutation[i + 1]);
  }
  out.word = range_word(graph, out.diagram, w_range);
  return out;
}

}  // namespace

std::vector<std::size_t> DiskDiagram::block_of() const {
  std::vector<std::size_t> owner(size(), npos);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t p : blocks[b].roots) {
      if (p < owner.size()) owner[p] = b;
    }
  }
  return owner;
}

DiskDiagram build_diagram(const DefiningGraph& graph, const PrismWord& s) {
  Reduction reduction = reduce_to_geodesic(graph, s);
  if (!reduction.geodesic.empty()) throw InputError("not an identity word");
  UnionFind uf(s.size());
  std::vector<std::size_t> origin(s.size());
  std::iota(origin.begin(), origin.end(), 0);
  std::vector<Letter> letters = s.letters();
  for (const auto& move : reduction.trace) {
    const std::size_t i = move.position;
    if (move.kind == ReductionMove::Kind::Swap) {
      std::swap(origin[i], origin[i + 1]);
      std::swap(letters[i], letters[i + 1]);
      continue;
    }
    uf.unite(origin[i], origin[i + 1]);
    const GroupSpec& spec = graph.group(letters[i].vertex);
    letters[i].element = multiply(spec, letters[i].element, letters[i + 1].element);
    const auto at = static_cast<std::ptrdiff_t>(i);
    origin.erase(origin.begin() + at + 1);
    letters.erase(letters.begin() + at + 1);
    if (is_identity(spec, letters[i].element)) {
      origin.erase(origin.begin() + at);
      letters.erase(letters.begin() + at);
    }
  }
  DiskDiagram d;
  d.boundary = s;
  d.blocks = blocks_from_classes(s, uf);
  d.provenance = std::move(reduction.trace);
  return d;
}

std::vector<std::string> validate(const DefiningGraph& graph, const DiskDiagram& d,
                                  const std::optional<BoundaryRange>& geodesic_range) {
  std::vector<std::string> violations;
  const std::size_t n = d.size();
  try {
    validate(graph, d.boundary);
  } catch (const InputError& e) {
    violations.push_back(std::string("malformed boundary: ") + e.what());
    return violations;
  }
  std::vector<std::size_t> cover(n, 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const DualGraph& block = d.blocks[b];
    const std::string label = "block " + std::to_string(b);
    if (!std::is_sorted(block.roots.begin(), block.roots.end()) ||
        std::adjacent_find(block.roots.begin(), block.roots.end()) != block.roots.end()) {
      violations.push_back(label + ": roots not strictly increasing");
    }
    bool in_range = true;
    for (std::size_t p : block.roots) {
      if (p >= n) {
        violations.push_back(label + ": root " + std::to_string(p) + " outside the boundary");
        in_range = false;
      } else {
        ++cover[p];
      }
    }
    if (block.roots.size() < 2) violations.push_back(label + ": block size < 2");
    if (!in_range) continue;
    if (block.vertex >= graph.vertex_count()) {
      violations.push_back(label + ": unknown vertex");
      continue;
    }
    bool same_vertex = true;
    for (std::size_t p : block.roots) {
      if (d.boundary[p].vertex != block.vertex) same_vertex = false;
    }
    if (!same_vertex) {
      violations.push_back(label + ": letters from different vertex groups");
      continue;
    }
    const GroupSpec& spec = graph.group(block.vertex);
    GroupElement prod = identity(spec);
    for (std::size_t p : block.roots) prod = multiply(spec, prod, d.boundary[p].element);
    if (!is_identity(spec, prod)) violations.push_back(label + ": product is not the identity");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (cover[p] == 0) violations.push_back("position " + std::to_string(p) + " is in no block");
    if (cover[p] > 1) violations.push_back("position " + std::to_string(p) + " is in several blocks");
  }
  if (!violations.empty()) return violations;

  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    const std::vector<std::size_t> arc = arcs_of(d.blocks[a], n);
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
      std::set<std::size_t> seen;
      for (std::size_t p : d.blocks[b].roots) seen.insert(arc[p]);
      if (seen.size() > 1 && !graph.adjacent(d.blocks[a].vertex, d.blocks[b].vertex)) {
        violations.push_back("illegal crossing between blocks " + std::to_string(a) + " and " +
                             std::to_string(b));
      }
    }
  }
  if (!geodesic_form(graph, d.boundary).empty()) {
    violations.push_back("boundary is not an identity word");
  }
  if (geodesic_range) {
    if (geodesic_range->length > n || (n > 0 && geodesic_range->start >= n)) {
      violations.push_back("geodesic range out of bounds");
    } else {
      for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        std::size_t inside = 0;
        for (std::size_t p : d.blocks[b].roots) inside += geodesic_range->contains(p, n) ? 1 : 0;
        if (inside > 1) {
          violations.push_back("block " + std::to_string(b) + " roots more than once in the geodesic range");
        }
      }
    }
  }
  return violations;
}

DiskDiagram concatenate(const DefiningGraph& graph, const DiskDiagram& d1, BoundaryRange r1,
                        const DiskDiagram& d2, BoundaryRange r2) {
  check_range(d1, r1);
  check_range(d2, r2);
  const std::size_t n1 = d1.size();
  const std::size_t n2 = d2.size();
  const std::size_t k = r1.length;
  if (r2.length != k) throw InputError("shared ranges have different lengths");
  for (std::size_t t = 0; t < k; ++t) {
    const Letter& x = d1.boundary[r1.at(t, n1)];
    const Letter& y = d2.boundary[r2.at(k - 1 - t, n2)];
    if (inverse(graph, x) != y) throw InputError("shared ranges do not spell inverse words");
  }

  // Positions of the glued boundary, as (diagram, position) pairs.
  std::vector<std::pair<int, std::size_t>> origin;
  auto append_d2_rest = [&] {
    for (std::size_t t = k; t < n2; ++t) origin.emplace_back(2, r2.at(t, n2));
  };
  if (k == 0) {
    // Empty gluing: insert d2 at the start of r1 (wrapped at d1's end).
    for (std::size_t p = 0; p < r1.start; ++p) origin.emplace_back(1, p);
    append_d2_rest();
    for (std::size_t p = r1.start; p < n1; ++p) origin.emplace_back(1, p);
  } else if (r1.start + k <= n1) {
    for (std::size_t p = 0; p < r1.start; ++p) origin.emplace_back(1, p);
    append_d2_rest();
    for (std::size_t p = r1.start + k; p < n1; ++p) origin.emplace_back(1, p);
  } else {
    for (std::size_t p = (r1.start + k) % n1; p < r1.start; ++p) origin.emplace_back(1, p);
    append_d2_rest();
  }

  const std::vector<std::size_t> owner1 = d1.block_of();
  const std::vector<std::size_t> owner2 = d2.block_of();
  const std::size_t b1 = d1.blocks.size();
  UnionFind uf(b1 + d2.blocks.size());
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t p1 = owner1[r1.at(t, n1)];
    const std::size_t p2 = owner2[r2.at(k - 1 - t, n2)];
    if (p1 == npos || p2 == npos) throw InputError("shared position outside every block");
    uf.unite(p1, b1 + p2);
  }

  DiskDiagram out;
  std::vector<Letter> letters;
  letters.reserve(origin.size());
  std::vector<std::size_t> index(b1 + d2.blocks.size(), npos);
  for (std::size_t q = 0; q < origin.size(); ++q) {
    const auto [which, p] = origin[q];
    const Letter& l = which == 1 ? d1.boundary[p] : d2.boundary[p];
    letters.push_back(l);
    const std::size_t owner = which == 1 ? owner1[p] : owner2[p];
    if (owner == npos) throw InputError("boundary position outside every block");
    const std::size_t root = uf.find(which == 1 ? owner : b1 + owner);
    if (index[root] == npos) {
      index[root] = out.blocks.size();
      out.blocks.push_back(DualGraph{l.vertex, {}});
    }
    out.blocks[index[root]].roots.push_back(q);
  }
  out.boundary = PrismWord(std::move(letters));
  return out;
}

CombingFunctions combing_functions(const DefiningGraph& graph, const DiskDiagram& d,
                                   BoundaryRange w_range) {
  (void)graph;
  check_range(d, w_range);
  const std::size_t n = d.size();
  const std::size_t m = w_range.length;
  const std::vector<std::size_t> owner = d.block_of();
  CombingFunctions f{std::vector<std::size_t>(m), std::vector<std::size_t>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = owner[w_position(w_range, i, n)];
    if (b == npos) throw InvalidDiagram("w letter outside every block");
    std::size_t first = npos;
    std::size_t last = 0;
    for (std::size_t p : d.blocks[b].roots) {
      if (w_range.contains(p, n)) continue;
      const std::size_t j = (p + n - w_range.start - m) % n;
      first = std::min(first, j);
      last = std::max(last, j);
    }
    if (first == npos) {
      throw InvalidDiagram("block of w letter " + std::to_string(i) + " has no root in g");
    }
    f.beginning[i] = first;
    f.ending[i] = last;
  }
  return f;
}

PrismWord range_word(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range) {
  check_range(d, w_range);
  PrismWord w;
  for (std::size_t i = 0; i < w_range.length; ++i) {
    w.push_back(inverse(graph, d.boundary[w_position(w_range, i, d.size())]));
  }
  return w;
}

DiskDiagram commuting_operation(const DefiningGraph& graph, const DiskDiagram& d, std::size_t i) {
  const std::size_t n = d.size();
  if (n < 2 || i >= n) throw InputError("commuting position out of range");
  const std::size_t j = (i + 1) % n;
  if (!graph.adjacent(d.boundary[i].vertex, d.boundary[j].vertex)) {
    throw InputError("letters do not commute");
  }
  DiskDiagram out = d;
  std::swap(out.boundary[i], out.boundary[j]);
  for (auto& block : out.blocks) {
    for (auto& p : block.roots) {
      if (p == i) {
        p = j;
      } else if (p == j) {
        p = i;
      }
    }
    std::sort(block.roots.begin(), block.roots.end());
  }
  out.provenance.reset();
  return out;
}

bool is_left_combed(const CombingFunctions& f) {
  return std::adjacent_find(f.beginning.begin(), f.beginning.end(), std::greater_equal<>()) ==
         f.beginning.end();
}

bool is_right_combed(const CombingFunctions& f) {
  return std::adjacent_find(f.ending.begin(), f.ending.end(), std::greater_equal<>()) == f.ending.end();
}

CombResult left_comb(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range) {
  return comb(graph, d, w_range, true);
}

CombResult right_comb(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range) {
  return comb(graph, d, w_range, false);
}

PrismWord carrier_word(const DefiningGraph& graph, const DiskDiagram& d, std::size_t block,
                       std::size_t gap) {
  if (block >= d.blocks.size()) throw InputError("block index out of range");
  const DualGraph& dual = d.blocks[block];
  const std::size_t k = dual.roots.size();
  if (gap >= k) throw InputError("gap index out of range");
  const std::size_t n = d.size();
  const std::size_t from = dual.roots[gap];
  const std::size_t to = dual.roots[(gap + 1) % k];
  PrismWord arc;
  for (std::size_t p = (from + 1) % n; p != to; p = (p + 1) % n) arc.push_back(d.boundary[p]);
  PrismWord reduced = geodesic_form(graph, arc);
  VertexSet single = graph.empty_set();
  single.insert(dual.vertex);
  if (!support(graph, reduced).is_subset_of(link(graph, single))) {
    throw InvalidDiagram("invalid diagram: carrier word of block " + std::to_string(block) +
                         " leaves G_Link(" + graph.name(dual.vertex) + ")");
  }
  return reduced;
}

namespace {

// Generator indices (L, R) holding beginning(l) and beginning(r).
std::pair<long long, long long> control_segments(const DefiningGraph& graph, const DiskDiagram& d,
                                                 BoundaryRange w_range, std::size_t l, std::size_t r,
                                                 const std::vector<std::size_t>& segment, std::size_t m_h) {
  if (!(l < r && r < w_range.length)) throw InputError("need l < r < |w|");
  if (m_h == 0) throw InputError("m_H must be positive");
  const CombingFunctions f = combing_functions(graph, d, w_range);
  if (!is_left_combed(f)) throw InputError("diagram is not left-combed");
  if (f.beginning[l] >= segment.size() || f.beginning[r] >= segment.size()) {
    throw InputError("segmentation does not cover the g range");
  }
  return {static_cast<long long>(segment[f.beginning[l]]), static_cast<long long>(segment[f.beginning[r]])};
}

}  // namespace

bool reduction_control_check(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range,
                             std::size_t l, std::size_t r, const std::vector<std::size_t>& segment,
                             std::size_t m_h) {
  if (w_range.length < 2) return true;
  const auto [lo, hi] = control_segments(graph, d, w_range, l, r, segment, m_h);
  return (hi - lo) * static_cast<long long>(m_h) >= static_cast<long long>(r - l);
}

bool reduction_control_bound(const DefiningGraph& graph, const DiskDiagram& d, BoundaryRange w_range,
                             std::size_t l, std::size_t r, const std::vector<std::size_t>& segment,
                             std::size_t m_h) {
  if (w_range.length < 2) return true;
  const auto [lo, hi] = control_segments(graph, d, w_range, l, r, segment, m_h);
  return (hi - lo + 1) * static_cast<long long>(m_h) >= static_cast<long long>(r - l + 1);
}

}  // namespace graphprod
