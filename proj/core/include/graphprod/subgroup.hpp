#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphprod/contact.hpp"
#include "graphprod/defining_graph.hpp"
#include "graphprod/disk_diagram.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

/// Finitely generated subgroup. Generators are stored as canonical geodesics.
struct SubgroupSpec {
  std::string name;
  std::vector<PrismWord> generators;
  /// Largest prism length among the generators.
  std::size_t m_h = 0;

  /// Reduces every generator; throws InputError on a trivial one.
  static SubgroupSpec make(const DefiningGraph& graph, std::vector<PrismWord> generators,
                           std::string name = "H");

  /// Letter t of the symmetric alphabet: generator t/2, inverted when t is odd.
  std::size_t alphabet_size() const { return 2 * generators.size(); }
  PrismWord letter(const DefiningGraph& graph, std::size_t t) const;
};

struct SamplingOptions {
  /// Exhaustive enumeration stops before the level that would exceed this.
  std::size_t budget = 100'000;
  /// Random words drawn per length beyond the exhaustive levels.
  std::size_t random_per_length = 32;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct SampledElement {
  /// S_H letters (see SubgroupSpec::letter).
  std::vector<std::size_t> word;
  /// Canonical geodesic of the element.
  PrismWord element;
};

struct SampleSet {
  std::vector<SampledElement> elements;
  /// Every length up to this was enumerated exhaustively.
  std::size_t exhaustive_length = 0;
  /// "exact" when only S_H-geodesic words were kept, "free-reduction" when
  /// random freely reduced words were added.
  std::string geodesic_filter = "exact";
};

/// Deterministic for fixed options; the set for horizon L contains the set for
/// every smaller horizon.
SampleSet sample_subgroup(const DefiningGraph& graph, const SubgroupSpec& h, std::size_t horizon,
                          const SamplingOptions& options = {});

struct JoinSubword {
  std::size_t length = 0;
  std::size_t first = 0;
  std::optional<VertexSet> witness;
};

/// Longest window of a geodesic whose support lies in a join. Throws
/// InputError on non-geodesic input.
JoinSubword max_join_subword(const DefiningGraph& graph, const PrismWord& w);

struct JoinBustingProfile {
  std::size_t n = 0;
  PrismWord argmax;
  std::size_t samples = 0;
};

JoinBustingProfile join_busting_profile(const DefiningGraph& graph, const SubgroupSpec& h,
                                        std::size_t horizon, const SamplingOptions& options = {});

/// Observed constants over the canonical diagrams for h w^-1. d, k and c are
/// the least integers satisfying the strict inequalities over what was seen
/// (0 when nothing was seen); the raw maxima are kept alongside.
struct ObservedConstants {
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t c = 0;
  std::size_t d_spread = 0;
  std::size_t k_window = 0;
  std::size_t c_spread = 0;
  std::size_t diagrams = 0;
  std::size_t concatenations = 0;
  /// Pairs (l, r) checked after left combing; failures of the stated
  /// inequality (R - L) m_H >= r - l and of the counting bound
  /// (R - L + 1) m_H >= r - l + 1.
  std::size_t redcon_checks = 0;
  std::size_t redcon_failures = 0;
  std::size_t redcon_bound_failures = 0;
};

ObservedConstants measure_constants(const DefiningGraph& graph, const SubgroupSpec& h,
                                    std::size_t horizon, const SamplingOptions& options = {});

/// Everything measure_constants looks at in one diagram for h w^-1.
struct SubgroupDiagram {
  DiskDiagram diagram;
  BoundaryRange w_range;
  /// Generator index of each letter of g.
  std::vector<std::size_t> segment;
  PrismWord g;
  PrismWord w;
};

SubgroupDiagram subgroup_diagram(const DefiningGraph& graph, const SubgroupSpec& h,
                                 const std::vector<std::size_t>& word);

struct DistortionRow {
  std::size_t word_length = 0;
  std::size_t prism = 0;
  std::size_t star = 0;
  /// word_length <= (K + D) prism + K
  bool prism_bound = true;
  /// prism <= N star
  bool star_bound = true;
  /// star <= prism <= m_H word_length
  bool consistent = true;
};

std::vector<DistortionRow> distortion_table(const DefiningGraph& graph, const SubgroupSpec& h,
                                            std::size_t horizon, const ObservedConstants& constants,
                                            std::size_t join_busting, const SamplingOptions& options = {});

/// Least M such that every window of M letters meets every vertex of lambda;
/// nothing when no M <= |w| works. Throws InputError when w leaves lambda or is
/// not geodesic.
std::optional<std::size_t> homogeneity_index(const DefiningGraph& graph, const PrismWord& w,
                                             const VertexSet& lambda);

struct Certificate {
  std::vector<std::size_t> word;
  PrismWord element;
  VertexSet join;
  PrismWord conjugator;
};

std::vector<Certificate> obstruction_certificates(const DefiningGraph& graph, const SubgroupSpec& h,
                                                  std::size_t horizon, const SamplingOptions& options = {});

/// Rechecks conjugator^-1 element conjugator in G_join and that join is one.
bool certificate_holds(const DefiningGraph& graph, const Certificate& c);

struct HypothesisFlags {
  bool finite_vertex_groups = false;
  bool isolated_vertices = false;
};

HypothesisFlags hypothesis_flags(const DefiningGraph& graph);

struct AnalysisReport {
  std::string subgroup;
  std::size_t horizon = 0;
  SamplingOptions sampling;
  std::size_t samples = 0;
  std::size_t exhaustive_length = 0;
  std::string geodesic_filter;
  JoinBustingProfile join_busting;
  ObservedConstants constants;
  std::vector<DistortionRow> distortion;
  std::vector<Certificate> certificates;
  HypothesisFlags hypotheses;
};

AnalysisReport analyze(const DefiningGraph& graph, const SubgroupSpec& h, std::size_t horizon,
                       const SamplingOptions& options = {});

}  // namespace graphprod
