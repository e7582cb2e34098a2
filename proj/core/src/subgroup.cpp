#include "graphprod/subgroup.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_map>

#include "graphprod/errors.hpp"
#include "graphprod/word_calculus.hpp"

namespace graphprod {

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<R> out(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct SampleObservation {
  bool counted = false;
  bool has_block_in_g = false;
  std::size_t d_spread = 0;
  std::size_t k_window = 0;
  bool has_c = false;
  std::size_t c_spread = 0;
  std::size_t concatenations = 0;
  std::size_t redcon_checks = 0;
  std::size_t redcon_failures = 0;
  std::size_t redcon_bound_failures = 0;
};

SampleObservation observe(const DefiningGraph& graph, const SubgroupSpec& h, const SampledElement& s) {
  SampleObservation obs;
  if (s.word.empty()) return obs;
  obs.counted = true;
  const SubgroupDiagram sd = subgroup_diagram(graph, h, s.word);
  const DiskDiagram& d = sd.diagram;
  const std::size_t glen = sd.g.size();

  // Spread of generator indices per block, and generators touched by w^-1.
  std::vector<bool> touched(s.word.size(), false);
  for (const auto& block : d.blocks) {
    std::size_t lo = s.word.size();
    std::size_t hi = 0;
    bool in_w = false;
    for (std::size_t p : block.roots) {
      if (p < glen) {
        lo = std::min(lo, sd.segment[p]);
        hi = std::max(hi, sd.segment[p]);
      } else {
        in_w = true;
      }
    }
    if (lo > hi) continue;
    obs.has_block_in_g = true;
    obs.d_spread = std::max(obs.d_spread, hi - lo);
    if (in_w) {
      for (std::size_t p : block.roots) {
        if (p < glen) touched[sd.segment[p]] = true;
      }
    }
  }

  // Maximal vanishing windows h_i..h_j.
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (std::size_t i = 0; i < touched.size();) {
    if (touched[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < touched.size() && !touched[j + 1]) ++j;
    windows.emplace_back(i, j);
    obs.k_window = std::max(obs.k_window, j - i + 1);
    i = j + 1;
  }

  // Replace each vanishing window by its geodesic u: a diagram for
  // h_<i u h_>j w^-1, glued from d and a diagram for u b^-1.
  for (const auto& [i, j] : windows) {
    const auto gs = static_cast<std::size_t>(
        std::find(sd.segment.begin(), sd.segment.end(), i) - sd.segment.begin());
    std::size_t ge = gs;
    while (ge < glen && sd.segment[ge] <= j) ++ge;
    const PrismWord b = sd.g.subword(gs, ge - gs);
    const PrismWord u = geodesic_form(graph, b);
    const DiskDiagram d2 = build_diagram(graph, concat(u, inverse(graph, b)));
    const DiskDiagram glued =
        concatenate(graph, d, BoundaryRange{gs, b.size()}, d2, BoundaryRange{u.size(), b.size()});
    ++obs.concatenations;
    const std::size_t u_end = gs + u.size();
    const std::size_t after_end = u_end + (glen - ge);
    for (const auto& block : glued.blocks) {
      bool before = false, in_u = false, after = false;
      for (std::size_t p : block.roots) {
        before |= p < gs;
        in_u |= p >= gs && p < u_end;
        after |= p >= u_end && p < after_end;
      }
      if (before && in_u && after) {
        obs.has_c = true;
        obs.c_spread = std::max(obs.c_spread, j - i);
      }
    }
  }

  // Reduction control on the left-combed diagram; g is untouched by combing.
  if (sd.w.size() >= 2) {
    const CombResult combed = left_comb(graph, d, sd.w_range);
    const CombingFunctions f = combing_functions(graph, combed.diagram, sd.w_range);
    const auto m_h = static_cast<long long>(h.m_h);
    for (std::size_t l = 0; l < f.beginning.size(); ++l) {
      for (std::size_t r = l + 1; r < f.beginning.size(); ++r) {
        const auto lo = static_cast<long long>(sd.segment[f.beginning[l]]);
        const auto hi = static_cast<long long>(sd.segment[f.beginning[r]]);
        ++obs.redcon_checks;
        if ((hi - lo) * m_h < static_cast<long long>(r - l)) ++obs.redcon_failures;
        if ((hi - lo + 1) * m_h < static_cast<long long>(r - l + 1)) ++obs.redcon_bound_failures;
      }
    }
  }
  return obs;
}

ObservedConstants merge_observations(const std::vector<SampleObservation>& all) {
  ObservedConstants out;
  bool any_d = false;
  bool any_c = false;
  for (const auto& o : all) {
    if (!o.counted) continue;
    ++out.diagrams;
    if (o.has_block_in_g) {
      any_d = true;
      out.d_spread = std::max(out.d_spread, o.d_spread);
    }
    out.k_window = std::max(out.k_window, o.k_window);
    if (o.has_c) {
      any_c = true;
      out.c_spread = std::max(out.c_spread, o.c_spread);
    }
    out.concatenations += o.concatenations;
    out.redcon_checks += o.redcon_checks;
    out.redcon_failures += o.redcon_failures;
    out.redcon_bound_failures += o.redcon_bound_failures;
  }
  out.d = any_d ? out.d_spread + 1 : 0;
  out.k = out.k_window;
  out.c = any_c ? out.c_spread + 1 : 0;
  return out;
}

JoinBustingProfile join_busting_of(const DefiningGraph& graph, const SampleSet& samples, unsigned threads) {
  const auto found = parallel_map<JoinSubword>(samples.elements.size(), threads, [&](std::size_t i) {
    return max_join_subword(graph, samples.elements[i].element);
  });
  JoinBustingProfile out;
  out.samples = samples.elements.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].length > out.n) {
      out.n = found[i].length;
      out.argmax = samples.elements[i].element;
    }
  }
  return out;
}

std::vector<DistortionRow> distortion_of(const DefiningGraph& graph, const SubgroupSpec& h,
                                         const SampleSet& samples, const ObservedConstants& c,
                                         std::size_t join_busting, unsigned threads) {
  StarLength star(graph);
  return parallel_map<DistortionRow>(samples.elements.size(), threads, [&](std::size_t i) {
    const SampledElement& s = samples.elements[i];
    DistortionRow row;
    row.word_length = s.word.size();
    row.prism = s.element.size();
    row.star = star.of_canonical(s.element);
    row.prism_bound = row.word_length <= (c.k + c.d) * row.prism + c.k;
    row.star_bound = row.prism <= join_busting * row.star;
    row.consistent = row.star <= row.prism && row.prism <= h.m_h * row.word_length;
    return row;
  });
}

std::vector<Certificate> certificates_of(const DefiningGraph& graph, const SampleSet& samples,
                                         unsigned threads) {
  const auto found = parallel_map<std::optional<JoinWitness>>(
      samples.elements.size(), threads, [&](std::size_t i) -> std::optional<JoinWitness> {
        if (samples.elements[i].element.empty()) return std::nullopt;
        return is_conjugate_into_join(graph, samples.elements[i].element);
      });
  std::vector<Certificate> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) continue;
    out.push_back({samples.elements[i].word, samples.elements[i].element, found[i]->join,
                   found[i]->conjugator});
  }
  return out;
}

}  // namespace

SubgroupSpec SubgroupSpec::make(const DefiningGraph& graph, std::vector<PrismWord> generators,
                                std::string name) {
  SubgroupSpec h;
  h.name = std::move(name);
  for (auto& g : generators) {
    PrismWord reduced = geodesic_form(graph, g);
    if (reduced.empty()) throw InputError("subgroup '" + h.name + "' has a trivial generator");
    h.m_h = std::max(h.m_h, reduced.size());
    h.generators.push_back(std::move(reduced));
  }
  return h;
}

PrismWord SubgroupSpec::letter(const DefiningGraph& graph, std::size_t t) const {
  const PrismWord& g = generators.at(t / 2);
  return t % 2 == 0 ? g : canonical_order(graph, inverse(graph, g));
}

SampleSet sample_subgroup(const DefiningGraph& graph, const SubgroupSpec& h, std::size_t horizon,
                          const SamplingOptions& options) {
  SampleSet out;
  out.elements.push_back({});
  const std::size_t k = h.alphabet_size();
  if (k == 0) {
    out.exhaustive_length = horizon;
    return out;
  }
  std::vector<PrismWord> letters;
  for (std::size_t t = 0; t < k; ++t) letters.push_back(h.letter(graph, t));

  std::unordered_map<PrismWord, std::size_t, PrismWordHash> first_seen{{PrismWord{}, 0}};
  std::vector<std::size_t> frontier{0};
  bool exhaustive = true;
  for (std::size_t len = 1; len <= horizon; ++len) {
    if (exhaustive) {
      std::vector<SampledElement> level;
      bool overflow = false;
      for (std::size_t idx : frontier) {
        const SampledElement& s = out.elements[idx];
        for (std::size_t t = 0; t < k && !overflow; ++t) {
          if (!s.word.empty() && t == (s.word.back() ^ 1U)) continue;
          PrismWord element = product(graph, s.element, letters[t]);
          auto [it, inserted] = first_seen.try_emplace(element, len);
          if (it->second != len) continue;
          std::vector<std::size_t> word = s.word;
          word.push_back(t);
          level.push_back({std::move(word), std::move(element)});
          overflow = out.elements.size() + level.size() > options.budget;
        }
        if (overflow) break;
      }
      if (!overflow) {
        frontier.clear();
        for (auto& s : level) {
          frontier.push_back(out.elements.size());
          out.elements.push_back(std::move(s));
        }
        out.exhaustive_length = len;
        continue;
      }
      exhaustive = false;
      out.geodesic_filter = "free-reduction";
    }
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(len)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> first(0, k - 1);
    std::uniform_int_distribution<std::size_t> next(0, k - 2);
    for (std::size_t r = 0; r < options.random_per_length; ++r) {
      std::vector<std::size_t> word{first(rng)};
      while (word.size() < len) {
        // Uniform among the k - 1 letters that do not cancel the last one.
        std::size_t t = k == 1 ? word.back() : next(rng);
        if (k > 1 && t >= (word.back() ^ 1U)) ++t;
        word.push_back(t);
      }
      PrismWord g;
      for (std::size_t t : word) g = concat(g, letters[t]);
      out.elements.push_back({std::move(word), geodesic_form(graph, g)});
    }
  }
  return out;
}

JoinSubword max_join_subword(const DefiningGraph& graph, const PrismWord& w) {
  if (auto violation = is_geodesic(graph, w)) {
    throw InputError("word is not geodesic: letters " + std::to_string(violation->first) + " and " +
                     std::to_string(violation->second) + " combine");
  }
  JoinSubword best;
  std::vector<std::size_t> count(graph.vertex_count(), 0);
  VertexSet window = graph.empty_set();
  std::size_t left = 0;
  for (std::size_t right = 0; right < w.size(); ++right) {
    if (count[w[right].vertex]++ == 0) window.insert(w[right].vertex);
    std::optional<VertexSet> join = is_contained_in_join(graph, window);
    while (!join) {
      if (--count[w[left].vertex] == 0) window.erase(w[left].vertex);
      ++left;
      join = is_contained_in_join(graph, window);
    }
    if (right + 1 - left > best.length) {
      best.length = right + 1 - left;
      best.first = left;
      best.witness = std::move(join);
    }
  }
  return best;
}

JoinBustingProfile join_busting_profile(const DefiningGraph& graph, const SubgroupSpec& h,
                                        std::size_t horizon, const SamplingOptions& options) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  return join_busting_of(graph, sample_subgroup(graph, h, horizon, options), options.threads);
}

SubgroupDiagram subgroup_diagram(const DefiningGraph& graph, const SubgroupSpec& h,
                                 const std::vector<std::size_t>& word) {
  SubgroupDiagram sd;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const PrismWord piece = h.letter(graph, word[i]);
    sd.g = concat(sd.g, piece);
    sd.segment.insert(sd.segment.end(), piece.size(), i);
  }
  sd.w = geodesic_form(graph, sd.g);
  sd.diagram = build_diagram(graph, concat(sd.g, inverse(graph, sd.w)));
  sd.w_range = sd.w.empty() ? BoundaryRange{0, 0} : BoundaryRange{sd.g.size(), sd.w.size()};
  return sd;
}

ObservedConstants measure_constants(const DefiningGraph& graph, const SubgroupSpec& h,
                                    std::size_t horizon, const SamplingOptions& options) {
  if (horizon < 2) throw InputError("horizon must be at least 2");
  const SampleSet samples = sample_subgroup(graph, h, horizon, options);
  return merge_observations(parallel_map<SampleObservation>(
      samples.elements.size(), options.threads,
      [&](std::size_t i) { return observe(graph, h, samples.elements[i]); }));
}

std::vector<DistortionRow> distortion_table(const DefiningGraph& graph, const SubgroupSpec& h,
                                            std::size_t horizon, const ObservedConstants& constants,
                                            std::size_t join_busting, const SamplingOptions& options) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  return distortion_of(graph, h, sample_subgroup(graph, h, horizon, options), constants, join_busting,
                       options.threads);
}

std::optional<std::size_t> homogeneity_index(const DefiningGraph& graph, const PrismWord& w,
                                             const VertexSet& lambda) {
  graph.check(lambda);
  if (!support(graph, w).is_subset_of(lambda)) throw InputError("word has letters outside the given set");
  if (is_geodesic(graph, w)) throw InputError("word is not geodesic");
  std::size_t m = 0;
  for (VertexId v : lambda.members()) {
    std::size_t widest = 0;
    std::size_t previous = 0;  // one past the last occurrence
    bool seen = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].vertex != v) continue;
      widest = std::max(widest, i + 1 - previous);
      previous = i + 1;
      seen = true;
    }
    if (!seen) return std::nullopt;
    widest = std::max(widest, w.size() + 1 - previous);
    m = std::max(m, widest);
  }
  return std::min(m, w.size());
}

std::vector<Certificate> obstruction_certificates(const DefiningGraph& graph, const SubgroupSpec& h,
                                                  std::size_t horizon, const SamplingOptions& options) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  return certificates_of(graph, sample_subgroup(graph, h, horizon, options), options.threads);
}

bool certificate_holds(const DefiningGraph& graph, const Certificate& c) {
  if (c.join.empty() || !is_join(graph, c.join)) return false;
  const PrismWord conjugated =
      concat(concat(inverse(graph, c.conjugator), c.element), c.conjugator);
  return !geodesic_form(graph, conjugated).empty() && in_parabolic(graph, conjugated, c.join);
}

HypothesisFlags hypothesis_flags(const DefiningGraph& graph) {
  HypothesisFlags flags;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.group(v).is_finite()) flags.finite_vertex_groups = true;
  }
  flags.isolated_vertices = has_isolated_vertices(graph);
  return flags;
}

AnalysisReport analyze(const DefiningGraph& graph, const SubgroupSpec& h, std::size_t horizon,
                       const SamplingOptions& options) {
  if (horizon < 2) throw InputError("horizon must be at least 2");
  const SampleSet samples = sample_subgroup(graph, h, horizon, options);
  AnalysisReport report;
  report.subgroup = h.name;
  report.horizon = horizon;
  report.sampling = options;
  report.samples = samples.elements.size();
  report.exhaustive_length = samples.exhaustive_length;
  report.geodesic_filter = samples.geodesic_filter;
  report.join_busting = join_busting_of(graph, samples, options.threads);
  report.constants = merge_observations(parallel_map<SampleObservation>(
      samples.elements.size(), options.threads,
      [&](std::size_t i) { return observe(graph, h, samples.elements[i]); }));
  report.distortion =
      distortion_of(graph, h, samples, report.constants, report.join_busting.n, options.threads);
  report.certificates = certificates_of(graph, samples, options.threads);
  report.hypotheses = hypothesis_flags(graph);
  return report;
}

}  // namespace graphprod
