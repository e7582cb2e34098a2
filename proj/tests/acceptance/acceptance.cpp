// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphprod/contact.hpp"
#include "graphprod/defining_graph.hpp"
#include "graphprod/disk_diagram.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/subgroup.hpp"
#include "graphprod/word_calculus.hpp"
#include "oracle.hpp"

using namespace graphprod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

DefiningGraph p4(GroupSpec g) { return path_graph({"a", "b", "c", "d"}, g); }
DefiningGraph c5(GroupSpec g) { return cycle_graph({"1", "2", "3", "4", "5"}, g); }

std::vector<Letter> multiset(const PrismWord& w) {
  auto v = w.letters();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<oracle::IdentityWord> identity_corpus(std::size_t count) {
  std::mt19937_64 rng(2024);
  const DefiningGraph graphs[] = {p4(GroupSpec::infinite_cyclic()), c5(GroupSpec::infinite_cyclic())};
  std::vector<oracle::IdentityWord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::random_identity_word(graphs[i % 2], rng, 14));
  return out;
}

const DefiningGraph& corpus_graph(std::size_t i) {
  static const DefiningGraph graphs[] = {p4(GroupSpec::infinite_cyclic()), c5(GroupSpec::infinite_cyclic())};
  return graphs[i % 2];
}

BoundaryRange w_range(const oracle::IdentityWord& id) {
  return id.w.empty() ? BoundaryRange{0, 0} : BoundaryRange{id.g.size(), id.w.size()};
}

Outcome prism_oracle() {
  const auto graph = p4(GroupSpec::finite_cyclic(5));
  const auto ball = oracle::prism_ball(graph, 4);
  std::size_t mismatches = 0;
  for (const auto& [k, dist] : ball) {
    if (prism_length(graph, oracle::word_of(k)) != dist) ++mismatches;
  }
  return {mismatches == 0, std::to_string(ball.size()) + " elements, " + std::to_string(mismatches) + " mismatches"};
}

Outcome normal_form_uniqueness() {
  std::mt19937_64 rng(7);
  const DefiningGraph graphs[] = {p4(GroupSpec::infinite_cyclic()), c5(GroupSpec::infinite_cyclic())};
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& graph = graphs[i % 2];
    const PrismWord w = oracle::random_word(graph, rng, len(rng));
    const auto reps = geodesic_representatives(graph, w);
    const auto expected = multiset(oracle::reduce(graph, w));
    for (const auto& r : reps) {
      if (multiset(r) != expected || !oracle::equal(graph, r, w)) {
        ++bad;
        break;
      }
    }
  }
  return {bad == 0, "1000 words, " + std::to_string(bad) + " with differing multisets"};
}

Outcome diagram_validity(const std::vector<oracle::IdentityWord>& corpus) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& graph = corpus_graph(i);
    const DiskDiagram d = build_diagram(graph, corpus[i].s);
    if (!validate(graph, d, w_range(corpus[i])).empty()) ++bad;
  }
  return {bad == 0, std::to_string(corpus.size()) + " diagrams, " + std::to_string(bad) + " invalid"};
}

Outcome combing(const std::vector<oracle::IdentityWord>& corpus) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& graph = corpus_graph(i);
    const BoundaryRange range = w_range(corpus[i]);
    const DiskDiagram d = build_diagram(graph, corpus[i].s);
    const CombingFunctions before = combing_functions(graph, d, range);
    const CombResult r = left_comb(graph, d, range);
    const CombingFunctions after = combing_functions(graph, r.diagram, range);
    bool ok = is_left_combed(after);
    for (std::size_t k = 0; ok && k < after.beginning.size(); ++k) {
      ok = after.beginning[k] == before.beginning[r.permutation[k]] &&
           after.ending[k] == before.ending[r.permutation[k]];
    }
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(corpus.size()) + " diagrams, " + std::to_string(bad) + " failures"};
}

Outcome star_oracle() {
  const auto graph = p4(GroupSpec::finite_cyclic(3));
  const auto ball = oracle::prism_ball(graph, 4);
  const oracle::StarOracle star(graph, 4);
  StarLength ours(graph);
  std::size_t mismatches = 0;
  for (const auto& [k, dist] : ball) {
    const PrismWord w = oracle::word_of(k);
    if (ours(w) != star.distance(w)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(ball.size()) + " elements, " + std::to_string(mismatches) + " mismatches"};
}

Outcome contact_sandwich() {
  const auto graph = p4(GroupSpec::infinite_cyclic());
  StarLength star(graph);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<VertexId> vertex(0, 3);
  std::size_t bad = 0;
  std::size_t searched = 0;
  for (int i = 0; i < 200; ++i) {
    const VertexId v1 = vertex(rng);
    const VertexId v2 = vertex(rng);
    const Hyperplane h1 = make_hyperplane(graph, v1, PrismWord{});
    const Hyperplane h2 = make_hyperplane(graph, v2, oracle::random_word(graph, rng, len(rng)));
    const ContactBounds b = contact_distance_bounds(star, h1, h2);
    const std::size_t s = star(h2.carrier_rep);
    bool ok = b.lower <= b.upper;
    if (h1 == h2) {
      ok = ok && b.lower == 0 && b.upper == 0;
    } else {
      ok = ok && b.lower == (s > 2 ? s - 2 : 0) && b.upper == 2 * s + 2;
    }
    if (const auto found = contact_distance_search(graph, h1, h2)) {
      ++searched;
      ok = ok && *found >= b.lower && *found <= b.upper;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, "200 pairs, " + std::to_string(searched) + " searched, " + std::to_string(bad) + " failures"};
}

// Random element of G_J for a join J, and a random conjugate of it.
Outcome join_ellipticity() {
  std::mt19937_64 rng(13);
  std::size_t bad = 0;
  std::size_t tried = 0;
  const DefiningGraph graphs[] = {p4(GroupSpec::infinite_cyclic()), c5(GroupSpec::infinite_cyclic())};
  for (int i = 0; tried < 100; ++i) {
    const auto& graph = graphs[i % 2];
    // Joins of P4 and C5 are stars of vertices and their subsets.
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(graph.vertex_count() - 1));
    const VertexSet join = graph.vertex_star(vertex(rng));
    if (!is_join(graph, join)) continue;
    PrismWord g;
    for (int k = 0; k < 6; ++k) {
      const Letter l = oracle::random_letter(graph, rng);
      if (join.contains(l.vertex)) g = concat(g, PrismWord{{l}});
    }
    g = geodesic_form(graph, g);
    if (g.empty()) continue;
    ++tried;
    const PrismWord conj = oracle::random_word(graph, rng, 5);
    const PrismWord h = concat(concat(conj, g), inverse(graph, conj));
    const auto witness = is_conjugate_into_join(graph, h);
    bool ok = witness.has_value();
    StarLength star(graph);
    for (long n = 1; ok && n <= 20; ++n) {
      const PrismWord hn = power(graph, h, n);
      ok = star(concat(concat(inverse(graph, witness->conjugator), hn), witness->conjugator)) <= 2 &&
           star(concat(concat(inverse(graph, conj), hn), conj)) <= 2;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, "100 elements, " + std::to_string(bad) + " failures"};
}

Outcome join_busting() {
  const auto graph = p4(GroupSpec::infinite_cyclic());
  const auto h1 = SubgroupSpec::make(graph, {parse_word(graph, "a:1.d:1")}, "H1");
  const auto h2 = SubgroupSpec::make(graph, {parse_word(graph, "a:1.b:1")}, "H2");
  bool h1_ok = true;
  for (std::size_t horizon = 1; horizon <= 20; ++horizon) {
    h1_ok = h1_ok && join_busting_profile(graph, h1, horizon).n == 1;
  }
  h1_ok = h1_ok && obstruction_certificates(graph, h1, 20).empty();
  std::ostringstream series;
  std::vector<std::size_t> n2;
  for (std::size_t horizon : {5U, 10U, 15U, 20U}) {
    n2.push_back(join_busting_profile(graph, h2, horizon).n);
    series << (series.tellp() ? "," : "") << n2.back();
  }
  // Linear growth: the observed number increases with the horizon.
  bool grows = true;
  for (std::size_t i = 1; i < n2.size(); ++i) grows = grows && n2[i] > n2[i - 1];
  const VertexSet ab = graph.set_of({"a", "b"});
  bool certified = false;
  for (const auto& c : obstruction_certificates(graph, h2, 20)) {
    certified = certified || (c.join == ab && certificate_holds(graph, c));
  }
  return {h1_ok && grows && certified, std::string("H1 N=1: ") + (h1_ok ? "yes" : "no") + ", H2 N at L=5,10,15,20: " +
                                           series.str() + ", H2 certificate on {a,b}: " + (certified ? "yes" : "no")};
}

Outcome redcon() {
  const auto graph = p4(GroupSpec::infinite_cyclic());
  const std::vector<SubgroupSpec> subgroups = {
      SubgroupSpec::make(graph, {parse_word(graph, "a:1.d:1")}, "H1"),
      SubgroupSpec::make(graph, {parse_word(graph, "a:1.b:1")}, "H2"),
      SubgroupSpec::make(graph, {parse_word(graph, "a:1.d:1"), parse_word(graph, "b:1.c:2")}, "H3")};
  std::mt19937_64 rng(17);
  std::size_t diagrams = 0;
  std::size_t checks = 0;
  std::size_t stated = 0;
  std::size_t bound = 0;
  while (diagrams < 500) {
    const auto& h = subgroups[diagrams % subgroups.size()];
    std::uniform_int_distribution<std::size_t> letter(0, h.alphabet_size() - 1);
    std::uniform_int_distribution<std::size_t> len(2, 10);
    std::vector<std::size_t> word;
    const std::size_t n = len(rng);
    while (word.size() < n) {
      const std::size_t t = letter(rng);
      if (!word.empty() && (word.back() ^ 1U) == t) continue;
      word.push_back(t);
    }
    const SubgroupDiagram sd = subgroup_diagram(graph, h, word);
    if (sd.w.size() < 2) continue;
    ++diagrams;
    const CombResult combed = left_comb(graph, sd.diagram, sd.w_range);
    for (std::size_t l = 0; l < sd.w.size(); ++l) {
      for (std::size_t r = l + 1; r < sd.w.size(); ++r) {
        ++checks;
        if (!reduction_control_check(graph, combed.diagram, sd.w_range, l, r, sd.segment, h.m_h)) ++stated;
        if (!reduction_control_bound(graph, combed.diagram, sd.w_range, l, r, sd.segment, h.m_h)) ++bound;
      }
    }
  }
  return {stated == 0, "500 diagrams, " + std::to_string(checks) + " pairs, " + std::to_string(stated) +
                           " failures of R-L >= (r-l)/m_H, " + std::to_string(bound) +
                           " failures of (R-L+1) m_H >= r-l+1"};
}

Outcome distortion() {
  const auto graph = p4(GroupSpec::infinite_cyclic());
  const auto h1 = SubgroupSpec::make(graph, {parse_word(graph, "a:1.d:1")}, "H1");
  const std::size_t horizon = 20;
  const ObservedConstants c = measure_constants(graph, h1, horizon);
  const auto rows = distortion_table(graph, h1, horizon, c, join_busting_profile(graph, h1, horizon).n);
  std::size_t bad = 0;
  for (const auto& row : rows) {
    const bool ok = row.word_length <= (c.k + c.d) * row.prism + c.k && row.star <= row.prism &&
                    row.prism <= h1.m_h * row.word_length;
    if (!ok) ++bad;
  }
  return {bad == 0 && !rows.empty(), std::to_string(rows.size()) + " rows, K=" + std::to_string(c.k) +
                                         " D=" + std::to_string(c.d) + ", " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const auto corpus = identity_corpus(1000);
  const std::vector<Criterion> criteria = {
      {1, "prism-length oracle", 60, prism_oracle},
      {2, "normal-form uniqueness", 30, normal_form_uniqueness},
      {3, "diagram validity", 60, [&] { return diagram_validity(corpus); }},
      {4, "combing", 0, [&] { return combing(corpus); }},
      {5, "star-length oracle", 120, star_oracle},
      {6, "contact sandwich", 0, contact_sandwich},
      {7, "join ellipticity", 0, join_ellipticity},
      {8, "join-busting dichotomy", 60, join_busting},
      {9, "reduction control", 0, redcon},
      {10, "distortion bound shape", 0, distortion},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      out.ok = false;
      out.detail += " (over the time limit)";
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d %-24s %.2fs  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
