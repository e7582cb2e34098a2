#include <gtest/gtest.h>

#include "graphprod/contact.hpp"
#include "graphprod/errors.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace graphprod;
using graphprod::fixtures::c5;
using graphprod::fixtures::p4;
using graphprod::fixtures::S;
using graphprod::fixtures::W;

TEST(Contact, StarLengthExamples) {
  const auto g = p4();
  EXPECT_EQ(star_length(g, PrismWord{}), 0U);
  EXPECT_EQ(star_length(g, W(g, "a:1.b:1")), 1U);
  EXPECT_EQ(star_length(g, W(g, "a:1.b:1.c:1")), 1U);
  EXPECT_EQ(star_length(g, W(g, "a:1.d:1")), 2U);
  EXPECT_EQ(star_length(g, W(g, "a:1.d:1.a:2.d:2")), 4U);
  EXPECT_EQ(star_length(g, W(g, "d:1.a:1.d:1")), 3U);
  // Same answers from the star-metric breadth-first search with Z/3 groups.
  const auto finite = p4(GroupSpec::finite_cyclic(3));
  const oracle::StarOracle star(finite, 4);
  EXPECT_EQ(star.distance(W(finite, "a:1.b:1.c:1")), 1U);
  EXPECT_EQ(star.distance(W(finite, "a:1.d:1")), 2U);
  EXPECT_EQ(star.distance(W(finite, "d:1.a:1.d:1")), 3U);
  EXPECT_EQ(star.distance(W(finite, "a:1.d:1.a:2.d:2")), 4U);
}

TEST(Contact, StarLengthMemo) {
  const auto g = c5();
  StarLength star(g);
  const PrismWord w = W(g, "1:1.3:1.5:1.2:1.4:1");
  const std::size_t first = star(w);
  EXPECT_GT(star.memo_size(), 0U);
  EXPECT_EQ(star(w), first);
  EXPECT_EQ(star.of_canonical(geodesic_form(g, w)), first);
}

TEST(Contact, Hyperplanes) {
  const auto g = p4();
  const Hyperplane h = make_hyperplane(g, g.id("a"), W(g, "c:1.b:1"));
  EXPECT_EQ(S(g, h.carrier_rep), "c:1");
  EXPECT_EQ(make_hyperplane(g, g.id("a"), W(g, "b:1.a:3")).carrier_rep, PrismWord{});

  const auto crossed = hyperplanes_crossed(g, W(g, "a:1.c:1"));
  ASSERT_EQ(crossed.size(), 2U);
  EXPECT_EQ(crossed[0], (Hyperplane{g.id("a"), {}}));
  EXPECT_EQ(crossed[1], (Hyperplane{g.id("c"), W(g, "a:1")}));
  EXPECT_THROW(hyperplanes_crossed(g, W(g, "a:1.b:1.a:1")), InputError);
}

TEST(Contact, CarriersIntersect) {
  const auto g = p4();
  const Hyperplane ha{g.id("a"), {}};
  EXPECT_TRUE(carriers_intersect(g, ha, Hyperplane{g.id("c"), {}}));
  EXPECT_TRUE(carriers_intersect(g, ha, Hyperplane{g.id("d"), W(g, "c:1")}));
  const Hyperplane far = make_hyperplane(g, g.id("a"), W(g, "d:1.a:1.d:1"));
  ASSERT_EQ(S(g, far.carrier_rep), "d:1.a:1.d:1");
  EXPECT_FALSE(carriers_intersect(g, ha, far));
}

TEST(Contact, DistanceBounds) {
  const auto g = p4();
  StarLength star(g);
  const Hyperplane h1{g.id("d"), {}};
  const Hyperplane h2 = make_hyperplane(g, g.id("a"), W(g, "d:1.a:1.d:1"));
  const ContactBounds b = contact_distance_bounds(star, h1, h2);
  EXPECT_EQ(b.star, 3U);
  EXPECT_EQ(b.lower, 1U);
  EXPECT_EQ(b.upper, 8U);
  const ContactBounds same = contact_distance_bounds(star, h1, h1);
  EXPECT_EQ(same.lower, 0U);
  EXPECT_EQ(same.upper, 0U);
  EXPECT_EQ(contact_distance_search(g, h1, h1), 0U);
  const auto found = contact_distance_search(g, h1, h2);
  ASSERT_TRUE(found);
  EXPECT_GE(*found, b.lower);
}

TEST(Contact, EssentialSupport) {
  const auto g = p4();
  const PrismWord w = W(g, "a:1.c:1.a:-1");
  const EssentialSupport e = essential_support(g, w);
  EXPECT_EQ(e.support, g.set_of({"c"}));
  EXPECT_EQ(S(g, e.reduced), "c:1");
  EXPECT_TRUE(same_element(g, concat(concat(inverse(g, e.conjugator), w), e.conjugator), e.reduced));
  const EssentialSupport plain = essential_support(g, W(g, "a:1.d:1"));
  EXPECT_EQ(plain.support, g.set_of({"a", "d"}));
  EXPECT_TRUE(plain.conjugator.empty());
}

TEST(Contact, ConjugateIntoJoin) {
  const auto g = p4();
  EXPECT_FALSE(is_conjugate_into_join(g, PrismWord{}));
  EXPECT_FALSE(is_conjugate_into_join(g, W(g, "a:1.d:1")));
  const auto ac = is_conjugate_into_join(g, W(g, "a:1.c:1"));
  ASSERT_TRUE(ac);
  EXPECT_TRUE(g.set_of({"a", "c"}).is_subset_of(ac->join));
  EXPECT_TRUE(is_join(g, ac->join));
  const auto conj = is_conjugate_into_join(g, W(g, "d:1.a:1.c:1.d:-1"));
  ASSERT_TRUE(conj);
}

TEST(Contact, OrbitProfiles) {
  const auto g = p4();
  StarLength star(g);
  const OrbitProfile lox = orbit_profile(star, W(g, "a:1.d:1"), 10);
  ASSERT_EQ(lox.rows.size(), 10U);
  for (const auto& row : lox.rows) {
    EXPECT_EQ(row.prism, static_cast<std::size_t>(2 * row.n));
    EXPECT_EQ(row.star, static_cast<std::size_t>(2 * row.n));
  }
  EXPECT_DOUBLE_EQ(lox.translation_estimate, 2.0);
  EXPECT_TRUE(lox.loxodromic_at_horizon);
  const OrbitProfile ell = orbit_profile(star, W(g, "a:1.b:1"), 10);
  for (const auto& row : ell.rows) EXPECT_EQ(row.star, 1U);
  EXPECT_FALSE(ell.loxodromic_at_horizon);
}

TEST(ContactProperties, StarLengthAgainstOracle) {
  std::mt19937_64 rng(41);
  for (const auto& graph : {p4(GroupSpec::finite_cyclic(3)), c5(GroupSpec::finite_cyclic(2))}) {
    const oracle::StarOracle star(graph, 3);
    for (int trial = 0; trial < 200; ++trial) {
      const PrismWord w = geodesic_form(graph, oracle::random_word(graph, rng, 5));
      if (w.size() > 3) continue;
      ASSERT_EQ(star_length(graph, w), star.distance(w)) << S(graph, w);
    }
  }
}

TEST(ContactProperties, StarLengthLaws) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const auto graph = fixtures::random_graph(rng, 6, 0.4, GroupSpec::infinite_cyclic());
    StarLength star(graph);
    const PrismWord x = oracle::random_word(graph, rng, 7);
    const PrismWord y = oracle::random_word(graph, rng, 7);
    ASSERT_LE(star(x), prism_length(graph, x));
    ASSERT_LE(star(concat(x, y)), star(x) + star(y));
    ASSERT_EQ(star(inverse(graph, x)), star(x));
  }
}

TEST(ContactProperties, HyperplanesAlongGeodesics) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto graph = fixtures::random_graph(rng, 6, 0.4, GroupSpec::infinite_cyclic());
    const PrismWord w = geodesic_form(graph, oracle::random_word(graph, rng, 8));
    const auto crossed = hyperplanes_crossed(graph, w);
    ASSERT_EQ(crossed.size(), w.size());
    for (std::size_t i = 0; i + 1 < crossed.size(); ++i) {
      ASSERT_TRUE(carriers_intersect(graph, crossed[i], crossed[i + 1]));
    }
    StarLength star(graph);
    for (std::size_t i = 0; i < crossed.size(); ++i) {
      for (std::size_t j = i + 1; j < crossed.size(); ++j) {
        const ContactBounds b = contact_distance_bounds(star, crossed[i], crossed[j]);
        ASSERT_LE(b.lower, b.upper);
      }
    }
  }
}

TEST(ContactProperties, JoinElementsStayBounded) {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    const auto graph = fixtures::random_graph(rng, 6, 0.5, GroupSpec::infinite_cyclic());
    const PrismWord g = oracle::random_word(graph, rng, 6);
    const auto witness = is_conjugate_into_join(graph, g);
    if (!witness) continue;
    ++checked;
    StarLength star(graph);
    const PrismWord inner = concat(concat(inverse(graph, witness->conjugator), g), witness->conjugator);
    ASSERT_TRUE(in_parabolic(graph, inner, witness->join));
    const std::size_t bound = 2 * star(witness->conjugator) + 2;
    for (long n : {1L, 4L, 9L}) ASSERT_LE(star(power(graph, g, n)), bound);
  }
  EXPECT_GT(checked, 0);
}
