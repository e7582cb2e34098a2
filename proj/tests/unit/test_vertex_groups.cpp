#include <gtest/gtest.h>

#include "graphprod/errors.hpp"
#include "graphprod/vertex_group.hpp"

using namespace graphprod;

namespace {

GroupElement z(std::int64_t v) { return CyclicValue{v}; }
GroupElement fw(std::vector<std::int32_t> letters) { return FreeWord{std::move(letters)}; }

const std::vector<GroupSpec>& all_specs() {
  static const std::vector<GroupSpec> specs{GroupSpec::infinite_cyclic(), GroupSpec::free_abelian(2),
                                            GroupSpec::finite_cyclic(5), GroupSpec::finite_cyclic(2),
                                            GroupSpec::free(1), GroupSpec::free(2)};
  return specs;
}

}  // namespace

TEST(VertexGroups, Multiply) {
  const auto zz = GroupSpec::infinite_cyclic();
  EXPECT_EQ(multiply(zz, z(2), z(3)), z(5));
  EXPECT_TRUE(is_identity(zz, multiply(zz, z(2), z(-2))));
  const auto f2 = GroupSpec::free(2);
  // (x y)(y^-1 x) = x^2
  EXPECT_EQ(multiply(f2, fw({1, 2}), fw({-2, 1})), fw({1, 1}));
  EXPECT_THROW(multiply(zz, z(1), fw({1})), InputError);
}

TEST(VertexGroups, Invert) {
  EXPECT_EQ(invert(GroupSpec::infinite_cyclic(), z(3)), z(-3));
  EXPECT_EQ(invert(GroupSpec::finite_cyclic(5), z(2)), z(3));
  EXPECT_EQ(invert(GroupSpec::free(2), fw({1, 2})), fw({-2, -1}));
}

TEST(VertexGroups, Identity) {
  EXPECT_TRUE(is_identity(GroupSpec::infinite_cyclic(), z(0)));
  EXPECT_TRUE(is_identity(GroupSpec::finite_cyclic(5), canonicalize(GroupSpec::finite_cyclic(5), z(5))));
  EXPECT_TRUE(is_identity(GroupSpec::free(2), canonicalize(GroupSpec::free(2), fw({1, -1}))));
}

TEST(VertexGroups, EnumerateBall) {
  EXPECT_EQ(enumerate_ball(GroupSpec::infinite_cyclic(), 2),
            (std::vector<GroupElement>{z(-2), z(-1), z(0), z(1), z(2)}));
  EXPECT_EQ(enumerate_ball(GroupSpec::finite_cyclic(3), 5), (std::vector<GroupElement>{z(0), z(1), z(2)}));
  const auto f1 = enumerate_ball(GroupSpec::free(1), 1);
  EXPECT_EQ(f1.size(), 3U);
  EXPECT_EQ(enumerate_ball(GroupSpec::free(2), 2).size(), 1U + 4U + 12U);
  EXPECT_EQ(enumerate_ball(GroupSpec::free_abelian(2), 1).size(), 5U);
}

TEST(VertexGroups, SpecValidation) {
  EXPECT_THROW(GroupSpec::finite_cyclic(1), InputError);
  EXPECT_THROW(GroupSpec::free(0), InputError);
  EXPECT_THROW(GroupSpec::parse("Q"), InputError);
  for (const auto& s : all_specs()) EXPECT_EQ(GroupSpec::parse(s.tag()), s);
}

TEST(VertexGroups, TaggedRoundTrip) {
  EXPECT_EQ(format_element(GroupSpec::infinite_cyclic(), z(5)), "Z:5");
  EXPECT_EQ(format_element(GroupSpec::free(2), fw({1, -2})), "F2:x.y^-1");
  for (const auto& spec : all_specs()) {
    for (const auto& x : enumerate_ball(spec, 3)) {
      const std::string text = format_element(spec, x);
      const auto [spec2, y] = parse_element(text);
      EXPECT_EQ(spec2, spec) << text;
      EXPECT_EQ(y, x) << text;
      EXPECT_EQ(format_element(spec2, y), text);
      EXPECT_EQ(parse_payload(spec, format_payload(spec, x)), x);
    }
  }
}

TEST(VertexGroupProperties, GroupLawsOnBalls) {
  for (const auto& spec : all_specs()) {
    const int radius = spec.kind == GroupKind::Free && spec.parameter == 2 ? 2 : 4;
    const auto ball = enumerate_ball(spec, radius);
    const auto e = identity(spec);
    for (const auto& x : ball) {
      EXPECT_EQ(multiply(spec, x, e), x);
      EXPECT_EQ(multiply(spec, e, x), x);
      EXPECT_TRUE(is_identity(spec, multiply(spec, invert(spec, x), x)));
      for (const auto& y : ball) {
        const auto xy = multiply(spec, x, y);
        for (const auto& w : ball) {
          ASSERT_EQ(multiply(spec, xy, w), multiply(spec, x, multiply(spec, y, w)));
        }
      }
    }
  }
}
