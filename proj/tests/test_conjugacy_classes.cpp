#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gelfand/gelfand.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

Multipartition mp(std::string_view s) { return parse_multipartition(s); }

/// The classes of G(r,p,n) checked against brute-force conjugation orbits.
void check_against_orbits(int r, int p, int n) {
  const GroupParams g(r, p, 1, n);
  const auto labels = enumerate_classes(r, p, n);
  const auto orbits = oracle::conjugacy_orbits(r, p, n);
  ASSERT_EQ(orbits.size(), labels.size()) << g.to_string();
  std::set<ConjClassLabel> seen;
  for (const auto& orbit : orbits) {
    const ConjClassLabel label = class_of(orbit.front(), p);
    for (const auto& x : orbit) ASSERT_EQ(class_of(x, p), label);
    EXPECT_EQ(class_size(label, g), static_cast<unsigned long>(orbit.size())) << to_string(label);
    EXPECT_TRUE(seen.insert(label).second);
    EXPECT_NE(std::find(orbit.begin(), orbit.end(), normal_element(label)), orbit.end());
  }
  EXPECT_EQ(std::vector<ConjClassLabel>(seen.begin(), seen.end()), labels);
}

}  // namespace

TEST(Classes, ClassOfExamples) {
  const auto g = parse_cycles("(1^0,2^0)(3^0,4^0)", 2, 4);
  const auto label = class_of(g, 2);
  EXPECT_EQ(label.alpha, mp("((2,2),())"));
  ASSERT_TRUE(label.split_bit.has_value());
  EXPECT_EQ(*label.split_bit, 0);
  EXPECT_FALSE(class_of(parse_cycles("(1^0,2^0,3^0)(4^0)", 2, 4), 2).split_bit.has_value());
  for (const auto& c : enumerate_classes(3, 3, 2)) EXPECT_FALSE(c.split_bit.has_value());
  EXPECT_THROW(class_of(parse_cycles("(1^1)(2^0)", 2, 2), 2), DomainError);
}

TEST(Classes, SizesSumToGroupOrder) {
  EXPECT_EQ(class_size(ConjClassLabel{mp("((1,1,1),())"), std::nullopt}, GroupParams(2, 1, 1, 3)), 1);
  for (auto [r, p, n] : {std::tuple{2, 1, 3}, std::tuple{2, 2, 4}, std::tuple{3, 3, 2}, std::tuple{4, 2, 3},
                         std::tuple{2, 2, 6}, std::tuple{6, 3, 4}}) {
    const GroupParams g(r, p, 1, n);
    BigInt total = 0;
    for (const auto& c : enumerate_classes(r, p, n)) total += class_size(c, g);
    EXPECT_EQ(total, g.subgroup_order()) << g.to_string();
  }
}

TEST(Classes, MatchConjugationOrbits) {
  check_against_orbits(1, 1, 3);
  check_against_orbits(2, 1, 3);
  check_against_orbits(2, 2, 2);
  check_against_orbits(2, 2, 4);
  check_against_orbits(3, 3, 2);
  check_against_orbits(4, 2, 2);
  check_against_orbits(4, 4, 2);
  check_against_orbits(3, 1, 3);
}

TEST(Classes, CountsMatchIrreducibleLabels) {
  EXPECT_EQ(enumerate_classes(1, 1, 3).size(), 3u);
  for (auto [r, p, n] : {std::tuple{2, 2, 4}, std::tuple{4, 2, 2}, std::tuple{3, 3, 2}, std::tuple{2, 2, 6}}) {
    std::size_t irr = 0;
    for (const auto& o : enumerate_shape_orbits(r, n, 1, p)) irr += static_cast<std::size_t>(o.stabilizer());
    EXPECT_EQ(enumerate_classes(r, p, n).size(), irr);
  }
  EXPECT_THROW(enumerate_classes(4, 4, 4), UnsupportedError);
}

TEST(Classes, SplitHalves) {
  for (auto [r, p, n] : {std::tuple{2, 2, 4}, std::tuple{4, 2, 4}, std::tuple{2, 2, 6}}) {
    const GroupParams g(r, p, 1, n);
    for (const auto& c : enumerate_classes(r, p, n)) {
      if (!c.split_bit) continue;
      const ConjClassLabel other{c.alpha, 1 - *c.split_bit};
      EXPECT_EQ(class_size(c, g), class_size(other, g));
      EXPECT_EQ(class_size(c, g) * 2 * wreath_centralizer_order(c.alpha), g.wreath_order());
      EXPECT_EQ(signature(normal_element(c)), *c.split_bit);
    }
  }
}

TEST(Classes, NormalElementsOfTheSplitExample) {
  const Multipartition alpha({{2}, {}, {4}, {}, {4, 2}, {}});
  EXPECT_EQ(normal_element(ConjClassLabel{alpha, 0}),
            parse_cycles("(1^0,2^0)(3^0,4^0,5^0,6^2)(7^0,8^0,9^0,10^4)(11^0,12^4)", 6, 12));
  EXPECT_EQ(normal_element(ConjClassLabel{alpha, 1}),
            parse_cycles("(1^0,2^0)(3^0,4^0,5^0,6^2)(7^0,8^0,9^0,10^4)(11^1,12^3)", 6, 12));
  EXPECT_EQ(class_of(normal_element(ConjClassLabel{alpha, 1}), 2), (ConjClassLabel{alpha, 1}));
  EXPECT_EQ(normal_element(ConjClassLabel{mp("((1,1,1),(),())"), std::nullopt}), ColoredPermutation::identity(3, 3));
}

TEST(Classes, NormalElementsRoundTrip) {
  for (auto [r, p, n] : {std::tuple{2, 2, 4}, std::tuple{4, 2, 4}, std::tuple{3, 1, 4}, std::tuple{6, 2, 4}}) {
    for (const auto& c : enumerate_classes(r, p, n)) EXPECT_EQ(class_of(normal_element(c), p), c) << to_string(c);
  }
}

TEST(Classes, InvolutionTypeExamples) {
  const auto id = involution_type(ColoredPermutation::identity(3, 4), 1);
  EXPECT_EQ(id.f(), (std::vector<int>{4, 0, 0}));
  EXPECT_EQ(id.q(), (std::vector<int>{0, 0, 0}));
  const ProjectiveElement v(parse_window("[6^1,4^0,3^0,2^0,5^1,1^1]", 2), 2);
  const auto t = involution_type(v);
  EXPECT_EQ(t.kind(), Symmetry::symmetric);
  EXPECT_EQ(t.f(), (std::vector<int>{1, 1}));
  EXPECT_EQ(t.q(), (std::vector<int>{1, 1}));
  EXPECT_EQ(to_string(t), "sym[1,1;1,1]");
  // S_6-orbit under absolute conjugation, by brute force
  std::set<ProjectiveElement> orbit;
  for (const auto& s : enumerate_plain(2, 6)) orbit.insert(absolute_conjugate(s, v));
  EXPECT_EQ(orbit.size(), 90u);
  EXPECT_THROW(involution_type(parse_cycles("(1^0,2^1)(3^0)", 2, 3), 1), DomainError);
}

TEST(Classes, PredictedShapes) {
  const GroupParams acting(2, 2, 1, 6);
  const auto t = parse_involution_type("sym[1,1;1,1]", 1);
  const std::vector<ShapeOrbit> expect{orbit_of(mp("((1,1,1),(1,1,1))"), 2), orbit_of(mp("((1,1,1),(2,1))"), 2),
                                       orbit_of(mp("((2,1),(2,1))"), 2)};
  EXPECT_EQ(predicted_shapes(t, acting), expect);
  const auto id = involution_type(ColoredPermutation::identity(3, 5), 1);
  EXPECT_EQ(predicted_shapes(id, GroupParams(3, 1, 1, 5)),
            (std::vector<ShapeOrbit>{orbit_of(mp("((5),(),())"), 1)}));
}

TEST(Classes, PredictedShapesOfDistinctSymmetricTypesAreDisjoint) {
  for (const auto& g : {GroupParams(2, 2, 1, 6), GroupParams(3, 1, 1, 4), GroupParams(4, 2, 1, 4)}) {
    std::set<ShapeOrbit> all;
    std::size_t total = 0;
    for (const auto& cls : enumerate_involution_classes(g)) {
      if (cls.type.kind() != Symmetry::symmetric) continue;
      const auto shapes = predicted_shapes(cls.type, g);
      total += shapes.size();
      all.insert(shapes.begin(), shapes.end());
    }
    EXPECT_EQ(all.size(), total) << g.to_string();
  }
}

TEST(Classes, InvolutionClassEnumeration) {
  for (int n : {4, 6}) {
    int anti = 0;
    for (const auto& cls : enumerate_involution_classes(GroupParams(2, 2, 1, n))) {
      anti += cls.type.kind() == Symmetry::antisymmetric;
    }
    EXPECT_EQ(anti, 1);
  }
  const auto dual = dual_absolute_involutions(GroupParams(2, 2, 1, 4));
  const auto brute = oracle::absolute_involutions(2, 1, 2, 4);
  EXPECT_EQ(std::set<ProjectiveElement>(dual.begin(), dual.end()), brute);
  const auto tiny = enumerate_involution_classes(GroupParams(2, 1, 1, 1));
  ASSERT_EQ(tiny.size(), 2u);
  for (const auto& cls : tiny) EXPECT_EQ(cls.members.size(), 1u);
}

TEST(Classes, DualInvolutionsMatchBruteForce) {
  for (const auto& g : {GroupParams(2, 1, 1, 4), GroupParams(4, 1, 1, 3), GroupParams(4, 2, 1, 3),
                        GroupParams(4, 2, 2, 4), GroupParams(3, 3, 1, 3), GroupParams(6, 2, 3, 3)}) {
    const auto dual = dual_absolute_involutions(g);
    EXPECT_EQ(std::set<ProjectiveElement>(dual.begin(), dual.end()),
              oracle::absolute_involutions(g.r, g.q, g.p, g.n))
        << g.to_string();
  }
}

TEST(Classes, TypesAreAbsoluteConjugacyClasses) {
  for (const auto& g : {GroupParams(2, 1, 1, 4), GroupParams(4, 1, 1, 3), GroupParams(2, 2, 1, 4),
                        GroupParams(4, 2, 1, 4)}) {
    const auto plain = enumerate_plain(g.r, g.n);
    std::set<ProjectiveElement> seen;
    std::size_t orbits = 0;
    for (const auto& v : dual_absolute_involutions(g)) {
      if (seen.count(v)) continue;
      ++orbits;
      const auto t = involution_type(v);
      for (const auto& s : plain) {
        const auto w = absolute_conjugate(s, v);
        seen.insert(w);
        EXPECT_EQ(involution_type(w), t);
      }
    }
    EXPECT_EQ(orbits, enumerate_involution_classes(g).size()) << g.to_string();
  }
}

TEST(Classes, QuotientClassCountMatchesBruteForce) {
  for (const auto& g : {GroupParams(2, 1, 2, 4), GroupParams(4, 2, 2, 2), GroupParams(3, 1, 3, 3)}) {
    const auto orbits = oracle::conjugacy_orbits(g.r, g.p, g.n);
    // merge orbits related by the scalars of C_q
    std::map<ColoredPermutation, std::size_t> owner;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (const auto& x : orbits[i]) owner[x] = i;
    }
    std::vector<std::size_t> parent(orbits.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (int k = 1; k < g.q; ++k) parent[find(i)] = find(owner.at(orbits[i].front().scaled(k * (g.r / g.q))));
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < orbits.size(); ++i) roots.insert(find(i));
    EXPECT_EQ(quotient_class_count(g), roots.size()) << g.to_string();
  }
}

TEST(Classes, TypeTextFormat) {
  const auto t = parse_involution_type("sym[1,2,0,1,2,0;0,1,1,0,1,1]", 1);
  EXPECT_EQ(parse_involution_type(to_string(t), 1), t);
  const auto a = parse_involution_type("asym[2,1]", 1);
  EXPECT_EQ(a.kind(), Symmetry::antisymmetric);
  EXPECT_EQ(a.n(), 6);
  // the stored member is the least shift; equality is orbit equality
  EXPECT_EQ(parse_involution_type("asym[2,1]", 1), parse_involution_type("asym[1,2]", 1));
  EXPECT_NE(parse_involution_type("asym[2,1]", 2), parse_involution_type("asym[1,2]", 2));
  EXPECT_THROW(parse_involution_type("sym[1,2]", 1), ParseError);
  EXPECT_THROW(parse_involution_type("sym[1;0,0]", 1), ParseError);
  EXPECT_THROW(parse_involution_type("anti[1]", 1), ParseError);
  EXPECT_THROW(parse_involution_type("asym[-1]", 1), ParseError);
}
