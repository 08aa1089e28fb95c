#include <gtest/gtest.h>

#include <set>

#include "coarsetr/error.hpp"
#include "coarsetr/grp/orbit_category.hpp"
#include "coarsetr/grp/subgroups.hpp"

using namespace coarsetr;
using namespace coarsetr::grp;

namespace {

// Subgroups by testing every subset for closure; feasible up to order 8 or so.
std::vector<std::vector<Element>> subgroups_by_subsets(Group const& g) {
  std::vector<std::vector<Element>> out;
  std::size_t n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a)
      for (Element b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1))
          closed = (mask >> g.mul(a, b)) & 1;
    if (!closed) continue;
    std::vector<Element> h;
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1) h.push_back(a);
    out.push_back(h);
  }
  return out;
}

std::size_t conjugacy_classes(Group const& g, std::vector<std::vector<Element>> const& subs) {
  std::set<std::set<std::set<Element>>> classes;
  for (auto const& h : subs) {
    std::set<std::set<Element>> cls;
    for (Element x = 0; x < g.order(); ++x) {
      std::set<Element> c;
      for (auto e : h) c.insert(g.conjugate(e, x));
      cls.insert(c);
    }
    classes.insert(cls);
  }
  return classes.size();
}

TEST(Group, BuiltinsHaveExpectedOrders) {
  EXPECT_EQ(trivial_group()->order(), 1u);
  EXPECT_EQ(cyclic_group(4)->order(), 4u);
  EXPECT_EQ(dihedral_group(4)->order(), 8u);
  EXPECT_EQ(symmetric_group(3)->order(), 6u);
  EXPECT_EQ(alternating_group(5)->order(), 60u);
  EXPECT_EQ(klein_four_group()->order(), 4u);
}

TEST(Group, RejectsNonAssociativeTable) {
  // A Latin square with identity 0 that is not a group table.
  std::vector<Element> t{0, 1, 2, 3, 4,  //
                         1, 0, 3, 4, 2,  //
                         2, 4, 0, 1, 3,  //
                         3, 2, 4, 0, 1,  //
                         4, 3, 1, 2, 0};
  EXPECT_THROW(Group(5, t, 0), ValidationError);
}

TEST(Group, PermutationGroupMatchesSymmetricGroup) {
  auto g = permutation_group({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->identity(), 0u);
}

TEST(GSet, OrbitsOfSmallActions) {
  auto c2 = cyclic_group(2);
  GSet swap = GSet::cosets(c2, trivial_subgroup(*c2));
  EXPECT_EQ(swap.orbits().blocks, 1u);
  EXPECT_EQ(GSet::trivial(c2, 2).orbits().blocks, 2u);

  GSet mixed = GSet::coproduct(swap, GSet::cosets(c2, whole_group(*c2)));
  auto orbits = mixed.orbits().members();
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0].size(), 2u);
  EXPECT_EQ(orbits[1].size(), 1u);
}

TEST(GSet, RejectsIncompatibleAction) {
  auto c2 = cyclic_group(2);
  EXPECT_THROW(GSet(c2, 2, {1, 0, 1, 0}), ValidationError);
}

TEST(Subgroups, LatticeMatchesSubsetSearch) {
  for (auto const& g : {cyclic_group(2), cyclic_group(4), symmetric_group(3),
                        klein_four_group(), dihedral_group(4)}) {
    auto lat = subgroups(*g);
    auto brute = subgroups_by_subsets(*g);
    EXPECT_EQ(lat.subgroups.size(), brute.size()) << g->name();
    EXPECT_EQ(lat.class_count(), conjugacy_classes(*g, brute)) << g->name();
  }
}

TEST(Subgroups, KnownCounts) {
  EXPECT_EQ(subgroups(*cyclic_group(2)).subgroups.size(), 2u);
  auto s3 = subgroups(*symmetric_group(3));
  EXPECT_EQ(s3.subgroups.size(), 6u);
  EXPECT_EQ(s3.class_count(), 4u);
  EXPECT_EQ(subgroups(*cyclic_group(4)).subgroups.size(), 3u);
}

TEST(Families, Separating) {
  auto c2 = cyclic_group(2);
  EXPECT_FALSE(is_separating(*c2, SubgroupFamily::trivial(c2)));
  for (auto const& g : {c2, symmetric_group(3), cyclic_group(4)})
    EXPECT_TRUE(is_separating(*g, SubgroupFamily::all(g)));
  auto a5 = alternating_group(5);
  EXPECT_TRUE(is_separating(*a5, SubgroupFamily::solvable(a5)));
}

TEST(Families, SolvableSubgroupsOfA5) {
  auto a5 = alternating_group(5);
  auto sol = SubgroupFamily::solvable(a5);
  // A5 has 59 subgroups; only A5 itself is not solvable.
  EXPECT_EQ(subgroups(*a5).subgroups.size(), 59u);
  EXPECT_EQ(sol.members().size(), 58u);
}

TEST(Families, ClosureIsEnforced) {
  auto s3 = symmetric_group(3);
  auto lat = subgroups(*s3);
  // A single subgroup of order 2 is neither conjugation- nor subgroup-closed.
  Subgroup two;
  for (auto const& h : lat.subgroups)
    if (h.order() == 2) two = h;
  EXPECT_THROW(SubgroupFamily(s3, {two}), ValidationError);
  auto gen = SubgroupFamily::generated_by(s3, {two});
  EXPECT_EQ(gen.members().size(), 4u);  // e and the three conjugates
}

TEST(OrbitCategory, HomSetsOfC2) {
  auto c2 = cyclic_group(2);
  OrbitCategory cat(c2, SubgroupFamily::all(c2));
  ASSERT_EQ(cat.object_count(), 2u);
  // Objects are ordered by subgroup: C2/e first, then C2/C2.
  EXPECT_EQ(cat.hom(0, 0).size(), 2u);
  EXPECT_TRUE(cat.hom(1, 0).empty());
  EXPECT_EQ(cat.hom(0, 1).size(), 1u);
  EXPECT_EQ(cat.hom(1, 1).size(), 1u);
}

TEST(OrbitCategory, TerminalObjectAndWeylGroup) {
  auto s3 = symmetric_group(3);
  OrbitCategory all(s3, SubgroupFamily::all(s3));
  std::size_t top = all.object_count() - 1;
  for (std::size_t i = 0; i < all.object_count(); ++i)
    EXPECT_EQ(all.hom(i, top).size(), 1u);

  OrbitCategory free(s3, SubgroupFamily::trivial(s3));
  ASSERT_EQ(free.object_count(), 1u);
  EXPECT_EQ(free.hom(0, 0).size(), 6u);
}

TEST(OrbitCategory, CompositionMatchesMaps) {
  auto s3 = symmetric_group(3);
  OrbitCategory cat(s3, SubgroupFamily::all(s3));
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    for (std::size_t b = 0; b < cat.object_count(); ++b)
      for (std::size_t c = 0; c < cat.object_count(); ++c)
        for (auto const& f : cat.hom(a, b))
          for (auto const& h : cat.hom(b, c)) {
            auto fm = cat.as_map(f), hm = cat.as_map(h);
            std::vector<Point> composite(fm.size());
            for (std::size_t x = 0; x < fm.size(); ++x) composite[x] = hm[fm[x]];
            EXPECT_EQ(cat.as_map(cat.compose(f, h)), composite);
          }
}

}  // namespace
