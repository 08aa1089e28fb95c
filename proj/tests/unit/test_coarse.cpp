#include <gtest/gtest.h>

#include "coarsetr/coarse/space.hpp"
#include "coarsetr/error.hpp"
#include "coarsetr/grp/subgroups.hpp"

using namespace coarsetr;
using namespace coarsetr::coarse;
using grp::GSet;

namespace {

GSet plain(std::size_t n) { return GSet::trivial(grp::trivial_group(), n); }

// Reflexive-symmetric-transitive closure by Warshall's algorithm.
std::vector<std::vector<bool>> closure_oracle(std::size_t n,
                                              std::vector<std::pair<Point, Point>> pairs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = r[b][a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

void expect_relation(Space const& x, std::vector<std::vector<bool>> const& r) {
  for (Point a = 0; a < x.size(); ++a)
    for (Point b = 0; b < x.size(); ++b)
      EXPECT_EQ(x.related(a, b), r[a][b]) << a << "," << b;
}

TEST(Entourage, Thicken) {
  auto u = Entourage::from_pairs(2, {{0, 1}});
  EXPECT_EQ(thicken(u, {1}), (std::vector<Point>{0}));
  EXPECT_EQ(thicken(Entourage::diagonal(3), {0, 2}), (std::vector<Point>{0, 2}));
  auto band = Entourage::from_pairs(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
  EXPECT_EQ(thicken(band, {1}), (std::vector<Point>{0, 1, 2}));
}

TEST(Entourage, ComposeAndInvert) {
  auto u = Entourage::from_pairs(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(compose(u, Entourage::diagonal(3)), u);
  EXPECT_EQ(invert(Entourage::from_pairs(2, {{0, 1}})), Entourage::from_pairs(2, {{1, 0}}));
  EXPECT_TRUE(compose(u, u).contains(0, 2));
  EXPECT_FALSE(compose(u, u).contains(0, 1));
}

TEST(Structure, Generation) {
  Space none(plain(3), {});
  expect_relation(none, closure_oracle(3, {}));
  Space all(plain(3), {Entourage::everything(3)});
  EXPECT_EQ(all.components().blocks, 1u);
  Space ab(plain(3), {Entourage::from_pairs(3, {{0, 1}, {1, 0}})});
  expect_relation(ab, closure_oracle(3, {{0, 1}}));
  EXPECT_EQ(ab.components().blocks, 2u);
}

TEST(Structure, GenerationMatchesClosureOracle) {
  // A chain of pairs on 6 points, in every prefix length.
  std::vector<std::pair<Point, Point>> pairs{{0, 3}, {3, 5}, {1, 2}, {5, 4}};
  for (std::size_t k = 0; k <= pairs.size(); ++k) {
    std::vector<std::pair<Point, Point>> prefix(pairs.begin(), pairs.begin() + k);
    Space x(plain(6), {Entourage::from_pairs(6, prefix)});
    expect_relation(x, closure_oracle(6, prefix));
  }
}

TEST(Structure, RejectsNonInvariantGenerator) {
  auto c2 = grp::cyclic_group(2);
  GSet free = GSet::cosets(c2, grp::trivial_subgroup(*c2));
  GSet s = GSet::coproduct(free, free);
  EXPECT_THROW(Space(s, {Entourage::from_pairs(4, {{0, 2}})}), ValidationError);
}

TEST(Structure, ComponentsAndClosure) {
  EXPECT_EQ(Space::minimal(plain(4)).components().blocks, 4u);
  EXPECT_EQ(Space::maximal(plain(4)).components().blocks, 1u);
  Space ab(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  EXPECT_EQ(ab.closure({1}), (std::vector<Point>{0, 1}));
  EXPECT_EQ(ab.closure({2}), (std::vector<Point>{2}));
}

TEST(Structure, RestrictByPartition) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}, {1, 2}})});
  EXPECT_EQ(restrict_by_partition(x, grp::Partition{{0, 0, 0}, 1}), x);
  EXPECT_EQ(restrict_by_partition(x, grp::Partition{{0, 1, 2}, 3}), Space::minimal(plain(3)));
  Space cut = restrict_by_partition(Space::maximal(plain(3)), grp::Partition{{0, 0, 1}, 2});
  expect_relation(cut, closure_oracle(3, {{0, 1}}));
}

TEST(Structure, InducedStructure) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 2}})});
  EXPECT_EQ(induced_structure(plain(3), identity_map(3), x), x);
  Space pt = Space::minimal(plain(1));
  EXPECT_EQ(induced_structure(plain(3), {0, 0, 0}, pt), Space::maximal(plain(3)));
}

TEST(Structure, ProjectionInducesCoarserThanBoundedUnion) {
  Space x = Space::maximal(plain(2));
  GSet index = plain(3);
  Space bd = bounded_union(index, x);
  Map pr(6);
  for (Point i = 0; i < 3; ++i)
    for (Point p = 0; p < 2; ++p) pr[i * 2 + p] = p;
  Space induced = induced_structure(bd.carrier(), pr, x);
  EXPECT_EQ(induced.components().blocks, 1u);
  EXPECT_EQ(bd.components().blocks, 3u);
  std::vector<std::uint32_t> slices{0, 0, 1, 1, 2, 2};
  EXPECT_EQ(restrict_by_partition(induced, grp::canonical_partition(slices)), bd);
}

TEST(Constructions, TensorAndCoproduct) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space pt = Space::minimal(plain(1));
  EXPECT_EQ(tensor(x, pt), x);
  Space y = Space::minimal(plain(2));
  EXPECT_EQ(tensor(x, y).components().blocks, x.components().blocks * y.components().blocks);
  EXPECT_EQ(coproduct({x, Space::minimal(plain(0))}), x);
  EXPECT_EQ(coproduct({x, y}).components().blocks, 4u);
}

TEST(Constructions, BoundedAndFreeUnions) {
  auto c2 = grp::cyclic_group(2);
  Space x = Space::maximal(GSet::cosets(c2, grp::trivial_subgroup(*c2)));
  for (std::size_t k : {1u, 2u, 4u}) {
    GSet index = GSet::trivial(c2, k);
    EXPECT_EQ(bounded_union(index, x), free_union(index, x));
    EXPECT_EQ(bounded_union(index, x).components().blocks, k);
  }
  EXPECT_EQ(bounded_union(GSet::trivial(c2, 0), x).size(), 0u);
}

TEST(Constructions, SubspaceKeepsStructure) {
  Space x(plain(4), {Entourage::from_pairs(4, {{0, 3}, {1, 2}})});
  Space s = subspace(x, {0, 3});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.related(0, 1));
}

TEST(Maps, Predicates) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  auto id = map_predicates(identity_map(3), x, x);
  EXPECT_TRUE(id.controlled && id.proper && id.bornological);
  auto c = map_predicates({0, 0}, Space::minimal(plain(2)), Space::minimal(plain(1)));
  EXPECT_TRUE(c.controlled && c.proper && c.bornological);
  // Splitting a component is not controlled.
  EXPECT_FALSE(is_controlled({0, 1}, Space::maximal(plain(2)), Space::minimal(plain(2))));
}

TEST(Maps, EquivarianceIsRequired) {
  auto c2 = grp::cyclic_group(2);
  GSet free = GSet::cosets(c2, grp::trivial_subgroup(*c2));
  EXPECT_THROW(require_equivariant({0, 0}, GSet::trivial(c2, 2), free), ValidationError);
  EXPECT_NO_THROW(require_equivariant({0, 0}, free, GSet::trivial(c2, 1)));
}

}  // namespace
