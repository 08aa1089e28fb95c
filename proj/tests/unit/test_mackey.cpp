#include <gtest/gtest.h>

#include "coarsetr/grp/orbit_category.hpp"
#include "coarsetr/homology/abelian.hpp"
#include "coarsetr/mackey/burnside.hpp"
#include "coarsetr/mackey/em.hpp"
#include "colimit_oracle.hpp"
#include "oracle.hpp"

using namespace coarsetr;
using namespace coarsetr::mackey;
using grp::GSet;

namespace {

GSet orbit(grp::GroupPtr const& g, grp::Subgroup const& h) { return GSet::cosets(g, h); }

TEST(Burnside, SquareOfTheFreeOrbitSpan) {
  auto c2 = grp::cyclic_group(2);
  GSet pt = GSet::trivial(c2, 1);
  GSet free = orbit(c2, grp::trivial_subgroup(*c2));
  auto s = make_gfin_span(pt, free, pt, {0, 0}, {0, 0});
  auto sq = compose_gfin_spans(s, s);
  EXPECT_EQ(sq.apex.size(), 4u);
  EXPECT_EQ(sq.apex.orbits().blocks, 2u);
  EXPECT_TRUE(gfin_spans_isomorphic(sq, add_gfin_spans(s, s)));
}

TEST(Burnside, IdentityIsUnital) {
  auto s3 = grp::symmetric_group(3);
  GSet a = orbit(s3, grp::trivial_subgroup(*s3));
  GSet b = GSet::trivial(s3, 1);
  auto s = make_gfin_span(a, a, b, coarse::identity_map(6), coarse::Map(6, 0));
  EXPECT_TRUE(gfin_spans_isomorphic(compose_gfin_spans(identity_gfin_span(a), s), s));
  EXPECT_TRUE(gfin_spans_isomorphic(compose_gfin_spans(s, identity_gfin_span(b)), s));
}

TEST(Burnside, Marks) {
  auto c2 = grp::cyclic_group(2);
  auto lat = grp::subgroups(*c2);
  GSet free = orbit(c2, grp::trivial_subgroup(*c2));
  EXPECT_EQ(burnside_marks(GSet::trivial(c2, 1), lat), (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(burnside_marks(free, lat), (std::vector<std::uint64_t>{2, 0}));
  EXPECT_EQ(burnside_marks(GSet::product(free, free), lat), (std::vector<std::uint64_t>{4, 0}));

  auto s3 = grp::symmetric_group(3);
  auto l3 = grp::subgroups(*s3);
  for (auto i : l3.representatives)
    for (auto j : l3.representatives) {
      GSet a = orbit(s3, l3.subgroups[i]), b = orbit(s3, l3.subgroups[j]);
      auto ma = burnside_marks(a, l3), mb = burnside_marks(b, l3);
      auto mab = burnside_marks(GSet::product(a, b), l3);
      for (std::size_t k = 0; k < ma.size(); ++k) EXPECT_EQ(mab[k], ma[k] * mb[k]);
    }
}

TEST(Burnside, ClassifyingTable) {
  auto c2 = grp::cyclic_group(2);
  auto lat = grp::subgroups(*c2);
  for (auto const& row : classifying_table(*c2, grp::SubgroupFamily::all(c2), lat))
    EXPECT_TRUE(row.is_point);
  auto rows = classifying_table(*c2, grp::SubgroupFamily::trivial(c2), lat);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].is_point);
  EXPECT_FALSE(rows[1].is_point);

  auto a5 = grp::alternating_group(5);
  auto l5 = grp::subgroups(*a5);
  for (auto const& row : classifying_table(*a5, grp::SubgroupFamily::solvable(a5), l5))
    EXPECT_EQ(row.is_point, row.subgroup_order != 60);
}

TEST(Burnside, CoarseImageOfDoubleCosetSpanIsValid) {
  auto c2 = grp::cyclic_group(2);
  GSet free = orbit(c2, grp::trivial_subgroup(*c2));
  GSet pt = GSet::trivial(c2, 1);
  auto tr = make_gfin_span(pt, free, free, {0, 0}, {0, 1});
  auto res = make_gfin_span(free, free, pt, {0, 1}, {0, 0});
  auto s = to_coarse_span(compose_gfin_spans(res, tr));
  EXPECT_TRUE(spans::validate_span(s).ok);
  EXPECT_EQ(minimal_space(GSet::trivial(c2, 0)).size(), 0u);
}

TEST(EM, ValueOnTheTerminalOrbit) {
  for (auto const& g : {grp::cyclic_group(2), grp::symmetric_group(3), grp::cyclic_group(4)}) {
    auto h = em_object(GSet::trivial(g, 1), 2);
    EXPECT_EQ(h.degree(0).group().str(), "Z");
    EXPECT_TRUE(h.degree(1).group().is_zero());
  }
}

TEST(EM, OrbitValuesMatchBruteForceForS3) {
  auto s3 = grp::symmetric_group(3);
  for (auto const& h : grp::subgroups(*s3).subgroups) {
    auto x = minimal_space(orbit(s3, h));
    auto expected = oracle::homology(x, 0);
    auto got = em_object(orbit(s3, h), 0).degree(0).group();
    EXPECT_EQ(got.rank, expected.rank);
    EXPECT_TRUE(got.torsion.empty());
    EXPECT_TRUE(expected.torsion.empty());
  }
}

TEST(EM, RestrictionAfterTransferForC2) {
  auto c2 = grp::cyclic_group(2);
  GSet free = orbit(c2, grp::trivial_subgroup(*c2));
  GSet pt = GSet::trivial(c2, 1);
  auto up = make_gfin_span(free, free, pt, {0, 1}, {0, 0});
  auto down = make_gfin_span(pt, free, free, {0, 0}, {0, 1});
  auto h_free = em_object(free, 1), h_pt = em_object(pt, 1);
  // Two independent paths: the composite span, and the double coset sum
  // 1 + c where c is the swap.
  auto composite = em_morphism(compose_gfin_spans(up, down), h_free, h_free, 0);
  auto one = em_morphism(identity_gfin_span(free), h_free, h_free, 0);
  auto swap = em_morphism(make_gfin_span(free, free, free, {0, 1}, {1, 0}), h_free, h_free, 0);
  homology::Matrix<homology::BigInt> sum(1, 1);
  sum(0, 0) = one(0, 0) + swap(0, 0);
  EXPECT_EQ(composite, sum);
  EXPECT_EQ(composite(0, 0), 2);
  // And through the point: res o tr as matrices.
  auto first = em_morphism(down, h_pt, h_free, 0);
  auto second = em_morphism(up, h_free, h_pt, 0);
  EXPECT_EQ(composite(0, 0), second(0, 0) * first(0, 0));
}

TEST(EM, DoubleCosetFormula) {
  for (auto const& g : {grp::cyclic_group(2), grp::cyclic_group(3), grp::cyclic_group(4),
                        grp::symmetric_group(3)}) {
    auto subs = grp::subgroups(*g).subgroups;
    for (auto const& h : subs)
      for (auto const& k : subs) {
        auto r = double_coset_check(g, h, k, 1);
        EXPECT_TRUE(r.ok) << g->name() << " |H|=" << h.order() << " |K|=" << k.order()
                          << (r.failures.empty() ? "" : ": " + r.failures.front());
        EXPECT_EQ(r.double_cosets, double_coset_representatives(*g, k, h).size());
      }
  }
}

TEST(EM, DoubleCosetCountsForS3) {
  auto s3 = grp::symmetric_group(3);
  grp::Subgroup c3;
  for (auto const& h : grp::subgroups(*s3).subgroups)
    if (h.order() == 3) c3 = h;
  EXPECT_EQ(double_coset_representatives(*s3, c3, c3).size(), 2u);
  auto e = grp::trivial_subgroup(*s3);
  EXPECT_EQ(double_coset_representatives(*s3, e, e).size(), 6u);
}

TEST(EM, MackeyTableOfC2) {
  auto c2 = grp::cyclic_group(2);
  auto t = mackey_table(c2, grp::SubgroupFamily::all(c2), 1);
  ASSERT_EQ(t.objects.size(), 2u);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].restriction[0](0, 0), 1);
  EXPECT_EQ(t.entries[0].transfer[0](0, 0), 2);
}

void expect_matches_oracle(grp::GroupPtr const& g, grp::SubgroupFamily const& f,
                           oracle::FamilyKind kind) {
  auto r = assembly(g, f, 0);
  auto o = oracle::assembly_degree0(*g, kind);
  EXPECT_EQ(r.object_orders.size(), o.objects);
  EXPECT_EQ(r.arrow_count, o.arrows);
  EXPECT_EQ(r.colimit().rank, o.colimit_rank);
  EXPECT_EQ(r.colimit().torsion.size(), o.colimit_torsion.size());
  EXPECT_EQ(r.injective, o.injective);
  EXPECT_EQ(r.split, o.split);
  EXPECT_EQ(r.label, "empirical");
}

TEST(Assembly, AllSubgroupsGiveAnIsomorphism) {
  for (auto const& g : {grp::cyclic_group(2), grp::symmetric_group(3)}) {
    auto r = assembly(g, grp::SubgroupFamily::all(g), 0);
    EXPECT_TRUE(homology::is_isomorphism(r.matrix, r.colimit_orders, r.target_orders));
    expect_matches_oracle(g, grp::SubgroupFamily::all(g), oracle::FamilyKind::all);
  }
}

TEST(Assembly, C2OverTheTrivialFamily) {
  auto c2 = grp::cyclic_group(2);
  auto r = assembly(c2, grp::SubgroupFamily::trivial(c2), 0);
  EXPECT_EQ(r.arrow_count, 1u);
  EXPECT_EQ(r.colimit().str(), "Z");
  EXPECT_EQ(r.matrix(0, 0), 2);
  EXPECT_TRUE(r.injective);
  EXPECT_FALSE(r.split);
  expect_matches_oracle(c2, grp::SubgroupFamily::trivial(c2), oracle::FamilyKind::trivial);
}

TEST(Assembly, S3FamiliesMatchOracle) {
  auto s3 = grp::symmetric_group(3);
  expect_matches_oracle(s3, grp::SubgroupFamily::trivial(s3), oracle::FamilyKind::trivial);
  expect_matches_oracle(s3, grp::SubgroupFamily::solvable(s3), oracle::FamilyKind::solvable);
}

}  // namespace
