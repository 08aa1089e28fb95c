#include <gtest/gtest.h>

#include "coarsetr/coarse/tape.hpp"
#include "coarsetr/error.hpp"
#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/homology/axioms.hpp"
#include "coarsetr/homology/tape_chains.hpp"
#include "coarsetr/spans/covering.hpp"

using namespace coarsetr;
using namespace coarsetr::coarse;

namespace {

Space point() { return Space::minimal(grp::GSet::trivial(grp::trivial_group(), 1)); }

Space c2_free_max() {
  auto c2 = grp::cyclic_group(2);
  return Space::maximal(grp::GSet::cosets(c2, grp::trivial_subgroup(*c2)));
}

TEST(TapeEntourage, BandsComposeByAddingRadii) {
  std::uint64_t window = 8;
  for (std::int64_t r = 0; r <= 2; ++r)
    for (std::int64_t s = 0; s <= 2; ++s) {
      auto u = TapeEntourage::band(1, r), v = TapeEntourage::band(1, s);
      auto uv = compose(u, v);
      EXPECT_EQ(uv, TapeEntourage::band(1, r + s));
      // Pointwise: (a, c) in U o V iff some b links them.
      for (std::uint64_t a = 0; a < window; ++a)
        for (std::uint64_t c = 0; c < window; ++c) {
          bool linked = false;
          for (std::uint64_t b = 0; b < window + 4; ++b)
            linked = linked || (u.contains({a, 0}, {b, 0}) && v.contains({b, 0}, {c, 0}));
          EXPECT_EQ(uv.contains({a, 0}, {c, 0}), linked);
        }
    }
}

TEST(TapeEntourage, MembershipInStructures) {
  TapeSpace band(point(), TapeCoarse::band, TapeBornology::finite_window);
  TapeSpace discrete(point(), TapeCoarse::discrete, TapeBornology::finite_window);
  EXPECT_TRUE(tape_contains(band, TapeEntourage::band(1, 5)));
  EXPECT_FALSE(tape_contains(discrete, TapeEntourage::band(1, 1)));
  EXPECT_TRUE(tape_contains(discrete, TapeEntourage::diagonal(1)));
}

TEST(TapeSpace, BoundedAndFreeUnionsAgree) {
  for (auto const& x : {point(), c2_free_max()})
    EXPECT_TRUE(same_structures(tape_bounded_union(x), tape_free_union(x)));
}

TEST(TapeMaps, ProjectionIsNotProper) {
  TapeSpace tape(point(), TapeCoarse::discrete, TapeBornology::finite_window);
  TapeMap pr{TapeMap::Kind::projection, 0, {0}};
  auto p = tape_map_predicates(pr, Endpoint::of(tape), Endpoint::of(point()));
  EXPECT_TRUE(p.controlled);
  EXPECT_TRUE(p.bornological);
  EXPECT_FALSE(p.proper);
}

TEST(TapeMaps, ShiftIsAMorphismOfTheBand) {
  TapeSpace tape(point(), TapeCoarse::band, TapeBornology::finite_window);
  TapeMap shift{TapeMap::Kind::shift, 1, {0}};
  auto p = tape_map_predicates(shift, Endpoint::of(tape), Endpoint::of(tape));
  EXPECT_TRUE(p.is_morphism());
  EXPECT_EQ(apply(shift, {3, 0}), (TapePoint{4, 0}));
}

TEST(TapeMaps, ValidationRejectsWrongShapes) {
  TapeSpace tape(point(), TapeCoarse::band, TapeBornology::finite_window);
  TapeMap shift{TapeMap::Kind::shift, 1, {0}};
  EXPECT_THROW(validate_tape_map(shift, Endpoint::of(tape), Endpoint::of(point())),
               ValidationError);
  TapeMap bad{TapeMap::Kind::shift, 1, {1}};
  EXPECT_THROW(validate_tape_map(bad, Endpoint::of(tape), Endpoint::of(tape)),
               ValidationError);
}

TEST(TapeCoverings, ProjectionFromDiscreteTape) {
  TapeMap pr{TapeMap::Kind::projection, 0, {0}};
  TapeSpace windows(point(), TapeCoarse::discrete, TapeBornology::finite_window);
  auto ok = spans::tape_is_bounded_covering(pr, Endpoint::of(windows), Endpoint::of(point()), 16);
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.label, "preset-verified");

  TapeSpace everything(point(), TapeCoarse::discrete, TapeBornology::all);
  auto no = spans::tape_is_bounded_covering(pr, Endpoint::of(everything), Endpoint::of(point()), 16);
  EXPECT_FALSE(no.ok);
  EXPECT_EQ(no.condition, "3");
}

TEST(TapeCoverings, IdentityShiftIsACovering) {
  TapeSpace tape(c2_free_max(), TapeCoarse::band, TapeBornology::finite_window);
  TapeMap id{TapeMap::Kind::shift, 0, {0, 1}};
  EXPECT_TRUE(spans::tape_is_bounded_covering(id, Endpoint::of(tape), Endpoint::of(tape), 8).ok);
}

TEST(Flasque, BandShiftIsAWitness) {
  TapeSpace tape(point(), TapeCoarse::band, TapeBornology::finite_window);
  auto r = homology::check_flasque_witness(tape, {TapeMap::Kind::shift, 1, {0}});
  EXPECT_TRUE(r.ok());
  // No escape without moving, and none when the whole tape is bounded.
  EXPECT_FALSE(homology::check_flasque_witness(tape, {TapeMap::Kind::shift, 0, {0}}).ok());
  TapeSpace all(point(), TapeCoarse::band, TapeBornology::all);
  EXPECT_FALSE(homology::check_flasque_witness(all, {TapeMap::Kind::shift, 1, {0}}).ok());
}

TEST(Flasque, DiscreteShiftIsNotCloseToIdentity) {
  TapeSpace tape(point(), TapeCoarse::discrete, TapeBornology::finite_window);
  auto r = homology::check_flasque_witness(tape, {TapeMap::Kind::shift, 1, {0}});
  EXPECT_FALSE(r.close_to_identity);
  EXPECT_FALSE(r.ok());
}

TEST(TapeChains, BoundaryOfBoundaryVanishesOnWindows) {
  TapeSpace tape(c2_free_max(), TapeCoarse::band, TapeBornology::finite_window);
  homology::TapeChain c(tape, 2, 1, [](std::span<const TapePoint> t) {
    std::int64_t v = 0;
    for (auto const& p : t) v = v * 3 + static_cast<std::int64_t>(p.level + p.fiber);
    return v % 7 - 3;
  });
  auto dd = homology::boundary(homology::boundary(c));
  homology::TapeChain zero(tape, 0, 0, [](auto) { return std::int64_t{0}; });
  EXPECT_FALSE(homology::difference_on_window(dd, zero, 6).has_value());
}

TEST(TapeChains, ShiftPushforwardMovesSupport) {
  TapeSpace tape(point(), TapeCoarse::band, TapeBornology::finite_window);
  homology::TapeChain ones(tape, 0, 0, [](auto) { return std::int64_t{1}; });
  auto moved = homology::pushforward({TapeMap::Kind::shift, 2, {0}}, ones, tape);
  TapePoint t0[] = {{0, 0}}, t1[] = {{1, 0}}, t2[] = {{2, 0}};
  EXPECT_EQ(moved(t0), 0);
  EXPECT_EQ(moved(t1), 0);
  EXPECT_EQ(moved(t2), 1);
  EXPECT_FALSE(homology::invariance_violation(moved, 8).has_value());
}

TEST(TapeChains, DiscreteTapesForceRadiusZero) {
  TapeSpace tape(point(), TapeCoarse::discrete, TapeBornology::finite_window);
  homology::TapeChain c(tape, 1, 3, [](auto) { return std::int64_t{1}; });
  TapePoint apart[] = {{0, 0}, {1, 0}};
  EXPECT_FALSE(c.in_support(apart));
}

}  // namespace
