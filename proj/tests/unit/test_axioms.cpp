#include <gtest/gtest.h>

#include "coarsetr/error.hpp"
#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/homology/axioms.hpp"
#include "coarsetr/homology/homology.hpp"

using namespace coarsetr;
using namespace coarsetr::homology;
using coarse::Entourage;
using coarse::Space;
using grp::GSet;

namespace {

GSet plain(std::size_t n) { return GSet::trivial(grp::trivial_group(), n); }

Space c2_free_max() {
  auto c2 = grp::cyclic_group(2);
  return Space::maximal(GSet::cosets(c2, grp::trivial_subgroup(*c2)));
}

std::vector<Space> samples() {
  return {Space::minimal(plain(1)), Space::minimal(plain(3)), Space::maximal(plain(3)),
          Space(plain(4), {Entourage::from_pairs(4, {{0, 1}, {2, 3}})}), c2_free_max()};
}

void expect_ok(AxiomCheck const& c) {
  EXPECT_TRUE(c.ok) << c.name << ": " << (c.failures.empty() ? "" : c.failures.front());
  EXPECT_EQ(c.label, "exact");
}

TEST(Axioms, CoarseInvariance) {
  for (auto const& x : samples()) expect_ok(check_coarse_invariance(x, 2));
}

TEST(Axioms, ExcisionForTrivialAndSplitPairs) {
  Space x(plain(4), {Entourage::from_pairs(4, {{0, 1}, {2, 3}})});
  expect_ok(check_excision(x, {0, 1, 2, 3}, {}, 2));
  // X = X1 u X2 with the parts unrelated: Z = X1, Y = X2.
  expect_ok(check_excision(x, {0, 1}, {2, 3}, 2));
  EXPECT_TRUE(is_complementary_pair(x, {0, 1}, {3}));
  EXPECT_FALSE(is_complementary_pair(x, {0}, {3}));
  EXPECT_THROW(check_excision(x, {0}, {3}, 2), ValidationError);
}

TEST(Axioms, UContinuity) {
  expect_ok(check_u_continuity(Space::minimal(plain(3)), 2));
  // A chain 0-1-2: the tower stabilizes at the closure.
  expect_ok(check_u_continuity(Space(plain(3), {Entourage::from_pairs(3, {{0, 1}, {1, 2}})}), 2));
  expect_ok(check_u_continuity(c2_free_max(), 2));
}

TEST(Axioms, Additivity) {
  auto c2_point = Space::minimal(GSet::trivial(c2_free_max().group(), 1));
  expect_ok(check_additivity({c2_point, c2_free_max()}, 2));
  expect_ok(check_additivity({Space::maximal(plain(2))}, 2));
}

TEST(Axioms, WeakTransfers) {
  for (std::size_t k : {1u, 3u, 4u}) {
    expect_ok(check_weak_transfers(Space::minimal(plain(1)), k, 2));
    expect_ok(check_weak_transfers(c2_free_max(), k, 2));
  }
}

TEST(Axioms, StrongAdditivity) {
  expect_ok(check_strong_additivity({Space::maximal(plain(2))}, 2));
  Space pt = Space::minimal(plain(1));
  expect_ok(check_strong_additivity({pt, pt}, 2));
  Homology two(coarse::free_union(plain(2), pt), 1);
  EXPECT_EQ(two.degree(0).group().str(), "Z^2");
}

TEST(Axioms, FoldLaw) {
  for (auto const& x : samples())
    for (std::size_t k : {2u, 3u, 5u}) expect_ok(check_fold_law(x, k, 2));
}

TEST(Axioms, AllChecksOnSamples) {
  for (auto const& x : samples())
    for (auto const& c : check_axioms(x, 2)) expect_ok(c);
}

TEST(Flasque, FiniteSpacesHaveNoWitness) {
  for (auto const& x : samples()) {
    auto r = check_flasque_witness(x, coarse::identity_map(x.size()));
    EXPECT_TRUE(r.close_to_identity);
    EXPECT_FALSE(r.escapes_bounded_sets);
    EXPECT_FALSE(r.ok());
  }
  EXPECT_TRUE(check_flasque_witness(Space::minimal(plain(0)), {}).ok());
}

}  // namespace
