#include <gtest/gtest.h>

#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/homology/chains.hpp"
#include "coarsetr/homology/homology.hpp"
#include "coarsetr/spans/span.hpp"
#include "oracle.hpp"

using namespace coarsetr;
using coarse::Space;
using homology::AbelianGroup;

namespace {

grp::GSet trivial_set(std::size_t n) {
  return grp::GSet::trivial(grp::trivial_group(), n);
}

AbelianGroup from_oracle(oracle::Group const& g) {
  AbelianGroup a;
  a.rank = g.rank;
  for (auto t : g.torsion) a.torsion.push_back(t);
  return a;
}

TEST(Homology, PointIsIntegersInDegreeZero) {
  homology::Homology h(Space::minimal(trivial_set(1)), 3);
  EXPECT_EQ(h.degree(0).group().str(), "Z");
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(h.degree(n).group().is_zero());
}

TEST(Homology, ComponentsGiveFreeRank) {
  for (std::size_t k = 1; k <= 4; ++k) {
    homology::Homology h(Space::minimal(trivial_set(k)), 2);
    EXPECT_EQ(h.degree(0).group().rank, k);
    EXPECT_TRUE(h.degree(1).group().is_zero());
  }
}

TEST(Homology, EmptySpaceVanishes) {
  homology::Homology h(Space::minimal(trivial_set(0)), 2);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_TRUE(h.degree(n).group().is_zero());
}

TEST(Homology, AgreesWithBruteForce) {
  auto c2 = grp::cyclic_group(2);
  auto s3 = grp::symmetric_group(3);
  std::vector<Space> spaces{
      Space::maximal(trivial_set(3)),
      Space::maximal(grp::GSet::cosets(c2, grp::trivial_subgroup(*c2))),
      Space::minimal(grp::GSet::cosets(c2, grp::trivial_subgroup(*c2))),
      Space::maximal(grp::GSet::cosets(s3, grp::trivial_subgroup(*s3))),
  };
  for (auto const& x : spaces) {
    homology::Homology h(x, 2);
    for (std::size_t n = 0; n <= 2; ++n)
      EXPECT_EQ(h.degree(n).group(), from_oracle(oracle::homology(x, n)))
          << "degree " << n;
  }
}

grp::GSet c2_free_set() {
  auto c2 = grp::cyclic_group(2);
  return grp::GSet::cosets(c2, grp::trivial_subgroup(*c2));
}

std::vector<std::int64_t> times(homology::SparseMatrix const& m,
                                std::vector<std::int64_t> const& v) {
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (auto [i, x] : m.column(j)) out[i] += x * v[j];
  return out;
}

TEST(Chains, BasisSizes) {
  for (std::size_t n = 0; n <= 3; ++n)
    EXPECT_EQ(homology::ChainBasis(Space::minimal(trivial_set(1)), n).size(), 1u);
  Space two = Space::minimal(trivial_set(2));
  EXPECT_EQ(homology::ChainBasis(two, 0).size(), 2u);
  EXPECT_EQ(homology::ChainBasis(two, 1).size(), 2u);
  EXPECT_EQ(homology::ChainBasis(Space::minimal(c2_free_set()), 0).size(), 1u);
  // Orbits of pairs in C2 acting freely on two related points: 4 pairs, 2 orbits.
  EXPECT_EQ(homology::ChainBasis(Space::maximal(c2_free_set()), 1).size(), 2u);
}

TEST(Chains, BoundaryOfThePoint) {
  homology::ChainComplexModel m(Space::minimal(trivial_set(1)), 4);
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_EQ(m.boundary(n).at(0, 0), n % 2 == 0 ? 1 : 0) << n;
}

TEST(Chains, BoundaryOfAnEdge) {
  Space x = Space::maximal(trivial_set(2));
  homology::ChainBasis b1(x, 1), b0(x, 0);
  auto d = homology::boundary_matrix(b1, b0);
  coarse::Point edge[] = {0, 1};
  std::size_t e = *b1.orbit_of(edge);
  EXPECT_EQ(d.at(0, e), -1);
  EXPECT_EQ(d.at(1, e), 1);
}

TEST(Chains, BoundaryMatchesOracleAndSquaresToZero) {
  std::vector<Space> spaces{Space::maximal(trivial_set(3)), Space::maximal(c2_free_set()),
                            Space(trivial_set(4), {coarse::Entourage::from_pairs(4, {{0, 2}})})};
  for (auto const& x : spaces) {
    homology::ChainComplexModel m(x, 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto dense = oracle::boundary(x, n);
      auto const& d = m.boundary(n);
      ASSERT_EQ(dense.size(), d.rows());
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_EQ(d.at(i, j), dense[i][j]);
      if (n >= 2) {
        auto dd = homology::multiply(m.boundary(n - 1), m.boundary(n));
        for (std::size_t j = 0; j < dd.cols(); ++j) EXPECT_TRUE(dd.column(j).empty());
      }
    }
  }
}

TEST(Chains, PushforwardSumsOverFibers) {
  Space x = Space::maximal(trivial_set(2));
  Space both = coarse::coproduct({x, x});
  coarse::Map fold{0, 1, 0, 1};
  auto f = homology::pushforward(fold, homology::ChainBasis(both, 0), homology::ChainBasis(x, 0));
  EXPECT_EQ(times(f, {1, 1, 1, 1}), (std::vector<std::int64_t>{2, 2}));

  Space pt = Space::minimal(trivial_set(1));
  for (std::size_t n = 1; n <= 4; ++n) {
    Space src = Space::minimal(trivial_set(n));
    auto c = homology::pushforward(coarse::Map(n, 0), homology::ChainBasis(src, 0),
                                   homology::ChainBasis(pt, 0));
    EXPECT_EQ(times(c, std::vector<std::int64_t>(n, 1)),
              (std::vector<std::int64_t>{static_cast<std::int64_t>(n)}));
  }
}

TEST(Chains, TransferThenFoldDoubles) {
  Space pt = Space::minimal(trivial_set(1));
  Space w = coarse::bounded_union(trivial_set(2), pt);
  coarse::Map fold{0, 0};
  homology::ChainBasis bw(w, 0), bp(pt, 0);
  auto tr = homology::transfer(fold, bw, bp);
  auto pulled = times(tr, {1});
  EXPECT_EQ(pulled, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(times(homology::pushforward(fold, bw, bp), pulled), (std::vector<std::int64_t>{2}));
}

TEST(Homology, KnownGroupHomology) {
  // Free actions on one component compute the group homology of G.
  homology::Homology c2(Space::maximal(c2_free_set()), 3);
  EXPECT_EQ(c2.degree(0).group().str(), "Z");
  EXPECT_EQ(c2.degree(1).group().str(), "Z/2");
  EXPECT_EQ(c2.degree(2).group().str(), "0");
  EXPECT_EQ(c2.degree(3).group().str(), "Z/2");
  auto s3 = grp::symmetric_group(3);
  homology::Homology h(Space::maximal(grp::GSet::cosets(s3, grp::trivial_subgroup(*s3))), 3);
  EXPECT_EQ(h.degree(1).group().str(), "Z/2");
  EXPECT_EQ(h.degree(2).group().str(), "0");
  EXPECT_EQ(h.degree(3).group().str(), "Z/6");
}

TEST(Homology, GeneratorsAreCyclesWithUnitCoordinates) {
  homology::Homology h(Space::maximal(c2_free_set()), 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    auto const& g = h.degree(n);
    for (std::size_t k = 0; k < g.generator_count(); ++k) {
      std::vector<std::int64_t> cycle(g.generators.rows());
      for (std::size_t i = 0; i < cycle.size(); ++i)
        cycle[i] = static_cast<std::int64_t>(g.generators(i, k));
      auto boundary = times(h.model().boundary(n), cycle);
      for (auto v : boundary) EXPECT_EQ(v, 0);
      for (std::size_t r = 0; r < g.generator_count(); ++r) {
        homology::BigInt c = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i) c += g.coordinates(r, i) * cycle[i];
        if (g.orders[r] != 0) c = homology::num::mod(c, g.orders[r]);
        EXPECT_EQ(c, r == k ? 1 : 0);
      }
    }
  }
}

TEST(Homology, IdentitySpanInducesIdentity) {
  Space x = Space::maximal(c2_free_set());
  homology::Homology h(x, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    auto m = homology::induced_map(spans::identity_span(x), h, h, n);
    EXPECT_EQ(m, homology::Matrix<homology::BigInt>::identity(h.degree(n).generator_count()));
  }
}

TEST(Homology, SliceProjectionAfterTransferIsIdentity) {
  Space x = Space::maximal(c2_free_set());
  grp::GSet index = grp::GSet::trivial(x.group(), 3);
  homology::Homology hx(x, 2);
  for (coarse::Point i = 0; i < 3; ++i) {
    auto s = spans::compose(spans::transfer_index(x, index), spans::slice_projection(x, index, i));
    for (std::size_t n = 0; n <= 2; ++n)
      EXPECT_TRUE(homology::is_multiple_of_identity(homology::induced_map(s, hx, hx, n),
                                                    hx.degree(n).orders, 1));
  }
}

TEST(Homology, IdenticalSummandsAreComputedOnce) {
  homology::clear_homology_cache();
  Space one = Space::maximal(trivial_set(3));
  homology::Homology a(one, 2);
  auto after_one = homology::homology_cache_size();
  homology::Homology b(coarse::coproduct({one, one, one}), 2);
  EXPECT_EQ(homology::homology_cache_size(), after_one);
  EXPECT_EQ(b.degree(0).group().rank, 3u);
}

}  // namespace
