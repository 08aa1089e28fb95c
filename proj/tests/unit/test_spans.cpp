#include <gtest/gtest.h>

#include "coarsetr/error.hpp"
#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/spans/covering.hpp"
#include "coarsetr/spans/span.hpp"

using namespace coarsetr;
using namespace coarsetr::spans;
using coarse::Entourage;
using coarse::Map;
using coarse::Space;
using grp::GSet;

namespace {

GSet plain(std::size_t n) { return GSet::trivial(grp::trivial_group(), n); }

Space c2_free(bool max) {
  auto c2 = grp::cyclic_group(2);
  GSet s = GSet::cosets(c2, grp::trivial_subgroup(*c2));
  return max ? Space::maximal(s) : Space::minimal(s);
}

// (i, x) -> x on I (x) X.
Map projection(std::size_t k, std::size_t n) {
  Map m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < n; ++x) m.push_back(static_cast<coarse::Point>(x));
  return m;
}

TEST(Coverings, ProjectionFromBoundedUnion) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space bd = coarse::bounded_union(plain(4), x);
  EXPECT_TRUE(is_bounded_coarse_covering(projection(4, 3), bd, x).ok);
  EXPECT_TRUE(is_bounded_covering(projection(4, 3), bd, x).ok);
  EXPECT_TRUE(is_bounded_covering(coarse::identity_map(3), x, x).ok);
}

TEST(Coverings, FoldWithinOneComponentFails) {
  Space x = Space::maximal(plain(2));
  Space glued = Space::maximal(plain(4));
  auto d = is_bounded_coarse_covering(projection(2, 2), glued, x);
  EXPECT_FALSE(d.ok);
  EXPECT_EQ(d.condition, "2");
  // Keeping the copies apart makes the fold a covering.
  EXPECT_TRUE(is_bounded_coarse_covering(projection(2, 2), coarse::coproduct({x, x}), x).ok);
}

TEST(Coverings, NotInducedStructureFails) {
  // W has the minimal structure but its image component is a single point
  // pair that the induced structure would join.
  Space w = Space::minimal(plain(2));
  Space z = Space::maximal(plain(2));
  EXPECT_FALSE(is_bounded_coarse_covering(coarse::identity_map(2), w, z).ok);
}

TEST(Pullback, AlongIdentity) {
  Space x(plain(3), {Entourage::from_pairs(3, {{1, 2}})});
  Space v = Space::minimal(plain(2));
  Map g{0, 2};
  auto p = pullback(g, v, coarse::identity_map(3), x, x);
  EXPECT_EQ(p.apex, v);
  EXPECT_EQ(p.to_first, coarse::identity_map(2));
}

TEST(Pullback, FiberOfBoundedUnion) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space pt = Space::minimal(plain(1));
  auto p = pullback({2}, pt, projection(5, 3), coarse::bounded_union(plain(5), x), x);
  EXPECT_EQ(p.apex.size(), 5u);
  EXPECT_EQ(p.apex.components().blocks, 5u);
}

TEST(Squares, IdentitySquareIsAdmissible) {
  Space x = c2_free(true);
  Map id = coarse::identity_map(2);
  EXPECT_TRUE(is_admissible({x, x, x, x, id, id, id, id}).verdict.ok);
}

TEST(Squares, CompletedCospanIsAdmissible) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space v = Space::minimal(plain(2));
  Space u = coarse::bounded_union(plain(3), x);
  auto sq = complete_square({0, 2}, v, projection(3, 3), u, x);
  auto d = is_admissible(sq);
  EXPECT_TRUE(d.verdict.ok);
  EXPECT_TRUE(d.left_edge_covering);
}

TEST(Squares, StrictSubspaceOfPullbackIsNotCartesian) {
  Space x = Space::minimal(plain(1));
  Space u = coarse::bounded_union(plain(2), x);
  auto sq = complete_square({0}, x, projection(2, 1), u, x);
  ASSERT_EQ(sq.W.size(), 2u);
  Square cut{Space::minimal(plain(1)), sq.U, sq.V, sq.Z, {0}, {0}, sq.g, sq.u};
  auto d = is_admissible(cut);
  EXPECT_FALSE(d.verdict.ok);
  EXPECT_FALSE(d.verdict.witness.empty());
}

TEST(Squares, CompletionsAreUniquelyIsomorphic) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space u = coarse::bounded_union(plain(2), x);
  auto sq = complete_square(coarse::identity_map(3), x, projection(2, 3), u, x);
  // Renumber the apex by reversing it; the spans (w, f) stay isomorphic.
  std::size_t n = sq.W.size();
  Map rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = static_cast<coarse::Point>(n - 1 - i);
  auto relabelled = coarse::induced_structure(sq.W.carrier(), rev, sq.W);
  Span a{sq.V, sq.W, sq.U, sq.w, sq.f};
  Span b{sq.V, relabelled, sq.U, coarse::compose(rev, sq.w), coarse::compose(rev, sq.f)};
  auto iso = span_isomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, rev);
}

TEST(Spans, EmbeddingIsFunctorial) {
  Space a = Space::minimal(plain(3));
  Space b(plain(2), {Entourage::from_pairs(2, {{0, 1}})});
  Space c = Space::minimal(plain(1));
  Map f{0, 1, 1}, g{0, 0};
  EXPECT_TRUE(spans_isomorphic(compose(embed(f, a, b), embed(g, b, c)),
                               embed(coarse::compose(f, g), a, c)));
  EXPECT_TRUE(spans_isomorphic(embed(coarse::identity_map(3), a, a), identity_span(a)));
}

TEST(Spans, EmbeddedInclusionKeepsItsApex) {
  Space ab = Space::minimal(plain(2));
  Space a = Space::minimal(plain(1));
  Span s = embed({0}, a, ab);
  EXPECT_EQ(s.apex, a);
  EXPECT_EQ(s.right, Map{0});
}

TEST(Spans, TransferAlongIdentity) {
  Space x = c2_free(false);
  EXPECT_TRUE(spans_isomorphic(transfer(coarse::identity_map(2), x, x), identity_span(x)));
}

TEST(Spans, SingletonIndexTransferIsSliceInclusion) {
  Space x = c2_free(true);
  GSet one = GSet::trivial(x.group(), 1);
  Span j = embed(slice_inclusion(x, one, 0), x, coarse::bounded_union(one, x));
  EXPECT_TRUE(spans_isomorphic(transfer_index(x, one), j));
}

TEST(Spans, ProjectionAfterInclusionIsIdentity) {
  Space x(plain(3), {Entourage::from_pairs(3, {{1, 2}})});
  GSet index = plain(3);
  for (coarse::Point i = 0; i < 3; ++i) {
    Span j = embed(slice_inclusion(x, index, i), x, coarse::bounded_union(index, x));
    EXPECT_TRUE(spans_isomorphic(compose(j, slice_projection(x, index, i)), identity_span(x)));
  }
}

TEST(Spans, TransferSplitsOffAFixedSlice) {
  Space x = c2_free(true);
  auto c2 = x.group();
  GSet index = GSet::trivial(c2, 3), smaller = GSet::trivial(c2, 2);
  Space big = coarse::bounded_union(index, x);
  Space small = coarse::bounded_union(smaller, x);
  // I' (x) X -> I (x) X keeps slices 0 and 1; slice 2 is split off.
  Map include = coarse::identity_map(small.size());
  Span rest = compose(transfer_index(x, smaller), embed(include, small, big));
  Span j2 = embed(slice_inclusion(x, index, 2), x, big);
  EXPECT_TRUE(spans_isomorphic(transfer_index(x, index), add(rest, j2)));
}

TEST(Spans, SliceInclusionsSumToTransfer) {
  Space x(plain(2), {Entourage::from_pairs(2, {{0, 1}})});
  GSet index = plain(2);
  Space big = coarse::bounded_union(index, x);
  Span j0 = embed(slice_inclusion(x, index, 0), x, big);
  Span j1 = embed(slice_inclusion(x, index, 1), x, big);
  EXPECT_TRUE(spans_isomorphic(add(j0, j1), transfer_index(x, index)));
  EXPECT_TRUE(spans_isomorphic(add(j0, j1), add(j1, j0)));
  EXPECT_TRUE(spans_isomorphic(add(j0, zero_span(x, big)), j0));
}

TEST(Spans, IsomorphismDetectsApexMismatch) {
  Space x = Space::minimal(plain(2));
  Span s = identity_span(x);
  EXPECT_TRUE(spans_isomorphic(s, s));
  Span doubled = add(s, s);
  EXPECT_FALSE(spans_isomorphic(s, doubled));
  EXPECT_TRUE(HoMorphism(s) == HoMorphism(s));
}

TEST(Spans, CompositionIsUnitalAndAssociative) {
  Space x(plain(3), {Entourage::from_pairs(3, {{0, 1}})});
  Space bd = coarse::bounded_union(plain(2), x);
  Span tr = transfer_index(x, plain(2));
  Span fold = embed(projection(2, 3), bd, x);
  EXPECT_TRUE(spans_isomorphic(compose(identity_span(x), tr), tr));
  EXPECT_TRUE(spans_isomorphic(compose(tr, identity_span(bd)), tr));
  EXPECT_TRUE(spans_isomorphic(compose(compose(tr, fold), tr), compose(tr, compose(fold, tr))));
}

TEST(Spans, InvalidLegsAreRejected) {
  Space w = Space::maximal(plain(2));
  Space x = Space::minimal(plain(1));
  // A leg folding a component onto a point is not a covering.
  EXPECT_THROW(make_span(x, w, x, {0, 0}, {0, 0}), ValidationError);
}

}  // namespace
