#include "coarsetr/fuzz/properties.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "coarsetr/error.hpp"
#include "coarsetr/homology/axioms.hpp"
#include "coarsetr/mackey/em.hpp"

namespace coarsetr::fuzz {

namespace {

constexpr Limits kLimits{8, 3};
constexpr std::size_t kDegree = 2;

CaseResult fail(std::string why) { return {false, std::move(why)}; }

CaseResult squares_case(std::uint64_t seed) {
  Rng rng(seed);
  return check_square_identities(random_cospan(rng, kLimits), kDegree);
}

CaseResult coverings_case(std::uint64_t seed) {
  Rng rng(seed);
  auto g = random_group(rng);
  Space z = random_space(rng, g, kLimits);
  auto outer = random_covering(rng, z, kLimits.max_points);
  auto inner = random_covering(rng, outer.apex, kLimits.max_points);
  if (!spans::is_bounded_covering(outer.map, outer.apex, z).ok)
    return fail("generated covering rejected");
  auto composite = coarse::compose(inner.map, outer.map);
  auto d = spans::is_bounded_covering(composite, inner.apex, z);
  if (!d.ok) return fail("composite of coverings rejected: " + d.condition);
  return {};
}

CaseResult spans_case(std::uint64_t seed) {
  Rng rng(seed);
  auto chain = random_span_chain(rng, 3, kLimits);
  auto const& [a, b, c] = std::tie(chain[0], chain[1], chain[2]);
  if (!spans::spans_isomorphic(spans::compose(spans::compose(a, b), c),
                               spans::compose(a, spans::compose(b, c))))
    return fail("composition is not associative");
  if (!spans::spans_isomorphic(spans::compose(spans::identity_span(a.src), a), a))
    return fail("identity is not a left unit");
  if (!spans::spans_isomorphic(spans::compose(a, spans::identity_span(a.dst)), a))
    return fail("identity is not a right unit");
  if (!spans::spans_isomorphic(spans::add(a, spans::zero_span(a.src, a.dst)), a))
    return fail("empty span is not a unit for addition");
  return {};
}

CaseResult axioms_case(std::uint64_t seed) {
  Rng rng(seed);
  auto g = random_group(rng);
  Space x = random_space(rng, g, kLimits);
  for (auto const& check : homology::check_axioms(x, kDegree))
    if (!check.ok) return fail(check.name + ": " + check.failures.front());
  auto pair = random_complementary_pair(rng, x);
  auto ex = homology::check_excision(x, pair.z, pair.y, kDegree);
  if (!ex.ok) return fail("excision: " + ex.failures.front());
  return {};
}

CaseResult mackey_case(std::uint64_t seed) {
  Rng rng(seed);
  auto g = random_group(rng);
  GSet a = random_gset(rng, g, 4), b = random_gset(rng, g, 4),
       c = random_gset(rng, g, 4);
  auto s1 = random_gfin_span(rng, a, b, 4);
  auto s2 = random_gfin_span(rng, b, c, 4);
  auto s12 = mackey::compose_gfin_spans(s1, s2);
  auto ha = mackey::em_object(a, kDegree), hb = mackey::em_object(b, kDegree),
       hc = mackey::em_object(c, kDegree);
  for (std::size_t n = 0; n <= kDegree; ++n) {
    auto lhs = mackey::em_morphism(s12, ha, hc, n);
    auto rhs = homology::multiply(mackey::em_morphism(s1, ha, hb, n),
                                  mackey::em_morphism(s2, hb, hc, n));
    if (!homology::same_homomorphism(lhs, rhs, ha.degree(n).orders))
      return fail("EM is not functorial in degree " + std::to_string(n));
  }
  auto lat = grp::subgroups(*g);
  GSet pt = GSet::trivial(g, 1);
  auto to_pt = [](GSet const& s) { return Map(s.size(), 0); };
  mackey::GFinSpan x{pt, a, pt, to_pt(a), to_pt(a)};
  mackey::GFinSpan y{pt, b, pt, to_pt(b), to_pt(b)};
  auto xy = mackey::compose_gfin_spans(x, y);
  auto ma = mackey::burnside_marks(a, lat), mb = mackey::burnside_marks(b, lat),
       mxy = mackey::burnside_marks(xy.apex, lat);
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (mxy[i] != ma[i] * mb[i]) return fail("marks are not multiplicative");
  auto s3 = random_gfin_span(rng, c, a, 4);
  if (!mackey::gfin_spans_isomorphic(
          mackey::compose_gfin_spans(s12, s3),
          mackey::compose_gfin_spans(s1, mackey::compose_gfin_spans(s2, s3))))
    return fail("Burnside composition is not associative");
  return {};
}

}  // namespace

CaseResult check_square_identities(Cospan const& c, std::size_t max_degree) {
  auto sq = spans::complete_square(c.g, c.v, c.u, c.u_space, c.z);
  auto d = spans::is_admissible(sq);
  if (!d.verdict.ok) return fail("completed square is not admissible: " + d.verdict.condition);
  if (!d.left_edge_covering) return fail("left edge of the square is not a bounded covering");
  auto cw = coarse::compose(sq.w, c.c);  // W -> V -> X
  for (std::size_t n = 0; n <= max_degree; ++n) {
    homology::ChainBasis bx(c.x, n), bv(c.v, n), bz(c.z, n), bu(c.u_space, n),
        bw(sq.W, n);
    // u^* w^* = (wu)^*: pull back along V -> X, then along W -> V.
    auto lhs1 = homology::multiply(homology::transfer(sq.w, bw, bv),
                                   homology::transfer(c.c, bv, bx));
    auto rhs1 = homology::transfer(cw, bw, bx);
    if (!(lhs1 == rhs1))
      return fail("u^*w^* != (wu)^* in degree " + std::to_string(n));
    // h_* u^* = v^* f_*: around the square from C(V) to C(U).
    auto lhs2 = homology::multiply(homology::pushforward(sq.f, bw, bu),
                                   homology::transfer(sq.w, bw, bv));
    auto rhs2 = homology::multiply(homology::transfer(c.u, bu, bz),
                                   homology::pushforward(c.g, bv, bz));
    if (!(lhs2 == rhs2))
      return fail("h_*u^* != v^*f_* in degree " + std::to_string(n));
  }
  return {};
}

std::vector<Suite> const& suites() {
  static std::vector<Suite> const all{
      {"squares", "admissible squares and the chain-level cocycle identities",
       squares_case},
      {"coverings", "composites of bounded coverings", coverings_case},
      {"spans", "associativity, units and the additive unit of span composition",
       spans_case},
      {"axioms", "homology axioms on random spaces and complementary pairs",
       axioms_case},
      {"mackey", "EM functoriality, marks and Burnside composition", mackey_case},
  };
  return all;
}

Suite const* find_suite(std::string const& name) {
  for (auto const& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SuiteSummary run_suite(Suite const& suite, std::uint64_t seed,
                       std::uint64_t cases, unsigned threads) {
  std::vector<CaseResult> results(cases);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < cases;) {
      try {
        results[i] = suite.run(case_seed(seed, i));
      } catch (std::exception const& e) {
        results[i] = fail(std::string("exception: ") + e.what());
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteSummary s{suite.name, cases, 0, {}};
  for (std::uint64_t i = 0; i < cases; ++i) {
    if (results[i].ok) ++s.passed;
    else s.failures.emplace_back(i, results[i].failure);
  }
  return s;
}

}  // namespace coarsetr::fuzz
