#include "coarsetr/fuzz/generators.hpp"

#include <algorithm>
#include <numeric>

#include "coarsetr/error.hpp"
#include "coarsetr/grp/orbit_category.hpp"

namespace coarsetr::fuzz {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::size_t> size;
  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  grp::Partition partition() {
    std::vector<std::uint32_t> labels(parent.size());
    for (std::uint32_t x = 0; x < parent.size(); ++x) labels[x] = find(x);
    return grp::canonical_partition(labels);
  }
};

std::vector<std::vector<Point>> orbit_lists(GSet const& s) {
  auto p = s.orbits();
  return p.members();
}

Space empty_space(grp::GroupPtr const& g) {
  return Space::minimal(GSet::trivial(g, 0));
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InternalError("Rng::below(0)");
  std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  while (true) {
    std::uint64_t v = engine_();
    if (v < limit) return v % n;
  }
}

grp::GroupPtr random_group(Rng& rng) {
  switch (rng.below(6)) {
    case 0: return grp::trivial_group();
    case 1: return grp::cyclic_group(2);
    case 2: return grp::cyclic_group(3);
    case 3: return grp::cyclic_group(4);
    case 4: return grp::klein_four_group();
    default: return grp::symmetric_group(3);
  }
}

GSet random_gset(Rng& rng, grp::GroupPtr const& g, std::size_t max_points,
                 bool allow_empty) {
  auto lat = grp::subgroups(*g);
  // Orbits that fit at all.
  std::vector<std::size_t> fitting;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (g->order() / lat.subgroups[i].order() <= max_points) fitting.push_back(i);
  GSet out = GSet::trivial(g, 0);
  std::size_t target = allow_empty ? rng.below(max_points + 1)
                                   : 1 + rng.below(std::max<std::size_t>(max_points, 1));
  for (int tries = 0; tries < 16 && out.size() < target; ++tries) {
    auto const& h = lat.subgroups[rng.pick(fitting)];
    std::size_t n = g->order() / h.order();
    if (out.size() + n > max_points) continue;
    out = GSet::coproduct(out, GSet::cosets(g, h));
  }
  if (out.size() == 0 && !allow_empty) out = GSet::trivial(g, 1);
  return out;
}

grp::Partition random_partition(Rng& rng, GSet const& s,
                                std::size_t max_component) {
  std::size_t n = s.size();
  UnionFind uf(n);
  if (n < 2) return uf.partition();
  std::size_t attempts = rng.below(2 * n + 1);
  for (std::size_t t = 0; t < attempts; ++t) {
    Point a = static_cast<Point>(rng.below(n));
    Point b = static_cast<Point>(rng.below(n));
    UnionFind trial = uf;
    for (grp::Element e = 0; e < s.group()->order(); ++e)
      trial.unite(s.act(e, a), s.act(e, b));
    bool fits = true;
    for (std::uint32_t x = 0; x < n; ++x)
      fits = fits && trial.size[trial.find(x)] <= max_component;
    if (fits) uf = std::move(trial);
  }
  return uf.partition();
}

Space random_space(Rng& rng, grp::GroupPtr const& g, Limits const& lim) {
  GSet s = random_gset(rng, g, lim.max_points);
  return Space::from_partition(s, random_partition(rng, s, lim.max_component));
}

std::optional<Map> random_equivariant_map(Rng& rng, GSet const& src,
                                          GSet const& dst) {
  Map f(src.size());
  for (auto const& orbit : orbit_lists(src)) {
    Point x = orbit.front();
    auto stab = src.stabilizer(x);
    std::vector<Point> targets;
    for (Point y = 0; y < dst.size(); ++y) {
      bool ok = std::all_of(stab.begin(), stab.end(),
                            [&](grp::Element e) { return dst.act(e, y) == y; });
      if (ok) targets.push_back(y);
    }
    if (targets.empty()) return std::nullopt;
    Point y = rng.pick(targets);
    for (grp::Element e = 0; e < src.group()->order(); ++e)
      f[src.act(e, x)] = dst.act(e, y);
  }
  return f;
}

Space controlled_source(GSet const& carrier, grp::Partition const& base,
                        Map const& f, Space const& dst) {
  std::vector<std::uint32_t> pulled(carrier.size());
  for (Point x = 0; x < carrier.size(); ++x)
    pulled[x] = dst.components().label[f[x]];
  auto p = coarse::meet(base, grp::canonical_partition(pulled));
  return Space::from_partition(carrier, p);
}

Covering random_covering(Rng& rng, Space const& z, std::size_t max_points) {
  auto const& g = z.group();
  auto const& zc = z.carrier();
  auto comps = z.components().members();
  auto lat = grp::subgroups(*g);
  std::vector<Space> pieces;
  Map map;
  std::size_t used = 0;
  std::size_t wanted = 1 + rng.below(3);
  for (std::size_t t = 0; t < 8 && pieces.size() < wanted && !comps.empty(); ++t) {
    auto const& comp = rng.pick(comps);
    std::uint32_t label = z.components().label[comp.front()];
    std::vector<grp::Subgroup> inside;
    for (auto const& h : lat.subgroups) {
      bool stabilizes = std::all_of(
          h.elements().begin(), h.elements().end(), [&](grp::Element e) {
            return z.translate_component(e, label) == label;
          });
      if (stabilizes) inside.push_back(h);
    }
    auto const& h = rng.pick(inside);
    std::size_t size = g->order() / h.order() * comp.size();
    if (used + size > max_points) continue;
    auto cosets = grp::coset_space(g, h);
    GSet product = GSet::product(cosets.set, zc);
    std::vector<Point> subset;
    std::vector<std::uint32_t> labels;
    Map piece_map;
    for (Point p = 0; p < cosets.set.size(); ++p) {
      std::uint32_t moved =
          z.translate_component(cosets.representative[p], label);
      for (Point y = 0; y < zc.size(); ++y)
        if (z.components().label[y] == moved)
          subset.push_back(static_cast<Point>(p * zc.size() + y));
    }
    std::sort(subset.begin(), subset.end());
    for (Point q : subset) {
      labels.push_back(q / static_cast<Point>(zc.size()));
      piece_map.push_back(q % static_cast<Point>(zc.size()));
    }
    GSet carrier = GSet::restrict_to(product, subset);
    pieces.push_back(
        Space::from_partition(carrier, grp::canonical_partition(labels)));
    map.insert(map.end(), piece_map.begin(), piece_map.end());
    used += size;
  }
  if (pieces.empty()) return {empty_space(g), {}};
  return {coarse::coproduct(pieces), std::move(map)};
}

spans::Span random_span(Rng& rng, Space const& x, GSet const& y_carrier,
                        Limits const& lim) {
  for (int t = 0; t < 16; ++t) {
    auto cov = random_covering(rng, x, lim.max_points);
    auto f = random_equivariant_map(rng, cov.apex.carrier(), y_carrier);
    if (!f) continue;
    auto base = random_partition(rng, y_carrier, lim.max_component);
    UnionFind uf(y_carrier.size());
    for (Point a = 0; a < y_carrier.size(); ++a)
      for (Point b = 0; b < y_carrier.size(); ++b)
        if (base.label[a] == base.label[b]) uf.unite(a, b);
    for (Point a = 0; a < cov.apex.size(); ++a)
      for (Point b = 0; b < cov.apex.size(); ++b)
        if (cov.apex.related(a, b)) uf.unite((*f)[a], (*f)[b]);
    Space y = Space::from_partition(y_carrier, uf.partition());
    return spans::make_span(x, cov.apex, y, cov.map, *f);
  }
  return spans::zero_span(x, Space::minimal(y_carrier));
}

std::vector<spans::Span> random_span_chain(Rng& rng, std::size_t length,
                                           Limits const& lim) {
  auto g = random_group(rng);
  Space x = random_space(rng, g, lim);
  std::vector<spans::Span> out;
  for (std::size_t i = 0; i < length; ++i) {
    GSet y = random_gset(rng, g, lim.max_points);
    out.push_back(random_span(rng, x, y, lim));
    x = out.back().dst;
  }
  return out;
}

Cospan random_cospan(Rng& rng, Limits const& lim) {
  auto g = random_group(rng);
  Space x = random_space(rng, g, lim);
  spans::Span s = random_span(rng, x, random_gset(rng, g, lim.max_points), lim);
  for (int t = 0; t < 4 && s.apex.size() == 0; ++t)
    s = random_span(rng, x, random_gset(rng, g, lim.max_points), lim);
  Covering cov = random_covering(rng, s.dst, lim.max_points);
  for (int t = 0; t < 4 && cov.apex.size() == 0; ++t)
    cov = random_covering(rng, s.dst, lim.max_points);
  return {x, s.apex, s.dst, cov.apex, s.left, s.right, cov.map};
}

grp::SubgroupFamily random_family(Rng& rng, grp::GroupPtr const& g) {
  auto lat = grp::subgroups(*g);
  std::vector<grp::Subgroup> gens;
  for (auto const& h : lat.subgroups)
    if (rng.chance(1, 3)) gens.push_back(h);
  return grp::SubgroupFamily::generated_by(g, gens, "random");
}

mackey::GFinSpan random_gfin_span(Rng& rng, GSet const& src, GSet const& dst,
                                  std::size_t max_apex) {
  auto const& g = src.group();
  for (int t = 0; t < 16; ++t) {
    GSet apex = random_gset(rng, g, max_apex, true);
    auto l = random_equivariant_map(rng, apex, src);
    auto r = random_equivariant_map(rng, apex, dst);
    if (l && r) return mackey::make_gfin_span(src, apex, dst, *l, *r);
  }
  return {src, GSet::trivial(g, 0), dst, {}, {}};
}

ComplementaryPair random_complementary_pair(Rng& rng, Space const& x) {
  auto orbits = orbit_lists(x.carrier());
  ComplementaryPair p;
  for (auto const& o : orbits)
    if (rng.chance(1, 2)) p.y.insert(p.y.end(), o.begin(), o.end());
  std::sort(p.y.begin(), p.y.end());
  std::vector<bool> in_closure(x.size(), false);
  for (Point q : x.closure(p.y)) in_closure[q] = true;
  for (auto const& o : orbits)
    if (!in_closure[o.front()] || rng.chance(1, 2))
      p.z.insert(p.z.end(), o.begin(), o.end());
  std::sort(p.z.begin(), p.z.end());
  return p;
}

}  // namespace coarsetr::fuzz
