#include "coarsetr/coarse/space.hpp"

#include <algorithm>
#include <map>

#include "coarsetr/error.hpp"

namespace coarsetr::coarse {

namespace {

Partition union_find_partition(std::size_t n,
                               std::vector<std::pair<Point, Point>> const& e) {
  std::vector<Point> parent(n);
  for (Point x = 0; x < n; ++x) parent[x] = x;
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : e) {
    Point ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::uint32_t> roots(n);
  for (Point x = 0; x < n; ++x) roots[x] = find(x);
  return grp::canonical_partition(roots);
}

}  // namespace

Partition generate_structure(GSet const& carrier,
                             std::vector<Entourage> const& gens) {
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != carrier.size())
      throw ValidationError("generator " + std::to_string(i) +
                            " lives on a different carrier");
    if (!gens[i].is_invariant(carrier))
      throw ValidationError("generator " + std::to_string(i) +
                            " is not G-invariant");
    auto p = gens[i].pairs();
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  return union_find_partition(carrier.size(), pairs);
}

bool is_equivariant_partition(GSet const& carrier, Partition const& p) {
  if (p.label.size() != carrier.size()) return false;
  // g must send each block into a single block; checking against the block's
  // first member suffices.
  auto blocks = p.members();
  for (grp::Element g = 0; g < carrier.group()->order(); ++g)
    for (auto const& b : blocks)
      for (Point x : b)
        if (p.label[carrier.act(g, x)] != p.label[carrier.act(g, b.front())])
          return false;
  return true;
}

Partition meet(Partition const& a, Partition const& b) {
  if (a.label.size() != b.label.size())
    throw ValidationError("partitions of different carriers");
  std::vector<std::uint32_t> labels(a.label.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto key = std::make_pair(a.label[x], b.label[x]);
    auto it = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first;
    labels[x] = it->second;
  }
  return grp::canonical_partition(labels);
}

bool refines(Partition const& fine, Partition const& coarse) {
  if (fine.label.size() != coarse.label.size()) return false;
  std::vector<std::int64_t> target(fine.blocks, -1);
  for (std::size_t x = 0; x < fine.label.size(); ++x) {
    auto& t = target[fine.label[x]];
    if (t == -1) t = coarse.label[x];
    else if (t != coarse.label[x]) return false;
  }
  return true;
}

Space::Space(GSet carrier, std::vector<Entourage> generators)
    : carrier_(std::move(carrier)), generators_(std::move(generators)) {
  components_ = generate_structure(carrier_, generators_);
  component_rep_.assign(components_.blocks, 0);
  for (Point x = static_cast<Point>(size()); x-- > 0;)
    component_rep_[components_.label[x]] = x;
}

Space Space::minimal(GSet carrier) { return Space(std::move(carrier), {}); }

Space Space::maximal(GSet carrier) {
  std::size_t n = carrier.size();
  return Space(std::move(carrier), {Entourage::everything(n)});
}

Space Space::from_partition(GSet carrier, Partition const& components) {
  if (components.label.size() != carrier.size())
    throw ValidationError("partition does not cover the carrier");
  if (!is_equivariant_partition(carrier, components))
    throw ValidationError("partition is not G-equivariant");
  Entourage r(carrier.size());
  for (Point a = 0; a < carrier.size(); ++a)
    for (Point b = 0; b < carrier.size(); ++b)
      if (components.label[a] == components.label[b]) r.insert(a, b);
  return Space(std::move(carrier), {std::move(r)});
}

Entourage Space::max_entourage() const {
  Entourage r(size());
  for (Point a = 0; a < size(); ++a)
    for (Point b = 0; b < size(); ++b)
      if (related(a, b)) r.insert(a, b);
  return r;
}

bool Space::contains(Entourage const& u) const {
  if (u.size() != size()) return false;
  for (auto [a, b] : u.pairs())
    if (!related(a, b)) return false;
  return true;
}

std::vector<Point> Space::closure(std::vector<Point> const& a) const {
  std::vector<bool> hit(components_.blocks, false);
  for (Point x : a) {
    if (x >= size()) throw ValidationError("subset outside the carrier");
    hit[components_.label[x]] = true;
  }
  std::vector<Point> out;
  for (Point x = 0; x < size(); ++x)
    if (hit[components_.label[x]]) out.push_back(x);
  return out;
}

std::uint32_t Space::translate_component(grp::Element g,
                                         std::uint32_t c) const {
  return components_.label[carrier_.act(g, component_rep_[c])];
}

bool Space::operator==(Space const& other) const {
  return carrier_ == other.carrier_ && components_ == other.components_;
}

Space restrict_by_partition(Space const& x, Partition const& blocks) {
  if (!is_equivariant_partition(x.carrier(), blocks))
    throw ValidationError("partition is not G-equivariant");
  return Space::from_partition(x.carrier(), meet(x.components(), blocks));
}

void require_equivariant(Map const& f, GSet const& src, GSet const& dst) {
  if (!grp::same_group(src.group(), dst.group()))
    throw ValidationError("map between G-sets over different groups");
  if (f.size() != src.size())
    throw ValidationError("map has " + std::to_string(f.size()) +
                          " entries, source has " +
                          std::to_string(src.size()) + " points");
  for (Point x = 0; x < f.size(); ++x)
    if (f[x] >= dst.size())
      throw ValidationError("map sends point " + std::to_string(x) +
                            " outside the target");
  if (!grp::is_equivariant(src, dst, f))
    throw ValidationError("map is not equivariant");
}

Space induced_structure(GSet const& domain, Map const& w, Space const& target) {
  require_equivariant(w, domain, target.carrier());
  std::vector<std::uint32_t> labels(domain.size());
  for (Point x = 0; x < domain.size(); ++x)
    labels[x] = target.components().label[w[x]];
  return Space::from_partition(domain, grp::canonical_partition(labels));
}

Space tensor(Space const& x, Space const& y) {
  GSet carrier = GSet::product(x.carrier(), y.carrier());
  std::vector<std::uint32_t> labels(carrier.size());
  std::size_t ny = y.size();
  for (Point a = 0; a < x.size(); ++a)
    for (Point b = 0; b < ny; ++b)
      labels[a * ny + b] = static_cast<std::uint32_t>(
          x.components().label[a] * y.components().blocks +
          y.components().label[b]);
  return Space::from_partition(std::move(carrier),
                               grp::canonical_partition(labels));
}

Space coproduct(std::vector<Space> const& parts) {
  if (parts.empty()) throw ValidationError("coproduct needs a group");
  GSet carrier = parts.front().carrier();
  for (std::size_t i = 1; i < parts.size(); ++i)
    carrier = GSet::coproduct(carrier, parts[i].carrier());
  std::vector<std::uint32_t> labels;
  std::uint32_t offset = 0;
  for (auto const& p : parts) {
    for (auto l : p.components().label) labels.push_back(offset + l);
    offset += static_cast<std::uint32_t>(p.components().blocks);
  }
  return Space::from_partition(std::move(carrier),
                               grp::canonical_partition(labels));
}

Space bounded_union(GSet const& index, Space const& x) {
  return tensor(Space::minimal(index), x);
}

Space free_union(GSet const& index, Space const& x) {
  // Generated by the single entourage that is R_X on each slice {i} x X.
  GSet carrier = GSet::product(index, x.carrier());
  std::size_t n = x.size();
  Entourage u(carrier.size());
  for (Point i = 0; i < index.size(); ++i)
    for (Point a = 0; a < n; ++a)
      for (Point b = 0; b < n; ++b)
        if (x.related(a, b))
          u.insert(static_cast<Point>(i * n + a), static_cast<Point>(i * n + b));
  return Space(std::move(carrier), {std::move(u)});
}

Space subspace(Space const& x, std::vector<Point> const& subset) {
  std::vector<Point> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  GSet carrier = GSet::restrict_to(x.carrier(), sorted);
  std::vector<std::uint32_t> labels;
  for (Point p : sorted) labels.push_back(x.components().label[p]);
  return Space::from_partition(std::move(carrier),
                               grp::canonical_partition(labels));
}

bool is_controlled(Map const& f, Space const& x, Space const& y) {
  // Enough to check that each component of X lands in one component of Y.
  std::vector<std::int64_t> target(x.components().blocks, -1);
  for (Point a = 0; a < x.size(); ++a) {
    auto& t = target[x.components().label[a]];
    std::int64_t c = y.components().label[f[a]];
    if (t == -1) t = c;
    else if (t != c) return false;
  }
  return true;
}

MapPredicates map_predicates(Map const& f, Space const& x, Space const& y) {
  require_equivariant(f, x.carrier(), y.carrier());
  // All subsets of a finite set are bounded, so properness and
  // bornologicality hold for every map.
  return {is_controlled(f, x, y), true, true};
}

Map identity_map(std::size_t n) {
  Map m(n);
  for (Point x = 0; x < n; ++x) m[x] = x;
  return m;
}

Map compose(Map const& first, Map const& second) {
  Map out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) {
    if (first[x] >= second.size())
      throw ValidationError("maps are not composable");
    out[x] = second[first[x]];
  }
  return out;
}

bool is_injective(Map const& f, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (Point y : f) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

}  // namespace coarsetr::coarse
