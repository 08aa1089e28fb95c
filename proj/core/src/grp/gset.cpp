#include "coarsetr/grp/gset.hpp"

#include <algorithm>
#include <numeric>

#include "coarsetr/error.hpp"
#include "coarsetr/grp/subgroups.hpp"

namespace coarsetr::grp {

std::vector<std::vector<Point>> Partition::members() const {
  std::vector<std::vector<Point>> out(blocks);
  for (Point x = 0; x < label.size(); ++x) out[label[x]].push_back(x);
  return out;
}

Partition canonical_partition(std::span<const std::uint32_t> labels) {
  Partition p;
  p.label.resize(labels.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;  // old -> new
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](auto const& e) { return e.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], static_cast<std::uint32_t>(seen.size()));
      p.label[x] = seen.back().second;
    } else {
      p.label[x] = it->second;
    }
  }
  p.blocks = seen.size();
  return p;
}

GSet::GSet(GroupPtr group, std::size_t size, std::vector<Point> action)
    : group_(std::move(group)), size_(size), action_(std::move(action)) {
  if (!group_) throw ValidationError("G-set without a group");
  Group const& g = *group_;
  if (action_.size() != g.order() * size_)
    throw ValidationError("action table must have |G|*|S| entries");
  for (Point v : action_)
    if (v >= size_) throw ValidationError("action table not closed");
  for (Point x = 0; x < size_; ++x)
    if (act(g.identity(), x) != x)
      throw ValidationError("identity does not act trivially on point " +
                            std::to_string(x));
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Point x = 0; x < size_; ++x)
        if (act(a, act(b, x)) != act(g.mul(a, b), x))
          throw ValidationError("action is not compatible with multiplication");
}

GSet GSet::trivial(GroupPtr group, std::size_t size) {
  std::vector<Point> action(group->order() * size);
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t x = 0; x < size; ++x)
      action[g * size + x] = static_cast<Point>(x);
  return GSet(std::move(group), size, std::move(action));
}

GSet GSet::cosets(GroupPtr group, Subgroup const& h) {
  Group const& g = *group;
  // Canonical representative of xH: its smallest element.
  std::vector<Element> rep_of(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Element best = x;
    for (Element e : h.elements()) best = std::min(best, g.mul(x, e));
    rep_of[x] = best;
  }
  std::vector<Element> reps(rep_of);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::size_t n = reps.size();
  auto index = [&](Element r) {
    return static_cast<Point>(std::lower_bound(reps.begin(), reps.end(), r) -
                              reps.begin());
  };
  std::vector<Point> action(g.order() * n);
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      action[a * n + i] = index(rep_of[g.mul(a, reps[i])]);
  return GSet(std::move(group), n, std::move(action));
}

GSet GSet::product(GSet const& a, GSet const& b) {
  if (!same_group(a.group_, b.group_))
    throw ValidationError("product of G-sets over different groups");
  std::size_t n = a.size_ * b.size_;
  std::size_t order = a.group_->order();
  std::vector<Point> action(order * n);
  for (Element g = 0; g < order; ++g)
    for (Point x = 0; x < a.size_; ++x)
      for (Point y = 0; y < b.size_; ++y)
        action[g * n + x * b.size_ + y] =
            static_cast<Point>(a.act(g, x) * b.size_ + b.act(g, y));
  return GSet(a.group_, n, std::move(action));
}

GSet GSet::coproduct(GSet const& a, GSet const& b) {
  if (!same_group(a.group_, b.group_))
    throw ValidationError("coproduct of G-sets over different groups");
  std::size_t n = a.size_ + b.size_;
  std::size_t order = a.group_->order();
  std::vector<Point> action(order * n);
  for (Element g = 0; g < order; ++g) {
    for (Point x = 0; x < a.size_; ++x) action[g * n + x] = a.act(g, x);
    for (Point y = 0; y < b.size_; ++y)
      action[g * n + a.size_ + y] =
          static_cast<Point>(a.size_ + b.act(g, y));
  }
  return GSet(a.group_, n, std::move(action));
}

GSet GSet::restrict_to(GSet const& s, std::span<const Point> subset) {
  std::vector<Point> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!s.is_invariant(sorted))
    throw ValidationError("restriction to a non-invariant subset");
  std::vector<std::int64_t> index(s.size_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    index[sorted[i]] = static_cast<std::int64_t>(i);
  std::size_t n = sorted.size();
  std::size_t order = s.group_->order();
  std::vector<Point> action(order * n);
  for (Element g = 0; g < order; ++g)
    for (std::size_t i = 0; i < n; ++i)
      action[g * n + i] = static_cast<Point>(index[s.act(g, sorted[i])]);
  return GSet(s.group_, n, std::move(action));
}

Partition GSet::orbits() const {
  std::vector<std::uint32_t> label(size_, static_cast<std::uint32_t>(-1));
  std::uint32_t next = 0;
  for (Point x = 0; x < size_; ++x) {
    if (label[x] != static_cast<std::uint32_t>(-1)) continue;
    for (Element g = 0; g < group_->order(); ++g) label[act(g, x)] = next;
    ++next;
  }
  return Partition{std::move(label), next};
}

std::vector<Element> GSet::stabilizer(Point x) const {
  std::vector<Element> out;
  for (Element g = 0; g < group_->order(); ++g)
    if (act(g, x) == x) out.push_back(g);
  return out;
}

bool GSet::fixes(Subgroup const& h, Point x) const {
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](Element g) { return act(g, x) == x; });
}

std::size_t GSet::fixed_point_count(Subgroup const& h) const {
  std::size_t n = 0;
  for (Point x = 0; x < size_; ++x) n += fixes(h, x) ? 1 : 0;
  return n;
}

bool GSet::is_invariant(std::span<const Point> subset) const {
  std::vector<bool> in(size_, false);
  for (Point x : subset) {
    if (x >= size_) return false;
    in[x] = true;
  }
  for (Point x : subset)
    for (Element g = 0; g < group_->order(); ++g)
      if (!in[act(g, x)]) return false;
  return true;
}

bool GSet::operator==(GSet const& other) const {
  return size_ == other.size_ && same_group(group_, other.group_) &&
         action_ == other.action_;
}

bool is_equivariant(GSet const& src, GSet const& dst,
                    std::span<const Point> map) {
  if (!same_group(src.group(), dst.group())) return false;
  if (map.size() != src.size()) return false;
  for (Point x = 0; x < src.size(); ++x)
    if (map[x] >= dst.size()) return false;
  for (Element g = 0; g < src.group()->order(); ++g)
    for (Point x = 0; x < src.size(); ++x)
      if (map[src.act(g, x)] != dst.act(g, map[x])) return false;
  return true;
}

}  // namespace coarsetr::grp
