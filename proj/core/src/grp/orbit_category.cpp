#include "coarsetr/grp/orbit_category.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::grp {

CosetSpace coset_space(GroupPtr group, Subgroup const& h) {
  Group const& g = *group;
  CosetSpace cs{h, GSet::cosets(group, h), {}, {}};
  std::vector<Element> rep_of(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Element best = x;
    for (Element e : h.elements()) best = std::min(best, g.mul(x, e));
    rep_of[x] = best;
  }
  cs.representative = rep_of;
  std::sort(cs.representative.begin(), cs.representative.end());
  cs.representative.erase(
      std::unique(cs.representative.begin(), cs.representative.end()),
      cs.representative.end());
  cs.point_of.resize(g.order());
  for (Element x = 0; x < g.order(); ++x)
    cs.point_of[x] = static_cast<Point>(
        std::lower_bound(cs.representative.begin(), cs.representative.end(),
                         rep_of[x]) -
        cs.representative.begin());
  return cs;
}

OrbitCategory::OrbitCategory(GroupPtr group, SubgroupFamily const& family)
    : group_(std::move(group)) {
  if (!same_group(group_, family.group()))
    throw ValidationError("family belongs to a different group");
  Group const& g = *group_;
  auto lat = subgroups(g);
  for (std::size_t rep : lat.representatives)
    if (family.contains(lat.subgroups[rep]))
      objects_.push_back(coset_space(group_, lat.subgroups[rep]));

  std::size_t n = objects_.size();
  hom_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto const& h = objects_[a].subgroup;
      auto const& k = objects_[b].subgroup;
      for (std::size_t p = 0; p < objects_[b].representative.size(); ++p) {
        Element x = objects_[b].representative[p];
        if (conjugate(g, h, x).is_subset_of(k))
          hom_[a * n + b].push_back({a, b, static_cast<Point>(p)});
      }
    }
}

OrbitCategory::Morphism OrbitCategory::identity(std::size_t obj) const {
  return {obj, obj, objects_[obj].point_of[group_->identity()]};
}

OrbitCategory::Morphism OrbitCategory::compose(Morphism const& first,
                                               Morphism const& second) const {
  if (first.dst != second.src)
    throw ValidationError("orbit category morphisms are not composable");
  // eH -> gK -> g g' L
  Element g1 = objects_[first.dst].representative[first.image];
  Element g2 = objects_[second.dst].representative[second.image];
  return {first.src, second.dst,
          objects_[second.dst].point_of[group_->mul(g1, g2)]};
}

std::vector<Point> OrbitCategory::as_map(Morphism const& m) const {
  auto const& src = objects_[m.src];
  auto const& dst = objects_[m.dst];
  Element g = dst.representative[m.image];
  std::vector<Point> out(src.representative.size());
  for (std::size_t p = 0; p < out.size(); ++p)
    out[p] = dst.point_of[group_->mul(src.representative[p], g)];
  return out;
}

}  // namespace coarsetr::grp
