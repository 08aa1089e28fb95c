#include "coarsetr/grp/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coarsetr/error.hpp"

namespace coarsetr::grp {

Subgroup::Subgroup(Group const& g, std::vector<Element> elements)
    : elements_(std::move(elements)), mask_(g.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (Element e : elements_) {
    if (e >= g.order()) throw ValidationError("subgroup element out of range");
    mask_[e] = true;
  }
  if (!contains(g.identity()))
    throw ValidationError("subgroup does not contain the identity");
  for (Element a : elements_) {
    if (!contains(g.inv(a)))
      throw ValidationError("subgroup not closed under inverses");
    for (Element b : elements_)
      if (!contains(g.mul(a, b)))
        throw ValidationError("subgroup not closed under multiplication");
  }
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element e) { return other.contains(e); });
}

Subgroup generated_subgroup(Group const& g, std::vector<Element> const& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = true;
  std::deque<Element> todo{g.identity()};
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
        todo.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(elems));
}

Subgroup trivial_subgroup(Group const& g) {
  return Subgroup(g, {g.identity()});
}

Subgroup whole_group(Group const& g) {
  std::vector<Element> all(g.order());
  for (Element e = 0; e < g.order(); ++e) all[e] = e;
  return Subgroup(g, std::move(all));
}

Subgroup conjugate(Group const& g, Subgroup const& h, Element by) {
  std::vector<Element> out;
  out.reserve(h.order());
  for (Element e : h.elements()) out.push_back(g.conjugate(e, by));
  return Subgroup(g, std::move(out));
}

bool is_normal_in(Group const& g, Subgroup const& h, Subgroup const& k) {
  if (!h.is_subset_of(k)) return false;
  for (Element x : k.elements())
    for (Element e : h.elements())
      if (!h.contains(g.conjugate(e, x))) return false;
  return true;
}

Subgroup derived_subgroup(Group const& g, Subgroup const& h) {
  std::vector<Element> commutators;
  for (Element a : h.elements())
    for (Element b : h.elements())
      commutators.push_back(
          g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return generated_subgroup(g, commutators);
}

bool is_solvable(Group const& g, Subgroup const& h) {
  Subgroup cur = h;
  while (cur.order() > 1) {
    Subgroup next = derived_subgroup(g, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

std::size_t SubgroupLattice::index_of(Subgroup const& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it == subgroups.end() || !(*it == h))
    throw InternalError("subgroup not found in lattice");
  return static_cast<std::size_t>(it - subgroups.begin());
}

SubgroupLattice subgroups(Group const& g) {
  std::set<Subgroup> found;
  std::deque<Subgroup> todo;
  Subgroup e = trivial_subgroup(g);
  found.insert(e);
  todo.push_back(e);
  while (!todo.empty()) {
    Subgroup h = std::move(todo.front());
    todo.pop_front();
    for (Element x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<Element> gens = h.elements();
      gens.push_back(x);
      Subgroup k = generated_subgroup(g, gens);
      if (found.insert(k).second) todo.push_back(std::move(k));
    }
  }

  SubgroupLattice lat;
  lat.subgroups.assign(found.begin(), found.end());
  std::size_t n = lat.subgroups.size();
  lat.class_of.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.class_of[i] != static_cast<std::size_t>(-1)) continue;
    std::size_t cls = lat.representatives.size();
    lat.representatives.push_back(i);
    for (Element x = 0; x < g.order(); ++x)
      lat.class_of[lat.index_of(conjugate(g, lat.subgroups[i], x))] = cls;
  }
  return lat;
}

std::optional<std::string> family_violation(
    Group const& g, std::vector<Subgroup> const& members) {
  if (members.empty()) return "a family must be nonempty";
  std::set<Subgroup> in(members.begin(), members.end());
  for (auto const& h : members) {
    for (Element x = 0; x < g.order(); ++x)
      if (!in.count(conjugate(g, h, x)))
        return "not closed under conjugation (subgroup of order " +
               std::to_string(h.order()) + ")";
  }
  auto lat = subgroups(g);
  for (auto const& h : members)
    for (auto const& k : lat.subgroups)
      if (k.is_subset_of(h) && !in.count(k))
        return "not closed under subgroups (missing a subgroup of order " +
               std::to_string(k.order()) + ")";
  return std::nullopt;
}

SubgroupFamily::SubgroupFamily(GroupPtr group, std::vector<Subgroup> members,
                               std::string name)
    : group_(std::move(group)), members_(std::move(members)),
      name_(std::move(name)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (auto why = family_violation(*group_, members_))
    throw ValidationError("invalid subgroup family: " + *why);
}

SubgroupFamily SubgroupFamily::all(GroupPtr group) {
  auto lat = subgroups(*group);
  return SubgroupFamily(std::move(group), std::move(lat.subgroups), "all");
}

SubgroupFamily SubgroupFamily::trivial(GroupPtr group) {
  Subgroup e = trivial_subgroup(*group);
  return SubgroupFamily(std::move(group), {std::move(e)}, "trivial");
}

SubgroupFamily SubgroupFamily::solvable(GroupPtr group) {
  auto lat = subgroups(*group);
  std::vector<Subgroup> sol;
  for (auto const& h : lat.subgroups)
    if (is_solvable(*group, h)) sol.push_back(h);
  return SubgroupFamily(std::move(group), std::move(sol), "sol");
}

SubgroupFamily SubgroupFamily::cyclic(GroupPtr group) {
  auto lat = subgroups(*group);
  std::vector<Subgroup> cyc;
  for (auto const& h : lat.subgroups) {
    bool is_cyclic = std::any_of(
        h.elements().begin(), h.elements().end(), [&](Element x) {
          return generated_subgroup(*group, {x}).order() == h.order();
        });
    if (is_cyclic) cyc.push_back(h);
  }
  return SubgroupFamily(std::move(group), std::move(cyc), "cyclic");
}

SubgroupFamily SubgroupFamily::generated_by(GroupPtr group,
                                            std::vector<Subgroup> const& gens,
                                            std::string name) {
  auto lat = subgroups(*group);
  std::vector<Subgroup> out;
  for (auto const& k : lat.subgroups) {
    bool below = false;
    for (auto const& h : gens)
      for (Element x = 0; x < group->order() && !below; ++x)
        below = k.is_subset_of(conjugate(*group, h, x));
    if (below) out.push_back(k);
  }
  if (out.empty()) out.push_back(trivial_subgroup(*group));
  return SubgroupFamily(std::move(group), std::move(out), std::move(name));
}

bool SubgroupFamily::contains(Subgroup const& h) const {
  return std::binary_search(members_.begin(), members_.end(), h);
}

bool is_separating(Group const& g, SubgroupFamily const& f) {
  auto is_prime = [](std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  auto lat = subgroups(g);
  for (auto const& k : lat.subgroups)
    for (auto const& h : lat.subgroups) {
      if (h.order() >= k.order() || k.order() % h.order() != 0) continue;
      if (!is_prime(k.order() / h.order())) continue;
      if (!is_normal_in(g, h, k)) continue;
      if (f.contains(h) != f.contains(k)) return false;
    }
  return true;
}

}  // namespace coarsetr::grp
