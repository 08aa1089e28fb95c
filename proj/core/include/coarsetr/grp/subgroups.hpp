#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarsetr/grp/group.hpp"

namespace coarsetr::grp {

/// A subgroup, stored as its sorted element list plus a membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(Group const& g, std::vector<Element> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  bool contains(Element e) const { return e < mask_.size() && mask_[e]; }
  bool is_subset_of(Subgroup const& other) const;

  /// Canonical order: by order, then lexicographically by element list.
  auto operator<=>(Subgroup const& other) const {
    if (auto c = order() <=> other.order(); c != 0) return c;
    return elements_ <=> other.elements_;
  }
  bool operator==(Subgroup const& other) const {
    return elements_ == other.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<bool> mask_;
};

/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(Group const& g, std::vector<Element> const& gens);
Subgroup trivial_subgroup(Group const& g);
Subgroup whole_group(Group const& g);
/// g^{-1} H g
Subgroup conjugate(Group const& g, Subgroup const& h, Element by);
bool is_normal_in(Group const& g, Subgroup const& h, Subgroup const& k);
/// Commutator subgroup [H, H].
Subgroup derived_subgroup(Group const& g, Subgroup const& h);
bool is_solvable(Group const& g, Subgroup const& h);

struct SubgroupLattice {
  /// All subgroups in canonical order.
  std::vector<Subgroup> subgroups;
  /// Conjugacy class id per subgroup; classes are numbered by their
  /// representative's position.
  std::vector<std::size_t> class_of;
  /// Index (into `subgroups`) of each class representative: the canonical
  /// minimum of the class.
  std::vector<std::size_t> representatives;

  std::size_t class_count() const { return representatives.size(); }
  std::size_t index_of(Subgroup const& h) const;
  bool is_representative(std::size_t i) const {
    return representatives[class_of[i]] == i;
  }
};

/// Exhaustive enumeration by closure of joins with single elements.
SubgroupLattice subgroups(Group const& g);

/// A family of subgroups: nonempty, closed under conjugation and passing to
/// subgroups.
class SubgroupFamily {
 public:
  /// Validates closure; throws ValidationError otherwise.
  SubgroupFamily(GroupPtr group, std::vector<Subgroup> members,
                 std::string name = {});

  static SubgroupFamily all(GroupPtr group);
  static SubgroupFamily trivial(GroupPtr group);
  static SubgroupFamily solvable(GroupPtr group);
  static SubgroupFamily cyclic(GroupPtr group);
  /// Smallest family containing the given subgroups.
  static SubgroupFamily generated_by(GroupPtr group,
                                     std::vector<Subgroup> const& gens,
                                     std::string name = {});

  GroupPtr const& group() const noexcept { return group_; }
  std::vector<Subgroup> const& members() const noexcept { return members_; }
  std::string const& name() const noexcept { return name_; }
  bool contains(Subgroup const& h) const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> members_;
  std::string name_;
};

/// Reason a member list fails to be a family, if it does.
std::optional<std::string> family_violation(Group const& g,
                                            std::vector<Subgroup> const& members);

/// True iff for all H normal in K with K/H of prime order, H in F <=> K in F.
bool is_separating(Group const& g, SubgroupFamily const& f);

}  // namespace coarsetr::grp
