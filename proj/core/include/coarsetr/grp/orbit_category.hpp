#pragma once

#include <cstddef>
#include <vector>

#include "coarsetr/grp/gset.hpp"
#include "coarsetr/grp/subgroups.hpp"

namespace coarsetr::grp {

/// Left coset space G/H with a lookup from group elements to cosets.
struct CosetSpace {
  Subgroup subgroup;
  GSet set;
  /// point_of[g] is the point gH.
  std::vector<Point> point_of;
  /// Smallest element of each coset, indexed by point.
  std::vector<Element> representative;
};

CosetSpace coset_space(GroupPtr group, Subgroup const& h);

/// Full subcategory of the orbit category on G/H for H ranging over
/// conjugacy-class representatives of a family.
///
/// A morphism G/H -> G/K is the coset gK with g^{-1} H g in K; it sends
/// xH to xgK.
class OrbitCategory {
 public:
  struct Morphism {
    std::size_t src;
    std::size_t dst;
    /// Point of G/K (the dst object) that eH is sent to.
    Point image;
    bool operator==(Morphism const&) const = default;
  };

  OrbitCategory(GroupPtr group, SubgroupFamily const& family);

  GroupPtr const& group() const noexcept { return group_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  CosetSpace const& object(std::size_t i) const { return objects_[i]; }
  std::vector<Morphism> const& hom(std::size_t src, std::size_t dst) const {
    return hom_[src * objects_.size() + dst];
  }
  Morphism identity(std::size_t obj) const;
  /// second after first
  Morphism compose(Morphism const& first, Morphism const& second) const;
  /// The underlying equivariant map G/H -> G/K.
  std::vector<Point> as_map(Morphism const& m) const;

 private:
  GroupPtr group_;
  std::vector<CosetSpace> objects_;
  std::vector<std::vector<Morphism>> hom_;
};

}  // namespace coarsetr::grp
