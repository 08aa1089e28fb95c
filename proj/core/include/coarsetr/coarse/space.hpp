#pragma once

#include <string>
#include <vector>

#include "coarsetr/coarse/entourage.hpp"
#include "coarsetr/grp/gset.hpp"

namespace coarsetr::coarse {

using grp::GSet;
using grp::Partition;
/// A map of finite carriers, indexed by source point.
using Map = std::vector<Point>;

/// A G-bornological coarse space on a finite carrier.
///
/// A coarse structure on a finite set consists of all subsets of its largest
/// entourage R, which is an invariant equivalence relation; it is stored as
/// the partition into coarse components. The bornology is the full power set
/// (the only bornology on a finite set), so it is left implicit.
class Space {
 public:
  Space() = default;
  /// Structure generated by `generators`; each must be G-invariant.
  Space(GSet carrier, std::vector<Entourage> generators);

  static Space minimal(GSet carrier);
  static Space maximal(GSet carrier);
  /// Structure whose components are the blocks of `components`; the
  /// partition must be G-equivariant.
  static Space from_partition(GSet carrier, Partition const& components);

  GSet const& carrier() const noexcept { return carrier_; }
  grp::GroupPtr const& group() const noexcept { return carrier_.group(); }
  std::size_t size() const noexcept { return carrier_.size(); }
  Partition const& components() const noexcept { return components_; }
  std::vector<Entourage> const& generators() const noexcept {
    return generators_;
  }

  bool related(Point a, Point b) const {
    return components_.label[a] == components_.label[b];
  }
  /// The largest entourage R.
  Entourage max_entourage() const;
  /// Whether U is a coarse entourage of this space.
  bool contains(Entourage const& u) const;
  /// Coarse closure [A]: union of the components meeting A.
  std::vector<Point> closure(std::vector<Point> const& a) const;
  /// Component that g sends component c to.
  std::uint32_t translate_component(grp::Element g, std::uint32_t c) const;

  /// Same carrier and same coarse structure.
  bool operator==(Space const& other) const;

 private:
  GSet carrier_;
  Partition components_;
  std::vector<Entourage> generators_;
  std::vector<Point> component_rep_;
};

/// Partition into classes of the equivalence relation generated by `gens`.
Partition generate_structure(GSet const& carrier,
                             std::vector<Entourage> const& gens);

/// Whether x ~ y implies gx ~ gy.
bool is_equivariant_partition(GSet const& carrier, Partition const& p);
/// Coarsest common refinement.
Partition meet(Partition const& a, Partition const& b);
/// Whether every block of `fine` lies in a block of `coarse`.
bool refines(Partition const& fine, Partition const& coarse);

/// Structure generated by U intersected with the block relation of `blocks`.
Space restrict_by_partition(Space const& x, Partition const& blocks);
/// Largest structure on `domain` making `w` controlled.
Space induced_structure(GSet const& domain, Map const& w, Space const& target);

/// Product carrier (a, b) -> a * |Y| + b with the product structure.
Space tensor(Space const& x, Space const& y);
/// Disjoint union, points numbered consecutively.
Space coproduct(std::vector<Space> const& parts);
/// I_{min,min} (x) X.
Space bounded_union(GSet const& index, Space const& x);
/// Structure generated by the entourages  U_i over {i} x X; for finite index
/// sets this agrees with the bounded union.
Space free_union(GSet const& index, Space const& x);
/// Invariant subset with the induced structure; points renumbered in
/// increasing order.
Space subspace(Space const& x, std::vector<Point> const& subset);

struct MapPredicates {
  bool controlled = false;
  bool proper = false;
  bool bornological = false;
  bool is_morphism() const { return controlled && proper; }
};

/// Throws ValidationError if f is not an equivariant map of carriers.
void require_equivariant(Map const& f, GSet const& src, GSet const& dst);
MapPredicates map_predicates(Map const& f, Space const& x, Space const& y);
bool is_controlled(Map const& f, Space const& x, Space const& y);

Map identity_map(std::size_t n);
/// second o first
Map compose(Map const& first, Map const& second);
bool is_injective(Map const& f, std::size_t target_size);

}  // namespace coarsetr::coarse
