#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coarsetr/grp/group.hpp"

namespace coarsetr::grp {

using Point = std::uint32_t;

/// A partition of {0..n-1} given as a block label per point. Labels are
/// canonical: blocks are numbered in order of their smallest member.
struct Partition {
  std::vector<std::uint32_t> label;
  std::size_t blocks = 0;

  std::vector<std::vector<Point>> members() const;
  bool operator==(Partition const&) const = default;
};

/// Relabel so that blocks are numbered by first occurrence.
Partition canonical_partition(std::span<const std::uint32_t> labels);

class Subgroup;

/// A finite set {0..size-1} with a left action of a finite group.
class GSet {
 public:
  GSet() = default;
  /// `action[g * size + x]` is g.x. Validated on construction.
  GSet(GroupPtr group, std::size_t size, std::vector<Point> action);

  /// The set with the trivial action.
  static GSet trivial(GroupPtr group, std::size_t size);
  /// Left cosets G/H, points ordered by their smallest representative.
  static GSet cosets(GroupPtr group, Subgroup const& h);
  /// Cartesian product with the diagonal action; (a, b) -> a * |B| + b.
  static GSet product(GSet const& a, GSet const& b);
  /// Disjoint union; points of b are shifted by |a|.
  static GSet coproduct(GSet const& a, GSet const& b);
  /// Restriction of the action to an invariant subset (points renumbered in
  /// increasing order).
  static GSet restrict_to(GSet const& s, std::span<const Point> subset);

  GroupPtr const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  Point act(Element g, Point x) const { return action_[g * size_ + x]; }
  std::span<const Point> action_table() const noexcept { return action_; }

  Partition orbits() const;
  std::vector<Element> stabilizer(Point x) const;
  bool fixes(Subgroup const& h, Point x) const;
  std::size_t fixed_point_count(Subgroup const& h) const;
  bool is_invariant(std::span<const Point> subset) const;

  bool operator==(GSet const& other) const;

 private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Point> action_;
};

/// Whether `map` (indexed by points of src) is an equivariant map src->dst.
bool is_equivariant(GSet const& src, GSet const& dst,
                    std::span<const Point> map);

}  // namespace coarsetr::grp
