#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coarsetr/grp/gset.hpp"

namespace coarsetr::coarse {

using grp::Point;

/// A relation on a finite carrier {0..size-1}, stored as a dense bit matrix.
class Entourage {
 public:
  Entourage() = default;
  explicit Entourage(std::size_t size) : size_(size), bits_(size * size) {}

  static Entourage diagonal(std::size_t size);
  static Entourage everything(std::size_t size);
  static Entourage from_pairs(std::size_t size,
                              std::vector<std::pair<Point, Point>> const& pairs);

  std::size_t size() const noexcept { return size_; }
  bool contains(Point a, Point b) const { return bits_[a * size_ + b]; }
  void insert(Point a, Point b) { bits_[a * size_ + b] = true; }
  std::vector<std::pair<Point, Point>> pairs() const;

  bool is_subset_of(Entourage const& other) const;
  bool is_invariant(grp::GSet const& carrier) const;
  bool operator==(Entourage const&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<bool> bits_;
};

/// {w | exists a in A with (w, a) in U}, sorted.
std::vector<Point> thicken(Entourage const& u, std::vector<Point> const& a);
/// U o V = {(x, z) | exists y: (x, y) in U, (y, z) in V}
Entourage compose(Entourage const& u, Entourage const& v);
Entourage invert(Entourage const& u);
Entourage unite(Entourage const& u, Entourage const& v);
/// Reflexive, symmetric, transitive closure.
Entourage equivalence_closure(Entourage const& u);

}  // namespace coarsetr::coarse
