#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coarsetr/coarse/space.hpp"
#include "coarsetr/homology/matrix.hpp"

namespace coarsetr::homology {

using coarse::Map;
using coarse::Point;
using coarse::Space;

/// Basis of the invariant n-chains of a finite space: one indicator
/// function per G-orbit of (n+1)-tuples whose entries lie in a single
/// coarse component. On a finite carrier these are exactly the controlled
/// tuples, and local finiteness is automatic.
///
/// Orbits are represented by their lexicographically smallest tuple and
/// sorted lexicographically.
class ChainBasis {
 public:
  ChainBasis(Space const& x, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return block_.size(); }
  std::span<const Point> rep(std::size_t i) const {
    return {reps_.data() + i * (degree_ + 1), degree_ + 1};
  }
  /// G-orbit of coarse components containing the orbit's tuples.
  std::uint32_t block(std::size_t i) const { return block_[i]; }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t orbit_size(std::size_t i) const { return orbit_size_[i]; }

  /// Basis index of the orbit of t; empty if t is not component-constrained.
  std::optional<std::uint32_t> orbit_of(std::span<const Point> t) const;
  /// All tuples in the orbit of basis element i.
  std::vector<std::vector<Point>> orbit(std::size_t i) const;

 private:
  std::uint64_t encode(std::span<const Point> t) const;

  grp::GSet carrier_;
  std::size_t degree_;
  std::size_t block_count_ = 0;
  std::vector<Point> reps_;
  std::vector<std::uint32_t> block_;
  std::vector<std::size_t> orbit_size_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Invariant chain complex of a finite space in degrees 0..top.
class ChainComplexModel {
 public:
  ChainComplexModel(Space x, std::size_t top);

  Space const& space() const noexcept { return space_; }
  std::size_t top() const noexcept { return bases_.size() - 1; }
  ChainBasis const& basis(std::size_t n) const { return bases_.at(n); }
  /// d_n : C_n -> C_{n-1}; d_0 is the zero map to the zero group.
  SparseMatrix const& boundary(std::size_t n) const { return boundaries_.at(n); }

 private:
  Space space_;
  std::vector<ChainBasis> bases_;
  std::vector<SparseMatrix> boundaries_;
};

/// Alternating face sum sum_i (-1)^i d_i, where d_i omits entry i, in the
/// orbit bases of degrees n and n-1.
SparseMatrix boundary_matrix(ChainBasis const& from, ChainBasis const& to);

/// f_*: (f_* c)(y) = sum of c over the preimage tuples of y.
SparseMatrix pushforward(Map const& f, ChainBasis const& src,
                         ChainBasis const& dst);
/// w^*: (w^* c)(t) = chi(t) c(w t), chi the indicator of
/// component-constrained tuples of W.
SparseMatrix transfer(Map const& w, ChainBasis const& src_of_w,
                      ChainBasis const& dst_of_w);

/// A chain as coefficients in the orbit basis, evaluated at a tuple.
std::int64_t evaluate(ChainBasis const& b, std::vector<std::int64_t> const& c,
                      std::span<const Point> t);

}  // namespace coarsetr::homology
