#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace coarsetr::grp {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order-1. The table is validated on
/// construction (closure, associativity, unit, inverses), so every Group
/// value in the program is a genuine group.
class Group {
 public:
  /// `mult[a * order + b]` is the product a*b.
  Group(std::size_t order, std::vector<Element> mult, Element identity,
        std::string name = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  std::string const& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g^{-1} h g
  Element conjugate(Element h, Element g) const {
    return mul(mul(inv(g), h), g);
  }

  std::span<const Element> table() const noexcept { return mult_; }

  bool operator==(Group const& other) const {
    return order_ == other.order_ && identity_ == other.identity_ &&
           mult_ == other.mult_;
  }

 private:
  std::size_t order_;
  std::vector<Element> mult_;
  Element identity_;
  std::vector<Element> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const Group>;

bool same_group(GroupPtr const& a, GroupPtr const& b);

GroupPtr trivial_group();
GroupPtr cyclic_group(std::size_t n);
/// Dihedral group of order 2n (symmetries of the n-gon).
GroupPtr dihedral_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n);
GroupPtr alternating_group(std::size_t n);
GroupPtr klein_four_group();

/// Group generated by permutations of {0..degree-1}. Elements are numbered
/// in lexicographic order of their image vectors, so the identity is 0.
GroupPtr permutation_group(std::vector<std::vector<std::uint32_t>> const& gens,
                           std::string name = {});

}  // namespace coarsetr::grp
