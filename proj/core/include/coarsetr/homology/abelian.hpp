#pragma once

#include <string>
#include <vector>

#include "coarsetr/homology/smith.hpp"

namespace coarsetr::homology {

/// Isomorphism type of a finitely generated abelian group: free rank and
/// torsion coefficients d1 | d2 | ... with each di > 1.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool operator==(AbelianGroup const&) const = default;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// e.g. "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string str() const;
};

using GradedAbGroup = std::vector<AbelianGroup>;

/// Groups here are presented as Z^g / diag(orders): generator i has order
/// orders[i], with 0 meaning infinite order. Homomorphisms are integer
/// matrices acting on coordinate columns.
using Orders = std::vector<BigInt>;

AbelianGroup group_of(Orders const& orders);
AbelianGroup direct_sum(AbelianGroup const& a, AbelianGroup const& b);

/// Smith form over BigInt, computed in 64-bit arithmetic when possible.
SmithResult<BigInt> smith_big(Matrix<BigInt> const& a, bool want_rows,
                              bool want_cols);

/// Reduces row i modulo orders[i] where that order is finite.
Matrix<BigInt> reduce_rows(Matrix<BigInt> m, Orders const& orders);
AbelianGroup cokernel(Matrix<BigInt> const& m, Orders const& dst);
bool is_surjective(Matrix<BigInt> const& m, Orders const& dst);
bool is_injective(Matrix<BigInt> const& m, Orders const& src,
                  Orders const& dst);
bool is_isomorphism(Matrix<BigInt> const& m, Orders const& src,
                    Orders const& dst);
/// Injective with image a direct summand. For finitely generated abelian
/// groups an injection A -> B splits iff B is isomorphic to A + B/A.
bool is_split_injective(Matrix<BigInt> const& m, Orders const& src,
                        Orders const& dst);
/// m == k * id as an endomorphism of the presented group.
bool is_multiple_of_identity(Matrix<BigInt> const& m, Orders const& orders,
                             BigInt const& k);
/// m1 == m2 as homomorphisms into the presented group.
bool same_homomorphism(Matrix<BigInt> const& a, Matrix<BigInt> const& b,
                       Orders const& dst);

/// Colimit of a finite diagram of presented groups, as the quotient of the
/// direct sum by x - f(x) for every listed arrow f and every generator x.
struct DiagramArrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  Matrix<BigInt> matrix;
};

struct Colimit {
  Orders orders;
  /// Columns: colimit generators written in the direct-sum coordinates.
  Matrix<BigInt> generators;
  /// Rows: direct-sum coordinates -> colimit coordinates.
  Matrix<BigInt> coordinates;
  /// Offset of each object's block in the direct sum.
  std::vector<std::size_t> offsets;
  std::size_t relation_count = 0;
};

Colimit colimit(std::vector<Orders> const& objects,
                std::vector<DiagramArrow> const& arrows);
/// Matrix of the map out of the colimit induced by a compatible cocone,
/// given by one matrix per object.
Matrix<BigInt> map_from_colimit(Colimit const& c,
                                std::vector<Matrix<BigInt>> const& cocone,
                                Orders const& dst);

}  // namespace coarsetr::homology
