#pragma once

#include <memory>
#include <vector>

#include "coarsetr/homology/abelian.hpp"
#include "coarsetr/homology/chains.hpp"
#include "coarsetr/spans/span.hpp"

namespace coarsetr::homology {

/// H_n of an invariant chain complex with explicit cycle representatives.
struct HomologyGroup {
  /// Order of each generator; 0 for infinite order. Never 1.
  Orders orders;
  /// Column k is a cycle representing generator k (in the orbit basis).
  Matrix<BigInt> generators;
  /// Row k sends a cycle to its k-th coordinate (reduced mod orders[k]).
  Matrix<BigInt> coordinates;

  AbelianGroup group() const { return group_of(orders); }
  std::size_t generator_count() const { return orders.size(); }
};

/// Homology at the middle of C_{n+1} -d_n1-> C_n -d_n-> C_{n-1} for an
/// arbitrary integer complex; d_n may have zero rows.
HomologyGroup homology_at(SparseMatrix const& d_n, SparseMatrix const& d_n1);

/// Homology of a finite space in degrees 0..max_degree.
///
/// The complex splits over G-orbits of coarse components; each summand is
/// reduced on its own with Smith normal form, and identical summands are
/// computed once per process.
class Homology {
 public:
  Homology(Space x, std::size_t max_degree);

  Space const& space() const noexcept { return model_.space(); }
  std::size_t max_degree() const noexcept { return groups_.size() - 1; }
  ChainComplexModel const& model() const noexcept { return model_; }
  HomologyGroup const& degree(std::size_t n) const { return groups_.at(n); }
  GradedAbGroup groups() const;

 private:
  ChainComplexModel model_;
  std::vector<HomologyGroup> groups_;
};

/// Matrix of the map on H_n induced by a chain map C_n(A) -> C_n(B).
Matrix<BigInt> induced_on_homology(Homology const& a, Homology const& b,
                                   SparseMatrix const& chain_map,
                                   std::size_t n);
Matrix<BigInt> induced_on_homology(HomologyGroup const& a,
                                   HomologyGroup const& b,
                                   SparseMatrix const& chain_map);

/// f_* o w^* on C_n for the span (W, w, f); W's chains are built on demand.
SparseMatrix span_chain_map(spans::Span const& s, ChainBasis const& src,
                            ChainBasis const& dst, std::size_t n);
/// Induced map of a span on H_n.
Matrix<BigInt> induced_map(spans::Span const& s, Homology const& src,
                           Homology const& dst, std::size_t n);

/// Number of cached summand reductions (for tests and benchmarks).
std::size_t homology_cache_size();
void clear_homology_cache();

}  // namespace coarsetr::homology
