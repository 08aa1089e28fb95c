#pragma once

#include <string>
#include <vector>

#include "coarsetr/homology/homology.hpp"
#include "coarsetr/mackey/burnside.hpp"

namespace coarsetr::mackey {

using homology::BigInt;
using homology::Homology;
using homology::Matrix;

/// EM(S) = H(S_min) in degrees 0..max_degree.
Homology em_object(GSet const& s, std::size_t max_degree);

/// EM of a span src <-u- W -v-> dst, a map EM(dst)_n -> EM(src)_n given by
/// u_* o v^* on chains.
Matrix<BigInt> em_morphism(GFinSpan const& s, Homology const& src,
                           Homology const& dst, std::size_t n);

struct DoubleCosetCheck {
  bool ok = true;
  std::size_t double_cosets = 0;
  std::vector<std::string> failures;
};

/// Compares res_K o tr_H : EM(G/H) -> EM(G/K), computed by composing spans,
/// with the sum over double cosets K g H of the spans
/// G/K <- G/(K n gHg^-1) -> G/H built directly from cosets.
DoubleCosetCheck double_coset_check(grp::GroupPtr const& g,
                                    grp::Subgroup const& h,
                                    grp::Subgroup const& k,
                                    std::size_t max_degree);

/// Values of EM on the orbits G/H of a family, with restriction and
/// transfer along one chosen map G/H -> G/K per pair that admits one.
struct MackeyTable {
  struct Object {
    grp::Subgroup subgroup;
    homology::GradedAbGroup value;
    std::vector<homology::Orders> orders;
  };
  struct Entry {
    std::size_t from = 0;  // H
    std::size_t to = 0;    // K
    /// Per degree: EM(G/K) -> EM(G/H).
    std::vector<Matrix<BigInt>> restriction;
    /// Per degree: EM(G/H) -> EM(G/K).
    std::vector<Matrix<BigInt>> transfer;
  };
  std::vector<Object> objects;
  std::vector<Entry> entries;
};
MackeyTable mackey_table(grp::GroupPtr const& g,
                         grp::SubgroupFamily const& family,
                         std::size_t max_degree);

/// The map colim_{G/H, H in F} E(G/H)_n -> E(pt)_n, with the covariant
/// functor given by pushforward along maps of orbits.
struct AssemblyResult {
  std::string family;
  std::size_t degree = 0;
  std::vector<std::size_t> object_orders;  // |H| per object of the diagram
  std::size_t arrow_count = 0;             // non-identity morphisms used
  homology::Orders colimit_orders;
  homology::Orders target_orders;
  Matrix<BigInt> matrix;
  bool injective = false;
  bool split = false;
  /// The verdict is computed, not derived from a theorem.
  std::string label = "empirical";

  homology::AbelianGroup colimit() const {
    return homology::group_of(colimit_orders);
  }
  homology::AbelianGroup target() const {
    return homology::group_of(target_orders);
  }
};
AssemblyResult assembly(grp::GroupPtr const& g,
                        grp::SubgroupFamily const& family, std::size_t degree);

}  // namespace coarsetr::mackey
