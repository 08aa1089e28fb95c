#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarsetr/coarse/tape.hpp"
#include "coarsetr/homology/homology.hpp"

namespace coarsetr::homology {

/// Verdict of one axiom check. `failures` lists the degrees (or other
/// positions) where the check broke, with a short reason each.
struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
  std::string label = "exact";

  AxiomCheck() = default;
  explicit AxiomCheck(std::string n) : name(std::move(n)) {}

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

/// The projection {0,1}_{max} (x) X -> X induces isomorphisms.
AxiomCheck check_coarse_invariance(Space const& x, std::size_t max_degree);

/// Z must be invariant and Z u [Y] = X, where [Y] is the coarse closure
/// (the stable member of the big family generated by Y). Compares
/// H(X, [Y]) with H(Z, Z n [Y]) through the relative complexes.
AxiomCheck check_excision(Space const& x, std::vector<Point> const& z,
                          std::vector<Point> const& y, std::size_t max_degree);
bool is_complementary_pair(Space const& x, std::vector<Point> const& z,
                           std::vector<Point> const& y);

/// H(X) is the colimit of H(X_U) along the tower of structures obtained by
/// adding the G-orbits of related pairs one at a time.
AxiomCheck check_u_continuity(Space const& x, std::size_t max_degree);

/// The inclusions induce an isomorphism from the sum of the H(X_i) to
/// H of the coproduct.
AxiomCheck check_additivity(std::vector<Space> const& parts,
                            std::size_t max_degree);

/// For the free union over a trivial index set of size k, projecting the
/// transfer onto each slice {j} x X (the excision projection) is the identity.
AxiomCheck check_weak_transfers(Space const& x, std::size_t k,
                                std::size_t max_degree);

/// The restrictions to the pieces of a finite free union assemble to an
/// isomorphism onto the product.
AxiomCheck check_strong_additivity(std::vector<Space> const& parts,
                                   std::size_t max_degree);

/// fold o transfer over a trivial index set of size k is k * id.
AxiomCheck check_fold_law(Space const& x, std::size_t k,
                          std::size_t max_degree);

/// All of the above with default parameters (index size 3 for transfers,
/// Z = X and Y = first orbit for excision, two copies of X for additivity).
std::vector<AxiomCheck> check_axioms(Space const& x, std::size_t max_degree);

/// The three conditions on a candidate witness s for flasqueness: s is close
/// to the identity, its iterates are uniformly controlled, and it
/// eventually moves every bounded set off itself.
struct FlasqueReport {
  bool is_morphism = false;
  bool close_to_identity = false;
  bool iterates_controlled = false;
  bool escapes_bounded_sets = false;
  std::string label = "exact";

  bool ok() const {
    return is_morphism && close_to_identity && iterates_controlled &&
           escapes_bounded_sets;
  }
};

/// Finite spaces: every bounded set may be the whole space, so a nonempty
/// space never passes.
FlasqueReport check_flasque_witness(Space const& x, Map const& s);
/// Tapes: s must be a shift. Decided symbolically from the presets.
FlasqueReport check_flasque_witness(coarse::TapeSpace const& x,
                                    coarse::TapeMap const& s);

}  // namespace coarsetr::homology
