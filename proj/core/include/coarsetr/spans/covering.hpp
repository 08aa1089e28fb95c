#pragma once

#include <cstdint>
#include <string>

#include "coarsetr/coarse/space.hpp"
#include "coarsetr/coarse/tape.hpp"

namespace coarsetr::spans {

using coarse::Map;
using coarse::Space;

/// Outcome of a validation. `condition` names the first failing condition
/// and `witness` describes a counterexample. `label` is "exact" when every
/// quantifier was decided and "preset-verified" when bounded sets were only
/// probed from the preset family.
struct Diagnostic {
  bool ok = true;
  std::string condition;
  std::string witness;
  std::string label = "exact";

  static Diagnostic failure(std::string condition, std::string witness) {
    return {false, std::move(condition), std::move(witness), "exact"};
  }
};

/// w: W -> Z is a bounded coarse covering: the structure of W is the induced
/// one restricted to the components of W (condition 1), and w maps each
/// component of W bijectively onto a component of Z (condition 2).
Diagnostic is_bounded_coarse_covering(Map const& w, Space const& W,
                                      Space const& Z);
/// Adds bornologicality and the finite-partition condition on bounded sets.
/// On finite carriers the components of W give that partition, so the last
/// condition follows from condition 2.
Diagnostic is_bounded_covering(Map const& w, Space const& W, Space const& Z);

Diagnostic tape_is_bounded_coarse_covering(coarse::TapeMap const& f,
                                           coarse::Endpoint const& src,
                                           coarse::Endpoint const& dst);
/// Bounded sets are probed from the preset family: the windows
/// [0, n) x F for n <= window and, for the "all" bornology, the whole tape.
Diagnostic tape_is_bounded_covering(coarse::TapeMap const& f,
                                    coarse::Endpoint const& src,
                                    coarse::Endpoint const& dst,
                                    std::uint64_t window);

}  // namespace coarsetr::spans
