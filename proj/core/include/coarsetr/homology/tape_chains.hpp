#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coarsetr/coarse/tape.hpp"

namespace coarsetr::homology {

using coarse::TapePoint;
using TapeTuple = std::vector<TapePoint>;

/// A chain on a tape, given by a rule evaluated on demand. The rule is only
/// consulted on tuples inside its support certificate: levels within
/// `radius` of each other and fiber points pairwise related. Everywhere
/// else the chain is zero, which makes it controlled by construction.
class TapeChain {
 public:
  using Rule = std::function<std::int64_t(std::span<const TapePoint>)>;

  TapeChain(coarse::TapeSpace space, std::size_t degree, std::uint64_t radius,
            Rule rule);

  coarse::TapeSpace const& space() const noexcept { return space_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t radius() const noexcept { return radius_; }
  bool in_support(std::span<const TapePoint> t) const;
  std::int64_t operator()(std::span<const TapePoint> t) const;

 private:
  coarse::TapeSpace space_;
  std::size_t degree_;
  std::uint64_t radius_;
  Rule rule_;
};

/// sum_i (-1)^i d_i with d_i omitting entry i. Each evaluation sums over the
/// finitely many inserted points allowed by the certificate.
TapeChain boundary(TapeChain const& c);

/// Pushforward along a shift (i, x) -> (i + offset, phi(x)).
TapeChain pushforward(coarse::TapeMap const& shift, TapeChain const& c,
                      coarse::TapeSpace const& dst);

/// First tuple with levels below `window` where the chains differ.
std::optional<TapeTuple> difference_on_window(TapeChain const& a,
                                              TapeChain const& b,
                                              std::uint64_t window);
/// First tuple with levels below `window` where c(g t) != c(t).
std::optional<TapeTuple> invariance_violation(TapeChain const& c,
                                              std::uint64_t window);
/// Number of support tuples meeting the window [0, window) x F.
std::uint64_t support_size_on_window(TapeChain const& c, std::uint64_t window);

}  // namespace coarsetr::homology
