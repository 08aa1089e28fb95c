#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsetr/coarse/space.hpp"

namespace coarsetr::coarse {

/// Coarse structure presets on the N direction of a tape.
enum class TapeCoarse { discrete, band };
/// Bornology presets: bounded iff finite N-image, or everything bounded.
enum class TapeBornology { finite_window, all };

char const* to_string(TapeCoarse c);
char const* to_string(TapeBornology b);

/// A point (level, fiber point) of N x F.
struct TapePoint {
  std::uint64_t level = 0;
  Point fiber = 0;
  auto operator<=>(TapePoint const&) const = default;
};

/// N x F where F is a finite G-space and G acts on F only.
class TapeSpace {
 public:
  TapeSpace(Space fiber, TapeCoarse coarse, TapeBornology bornology);

  Space const& fiber() const noexcept { return fiber_; }
  TapeCoarse coarse() const noexcept { return coarse_; }
  TapeBornology bornology() const noexcept { return bornology_; }
  grp::GroupPtr const& group() const noexcept { return fiber_.group(); }

  bool related(TapePoint a, TapePoint b) const;
  TapePoint act(grp::Element g, TapePoint p) const {
    return {p.level, fiber_.carrier().act(g, p.fiber)};
  }
  bool operator==(TapeSpace const&) const;

 private:
  Space fiber_;
  TapeCoarse coarse_;
  TapeBornology bornology_;
};

/// Symbolic entourage on a tape: the band {(i,x),(j,y) : |i-j| <= radius,
/// (x,y) in fiber} together with a finite exception set.
/// A negative radius means the band part is empty.
class TapeEntourage {
 public:
  TapeEntourage(std::size_t fiber_size, std::int64_t radius, Entourage fiber,
                std::vector<std::pair<TapePoint, TapePoint>> exceptions = {});

  static TapeEntourage band(std::size_t fiber_size, std::int64_t radius);
  static TapeEntourage diagonal(std::size_t fiber_size) {
    return band(fiber_size, 0);
  }

  std::int64_t radius() const noexcept { return radius_; }
  Entourage const& fiber() const noexcept { return fiber_; }
  std::vector<std::pair<TapePoint, TapePoint>> const& exceptions() const {
    return exceptions_;
  }
  bool contains(TapePoint a, TapePoint b) const;
  bool is_invariant(grp::GSet const& fiber_carrier) const;
  bool operator==(TapeEntourage const&) const = default;

 private:
  bool in_band(TapePoint a, TapePoint b) const;

  std::int64_t radius_;
  Entourage fiber_;
  std::vector<std::pair<TapePoint, TapePoint>> exceptions_;
};

TapeEntourage compose(TapeEntourage const& u, TapeEntourage const& v);
TapeEntourage invert(TapeEntourage const& u);
/// Whether u is a coarse entourage of the tape.
bool tape_contains(TapeSpace const& x, TapeEntourage const& u);

/// The bounded union N_{min,min} (x) X and the free union over N of the
/// constant family X; both are discrete tapes with finite-window bornology.
TapeSpace tape_bounded_union(Space const& x);
TapeSpace tape_free_union(Space const& x);
/// Whether two tapes carry the same structures (symbolic comparison).
bool same_structures(TapeSpace const& a, TapeSpace const& b);

/// Maps touching a tape. Only three shapes are representable:
///   shift:      tape -> tape,   (i, x) -> (i + offset, phi(x))
///   projection: tape -> finite, (i, x) -> phi(x)
///   embedding:  finite -> tape, x -> (offset, phi(x))
struct TapeMap {
  enum class Kind { shift, projection, embedding };
  Kind kind;
  std::uint64_t offset = 0;
  Map phi;
};

/// Endpoint of a tape map: either a tape or a finite space.
struct Endpoint {
  std::optional<TapeSpace> tape;
  std::optional<Space> finite;
  static Endpoint of(TapeSpace t) { return {std::move(t), std::nullopt}; }
  static Endpoint of(Space s) { return {std::nullopt, std::move(s)}; }
};

/// Validates that the map has the right shape for its endpoints and that
/// phi is equivariant; throws ValidationError otherwise.
void validate_tape_map(TapeMap const& f, Endpoint const& src,
                       Endpoint const& dst);
MapPredicates tape_map_predicates(TapeMap const& f, Endpoint const& src,
                                  Endpoint const& dst);
TapePoint apply(TapeMap const& f, TapePoint p);

}  // namespace coarsetr::coarse
