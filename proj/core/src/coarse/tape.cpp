#include "coarsetr/coarse/tape.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::coarse {

char const* to_string(TapeCoarse c) {
  return c == TapeCoarse::discrete ? "discrete" : "band";
}

char const* to_string(TapeBornology b) {
  return b == TapeBornology::finite_window ? "finite-window" : "all";
}

TapeSpace::TapeSpace(Space fiber, TapeCoarse coarse, TapeBornology bornology)
    : fiber_(std::move(fiber)), coarse_(coarse), bornology_(bornology) {}

bool TapeSpace::related(TapePoint a, TapePoint b) const {
  if (coarse_ == TapeCoarse::discrete && a.level != b.level) return false;
  return fiber_.related(a.fiber, b.fiber);
}

bool TapeSpace::operator==(TapeSpace const& other) const {
  return fiber_ == other.fiber_ && coarse_ == other.coarse_ &&
         bornology_ == other.bornology_;
}

TapeEntourage::TapeEntourage(
    std::size_t fiber_size, std::int64_t radius, Entourage fiber,
    std::vector<std::pair<TapePoint, TapePoint>> exceptions)
    : radius_(radius < 0 ? -1 : radius),
      fiber_(std::move(fiber)),
      exceptions_(std::move(exceptions)) {
  if (fiber_.size() != fiber_size)
    throw ValidationError("fiber relation has the wrong size");
  for (auto const& [a, b] : exceptions_)
    if (a.fiber >= fiber_size || b.fiber >= fiber_size)
      throw ValidationError("exception pair outside the fiber");
  std::sort(exceptions_.begin(), exceptions_.end());
  exceptions_.erase(std::unique(exceptions_.begin(), exceptions_.end()),
                    exceptions_.end());
  std::erase_if(exceptions_,
                [&](auto const& e) { return in_band(e.first, e.second); });
}

TapeEntourage TapeEntourage::band(std::size_t fiber_size, std::int64_t radius) {
  return TapeEntourage(fiber_size, radius, Entourage::diagonal(fiber_size));
}

bool TapeEntourage::in_band(TapePoint a, TapePoint b) const {
  if (radius_ < 0) return false;
  std::uint64_t d = a.level > b.level ? a.level - b.level : b.level - a.level;
  return d <= static_cast<std::uint64_t>(radius_) &&
         fiber_.contains(a.fiber, b.fiber);
}

bool TapeEntourage::contains(TapePoint a, TapePoint b) const {
  if (in_band(a, b)) return true;
  return std::binary_search(exceptions_.begin(), exceptions_.end(),
                            std::make_pair(a, b));
}

bool TapeEntourage::is_invariant(grp::GSet const& fiber_carrier) const {
  if (radius_ >= 0 && !fiber_.is_invariant(fiber_carrier)) return false;
  for (grp::Element g = 0; g < fiber_carrier.group()->order(); ++g)
    for (auto const& [a, b] : exceptions_) {
      TapePoint ga{a.level, fiber_carrier.act(g, a.fiber)};
      TapePoint gb{b.level, fiber_carrier.act(g, b.fiber)};
      if (!contains(ga, gb)) return false;
    }
  return true;
}

namespace {

// Points q with (p, q) in the band part of u.
std::vector<TapePoint> band_targets(TapeEntourage const& u, TapePoint p) {
  std::vector<TapePoint> out;
  if (u.radius() < 0) return out;
  std::uint64_t r = static_cast<std::uint64_t>(u.radius());
  std::uint64_t lo = p.level > r ? p.level - r : 0;
  for (std::uint64_t l = lo; l <= p.level + r; ++l)
    for (Point y = 0; y < u.fiber().size(); ++y)
      if (u.fiber().contains(p.fiber, y)) out.push_back({l, y});
  return out;
}

// Points q with (q, p) in the band part of u.
std::vector<TapePoint> band_sources(TapeEntourage const& u, TapePoint p) {
  std::vector<TapePoint> out;
  if (u.radius() < 0) return out;
  std::uint64_t r = static_cast<std::uint64_t>(u.radius());
  std::uint64_t lo = p.level > r ? p.level - r : 0;
  for (std::uint64_t l = lo; l <= p.level + r; ++l)
    for (Point y = 0; y < u.fiber().size(); ++y)
      if (u.fiber().contains(y, p.fiber)) out.push_back({l, y});
  return out;
}

}  // namespace

TapeEntourage compose(TapeEntourage const& u, TapeEntourage const& v) {
  std::size_t n = u.fiber().size();
  if (v.fiber().size() != n)
    throw ValidationError("tape entourages over different fibers");
  std::int64_t radius = -1;
  Entourage fiber(n);
  if (u.radius() >= 0 && v.radius() >= 0) {
    radius = u.radius() + v.radius();
    fiber = compose(u.fiber(), v.fiber());
  }
  std::vector<std::pair<TapePoint, TapePoint>> ex;
  for (auto const& [a, b] : u.exceptions()) {
    for (TapePoint c : band_targets(v, b)) ex.emplace_back(a, c);
    for (auto const& [b2, c] : v.exceptions())
      if (b2 == b) ex.emplace_back(a, c);
  }
  for (auto const& [b, c] : v.exceptions())
    for (TapePoint a : band_sources(u, b)) ex.emplace_back(a, c);
  return TapeEntourage(n, radius, std::move(fiber), std::move(ex));
}

TapeEntourage invert(TapeEntourage const& u) {
  std::vector<std::pair<TapePoint, TapePoint>> ex;
  for (auto const& [a, b] : u.exceptions()) ex.emplace_back(b, a);
  return TapeEntourage(u.fiber().size(), u.radius(), invert(u.fiber()),
                       std::move(ex));
}

bool tape_contains(TapeSpace const& x, TapeEntourage const& u) {
  if (u.fiber().size() != x.fiber().size()) return false;
  if (!u.is_invariant(x.fiber().carrier())) return false;
  if (u.radius() >= 0) {
    if (x.coarse() == TapeCoarse::discrete && u.radius() > 0) return false;
    if (!x.fiber().contains(u.fiber())) return false;
  }
  return std::all_of(u.exceptions().begin(), u.exceptions().end(),
                     [&](auto const& e) { return x.related(e.first, e.second); });
}

TapeSpace tape_bounded_union(Space const& x) {
  return TapeSpace(x, TapeCoarse::discrete, TapeBornology::finite_window);
}

TapeSpace tape_free_union(Space const& x) {
  // The free union is generated by entourages U_0 u U_1 u ... with each U_i
  // a coarse entourage of X on the slice {i} x X. X is finite, so all such
  // unions lie in diag(N) x R_X, which is the discrete preset.
  return TapeSpace(x, TapeCoarse::discrete, TapeBornology::finite_window);
}

bool same_structures(TapeSpace const& a, TapeSpace const& b) { return a == b; }

namespace {

void require_tape(Endpoint const& e, char const* what) {
  if (!e.tape) throw ValidationError(std::string(what) + " must be a tape");
}

void require_finite(Endpoint const& e, char const* what) {
  if (!e.finite)
    throw ValidationError(std::string(what) + " must be a finite space");
}

}  // namespace

void validate_tape_map(TapeMap const& f, Endpoint const& src,
                       Endpoint const& dst) {
  switch (f.kind) {
    case TapeMap::Kind::shift:
      require_tape(src, "source of a shift");
      require_tape(dst, "target of a shift");
      require_equivariant(f.phi, src.tape->fiber().carrier(),
                          dst.tape->fiber().carrier());
      break;
    case TapeMap::Kind::projection:
      require_tape(src, "source of a projection");
      require_finite(dst, "target of a projection");
      require_equivariant(f.phi, src.tape->fiber().carrier(),
                          dst.finite->carrier());
      break;
    case TapeMap::Kind::embedding:
      require_finite(src, "source of an embedding");
      require_tape(dst, "target of an embedding");
      require_equivariant(f.phi, src.finite->carrier(),
                          dst.tape->fiber().carrier());
      break;
  }
}

MapPredicates tape_map_predicates(TapeMap const& f, Endpoint const& src,
                                  Endpoint const& dst) {
  validate_tape_map(f, src, dst);
  MapPredicates p;
  switch (f.kind) {
    case TapeMap::Kind::shift: {
      auto const& x = *src.tape;
      auto const& y = *dst.tape;
      p.controlled = is_controlled(f.phi, x.fiber(), y.fiber()) &&
                     !(x.coarse() == TapeCoarse::band &&
                       y.coarse() == TapeCoarse::discrete);
      // Preimage of a window is a window; preimage of everything is
      // everything.
      p.proper = y.bornology() == TapeBornology::finite_window ||
                 x.bornology() == TapeBornology::all;
      // Image of a window is a window; image of everything is a tail.
      p.bornological = x.bornology() == TapeBornology::finite_window ||
                       y.bornology() == TapeBornology::all;
      break;
    }
    case TapeMap::Kind::projection: {
      auto const& x = *src.tape;
      p.controlled = is_controlled(f.phi, x.fiber(), *dst.finite);
      // The preimage of any nonempty subset contains a whole N-line.
      p.proper = x.bornology() == TapeBornology::all ||
                 x.fiber().size() == 0;
      p.bornological = true;
      break;
    }
    case TapeMap::Kind::embedding:
      p.controlled = is_controlled(f.phi, *src.finite, dst.tape->fiber());
      p.proper = true;
      p.bornological = true;
      break;
  }
  return p;
}

TapePoint apply(TapeMap const& f, TapePoint p) {
  switch (f.kind) {
    case TapeMap::Kind::shift:
      return {p.level + f.offset, f.phi[p.fiber]};
    case TapeMap::Kind::projection:
      return {0, f.phi[p.fiber]};
    case TapeMap::Kind::embedding:
      return {f.offset, f.phi[p.fiber]};
  }
  return p;
}

}  // namespace coarsetr::coarse
