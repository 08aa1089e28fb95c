#include "coarsetr/homology/tape_chains.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

using coarse::TapeCoarse;
using coarse::Point;
using coarse::Space;
using coarse::TapeMap;

TapeChain::TapeChain(coarse::TapeSpace space, std::size_t degree,
                     std::uint64_t radius, Rule rule)
    : space_(std::move(space)), degree_(degree), radius_(radius),
      rule_(std::move(rule)) {
  if (space_.coarse() == TapeCoarse::discrete) radius_ = 0;
}

bool TapeChain::in_support(std::span<const TapePoint> t) const {
  if (t.size() != degree_ + 1) return false;
  auto [lo, hi] = std::minmax_element(
      t.begin(), t.end(), [](auto a, auto b) { return a.level < b.level; });
  if (hi->level - lo->level > radius_) return false;
  Space const& f = space_.fiber();
  return std::all_of(t.begin(), t.end(),
                     [&](TapePoint p) { return f.related(p.fiber, t[0].fiber); });
}

std::int64_t TapeChain::operator()(std::span<const TapePoint> t) const {
  return in_support(t) ? rule_(t) : 0;
}

TapeChain boundary(TapeChain const& c) {
  if (c.degree() == 0)
    throw ValidationError("boundary of a 0-chain is the zero map");
  auto rule = [c](std::span<const TapePoint> t) {
    std::uint64_t r = c.radius();
    std::uint64_t base = t[0].level;
    std::uint64_t lo = base > r ? base - r : 0;
    std::size_t fiber = c.space().fiber().size();
    TapeTuple s(t.size() + 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      std::int64_t sign = i % 2 == 0 ? 1 : -1;
      for (std::uint64_t level = lo; level <= base + r; ++level)
        for (Point x = 0; x < fiber; ++x) {
          std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i), s.begin());
          s[i] = {level, x};
          std::copy(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                    s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          acc += sign * c(s);
        }
    }
    return acc;
  };
  return TapeChain(c.space(), c.degree() - 1, c.radius(), rule);
}

TapeChain pushforward(TapeMap const& shift, TapeChain const& c,
                      coarse::TapeSpace const& dst) {
  if (shift.kind != TapeMap::Kind::shift)
    throw ValidationError("tape chains can only be pushed along shifts");
  coarse::validate_tape_map(shift, coarse::Endpoint::of(c.space()),
                            coarse::Endpoint::of(dst));
  if (!coarse::tape_map_predicates(shift, coarse::Endpoint::of(c.space()),
                                   coarse::Endpoint::of(dst))
           .is_morphism())
    throw ValidationError("pushforward along a map that is not a morphism");
  std::size_t fiber = c.space().fiber().size();
  std::vector<std::vector<Point>> preimage(dst.fiber().size());
  for (Point x = 0; x < fiber; ++x) preimage[shift.phi[x]].push_back(x);

  auto rule = [c, shift, preimage](std::span<const TapePoint> t) {
    for (auto p : t)
      if (p.level < shift.offset) return std::int64_t{0};
    TapeTuple s(t.size());
    std::int64_t acc = 0;
    // Odometer over the fiber preimages of each entry.
    std::vector<std::size_t> pick(t.size(), 0);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (preimage[t[k].fiber].empty()) return std::int64_t{0};
    while (true) {
      for (std::size_t k = 0; k < t.size(); ++k)
        s[k] = {t[k].level - shift.offset, preimage[t[k].fiber][pick[k]]};
      acc += c(s);
      std::size_t k = t.size();
      while (k > 0 && ++pick[k - 1] == preimage[t[k - 1].fiber].size())
        pick[--k] = 0;
      if (k == 0) break;
    }
    return acc;
  };
  return TapeChain(dst, c.degree(), c.radius(), rule);
}

namespace {

// Calls visit on every (n+1)-tuple with levels below `window`; stops early
// when visit returns true.
template <class F>
bool for_each_window_tuple(std::size_t n, std::uint64_t window,
                           std::size_t fiber, F&& visit) {
  if (window == 0 || fiber == 0) return false;
  TapeTuple t(n + 1, TapePoint{0, 0});
  while (true) {
    if (visit(t)) return true;
    std::size_t k = n + 1;
    while (k > 0) {
      auto& p = t[k - 1];
      if (++p.fiber < fiber) break;
      p.fiber = 0;
      if (++p.level < window) break;
      p.level = 0;
      --k;
    }
    if (k == 0) return false;
  }
}

}  // namespace

std::optional<TapeTuple> difference_on_window(TapeChain const& a,
                                              TapeChain const& b,
                                              std::uint64_t window) {
  if (a.degree() != b.degree() || !(a.space() == b.space()))
    throw ValidationError("comparing chains of different shapes");
  std::optional<TapeTuple> out;
  for_each_window_tuple(a.degree(), window, a.space().fiber().size(),
                        [&](TapeTuple const& t) {
                          if (a(t) == b(t)) return false;
                          out = t;
                          return true;
                        });
  return out;
}

std::optional<TapeTuple> invariance_violation(TapeChain const& c,
                                              std::uint64_t window) {
  std::optional<TapeTuple> out;
  auto const& space = c.space();
  std::size_t order = space.group()->order();
  TapeTuple moved;
  for_each_window_tuple(c.degree(), window, space.fiber().size(),
                        [&](TapeTuple const& t) {
                          std::int64_t v = c(t);
                          for (grp::Element g = 0; g < order; ++g) {
                            moved = t;
                            for (auto& p : moved) p = space.act(g, p);
                            if (c(moved) != v) {
                              out = t;
                              return true;
                            }
                          }
                          return false;
                        });
  return out;
}

std::uint64_t support_size_on_window(TapeChain const& c, std::uint64_t window) {
  std::uint64_t count = 0;
  for_each_window_tuple(c.degree(), window, c.space().fiber().size(),
                        [&](TapeTuple const& t) {
                          count += c(t) != 0;
                          return false;
                        });
  return count;
}

}  // namespace coarsetr::homology
