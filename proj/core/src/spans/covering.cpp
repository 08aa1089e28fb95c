#include "coarsetr/spans/covering.hpp"

#include <map>

#include "coarsetr/error.hpp"

namespace coarsetr::spans {

using coarse::Point;

namespace {

std::string pair_text(Point a, Point b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string tape_text(coarse::TapePoint p) {
  return "(" + std::to_string(p.level) + ", " + std::to_string(p.fiber) + ")";
}

Diagnostic controlled_check(Map const& w, Space const& W, Space const& Z) {
  for (Point a = 0; a < W.size(); ++a)
    for (Point b = a + 1; b < W.size(); ++b)
      if (W.related(a, b) && !Z.related(w[a], w[b]))
        return Diagnostic::failure(
            "controlled", "points " + pair_text(a, b) +
                              " are close but their images are not");
  return {};
}

Diagnostic condition1(Map const& w, Space const& W, Space const& Z) {
  Space induced = coarse::induced_structure(W.carrier(), w, Z);
  auto restricted = coarse::meet(induced.components(), W.components());
  if (restricted == W.components()) return {};
  for (Point a = 0; a < W.size(); ++a)
    for (Point b = 0; b < W.size(); ++b)
      if ((restricted.label[a] == restricted.label[b]) != W.related(a, b))
        return Diagnostic::failure(
            "1", "pair " + pair_text(a, b) +
                     " differs between the structure of W and the induced "
                     "structure restricted to components");
  return Diagnostic::failure("1", "structures differ");
}

Diagnostic condition2(Map const& w, Space const& W, Space const& Z) {
  auto members = W.components().members();
  for (std::size_t c = 0; c < members.size(); ++c) {
    auto const& comp = members[c];
    std::map<Point, Point> preimage;
    for (Point a : comp) {
      auto [it, fresh] = preimage.emplace(w[a], a);
      if (!fresh)
        return Diagnostic::failure(
            "2", "points " + pair_text(it->second, a) + " of component " +
                     std::to_string(c) + " have the same image " +
                     std::to_string(w[a]));
    }
    std::uint32_t target = Z.components().label[w[comp.front()]];
    for (Point z = 0; z < Z.size(); ++z)
      if (Z.components().label[z] == target && !preimage.count(z))
        return Diagnostic::failure(
            "2", "component " + std::to_string(c) + " misses point " +
                     std::to_string(z) + " of its target component");
  }
  return {};
}

}  // namespace

Diagnostic is_bounded_coarse_covering(Map const& w, Space const& W,
                                      Space const& Z) {
  coarse::require_equivariant(w, W.carrier(), Z.carrier());
  if (auto d = controlled_check(w, W, Z); !d.ok) return d;
  if (auto d = condition1(w, W, Z); !d.ok) return d;
  return condition2(w, W, Z);
}

Diagnostic is_bounded_covering(Map const& w, Space const& W, Space const& Z) {
  auto d = is_bounded_coarse_covering(w, W, Z);
  if (!d.ok) return d;
  // Bornological: automatic for finite carriers. Condition 3: the coarse
  // components of W partition every subset into coarsely disjoint pieces on
  // whose closures w is a coarse isomorphism by condition 2.
  return d;
}

namespace {

using coarse::Endpoint;
using coarse::TapeCoarse;
using coarse::TapeMap;

}  // namespace

Diagnostic tape_is_bounded_coarse_covering(TapeMap const& f,
                                           Endpoint const& src,
                                           Endpoint const& dst) {
  auto pred = coarse::tape_map_predicates(f, src, dst);
  if (!pred.controlled)
    return Diagnostic::failure("controlled",
                               "the map does not send entourages to entourages");
  switch (f.kind) {
    case TapeMap::Kind::shift: {
      auto const& x = *src.tape;
      auto const& y = *dst.tape;
      auto fib = is_bounded_coarse_covering(f.phi, x.fiber(), y.fiber());
      if (!fib.ok) {
        fib.witness = "on every level: " + fib.witness;
        return fib;
      }
      if (x.fiber().size() == 0) return {};
      if (x.coarse() == TapeCoarse::band && f.offset > 0)
        return Diagnostic::failure(
            "2", "level 0 of the target component containing " +
                     tape_text({0, f.phi[0]}) + " is not hit");
      if (x.coarse() == TapeCoarse::discrete &&
          y.coarse() == TapeCoarse::band)
        return Diagnostic::failure(
            "2", "component of " + tape_text({0, 0}) +
                     " is finite but its target component is infinite");
      return {};
    }
    case TapeMap::Kind::projection: {
      auto const& x = *src.tape;
      if (x.fiber().size() == 0) return {};
      if (x.coarse() == TapeCoarse::band)
        return Diagnostic::failure(
            "2", "points " + tape_text({0, 0}) + " and " + tape_text({1, 0}) +
                     " lie in one component and have the same image");
      auto fib = is_bounded_coarse_covering(f.phi, x.fiber(), *dst.finite);
      if (!fib.ok) fib.witness = "on every level: " + fib.witness;
      return fib;
    }
    case TapeMap::Kind::embedding: {
      auto const& y = *dst.tape;
      if (src.finite->size() == 0) return {};
      if (y.coarse() == TapeCoarse::band)
        return Diagnostic::failure(
            "2", "the image lies on level " + std::to_string(f.offset) +
                     " but target components are infinite");
      return is_bounded_coarse_covering(f.phi, *src.finite, y.fiber());
    }
  }
  throw InternalError("unknown tape map kind");
}

Diagnostic tape_is_bounded_covering(TapeMap const& f, Endpoint const& src,
                                    Endpoint const& dst,
                                    std::uint64_t window) {
  auto d = tape_is_bounded_coarse_covering(f, src, dst);
  if (!d.ok) return d;
  auto pred = coarse::tape_map_predicates(f, src, dst);
  if (!pred.bornological)
    return Diagnostic::failure("bornological",
                               "the whole tape is bounded but its image is not");
  if (!src.tape) return d;  // finite source: components give the partition

  // Probe the windows [0, n) x F: split each into its intersections with
  // components and check the map is injective on every piece.
  auto const& x = *src.tape;
  d.label = "preset-verified";
  std::size_t fiber_size = x.fiber().size();
  for (std::uint64_t n = 1; n <= window; ++n) {
    std::map<std::pair<std::uint64_t, std::uint32_t>,
             std::map<coarse::TapePoint, coarse::TapePoint>>
        pieces;
    for (std::uint64_t l = 0; l < n; ++l)
      for (Point p = 0; p < fiber_size; ++p) {
        coarse::TapePoint tp{l, p};
        std::uint64_t level_key = x.coarse() == TapeCoarse::discrete ? l : 0;
        auto key = std::make_pair(level_key, x.fiber().components().label[p]);
        auto [it, fresh] = pieces[key].emplace(coarse::apply(f, tp), tp);
        if (!fresh)
          return {false, "3",
                  "window [0, " + std::to_string(n) + "): points " +
                      tape_text(it->second) + " and " + tape_text(tp) +
                      " in one piece have the same image",
                  "preset-verified"};
      }
  }
  if (x.bornology() != coarse::TapeBornology::all || x.fiber().size() == 0)
    return d;
  if (f.kind == TapeMap::Kind::projection)
    return {false, "3",
            "the whole tape is bounded and meets infinitely many components "
            "over the same target component; no finite partition exists",
            "preset-verified"};
  // Shift: pieces N x C for fiber components C are finitely many and
  // coarsely disjoint, and on each the map is injective by condition 2.
  return d;
}

}  // namespace coarsetr::spans
