#include "coarsetr/spans/span.hpp"

#include <algorithm>
#include <map>

#include "coarsetr/error.hpp"

namespace coarsetr::spans {

namespace {

std::string point_text(Point p) { return std::to_string(p); }

void require_same_group(Space const& a, Space const& b) {
  if (!grp::same_group(a.group(), b.group()))
    throw ValidationError("spaces over different groups");
}

}  // namespace

Diagnostic validate_span(Span const& s) {
  require_same_group(s.src, s.apex);
  require_same_group(s.apex, s.dst);
  coarse::require_equivariant(s.left, s.apex.carrier(), s.src.carrier());
  coarse::require_equivariant(s.right, s.apex.carrier(), s.dst.carrier());
  auto d = is_bounded_covering(s.left, s.apex, s.src);
  if (!d.ok) {
    d.condition = "left leg: " + d.condition;
    return d;
  }
  auto p = coarse::map_predicates(s.right, s.apex, s.dst);
  if (!p.controlled || !p.proper || !p.bornological)
    return Diagnostic::failure("right leg",
                               "not a bornological morphism (controlled " +
                                   std::string(p.controlled ? "yes" : "no") +
                                   ")");
  return d;
}

Span make_span(Space src, Space apex, Space dst, Map left, Map right) {
  Span s{std::move(src), std::move(apex), std::move(dst), std::move(left),
         std::move(right)};
  auto d = validate_span(s);
  if (!d.ok)
    throw ValidationError("invalid span: " + d.condition + ": " + d.witness);
  return s;
}

Pullback pullback(Map const& g, Space const& v, Map const& u, Space const& U,
                  Space const& z) {
  auto pg = coarse::map_predicates(g, v, z);
  if (!pg.proper || !pg.bornological)
    throw ValidationError("pullback: g must be proper and bornological");
  auto du = is_bounded_covering(u, U, z);
  if (!du.ok)
    throw ValidationError("pullback: u is not a bounded covering (" +
                          du.condition + ": " + du.witness + ")");
  GSet product = GSet::product(v.carrier(), U.carrier());
  std::vector<Point> subset;
  Pullback pb;
  std::vector<std::uint32_t> labels;
  for (Point a = 0; a < v.size(); ++a)
    for (Point b = 0; b < U.size(); ++b)
      if (g[a] == u[b]) {
        subset.push_back(static_cast<Point>(a * U.size() + b));
        pb.to_first.push_back(a);
        pb.to_second.push_back(b);
        labels.push_back(static_cast<std::uint32_t>(
            v.components().label[a] * U.components().blocks +
            U.components().label[b]));
      }
  pb.apex = Space::from_partition(GSet::restrict_to(product, subset),
                                  grp::canonical_partition(labels));
  return pb;
}

Square complete_square(Map const& g, Space const& v, Map const& u,
                       Space const& U, Space const& z) {
  auto pb = pullback(g, v, u, U, z);
  return {pb.apex, U, v, z, pb.to_first, pb.to_second, g, u};
}

SquareDiagnostic is_admissible(Square const& sq) {
  coarse::require_equivariant(sq.w, sq.W.carrier(), sq.V.carrier());
  coarse::require_equivariant(sq.f, sq.W.carrier(), sq.U.carrier());
  coarse::require_equivariant(sq.g, sq.V.carrier(), sq.Z.carrier());
  coarse::require_equivariant(sq.u, sq.U.carrier(), sq.Z.carrier());
  SquareDiagnostic out;
  auto fail = [&](std::string cond, std::string witness) {
    out.verdict = Diagnostic::failure(std::move(cond), std::move(witness));
    return out;
  };

  for (Point p = 0; p < sq.W.size(); ++p)
    if (sq.g[sq.w[p]] != sq.u[sq.f[p]])
      return fail("commutes", "point " + point_text(p) + " of W");

  struct Named {
    char const* name;
    Map const* map;
    Space const* src;
    Space const* dst;
  };
  for (auto [name, map, src, dst] :
       {Named{"w", &sq.w, &sq.W, &sq.V}, Named{"f", &sq.f, &sq.W, &sq.U},
        Named{"g", &sq.g, &sq.V, &sq.Z}, Named{"u", &sq.u, &sq.U, &sq.Z}}) {
    auto p = coarse::map_predicates(*map, *src, *dst);
    if (!p.controlled) return fail(std::string(name) + " controlled", "");
    if (!p.proper || !p.bornological)
      return fail(std::string(name) + " proper and bornological", "");
  }

  // Cartesian: W -> V x_Z U must be a bijection and a coarse isomorphism.
  std::map<std::pair<Point, Point>, Point> hit;
  for (Point p = 0; p < sq.W.size(); ++p) {
    auto [it, fresh] = hit.emplace(std::make_pair(sq.w[p], sq.f[p]), p);
    if (!fresh)
      return fail("cartesian", "points " + point_text(it->second) + " and " +
                                   point_text(p) +
                                   " of W map to the same pair");
  }
  for (Point a = 0; a < sq.V.size(); ++a)
    for (Point b = 0; b < sq.U.size(); ++b)
      if (sq.g[a] == sq.u[b] && !hit.count({a, b}))
        return fail("cartesian", "pair (" + point_text(a) + ", " +
                                     point_text(b) +
                                     ") of the fiber product is not hit");
  for (Point p = 0; p < sq.W.size(); ++p)
    for (Point q = p + 1; q < sq.W.size(); ++q) {
      bool expected = sq.V.related(sq.w[p], sq.w[q]) &&
                      sq.U.related(sq.f[p], sq.f[q]);
      if (expected != sq.W.related(p, q))
        return fail("cartesian", "points " + point_text(p) + " and " +
                                     point_text(q) +
                                     " disagree with the fiber product "
                                     "structure");
    }

  auto du = is_bounded_covering(sq.u, sq.U, sq.Z);
  if (!du.ok) {
    du.condition = "u bounded covering: " + du.condition;
    out.verdict = du;
    return out;
  }
  out.left_edge_covering = is_bounded_covering(sq.w, sq.W, sq.V).ok;
  return out;
}

Span compose(Span const& first, Span const& second) {
  if (!(first.dst == second.src))
    throw ValidationError("spans are not composable: target of the first "
                          "differs from the source of the second");
  auto pb = pullback(first.right, first.apex, second.left, second.apex,
                     first.dst);
  return Span{first.src, pb.apex, second.dst,
              coarse::compose(pb.to_first, first.left),
              coarse::compose(pb.to_second, second.right)};
}

Span identity_span(Space const& x) {
  return Span{x, x, x, coarse::identity_map(x.size()),
              coarse::identity_map(x.size())};
}

Span zero_span(Space const& x, Space const& y) {
  require_same_group(x, y);
  Space empty = Space::minimal(GSet(x.group(), 0, {}));
  return Span{x, std::move(empty), y, {}, {}};
}

Span embed(Map const& f, Space const& x, Space const& y) {
  auto p = coarse::map_predicates(f, x, y);
  if (!p.is_morphism())
    throw ValidationError("embed: map is not controlled and proper");
  // The bornology f^{-1}B_Y is the full power set on a finite carrier.
  return Span{x, x, y, coarse::identity_map(x.size()), f};
}

Span transfer(Map const& w, Space const& W, Space const& x) {
  auto d = is_bounded_covering(w, W, x);
  if (!d.ok)
    throw ValidationError("transfer: not a bounded covering (" + d.condition +
                          ": " + d.witness + ")");
  return Span{x, W, W, w, coarse::identity_map(W.size())};
}

Span transfer_index(Space const& x, GSet const& index) {
  Space w = coarse::bounded_union(index, x);
  return transfer(fold_map(x, index), w, x);
}

Map slice_inclusion(Space const& x, GSet const& index, Point i) {
  if (i >= index.size()) throw ValidationError("index point out of range");
  for (grp::Element g = 0; g < index.group()->order(); ++g)
    if (index.act(g, i) != i)
      throw ValidationError("index point " + point_text(i) +
                            " is not fixed by the group");
  Map m(x.size());
  for (Point p = 0; p < x.size(); ++p)
    m[p] = static_cast<Point>(i * x.size() + p);
  return m;
}

Map fold_map(Space const& x, GSet const& index) {
  Map m(index.size() * x.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    m[k] = static_cast<Point>(k % x.size());
  return m;
}

Span slice_projection(Space const& x, GSet const& index, Point i) {
  Space w = coarse::bounded_union(index, x);
  return make_span(w, x, x, slice_inclusion(x, index, i),
                   coarse::identity_map(x.size()));
}

Span add(Span const& a, Span const& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw ValidationError("sum of spans with different endpoints");
  Span s{a.src, coarse::coproduct({a.apex, b.apex}), a.dst, a.left, a.right};
  s.left.insert(s.left.end(), b.left.begin(), b.left.end());
  s.right.insert(s.right.end(), b.right.begin(), b.right.end());
  return s;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(Span const& a, Span const& b) : a_(a), b_(b) {}

  std::optional<Map> run() {
    std::size_t n = a_.apex.size();
    if (n != b_.apex.size()) return std::nullopt;
    if (a_.apex.components().blocks != b_.apex.components().blocks)
      return std::nullopt;
    auto const& ga = a_.apex.carrier();
    auto const& gb = b_.apex.carrier();
    if (ga.orbits().blocks != gb.orbits().blocks) return std::nullopt;

    order_ = ga.group()->order();
    stab_a_.resize(n);
    stab_b_.resize(n);
    for (Point p = 0; p < n; ++p) {
      stab_a_[p] = ga.stabilizer(p);
      stab_b_[p] = gb.stabilizer(p);
    }
    size_a_ = component_sizes(a_.apex);
    size_b_ = component_sizes(b_.apex);

    auto orbits = ga.orbits().members();
    for (auto const& o : orbits) reps_.push_back(o.front());
    phi_.assign(n, kUnset);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr Point kUnset = static_cast<Point>(-1);

  static std::vector<std::size_t> component_sizes(Space const& s) {
    std::vector<std::size_t> count(s.components().blocks, 0);
    for (auto l : s.components().label) ++count[l];
    std::vector<std::size_t> out(s.size());
    for (Point p = 0; p < s.size(); ++p) out[p] = count[s.components().label[p]];
    return out;
  }

  bool extend(std::size_t k) {
    if (k == reps_.size()) return true;
    Point x = reps_[k];
    auto const& ga = a_.apex.carrier();
    auto const& gb = b_.apex.carrier();
    for (Point y = 0; y < b_.apex.size(); ++y) {
      if (used_[y]) continue;
      if (b_.left[y] != a_.left[x] || b_.right[y] != a_.right[x]) continue;
      if (stab_b_[y] != stab_a_[x] || size_b_[y] != size_a_[x]) continue;
      std::vector<Point> assigned;
      bool ok = true;
      for (grp::Element g = 0; g < order_ && ok; ++g) {
        Point gx = ga.act(g, x), gy = gb.act(g, y);
        if (phi_[gx] != kUnset) {
          ok = phi_[gx] == gy;
          continue;
        }
        if (used_[gy]) {
          ok = false;
          break;
        }
        phi_[gx] = gy;
        used_[gy] = true;
        assigned.push_back(gx);
      }
      if (ok) ok = consistent(assigned);
      if (ok && extend(k + 1)) return true;
      for (Point p : assigned) {
        used_[phi_[p]] = false;
        phi_[p] = kUnset;
      }
    }
    return false;
  }

  bool consistent(std::vector<Point> const& fresh) const {
    for (Point p : fresh) {
      if (b_.left[phi_[p]] != a_.left[p] || b_.right[phi_[p]] != a_.right[p])
        return false;
      for (Point q = 0; q < phi_.size(); ++q) {
        if (phi_[q] == kUnset) continue;
        if (a_.apex.related(p, q) != b_.apex.related(phi_[p], phi_[q]))
          return false;
      }
    }
    return true;
  }

  Span const& a_;
  Span const& b_;
  std::size_t order_ = 0;
  std::vector<std::vector<grp::Element>> stab_a_, stab_b_;
  std::vector<std::size_t> size_a_, size_b_;
  std::vector<Point> reps_;
  Map phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Map> span_isomorphism(Span const& a, Span const& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw ValidationError("span comparison with different endpoints");
  return IsoSearch(a, b).run();
}

bool spans_isomorphic(Span const& a, Span const& b) {
  return span_isomorphism(a, b).has_value();
}

}  // namespace coarsetr::spans
