#include "coarsetr/mackey/burnside.hpp"

#include <algorithm>
#include <functional>

#include "coarsetr/error.hpp"

namespace coarsetr::mackey {

GFinSpan make_gfin_span(GSet src, GSet apex, GSet dst, Map left, Map right) {
  if (!grp::is_equivariant(apex, src, left))
    throw ValidationError("left leg is not an equivariant map apex -> src");
  if (!grp::is_equivariant(apex, dst, right))
    throw ValidationError("right leg is not an equivariant map apex -> dst");
  return {std::move(src), std::move(apex), std::move(dst), std::move(left),
          std::move(right)};
}

GFinSpan identity_gfin_span(GSet const& s) {
  Map id = coarse::identity_map(s.size());
  return {s, s, s, id, id};
}

GFinSpan compose_gfin_spans(GFinSpan const& first, GFinSpan const& second) {
  if (!(first.dst == second.src))
    throw ValidationError("spans are not composable: endpoints differ");
  std::size_t nb = second.apex.size();
  std::vector<Point> pairs;
  for (Point a = 0; a < first.apex.size(); ++a)
    for (Point b = 0; b < nb; ++b)
      if (first.right[a] == second.left[b])
        pairs.push_back(static_cast<Point>(a * nb + b));
  GSet product = GSet::product(first.apex, second.apex);
  GSet apex = GSet::restrict_to(product, pairs);
  Map left(pairs.size()), right(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    left[i] = first.left[pairs[i] / nb];
    right[i] = second.right[pairs[i] % nb];
  }
  return {first.src, std::move(apex), second.dst, std::move(left),
          std::move(right)};
}

GFinSpan add_gfin_spans(GFinSpan const& a, GFinSpan const& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw ValidationError("sum of spans with different endpoints");
  GFinSpan s{a.src, GSet::coproduct(a.apex, b.apex), a.dst, a.left, a.right};
  s.left.insert(s.left.end(), b.left.begin(), b.left.end());
  s.right.insert(s.right.end(), b.right.begin(), b.right.end());
  return s;
}

std::optional<Map> gfin_span_isomorphism(GFinSpan const& a,
                                         GFinSpan const& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw ValidationError("span comparison with different endpoints");
  if (a.apex.size() != b.apex.size()) return std::nullopt;
  std::size_t n = a.apex.size();
  auto const& g = *a.apex.group();
  // An equivariant bijection is fixed by where it sends one point per orbit;
  // the image must have the same stabilizer and the same leg values.
  auto orbits = a.apex.orbits();
  std::vector<Point> reps;
  {
    std::vector<bool> seen(orbits.blocks, false);
    for (Point x = 0; x < n; ++x)
      if (!seen[orbits.label[x]]) {
        seen[orbits.label[x]] = true;
        reps.push_back(x);
      }
  }
  constexpr Point unset = static_cast<Point>(-1);
  Map phi(n, unset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == reps.size()) return true;
    Point x = reps[k];
    auto stab = a.apex.stabilizer(x);
    for (Point y = 0; y < n; ++y) {
      if (used[y] || a.left[x] != b.left[y] || a.right[x] != b.right[y])
        continue;
      if (b.apex.stabilizer(y) != stab) continue;
      std::vector<Point> placed;
      bool ok = true;
      for (grp::Element e = 0; e < g.order() && ok; ++e) {
        Point gx = a.apex.act(e, x), gy = b.apex.act(e, y);
        if (phi[gx] == unset) {
          if (used[gy]) {
            ok = false;
            break;
          }
          phi[gx] = gy;
          used[gy] = true;
          placed.push_back(gx);
        } else {
          ok = phi[gx] == gy;
        }
      }
      if (ok && place(k + 1)) return true;
      for (Point p : placed) {
        used[phi[p]] = false;
        phi[p] = unset;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

bool gfin_spans_isomorphic(GFinSpan const& a, GFinSpan const& b) {
  return gfin_span_isomorphism(a, b).has_value();
}

coarse::Space minimal_space(GSet const& s) { return coarse::Space::minimal(s); }

spans::Span to_coarse_span(GFinSpan const& s) {
  return spans::make_span(minimal_space(s.src), minimal_space(s.apex),
                          minimal_space(s.dst), s.left, s.right);
}

std::vector<std::uint64_t> burnside_marks(GSet const& s,
                                          grp::SubgroupLattice const& lattice) {
  std::vector<std::uint64_t> out;
  for (std::size_t r : lattice.representatives)
    out.push_back(s.fixed_point_count(lattice.subgroups[r]));
  return out;
}

std::vector<ClassifyingRow> classifying_table(
    grp::Group const& g, grp::SubgroupFamily const& family,
    grp::SubgroupLattice const& lattice) {
  if (auto why = grp::family_violation(g, family.members()))
    throw ValidationError("invalid subgroup family: " + *why);
  std::vector<ClassifyingRow> out;
  for (std::size_t r : lattice.representatives) {
    auto const& h = lattice.subgroups[r];
    out.push_back({h.order(), h.elements(), family.contains(h)});
  }
  return out;
}

std::vector<grp::Element> double_coset_representatives(grp::Group const& g,
                                                       grp::Subgroup const& k,
                                                       grp::Subgroup const& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<grp::Element> reps;
  for (grp::Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (grp::Element a : k.elements())
      for (grp::Element b : h.elements()) covered[g.mul(g.mul(a, x), b)] = true;
  }
  return reps;
}

}  // namespace coarsetr::mackey
