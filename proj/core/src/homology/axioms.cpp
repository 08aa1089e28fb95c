#include "coarsetr/homology/axioms.hpp"

#include <algorithm>
#include <set>

#include "coarsetr/error.hpp"
#include "coarsetr/spans/span.hpp"

namespace coarsetr::homology {

namespace {

std::string degree_text(std::size_t n) { return "degree " + std::to_string(n); }

// Sub-matrix on the given rows and columns; other rows are dropped.
SparseMatrix select(SparseMatrix const& m, std::vector<std::uint32_t> const& rows,
                    std::vector<std::uint32_t> const& cols) {
  std::vector<std::int64_t> local(m.rows(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    local[rows[i]] = static_cast<std::int64_t>(i);
  SparseMatrix out(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : m.column(cols[j]))
      if (local[i] >= 0) out.add(static_cast<std::size_t>(local[i]), j, v);
  out.normalize();
  return out;
}

// Indices of basis elements whose tuples avoid the marked points.
std::vector<std::uint32_t> outside(ChainBasis const& b,
                                   std::vector<bool> const& marked) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    auto t = b.rep(i);
    // Orbits stay within one component, and marked sets are unions of
    // components, so testing the first entry decides the whole orbit.
    if (!marked[t[0]]) out.push_back(i);
  }
  return out;
}

// Homology groups 0..max of the quotient of C(x) by chains supported on
// the marked union of components, with the kept basis indices per degree.
struct Relative {
  std::vector<HomologyGroup> groups;
  std::vector<std::vector<std::uint32_t>> kept;
};

Relative relative_homology(ChainComplexModel const& m,
                           std::vector<bool> const& marked,
                           std::size_t max_degree) {
  Relative r;
  for (std::size_t n = 0; n <= max_degree + 1; ++n)
    r.kept.push_back(outside(m.basis(n), marked));
  for (std::size_t n = 0; n <= max_degree; ++n) {
    SparseMatrix dn = n == 0 ? SparseMatrix(0, r.kept[0].size())
                             : select(m.boundary(n), r.kept[n - 1], r.kept[n]);
    SparseMatrix dn1 = select(m.boundary(n + 1), r.kept[n], r.kept[n + 1]);
    r.groups.push_back(homology_at(dn, dn1));
  }
  return r;
}

Matrix<BigInt> stack_columns(std::vector<Matrix<BigInt>> const& blocks,
                             std::size_t rows) {
  std::size_t cols = 0;
  for (auto const& b : blocks) cols += b.cols();
  Matrix<BigInt> out(rows, cols);
  std::size_t off = 0;
  for (auto const& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

Matrix<BigInt> stack_rows(std::vector<Matrix<BigInt>> const& blocks,
                          std::size_t cols) {
  std::size_t rows = 0;
  for (auto const& b : blocks) rows += b.rows();
  Matrix<BigInt> out(rows, cols);
  std::size_t off = 0;
  for (auto const& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(off + i, j) = b(i, j);
    off += b.rows();
  }
  return out;
}

Orders concat(std::vector<Orders> const& parts) {
  Orders out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Map> coproduct_inclusions(std::vector<Space> const& parts) {
  std::vector<Map> out;
  Point offset = 0;
  for (auto const& p : parts) {
    Map m(p.size());
    for (Point x = 0; x < p.size(); ++x) m[x] = offset + x;
    offset += static_cast<Point>(p.size());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

AxiomCheck check_coarse_invariance(Space const& x, std::size_t max_degree) {
  AxiomCheck out{"coarse invariance"};
  auto two = Space::maximal(grp::GSet::trivial(x.group(), 2));
  Space p = coarse::tensor(two, x);
  Map pr(p.size());
  for (Point q = 0; q < p.size(); ++q)
    pr[q] = static_cast<Point>(q % std::max<std::size_t>(x.size(), 1));
  Homology hp(p, max_degree), hx(x, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto f = pushforward(pr, hp.model().basis(n), hx.model().basis(n));
    auto m = induced_on_homology(hp, hx, f, n);
    if (!is_isomorphism(m, hp.degree(n).orders, hx.degree(n).orders))
      out.fail(degree_text(n) + ": projection is not an isomorphism");
  }
  return out;
}

bool is_complementary_pair(Space const& x, std::vector<Point> const& z,
                           std::vector<Point> const& y) {
  if (!x.carrier().is_invariant(z) || !x.carrier().is_invariant(y))
    return false;
  std::vector<bool> covered(x.size(), false);
  for (Point p : z) covered[p] = true;
  for (Point p : x.closure(y)) covered[p] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

AxiomCheck check_excision(Space const& x, std::vector<Point> const& z,
                          std::vector<Point> const& y, std::size_t max_degree) {
  if (!is_complementary_pair(x, z, y))
    throw ValidationError(
        "not a complementary pair: Z and Y must be invariant and Z together "
        "with the coarse closure of Y must cover the space");
  AxiomCheck out{"excision"};
  std::vector<Point> zs = z;
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  Space zspace = coarse::subspace(x, zs);

  std::vector<bool> in_y(x.size(), false);
  for (Point p : x.closure(y)) in_y[p] = true;
  std::vector<bool> in_zy(zs.size(), false);
  for (std::size_t i = 0; i < zs.size(); ++i) in_zy[i] = in_y[zs[i]];

  ChainComplexModel mx(x, max_degree + 1), mz(zspace, max_degree + 1);
  auto rx = relative_homology(mx, in_y, max_degree);
  auto rz = relative_homology(mz, in_zy, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto inc = pushforward(zs, mz.basis(n), mx.basis(n));
    auto f = select(inc, rx.kept[n], rz.kept[n]);
    auto m = induced_on_homology(rz.groups[n], rx.groups[n], f);
    if (!is_isomorphism(m, rz.groups[n].orders, rx.groups[n].orders))
      out.fail(degree_text(n) + ": H(Z, Z n Y) -> H(X, Y) is not an isomorphism");
  }
  return out;
}

AxiomCheck check_u_continuity(Space const& x, std::size_t max_degree) {
  AxiomCheck out{"u-continuity"};
  auto const& s = x.carrier();
  // Orbits of related off-diagonal pairs, in lexicographic order of their
  // smallest member.
  std::vector<std::vector<std::pair<Point, Point>>> orbits;
  std::set<std::pair<Point, Point>> seen;
  for (Point a = 0; a < x.size(); ++a)
    for (Point b = 0; b < x.size(); ++b) {
      if (a == b || !x.related(a, b) || seen.count({a, b})) continue;
      std::vector<std::pair<Point, Point>> orbit;
      for (grp::Element g = 0; g < x.group()->order(); ++g) {
        std::pair<Point, Point> q{s.act(g, a), s.act(g, b)};
        if (seen.insert(q).second) orbit.push_back(q);
      }
      orbits.push_back(std::move(orbit));
    }

  std::vector<Space> tower{Space::minimal(s)};
  std::vector<std::pair<Point, Point>> pairs;
  for (auto const& orbit : orbits) {
    pairs.insert(pairs.end(), orbit.begin(), orbit.end());
    Space next(s, {coarse::Entourage::from_pairs(s.size(), pairs)});
    if (!(next.components() == tower.back().components()))
      tower.push_back(std::move(next));
  }
  if (!(tower.back().components() == x.components()))
    throw InternalError("entourage tower does not reach the structure");

  std::vector<Homology> hs;
  for (auto const& t : tower) hs.emplace_back(t, max_degree);
  Homology hx(x, max_degree);
  Map id = coarse::identity_map(x.size());
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Orders> objects;
    std::vector<DiagramArrow> arrows;
    std::vector<Matrix<BigInt>> cocone;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      objects.push_back(hs[j].degree(n).orders);
      if (j + 1 < hs.size()) {
        auto f = pushforward(id, hs[j].model().basis(n),
                             hs[j + 1].model().basis(n));
        arrows.push_back({j, j + 1, induced_on_homology(hs[j], hs[j + 1], f, n)});
      }
      auto g = pushforward(id, hs[j].model().basis(n), hx.model().basis(n));
      cocone.push_back(induced_on_homology(hs[j], hx, g, n));
    }
    auto c = colimit(objects, arrows);
    auto m = map_from_colimit(c, cocone, hx.degree(n).orders);
    if (!is_isomorphism(m, c.orders, hx.degree(n).orders))
      out.fail(degree_text(n) + ": colimit over the tower is not H(X)");
  }
  return out;
}

AxiomCheck check_additivity(std::vector<Space> const& parts,
                            std::size_t max_degree) {
  AxiomCheck out{"additivity"};
  if (parts.empty()) return out;
  Space x = coarse::coproduct(parts);
  auto inc = coproduct_inclusions(parts);
  Homology hx(x, max_degree);
  std::vector<Homology> hs;
  for (auto const& p : parts) hs.emplace_back(p, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Matrix<BigInt>> blocks;
    std::vector<Orders> src;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto f = pushforward(inc[i], hs[i].model().basis(n), hx.model().basis(n));
      blocks.push_back(induced_on_homology(hs[i], hx, f, n));
      src.push_back(hs[i].degree(n).orders);
    }
    auto m = stack_columns(blocks, hx.degree(n).generator_count());
    if (!is_isomorphism(m, concat(src), hx.degree(n).orders))
      out.fail(degree_text(n) + ": sum of inclusions is not an isomorphism");
  }
  return out;
}

AxiomCheck check_strong_additivity(std::vector<Space> const& parts,
                                   std::size_t max_degree) {
  AxiomCheck out{"strong additivity"};
  if (parts.empty()) return out;
  // For a finite family the free union is the coproduct.
  Space x = coarse::coproduct(parts);
  auto inc = coproduct_inclusions(parts);
  Homology hx(x, max_degree);
  std::vector<Homology> hs;
  for (auto const& p : parts) hs.emplace_back(p, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<Matrix<BigInt>> blocks;
    std::vector<Orders> dst;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto r = transfer(inc[i], hs[i].model().basis(n), hx.model().basis(n));
      blocks.push_back(induced_on_homology(hx, hs[i], r, n));
      dst.push_back(hs[i].degree(n).orders);
    }
    auto m = stack_rows(blocks, hx.degree(n).generator_count());
    if (!is_isomorphism(m, hx.degree(n).orders, concat(dst)))
      out.fail(degree_text(n) + ": restrictions do not assemble to an isomorphism");
  }
  return out;
}

AxiomCheck check_weak_transfers(Space const& x, std::size_t k,
                                std::size_t max_degree) {
  AxiomCheck out{"weak transfers"};
  auto index = grp::GSet::trivial(x.group(), k);
  Space p = coarse::free_union(index, x);
  Map fold = spans::fold_map(x, index);
  Homology hp(p, max_degree), hx(x, max_degree);
  std::size_t nx = x.size();
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto const& bp = hp.model().basis(n);
    auto const& bx = hx.model().basis(n);
    auto tr = transfer(fold, bp, bx);
    for (std::size_t j = 0; j < k; ++j) {
      // Excision projection onto the slice {j} x X.
      SparseMatrix proj(bx.size(), bp.size());
      std::vector<Point> stripped(n + 1);
      for (std::uint32_t b = 0; b < bp.size(); ++b) {
        auto t = bp.rep(b);
        if (t[0] / nx != j) continue;
        for (std::size_t e = 0; e <= n; ++e)
          stripped[e] = static_cast<Point>(t[e] % nx);
        auto target = bx.orbit_of(stripped);
        if (!target) throw InternalError("slice tuple is not controlled");
        proj.add(*target, b, 1);
      }
      proj.normalize();
      auto m = induced_on_homology(hx, hx, multiply(proj, tr), n);
      if (!is_multiple_of_identity(m, hx.degree(n).orders, 1))
        out.fail(degree_text(n) + ", slice " + std::to_string(j) +
                 ": projection after transfer is not the identity");
    }
  }
  return out;
}

AxiomCheck check_fold_law(Space const& x, std::size_t k,
                          std::size_t max_degree) {
  AxiomCheck out{"fold law"};
  auto index = grp::GSet::trivial(x.group(), k);
  auto tr = spans::transfer_index(x, index);
  auto fold = spans::embed(spans::fold_map(x, index), tr.dst, x);
  auto s = spans::compose(tr, fold);
  Homology hx(x, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto m = induced_map(s, hx, hx, n);
    if (!is_multiple_of_identity(m, hx.degree(n).orders, BigInt(k)))
      out.fail(degree_text(n) + ": fold after transfer is not " +
               std::to_string(k) + " * id");
  }
  return out;
}

std::vector<AxiomCheck> check_axioms(Space const& x, std::size_t max_degree) {
  std::vector<AxiomCheck> out;
  out.push_back(check_coarse_invariance(x, max_degree));
  std::vector<Point> all(x.size());
  for (Point p = 0; p < x.size(); ++p) all[p] = p;
  std::vector<Point> y;
  if (x.size() > 0) {
    auto orbits = x.carrier().orbits();
    for (Point p = 0; p < x.size(); ++p)
      if (orbits.label[p] == 0) y.push_back(p);
  }
  out.push_back(check_excision(x, all, y, max_degree));
  out.push_back(check_u_continuity(x, max_degree));
  out.push_back(check_additivity({x, x}, max_degree));
  out.push_back(check_weak_transfers(x, 3, max_degree));
  out.push_back(check_strong_additivity({x, x}, max_degree));
  out.push_back(check_fold_law(x, 3, max_degree));
  return out;
}

FlasqueReport check_flasque_witness(Space const& x, Map const& s) {
  coarse::require_equivariant(s, x.carrier(), x.carrier());
  FlasqueReport r;
  r.is_morphism = coarse::map_predicates(s, x, x).is_morphism();
  r.close_to_identity = true;
  for (Point p = 0; p < x.size(); ++p)
    r.close_to_identity = r.close_to_identity && x.related(p, s[p]);
  // Finitely many distinct iterates, each controlled when s is.
  r.iterates_controlled = coarse::is_controlled(s, x, x);
  // The whole space is bounded and every iterate of it is nonempty.
  r.escapes_bounded_sets = x.size() == 0;
  return r;
}

FlasqueReport check_flasque_witness(coarse::TapeSpace const& x,
                                    coarse::TapeMap const& s) {
  using coarse::TapeMap;
  if (s.kind != TapeMap::Kind::shift)
    throw ValidationError("a flasqueness witness on a tape must be a shift");
  auto ep = coarse::Endpoint::of(x);
  coarse::validate_tape_map(s, ep, ep);
  FlasqueReport r;
  r.is_morphism = coarse::tape_map_predicates(s, ep, ep).is_morphism();

  Space const& f = x.fiber();
  bool phi_close = true;
  for (Point p = 0; p < f.size(); ++p) phi_close = phi_close && f.related(p, s.phi[p]);
  bool band = x.coarse() == coarse::TapeCoarse::band;
  // {(p, s p)} has level offset `offset`: any band contains it, the discrete
  // structure only when the offset is zero.
  r.close_to_identity = phi_close && (band || s.offset == 0);
  // s^n x s^n moves both levels by the same amount, so a band keeps its
  // radius; only the fiber part can escape control.
  r.iterates_controlled = coarse::is_controlled(s.phi, f, f);
  // Windows are pushed off by any positive offset; under the "all"
  // bornology the whole tape is bounded and is never escaped.
  r.escapes_bounded_sets =
      x.bornology() == coarse::TapeBornology::finite_window && s.offset > 0;
  return r;
}

}  // namespace coarsetr::homology
