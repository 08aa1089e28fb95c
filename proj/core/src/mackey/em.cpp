#include "coarsetr/mackey/em.hpp"

#include "coarsetr/error.hpp"

namespace coarsetr::mackey {

using homology::AbelianGroup;
using homology::Orders;

Homology em_object(GSet const& s, std::size_t max_degree) {
  return Homology(minimal_space(s), max_degree);
}

Matrix<BigInt> em_morphism(GFinSpan const& s, Homology const& src,
                           Homology const& dst, std::size_t n) {
  if (!(src.space().carrier() == s.src) || !(dst.space().carrier() == s.dst))
    throw ValidationError("span endpoints do not match the EM values");
  homology::ChainBasis apex(minimal_space(s.apex), n);
  auto chains = homology::multiply(
      homology::pushforward(s.left, apex, src.model().basis(n)),
      homology::transfer(s.right, apex, dst.model().basis(n)));
  return homology::induced_on_homology(dst, src, chains, n);
}

DoubleCosetCheck double_coset_check(grp::GroupPtr const& g,
                                    grp::Subgroup const& h,
                                    grp::Subgroup const& k,
                                    std::size_t max_degree) {
  auto gh = grp::coset_space(g, h);
  auto gk = grp::coset_space(g, k);
  GSet pt = GSet::trivial(g, 1);
  Map to_pt_h(gh.set.size(), 0), to_pt_k(gk.set.size(), 0);
  // res: G/K -> pt and tr: pt -> G/H in the Burnside category. EM is
  // contravariant, so their composite acts as res_K o tr_H on values.
  GFinSpan res{gk.set, gk.set, pt, coarse::identity_map(gk.set.size()), to_pt_k};
  GFinSpan tr{pt, gh.set, gh.set, to_pt_h, coarse::identity_map(gh.set.size())};
  GFinSpan composite = compose_gfin_spans(res, tr);

  Homology eh = em_object(gh.set, max_degree);
  Homology ek = em_object(gk.set, max_degree);

  DoubleCosetCheck out;
  auto reps = double_coset_representatives(*g, k, h);
  out.double_cosets = reps.size();

  // One span per double coset: G/L with L = K n gHg^-1, xL -> xK and
  // xL -> xgH.
  std::vector<GFinSpan> pieces;
  for (grp::Element x : reps) {
    auto ghg = grp::conjugate(*g, h, g->inv(x));  // x H x^-1
    std::vector<grp::Element> meet;
    for (grp::Element e : k.elements())
      if (ghg.contains(e)) meet.push_back(e);
    auto gl = grp::coset_space(g, grp::Subgroup(*g, meet));
    Map left(gl.set.size()), right(gl.set.size());
    for (Point p = 0; p < gl.set.size(); ++p) {
      grp::Element r = gl.representative[p];
      left[p] = gk.point_of[r];
      right[p] = gh.point_of[g->mul(r, x)];
    }
    pieces.push_back(make_gfin_span(gk.set, gl.set, gh.set, left, right));
  }

  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto lhs = em_morphism(composite, ek, eh, n);
    Matrix<BigInt> rhs(lhs.rows(), lhs.cols());
    for (auto const& piece : pieces) {
      auto m = em_morphism(piece, ek, eh, n);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rhs(i, j) += m(i, j);
    }
    if (!homology::same_homomorphism(lhs, rhs, ek.degree(n).orders)) {
      out.ok = false;
      out.failures.push_back("degree " + std::to_string(n) +
                             ": res o tr differs from the double coset sum");
    }
  }
  return out;
}

MackeyTable mackey_table(grp::GroupPtr const& g,
                         grp::SubgroupFamily const& family,
                         std::size_t max_degree) {
  grp::OrbitCategory cat(g, family);
  MackeyTable t;
  std::vector<Homology> values;
  for (std::size_t i = 0; i < cat.object_count(); ++i) {
    values.push_back(em_object(cat.object(i).set, max_degree));
    MackeyTable::Object o{cat.object(i).subgroup, values.back().groups(), {}};
    for (std::size_t n = 0; n <= max_degree; ++n)
      o.orders.push_back(values.back().degree(n).orders);
    t.objects.push_back(std::move(o));
  }
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    for (std::size_t b = 0; b < cat.object_count(); ++b) {
      auto const& homs = cat.hom(a, b);
      if (homs.empty() || a == b) continue;
      Map phi = cat.as_map(homs.front());
      GSet const& sa = cat.object(a).set;
      GSet const& sb = cat.object(b).set;
      Map id = coarse::identity_map(sa.size());
      GFinSpan res{sa, sa, sb, id, phi};
      GFinSpan tr{sb, sa, sa, phi, id};
      MackeyTable::Entry e{a, b, {}, {}};
      for (std::size_t n = 0; n <= max_degree; ++n) {
        e.restriction.push_back(em_morphism(res, values[a], values[b], n));
        e.transfer.push_back(em_morphism(tr, values[b], values[a], n));
      }
      t.entries.push_back(std::move(e));
    }
  return t;
}

AssemblyResult assembly(grp::GroupPtr const& g,
                        grp::SubgroupFamily const& family, std::size_t degree) {
  grp::OrbitCategory cat(g, family);
  GSet pt = GSet::trivial(g, 1);
  Homology target = em_object(pt, degree);

  AssemblyResult r;
  r.family = family.name();
  r.degree = degree;
  std::vector<Homology> values;
  std::vector<Orders> objects;
  for (std::size_t i = 0; i < cat.object_count(); ++i) {
    values.push_back(em_object(cat.object(i).set, degree));
    objects.push_back(values.back().degree(degree).orders);
    r.object_orders.push_back(cat.object(i).subgroup.order());
  }

  auto covariant = [&](Map const& f, std::size_t a, Homology const& hb) {
    auto chains = homology::pushforward(f, values[a].model().basis(degree),
                                        hb.model().basis(degree));
    return homology::induced_on_homology(values[a], hb, chains, degree);
  };

  std::vector<homology::DiagramArrow> arrows;
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    for (std::size_t b = 0; b < cat.object_count(); ++b)
      for (auto const& m : cat.hom(a, b)) {
        if (m == cat.identity(a)) continue;
        arrows.push_back({a, b, covariant(cat.as_map(m), a, values[b])});
      }
  r.arrow_count = arrows.size();

  auto c = homology::colimit(objects, arrows);
  std::vector<Matrix<BigInt>> cocone;
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    cocone.push_back(covariant(Map(cat.object(a).set.size(), 0), a, target));
  r.colimit_orders = c.orders;
  r.target_orders = target.degree(degree).orders;
  r.matrix = homology::map_from_colimit(c, cocone, r.target_orders);
  r.injective = homology::is_injective(r.matrix, r.colimit_orders, r.target_orders);
  r.split = r.injective && homology::is_split_injective(
                               r.matrix, r.colimit_orders, r.target_orders);
  return r;
}

}  // namespace coarsetr::mackey
