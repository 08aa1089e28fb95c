#pragma once

// Degree-0 assembly computed a second way: subgroups found by two-element
// closures, orbit-category arrows counted from cosets, and the colimit read
// off a coequalizer presentation. Only the group's multiplication table is
// taken from the library.

#include <numeric>
#include <set>

#include "coarsetr/grp/group.hpp"
#include "oracle.hpp"

namespace oracle {

using coarsetr::grp::Element;
using FiniteGroup = coarsetr::grp::Group;
using Elements = std::vector<Element>;

inline Elements closure(FiniteGroup const& g, Elements gens) {
  std::set<Element> in{g.identity()};
  std::vector<Element> todo{g.identity()};
  while (!todo.empty()) {
    Element x = todo.back();
    todo.pop_back();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (in.insert(y).second) todo.push_back(y);
    }
  }
  return {in.begin(), in.end()};
}

/// Subgroups generated by at most two elements; this is every subgroup of
/// the groups used here (all of A5's subgroups are 2-generated).
inline std::vector<Elements> two_generated_subgroups(FiniteGroup const& g) {
  std::set<Elements> found;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a; b < g.order(); ++b) found.insert(closure(g, {a, b}));
  return {found.begin(), found.end()};
}

inline bool solvable(FiniteGroup const& g, Elements h) {
  while (h.size() > 1) {
    Elements comm;
    for (Element a : h)
      for (Element b : h) comm.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    Elements next = closure(g, comm);
    if (next.size() == h.size()) return false;
    h = next;
  }
  return true;
}

enum class FamilyKind { trivial, solvable, all };

struct AssemblyOracle {
  std::size_t objects = 0;
  std::size_t arrows = 0;  // non-identity morphisms
  std::size_t colimit_rank = 0;
  std::vector<std::int64_t> colimit_torsion;
  std::int64_t image_index = 0;  // the image in E(pt)_0 = Z is image_index * Z
  bool injective = false;
  bool split = false;
};

/// E(G/H)_0 = Z for every orbit (one orbit of points, discrete structure),
/// and G/H -> G/K pushes the generator to [K:H] times the generator.
inline AssemblyOracle assembly_degree0(FiniteGroup const& g, FamilyKind kind) {
  auto in_family = [&](Elements const& h) {
    switch (kind) {
      case FamilyKind::trivial: return h.size() == 1;
      case FamilyKind::solvable: return solvable(g, h);
      case FamilyKind::all: return true;
    }
    return false;
  };
  auto conjugate = [&](Elements const& h, Element x) {
    Elements c;
    for (Element e : h) c.push_back(g.conjugate(e, x));
    std::sort(c.begin(), c.end());
    return c;
  };
  // One representative per conjugacy class.
  std::vector<Elements> reps;
  std::set<Elements> seen;
  for (auto const& h : two_generated_subgroups(g)) {
    if (!in_family(h) || seen.count(h)) continue;
    reps.push_back(h);
    for (Element x = 0; x < g.order(); ++x) seen.insert(conjugate(h, x));
  }

  AssemblyOracle out;
  out.objects = reps.size();
  Dense relations;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) {
      auto const& h = reps[a];
      auto const& k = reps[b];
      std::set<Elements> cosets;
      for (Element x = 0; x < g.order(); ++x) {
        auto c = conjugate(h, x);
        if (!std::includes(k.begin(), k.end(), c.begin(), c.end())) continue;
        Elements coset;
        for (Element e : k) coset.push_back(g.mul(x, e));
        std::sort(coset.begin(), coset.end());
        cosets.insert(coset);
      }
      std::size_t arrows = cosets.size() - (a == b ? 1 : 0);
      out.arrows += arrows;
      if (a == b) continue;  // automorphisms relate e_H to itself
      for (std::size_t i = 0; i < arrows; ++i) {
        std::vector<std::int64_t> row(reps.size(), 0);
        row[a] += 1;
        row[b] -= static_cast<std::int64_t>(k.size() / h.size());
        relations.push_back(row);
      }
    }
  std::size_t nonzero = 0;
  if (!relations.empty())
    for (auto d : elementary_divisors(relations)) {
      if (d == 0) continue;
      ++nonzero;
      if (d > 1) out.colimit_torsion.push_back(d);
    }
  out.colimit_rank = reps.size() - nonzero;
  for (auto const& h : reps)
    out.image_index = std::gcd(out.image_index, static_cast<std::int64_t>(g.order() / h.size()));
  // A surjection onto image_index * Z, which is free of rank one, is
  // injective exactly when its source is Z.
  out.injective = out.colimit_rank == 1 && out.colimit_torsion.empty();
  out.split = out.injective && out.image_index == 1;
  return out;
}

}  // namespace oracle
