#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarsetr/grp/orbit_category.hpp"
#include "coarsetr/spans/span.hpp"

namespace coarsetr::mackey {

using coarse::Map;
using grp::GSet;
using grp::Point;

/// A morphism src -> dst of the effective Burnside category:
/// src <-left- apex -right-> dst, both legs equivariant.
struct GFinSpan {
  GSet src;
  GSet apex;
  GSet dst;
  Map left;
  Map right;
};

/// Validates both legs; throws ValidationError otherwise.
GFinSpan make_gfin_span(GSet src, GSet apex, GSet dst, Map left, Map right);
GFinSpan identity_gfin_span(GSet const& s);
/// Apex is the fiber product of first.right and second.left, points in
/// lexicographic order of the pairs.
GFinSpan compose_gfin_spans(GFinSpan const& first, GFinSpan const& second);
/// Disjoint union of apexes.
GFinSpan add_gfin_spans(GFinSpan const& a, GFinSpan const& b);
/// An equivariant bijection of apexes commuting with both legs.
std::optional<Map> gfin_span_isomorphism(GFinSpan const& a, GFinSpan const& b);
bool gfin_spans_isomorphic(GFinSpan const& a, GFinSpan const& b);

/// S with the minimal coarse structure (and the full bornology).
coarse::Space minimal_space(GSet const& s);
/// The coarse span (S_min <- W_min -> T_min); the left leg is a bounded
/// covering because all components are points.
spans::Span to_coarse_span(GFinSpan const& s);

/// |S^H| for each conjugacy class representative H, in lattice order.
std::vector<std::uint64_t> burnside_marks(GSet const& s,
                                          grp::SubgroupLattice const& lattice);

/// Whether each orbit type G/H is a point or empty under the classifying
/// space of the family, i.e. whether H is in the family.
struct ClassifyingRow {
  std::size_t subgroup_order = 0;
  std::vector<grp::Element> subgroup;
  bool is_point = false;
};
std::vector<ClassifyingRow> classifying_table(
    grp::Group const& g, grp::SubgroupFamily const& family,
    grp::SubgroupLattice const& lattice);

/// Representatives of the double cosets K g H, each the smallest element of
/// its double coset.
std::vector<grp::Element> double_coset_representatives(grp::Group const& g,
                                                       grp::Subgroup const& k,
                                                       grp::Subgroup const& h);

}  // namespace coarsetr::mackey
