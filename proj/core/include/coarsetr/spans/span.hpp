#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarsetr/spans/covering.hpp"

namespace coarsetr::spans {

using coarse::Point;
using grp::GSet;

/// A transfer morphism X <-left- W -right-> Y between finite spaces. The left
/// leg is a bounded covering and the right leg a morphism that is also
/// bornological.
struct Span {
  Space src;
  Space apex;
  Space dst;
  Map left;
  Map right;
};

/// Validates the legs; throws ValidationError with the diagnostic otherwise.
Span make_span(Space src, Space apex, Space dst, Map left, Map right);
Diagnostic validate_span(Span const& s);

/// Fiber product V x_Z U = {(v, x) | g(v) = u(x)}, points in lexicographic
/// order, structure generated by the preimages of entourages of V and U.
struct Pullback {
  Space apex;
  Map to_first;   // W -> V
  Map to_second;  // W -> U
};

/// Requires g proper and bornological and u a bounded covering.
Pullback pullback(Map const& g, Space const& v, Map const& u, Space const& U,
                  Space const& z);

/// Square  W -f-> U
///         |w     |u
///         V -g-> Z
struct Square {
  Space W, U, V, Z;
  Map w, f, g, u;
};

struct SquareDiagnostic {
  Diagnostic verdict;
  /// Whether the left edge w passed the bounded covering check, which must
  /// hold for every admissible square.
  bool left_edge_covering = false;
};

SquareDiagnostic is_admissible(Square const& sq);
/// The square obtained by completing the cospan V -g-> Z <-u- U.
Square complete_square(Map const& g, Space const& v, Map const& u,
                       Space const& U, Space const& z);

/// Composite of X -> Y and Y -> Z through the pullback of the inner legs.
Span compose(Span const& first, Span const& second);

Span identity_span(Space const& x);
/// The span with empty apex.
Span zero_span(Space const& x, Space const& y);
/// (X, id, f) for a morphism f.
Span embed(Map const& f, Space const& x, Space const& y);
/// (W, w, id_W) from X to W for a bounded covering w.
Span transfer(Map const& w, Space const& W, Space const& x);
/// Transfer along the projection I_{min,min} (x) X -> X.
Span transfer_index(Space const& x, GSet const& index);
/// x -> (i, x); i must be a fixed point of the index set.
Map slice_inclusion(Space const& x, GSet const& index, Point i);
/// (i, x) -> x
Map fold_map(Space const& x, GSet const& index);
/// [X, j_i, id_X] from I (x) X to X.
Span slice_projection(Space const& x, GSet const& index, Point i);

/// Class of (W u V, w u v, f + g).
Span add(Span const& a, Span const& b);

/// An equivariant bijection of apexes, preserving the coarse structure and
/// commuting with both legs, if one exists.
std::optional<Map> span_isomorphism(Span const& a, Span const& b);
bool spans_isomorphic(Span const& a, Span const& b);

/// A morphism of the homotopy category: a span up to isomorphism.
class HoMorphism {
 public:
  explicit HoMorphism(Span s) : rep_(std::move(s)) {}
  Span const& representative() const noexcept { return rep_; }
  bool operator==(HoMorphism const& other) const {
    return spans_isomorphic(rep_, other.rep_);
  }

 private:
  Span rep_;
};

}  // namespace coarsetr::spans
