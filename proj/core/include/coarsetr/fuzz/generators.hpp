#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coarsetr/mackey/burnside.hpp"
#include "coarsetr/spans/span.hpp"

namespace coarsetr::fuzz {

using coarse::Map;
using coarse::Space;
using grp::GSet;
using grp::Point;

/// Deterministic source of choices. Only the raw engine output is used (the
/// standard distributions are implementation-defined), so a seed reproduces
/// the same cases on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  T const& pick(std::vector<T> const& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Size limits for generated data.
struct Limits {
  std::size_t max_points = 8;
  std::size_t max_component = 3;
};

/// One of the trivial group, C2, C3, C4, V4, S3.
grp::GroupPtr random_group(Rng& rng);
/// Disjoint union of random orbits G/H with at most `max_points` points
/// (possibly empty when `allow_empty`).
GSet random_gset(Rng& rng, grp::GroupPtr const& g, std::size_t max_points,
                 bool allow_empty = false);
/// Random invariant equivalence relation with components of bounded size,
/// built by adding random orbits of pairs while the bound holds.
grp::Partition random_partition(Rng& rng, GSet const& s,
                                std::size_t max_component);
Space random_space(Rng& rng, grp::GroupPtr const& g, Limits const& lim);
/// Random equivariant map; none exists when some orbit of src has no
/// target point with a large enough stabilizer.
std::optional<Map> random_equivariant_map(Rng& rng, GSet const& src,
                                          GSet const& dst);
/// `base` met with the preimage of the components of dst: the coarsest
/// refinement of `base` that makes f controlled.
Space controlled_source(GSet const& carrier, grp::Partition const& base,
                        Map const& f, Space const& dst);

/// A bounded covering W -> Z assembled from pieces G x_H C, with C a
/// component of Z and H inside its setwise stabilizer.
struct Covering {
  Space apex;
  Map map;
};
Covering random_covering(Rng& rng, Space const& z, std::size_t max_points);

/// A random span X -> Y; Y's structure is coarsened as needed so the right
/// leg is controlled, so the returned span carries its own dst.
spans::Span random_span(Rng& rng, Space const& x, GSet const& y_carrier,
                        Limits const& lim);
/// Three composable spans X -> Y -> Z -> T over a common group.
std::vector<spans::Span> random_span_chain(Rng& rng, std::size_t length,
                                           Limits const& lim);

/// The cospan of an admissible square, V -g-> Z <-u- U with u a bounded
/// covering, together with a bounded covering c: V -> X so that the square
/// sits inside a composite of two spans X -> Z -> U.
struct Cospan {
  Space x, v, z, u_space;
  Map c, g, u;
};
Cospan random_cospan(Rng& rng, Limits const& lim);

/// A random subgroup family (generated by random subgroups).
grp::SubgroupFamily random_family(Rng& rng, grp::GroupPtr const& g);
/// A random span of finite G-sets src -> dst with apex of bounded size.
mackey::GFinSpan random_gfin_span(Rng& rng, GSet const& src, GSet const& dst,
                                  std::size_t max_apex);

/// Invariant Z and Y with Z together with the closure of Y covering X.
struct ComplementaryPair {
  std::vector<Point> z;
  std::vector<Point> y;
};
ComplementaryPair random_complementary_pair(Rng& rng, Space const& x);

}  // namespace coarsetr::fuzz
