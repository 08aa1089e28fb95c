#include "coarsetr/coarse/entourage.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::coarse {

namespace {

void require_same_carrier(Entourage const& u, Entourage const& v) {
  if (u.size() != v.size())
    throw ValidationError("entourages live on different carriers");
}

}  // namespace

Entourage Entourage::diagonal(std::size_t size) {
  Entourage e(size);
  for (Point x = 0; x < size; ++x) e.insert(x, x);
  return e;
}

Entourage Entourage::everything(std::size_t size) {
  Entourage e(size);
  e.bits_.assign(size * size, true);
  return e;
}

Entourage Entourage::from_pairs(
    std::size_t size, std::vector<std::pair<Point, Point>> const& pairs) {
  Entourage e(size);
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size)
      throw ValidationError("entourage pair outside the carrier");
    e.insert(a, b);
  }
  return e;
}

std::vector<std::pair<Point, Point>> Entourage::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point a = 0; a < size_; ++a)
    for (Point b = 0; b < size_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool Entourage::is_subset_of(Entourage const& other) const {
  require_same_carrier(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool Entourage::is_invariant(grp::GSet const& carrier) const {
  if (carrier.size() != size_) return false;
  for (grp::Element g = 0; g < carrier.group()->order(); ++g)
    for (Point a = 0; a < size_; ++a)
      for (Point b = 0; b < size_; ++b)
        if (contains(a, b) && !contains(carrier.act(g, a), carrier.act(g, b)))
          return false;
  return true;
}

std::vector<Point> thicken(Entourage const& u, std::vector<Point> const& a) {
  std::vector<bool> in(u.size(), false);
  for (Point x : a) {
    if (x >= u.size()) throw ValidationError("subset outside the carrier");
    in[x] = true;
  }
  std::vector<Point> out;
  for (Point w = 0; w < u.size(); ++w)
    for (Point x = 0; x < u.size(); ++x)
      if (in[x] && u.contains(w, x)) {
        out.push_back(w);
        break;
      }
  return out;
}

Entourage compose(Entourage const& u, Entourage const& v) {
  require_same_carrier(u, v);
  std::size_t n = u.size();
  Entourage out(n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      if (!u.contains(x, y)) continue;
      for (Point z = 0; z < n; ++z)
        if (v.contains(y, z)) out.insert(x, z);
    }
  return out;
}

Entourage invert(Entourage const& u) {
  Entourage out(u.size());
  for (auto [a, b] : u.pairs()) out.insert(b, a);
  return out;
}

Entourage unite(Entourage const& u, Entourage const& v) {
  require_same_carrier(u, v);
  Entourage out = u;
  for (auto [a, b] : v.pairs()) out.insert(a, b);
  return out;
}

Entourage equivalence_closure(Entourage const& u) {
  std::size_t n = u.size();
  // Union-find over the pairs, then expand.
  std::vector<Point> parent(n);
  for (Point x = 0; x < n; ++x) parent[x] = x;
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : u.pairs()) {
    Point ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  Entourage out(n);
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      if (find(a) == find(b)) out.insert(a, b);
  return out;
}

}  // namespace coarsetr::coarse
