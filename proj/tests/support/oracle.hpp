#pragma once

// Brute-force reference computations, written independently of the
// library's chain and Smith-form code. Everything is dense and small.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "coarsetr/coarse/space.hpp"

namespace oracle {

using coarsetr::coarse::Point;
using coarsetr::coarse::Space;
using Tuple = std::vector<Point>;
using Dense = std::vector<std::vector<std::int64_t>>;

/// All (n+1)-tuples with entries in one coarse component, as a list.
inline std::vector<Tuple> controlled_tuples(Space const& x, std::size_t n) {
  std::vector<Tuple> out;
  if (x.size() == 0) return out;
  Tuple t(n + 1, 0);
  while (true) {
    bool ok = true;
    for (auto p : t) ok = ok && x.related(p, t[0]);
    if (ok) out.push_back(t);
    std::size_t i = n + 1;
    while (i > 0 && ++t[i - 1] == x.size()) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Orbits of tuples under the diagonal action, each as a sorted list;
/// orbits ordered by their smallest tuple.
inline std::vector<std::vector<Tuple>> tuple_orbits(Space const& x,
                                                    std::size_t n) {
  std::map<Tuple, std::size_t> seen;
  std::vector<std::vector<Tuple>> orbits;
  auto const& s = x.carrier();
  for (auto const& t : controlled_tuples(x, n)) {
    if (seen.count(t)) continue;
    std::vector<Tuple> orbit;
    for (std::size_t g = 0; g < s.group()->order(); ++g) {
      Tuple u(t.size());
      for (std::size_t k = 0; k < t.size(); ++k)
        u[k] = s.act(static_cast<std::uint32_t>(g), t[k]);
      if (!seen.count(u)) {
        seen[u] = orbits.size();
        orbit.push_back(u);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Boundary matrix C_n -> C_{n-1} obtained by evaluating the face formula
/// (dc)(tau) = sum_i (-1)^i sum_{sigma : d_i sigma = tau} c(sigma)
/// at the smallest tuple of each target orbit.
inline Dense boundary(Space const& x, std::size_t n) {
  auto src = tuple_orbits(x, n);
  auto dst = tuple_orbits(x, n - 1);
  Dense d(dst.size(), std::vector<std::int64_t>(src.size(), 0));
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
      Tuple const& tau = dst[i].front();
      std::int64_t acc = 0;
      for (auto const& sigma : src[j])
        for (std::size_t k = 0; k <= n; ++k) {
          Tuple face = sigma;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
          if (face == tau) acc += (k % 2 == 0) ? 1 : -1;
        }
      d[i][j] = acc;
    }
  }
  return d;
}

/// Diagonal of a Smith form by the textbook algorithm (min-pivot, repeat).
inline std::vector<std::int64_t> elementary_divisors(Dense a) {
  std::vector<std::int64_t> out;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 &&
              (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc])))
            pr = i, pc = j;
      if (pr == rows) return out;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
          }
      if (divides) break;
    }
    out.push_back(std::llabs(a[t][t]));
  }
  return out;
}

struct Group {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // sorted, each > 1
  bool operator==(Group const&) const = default;
};

/// H_n by ranks and elementary divisors of the two adjacent boundaries.
inline Group homology(Space const& x, std::size_t n) {
  std::size_t cn = tuple_orbits(x, n).size();
  std::size_t rank_in = 0;
  if (n > 0) {
    for (auto d : elementary_divisors(boundary(x, n))) rank_in += d != 0;
  }
  auto out = elementary_divisors(boundary(x, n + 1));
  Group h;
  std::size_t rank_out = 0;
  for (auto d : out) {
    if (d == 0) continue;
    ++rank_out;
    if (d > 1) h.torsion.push_back(d);
  }
  h.rank = cn - rank_in - rank_out;
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

}  // namespace oracle
