#include "coarsetr/homology/smith.hpp"

#include <algorithm>
#include <map>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

namespace {

template <class T>
class Reducer {
 public:
  Reducer(Matrix<T>& a, SmithResult<T>& r, bool rows, bool cols)
      : a_(a), r_(r), rows_(rows), cols_(cols) {}

  // row[dst] += k * row[src]
  void row_add(std::size_t dst, std::size_t src, T const& k, std::size_t from) {
    a_.add_row(dst, src, k, from);
    if (rows_) {
      r_.P.add_row(dst, src, k);
      r_.Pinv.add_col(src, dst, num::neg(k));
    }
  }
  // col[dst] += k * col[src]
  void col_add(std::size_t dst, std::size_t src, T const& k, std::size_t from) {
    a_.add_col(dst, src, k, from);
    if (cols_) {
      r_.Q.add_col(dst, src, k);
      r_.Qinv.add_row(src, dst, num::neg(k));
    }
  }
  void row_swap(std::size_t x, std::size_t y) {
    a_.swap_rows(x, y);
    if (rows_) {
      r_.P.swap_rows(x, y);
      r_.Pinv.swap_cols(x, y);
    }
  }
  void col_swap(std::size_t x, std::size_t y) {
    a_.swap_cols(x, y);
    if (cols_) {
      r_.Q.swap_cols(x, y);
      r_.Qinv.swap_rows(x, y);
    }
  }

 private:
  Matrix<T>& a_;
  SmithResult<T>& r_;
  bool rows_, cols_;
};

}  // namespace

template <class T>
SmithResult<T> smith(Matrix<T> a, bool want_rows, bool want_cols) {
  std::size_t m = a.rows(), n = a.cols();
  SmithResult<T> r;
  if (want_rows) r.P = r.Pinv = Matrix<T>::identity(m);
  if (want_cols) r.Q = r.Qinv = Matrix<T>::identity(n);
  Reducer<T> red(a, r, want_rows, want_cols);

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Pivot: smallest magnitude in the remaining block, stopping at a unit.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    T best = 0;
    for (std::size_t i = t; i < m && !(found && best == 1); ++i) {
      T const* row = a.row(i);
      for (std::size_t j = t; j < n; ++j) {
        if (row[j] == 0) continue;
        T v = num::abs(row[j]);
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    }
    if (!found) break;
    red.row_swap(t, pi);
    red.col_swap(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        T q = num::quot(a(i, t), a(t, t));
        if (q != 0) red.row_add(i, t, num::neg(q), t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        T q = num::quot(a(t, j), a(t, t));
        if (q != 0) red.col_add(j, t, num::neg(q), t);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot is left in row or column t.
      std::size_t bi = t, bj = t;
      T bv = num::abs(a(t, t));
      for (std::size_t i = t + 1; i < m; ++i)
        if (a(i, t) != 0 && num::abs(a(i, t)) < bv) {
          bv = num::abs(a(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != 0 && num::abs(a(t, j)) < bv) {
          bv = num::abs(a(t, j));
          bi = t;
          bj = j;
        }
      if (bi != t) red.row_swap(t, bi);
      if (bj != t) red.col_swap(t, bj);
    }
    ++t;
  }
  r.rank = t;
  for (std::size_t i = 0; i < t; ++i) r.diagonal.push_back(a(i, i));
  return r;
}

template SmithResult<std::int64_t> smith(Matrix<std::int64_t>, bool, bool);
template SmithResult<BigInt> smith(Matrix<BigInt>, bool, bool);

std::vector<BigInt> invariant_factors(std::vector<BigInt> const& orders) {
  std::map<BigInt, std::vector<BigInt>> powers;  // prime -> prime powers
  for (BigInt o : orders) {
    o = num::abs(o);
    if (o == 0) throw InternalError("invariant_factors expects finite orders");
    for (BigInt p = 2; p * p <= o; ++p) {
      if (o % p != 0) continue;
      BigInt q = 1;
      while (o % p == 0) {
        o /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (o > 1) powers[o].push_back(o);
  }
  std::size_t count = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    count = std::max(count, list.size());
  }
  std::vector<BigInt> out(count, BigInt(1));
  for (auto const& [p, list] : powers)
    for (std::size_t k = 0; k < list.size(); ++k) out[k] *= list[k];
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace coarsetr::homology
