#include "coarsetr/homology/homology.hpp"

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

namespace {

struct BlockResult {
  Orders orders;
  Matrix<BigInt> generators;   // local chains x generators
  Matrix<BigInt> coordinates;  // generators x local chains
};

// Columns of `cols` and rows of `rows` restricted from a global sparse
// matrix, re-indexed locally.
SparseMatrix restrict(SparseMatrix const& m, std::vector<std::uint32_t> const& rows,
                      std::vector<std::uint32_t> const& cols) {
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  for (std::size_t i = 0; i < rows.size(); ++i)
    local.emplace(rows[i], static_cast<std::uint32_t>(i));
  SparseMatrix out(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : m.column(cols[j])) {
      auto it = local.find(i);
      if (it == local.end())
        throw InternalError("boundary leaves its summand");
      out.add(it->second, j, v);
    }
  out.normalize();
  return out;
}

void append_key(std::string& key, SparseMatrix const& m) {
  auto put = [&](std::uint64_t v) {
    key.append(reinterpret_cast<char const*>(&v), sizeof v);
  };
  put(m.rows());
  put(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    put(m.column(j).size());
    for (auto [i, v] : m.column(j)) {
      put(i);
      put(static_cast<std::uint64_t>(v));
    }
  }
}

template <class T>
BlockResult reduce_block(SparseMatrix const& dn, SparseMatrix const& dn1) {
  std::size_t c = dn1.rows();
  // Kernel of d_n: K = Q[:, r:], left inverse Kinv = Qinv[r:, :].
  Matrix<T> K, Kinv;
  if (dn.rows() == 0) {
    K = Kinv = Matrix<T>::identity(c);
  } else {
    auto s = smith(dn.dense<T>(), false, true);
    std::size_t k = c - s.rank;
    K = Matrix<T>(c, k);
    Kinv = Matrix<T>(k, c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        K(i, j) = s.Q(i, s.rank + j);
        Kinv(j, i) = s.Qinv(s.rank + j, i);
      }
  }
  std::size_t k = K.cols();

  // Boundaries in kernel coordinates.
  Matrix<T> x(k, dn1.cols());
  for (std::size_t j = 0; j < dn1.cols(); ++j)
    for (auto [row, v] : dn1.column(j))
      for (std::size_t i = 0; i < k; ++i)
        if (Kinv(i, row) != 0)
          x(i, j) = num::add(x(i, j), num::mul(Kinv(i, row), T(v)));

  auto s = smith(std::move(x), true, false);
  BlockResult out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    T d = i < s.rank ? num::abs(s.diagonal[i]) : T(0);
    if (d == 1) continue;
    kept.push_back(i);
    out.orders.push_back(num::to_big(d));
  }
  out.generators = Matrix<BigInt>(c, kept.size());
  out.coordinates = Matrix<BigInt>(kept.size(), c);
  for (std::size_t g = 0; g < kept.size(); ++g) {
    std::size_t i = kept[g];
    for (std::size_t row = 0; row < c; ++row) {
      T acc = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (K(row, j) != 0 && s.Pinv(j, i) != 0)
          acc = num::add(acc, num::mul(K(row, j), s.Pinv(j, i)));
      out.generators(row, g) = num::to_big(acc);
    }
    for (std::size_t col = 0; col < c; ++col) {
      T acc = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (s.P(i, j) != 0 && Kinv(j, col) != 0)
          acc = num::add(acc, num::mul(s.P(i, j), Kinv(j, col)));
      out.coordinates(g, col) = num::to_big(acc);
    }
  }
  out.coordinates = reduce_rows(std::move(out.coordinates), out.orders);
  return out;
}

std::mutex cache_mutex;
std::unordered_map<std::string, std::shared_ptr<const BlockResult>> cache;

std::shared_ptr<const BlockResult> block_homology(SparseMatrix const& dn,
                                                  SparseMatrix const& dn1) {
  std::string key;
  append_key(key, dn);
  append_key(key, dn1);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const BlockResult> r;
  try {
    r = std::make_shared<BlockResult>(
        reduce_block<std::int64_t>(dn, dn1));
  } catch (Overflow const&) {
    r = std::make_shared<BlockResult>(
        reduce_block<BigInt>(dn, dn1));
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(std::move(key), r).first->second;
}

}  // namespace

std::size_t homology_cache_size() {
  std::lock_guard lock(cache_mutex);
  return cache.size();
}

void clear_homology_cache() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

Homology::Homology(Space x, std::size_t max_degree)
    : model_(std::move(x), max_degree + 1) {
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto const& bn = model_.basis(n);
    auto const& bn1 = model_.basis(n + 1);
    std::size_t blocks = bn.block_count();
    std::vector<std::vector<std::uint32_t>> in_n(blocks), in_n1(blocks),
        in_prev(blocks);
    for (std::uint32_t i = 0; i < bn.size(); ++i) in_n[bn.block(i)].push_back(i);
    for (std::uint32_t i = 0; i < bn1.size(); ++i)
      in_n1[bn1.block(i)].push_back(i);
    if (n > 0) {
      auto const& bp = model_.basis(n - 1);
      for (std::uint32_t i = 0; i < bp.size(); ++i)
        in_prev[bp.block(i)].push_back(i);
    }

    HomologyGroup h;
    std::vector<std::shared_ptr<const BlockResult>> results(blocks);
    std::size_t total = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      SparseMatrix dn = n == 0 ? SparseMatrix(0, in_n[b].size())
                               : restrict(model_.boundary(n), in_prev[b], in_n[b]);
      SparseMatrix dn1 = restrict(model_.boundary(n + 1), in_n[b], in_n1[b]);
      results[b] = block_homology(dn, dn1);
      total += results[b]->orders.size();
    }
    h.generators = Matrix<BigInt>(bn.size(), total);
    h.coordinates = Matrix<BigInt>(total, bn.size());
    std::size_t g = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      auto const& r = *results[b];
      for (std::size_t k = 0; k < r.orders.size(); ++k, ++g) {
        h.orders.push_back(r.orders[k]);
        for (std::size_t i = 0; i < in_n[b].size(); ++i) {
          h.generators(in_n[b][i], g) = r.generators(i, k);
          h.coordinates(g, in_n[b][i]) = r.coordinates(k, i);
        }
      }
    }
    groups_.push_back(std::move(h));
  }
}

HomologyGroup homology_at(SparseMatrix const& d_n, SparseMatrix const& d_n1) {
  if (d_n.cols() != d_n1.rows())
    throw ValidationError("boundary matrices are not composable");
  auto r = block_homology(d_n, d_n1);
  return {r->orders, r->generators, r->coordinates};
}

GradedAbGroup Homology::groups() const {
  GradedAbGroup out;
  for (auto const& h : groups_) out.push_back(h.group());
  return out;
}

Matrix<BigInt> induced_on_homology(Homology const& a, Homology const& b,
                                   SparseMatrix const& chain_map,
                                   std::size_t n) {
  return induced_on_homology(a.degree(n), b.degree(n), chain_map);
}

Matrix<BigInt> induced_on_homology(HomologyGroup const& ha,
                                   HomologyGroup const& hb,
                                   SparseMatrix const& chain_map) {
  auto image = multiply(chain_map, ha.generators);
  return reduce_rows(multiply(hb.coordinates, image), hb.orders);
}

SparseMatrix span_chain_map(spans::Span const& s, ChainBasis const& src,
                            ChainBasis const& dst, std::size_t n) {
  ChainBasis apex(s.apex, n);
  return multiply(pushforward(s.right, apex, dst), transfer(s.left, apex, src));
}

Matrix<BigInt> induced_map(spans::Span const& s, Homology const& src,
                           Homology const& dst, std::size_t n) {
  if (!(s.src == src.space()) || !(s.dst == dst.space()))
    throw ValidationError("span endpoints do not match the homology inputs");
  auto f = span_chain_map(s, src.model().basis(n), dst.model().basis(n), n);
  return induced_on_homology(src, dst, f, n);
}

}  // namespace coarsetr::homology
