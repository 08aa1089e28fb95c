#include "coarsetr/homology/abelian.hpp"

#include <limits>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

std::string AbelianGroup::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (auto const& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s;
}

AbelianGroup group_of(Orders const& orders) {
  AbelianGroup g;
  Orders finite;
  for (auto const& o : orders) {
    if (o == 0) ++g.rank;
    else if (num::abs(o) != 1) finite.push_back(num::abs(o));
  }
  g.torsion = invariant_factors(finite);
  return g;
}

AbelianGroup direct_sum(AbelianGroup const& a, AbelianGroup const& b) {
  Orders o(a.rank + b.rank, BigInt(0));
  o.insert(o.end(), a.torsion.begin(), a.torsion.end());
  o.insert(o.end(), b.torsion.begin(), b.torsion.end());
  return group_of(o);
}

namespace {

bool fits_int64(Matrix<BigInt> const& a) {
  // Leave headroom so the first elimination steps do not overflow at once.
  BigInt limit = BigInt(1) << 40;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (num::abs(a(i, j)) > limit) return false;
  return true;
}

SmithResult<BigInt> widen(SmithResult<std::int64_t> const& r) {
  SmithResult<BigInt> out;
  out.rank = r.rank;
  for (auto d : r.diagonal) out.diagonal.emplace_back(d);
  out.P = convert<BigInt>(r.P);
  out.Pinv = convert<BigInt>(r.Pinv);
  out.Q = convert<BigInt>(r.Q);
  out.Qinv = convert<BigInt>(r.Qinv);
  return out;
}

}  // namespace

SmithResult<BigInt> smith_big(Matrix<BigInt> const& a, bool want_rows,
                              bool want_cols) {
  if (fits_int64(a)) {
    Matrix<std::int64_t> small(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        small(i, j) = a(i, j).convert_to<std::int64_t>();
    try {
      return widen(smith(std::move(small), want_rows, want_cols));
    } catch (Overflow const&) {
    }
  }
  return smith(a, want_rows, want_cols);
}

Matrix<BigInt> reduce_rows(Matrix<BigInt> m, Orders const& orders) {
  if (orders.size() != m.rows())
    throw InternalError("reduce_rows: order list does not match rows");
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (orders[i] != 0)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = num::mod(m(i, j), num::abs(orders[i]));
  return m;
}

namespace {

// [m | diag(dst)]
Matrix<BigInt> with_relations(Matrix<BigInt> const& m, Orders const& dst) {
  if (dst.size() != m.rows())
    throw InternalError("homomorphism does not match its target");
  Matrix<BigInt> a(m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols() + i) = dst[i];
  }
  return a;
}

AbelianGroup cokernel_of_relations(Matrix<BigInt> const& rel) {
  auto r = smith_big(rel, false, false);
  Orders o(rel.rows(), BigInt(0));
  for (std::size_t i = 0; i < r.rank; ++i) o[i] = num::abs(r.diagonal[i]);
  return group_of(o);
}

}  // namespace

AbelianGroup cokernel(Matrix<BigInt> const& m, Orders const& dst) {
  return cokernel_of_relations(with_relations(m, dst));
}

bool is_surjective(Matrix<BigInt> const& m, Orders const& dst) {
  return cokernel(m, dst).is_zero();
}

bool is_injective(Matrix<BigInt> const& m, Orders const& src,
                  Orders const& dst) {
  if (src.size() != m.cols())
    throw InternalError("homomorphism does not match its source");
  // x lies in the kernel iff (x, y) solves [m | diag(dst)] (x, y) = 0.
  auto a = with_relations(m, dst);
  auto r = smith_big(a, false, true);
  for (std::size_t k = r.rank; k < a.cols(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) {
      BigInt const& x = r.Q(i, k);
      if (src[i] == 0 ? x != 0 : num::mod(x, num::abs(src[i])) != 0)
        return false;
    }
  return true;
}

bool is_isomorphism(Matrix<BigInt> const& m, Orders const& src,
                    Orders const& dst) {
  // Finitely generated abelian groups are Hopfian: a surjection between
  // isomorphic groups is an isomorphism.
  return group_of(src) == group_of(dst) && is_surjective(m, dst);
}

bool is_split_injective(Matrix<BigInt> const& m, Orders const& src,
                        Orders const& dst) {
  if (!is_injective(m, src, dst)) return false;
  return group_of(dst) == direct_sum(group_of(src), cokernel(m, dst));
}

bool same_homomorphism(Matrix<BigInt> const& a, Matrix<BigInt> const& b,
                       Orders const& dst) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt d = a(i, j) - b(i, j);
      if (dst[i] == 0 ? d != 0 : num::mod(d, num::abs(dst[i])) != 0)
        return false;
    }
  return true;
}

bool is_multiple_of_identity(Matrix<BigInt> const& m, Orders const& orders,
                             BigInt const& k) {
  if (m.rows() != m.cols() || m.rows() != orders.size()) return false;
  Matrix<BigInt> target(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) target(i, i) = k;
  return same_homomorphism(m, target, orders);
}

Colimit colimit(std::vector<Orders> const& objects,
                std::vector<DiagramArrow> const& arrows) {
  Colimit c;
  std::size_t total = 0;
  for (auto const& o : objects) {
    c.offsets.push_back(total);
    total += o.size();
  }
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> relations;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t k = 0; k < objects[i].size(); ++k)
      if (objects[i][k] != 0)
        relations.push_back({{c.offsets[i] + k, objects[i][k]}});
  for (auto const& a : arrows) {
    if (a.matrix.rows() != objects.at(a.dst).size() ||
        a.matrix.cols() != objects.at(a.src).size())
      throw InternalError("diagram arrow has the wrong shape");
    for (std::size_t x = 0; x < a.matrix.cols(); ++x) {
      std::vector<std::pair<std::size_t, BigInt>> rel{
          {c.offsets[a.src] + x, BigInt(1)}};
      for (std::size_t k = 0; k < a.matrix.rows(); ++k)
        if (a.matrix(k, x) != 0)
          rel.emplace_back(c.offsets[a.dst] + k, -a.matrix(k, x));
      relations.push_back(std::move(rel));
    }
  }
  c.relation_count = relations.size();
  Matrix<BigInt> r(total, relations.size());
  for (std::size_t j = 0; j < relations.size(); ++j)
    for (auto const& [i, v] : relations[j]) r(i, j) += v;

  auto s = smith_big(r, true, false);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < total; ++i) {
    BigInt d = i < s.rank ? num::abs(s.diagonal[i]) : BigInt(0);
    if (d == 1) continue;
    kept.push_back(i);
    c.orders.push_back(d);
  }
  c.generators = Matrix<BigInt>(total, kept.size());
  c.coordinates = Matrix<BigInt>(kept.size(), total);
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t i = 0; i < total; ++i) {
      c.generators(i, k) = s.Pinv(i, kept[k]);
      c.coordinates(k, i) = s.P(kept[k], i);
    }
  c.coordinates = reduce_rows(std::move(c.coordinates), c.orders);
  return c;
}

Matrix<BigInt> map_from_colimit(Colimit const& c,
                                std::vector<Matrix<BigInt>> const& cocone,
                                Orders const& dst) {
  if (cocone.size() != c.offsets.size())
    throw InternalError("cocone does not match the diagram");
  std::size_t total = c.generators.rows();
  Matrix<BigInt> alpha(dst.size(), total);
  for (std::size_t i = 0; i < cocone.size(); ++i)
    for (std::size_t r = 0; r < cocone[i].rows(); ++r)
      for (std::size_t x = 0; x < cocone[i].cols(); ++x)
        alpha(r, c.offsets[i] + x) = cocone[i](r, x);
  return reduce_rows(multiply(alpha, c.generators), dst);
}

}  // namespace coarsetr::homology
