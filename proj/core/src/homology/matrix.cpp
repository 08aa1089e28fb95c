#include "coarsetr/homology/matrix.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

void SparseMatrix::add(std::uint32_t i, std::size_t j, std::int64_t v) {
  if (i >= rows_ || j >= columns_.size())
    throw InternalError("sparse matrix index out of range");
  columns_[j].emplace_back(i, v);
}

void SparseMatrix::normalize() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(),
              [](Entry const& a, Entry const& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    for (auto [i, v] : col) {
      if (!merged.empty() && merged.back().first == i)
        merged.back().second = num::add(merged.back().second, v);
      else
        merged.emplace_back(i, v);
    }
    std::erase_if(merged, [](Entry const& e) { return e.second == 0; });
    col = std::move(merged);
  }
}

std::int64_t SparseMatrix::at(std::size_t i, std::size_t j) const {
  for (auto [r, v] : columns_[j])
    if (r == i) return v;
  return 0;
}

bool SparseMatrix::operator==(SparseMatrix const& other) const {
  return rows_ == other.rows_ && columns_ == other.columns_;
}

SparseMatrix multiply(SparseMatrix const& a, SparseMatrix const& b) {
  if (a.cols() != b.rows())
    throw InternalError("sparse matrix product with mismatched shapes");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (auto [k, v] : b.column(j))
      for (auto [i, w] : a.column(k)) c.add(i, j, num::mul(v, w));
  c.normalize();
  return c;
}

SparseMatrix add(SparseMatrix const& a, SparseMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InternalError("sparse matrix sum with mismatched shapes");
  SparseMatrix c(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (auto [i, v] : a.column(j)) c.add(i, j, v);
    for (auto [i, v] : b.column(j)) c.add(i, j, v);
  }
  c.normalize();
  return c;
}

SparseMatrix scale(SparseMatrix const& a, std::int64_t k) {
  SparseMatrix c(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (auto [i, v] : a.column(j)) c.add(i, j, num::mul(k, v));
  c.normalize();
  return c;
}

SparseMatrix sparse_identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(static_cast<std::uint32_t>(i), i, 1);
  return m;
}

bool is_zero(SparseMatrix const& a) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a.column(j).empty()) return false;
  return true;
}

Matrix<BigInt> multiply(SparseMatrix const& a, Matrix<BigInt> const& b) {
  if (a.cols() != b.rows())
    throw InternalError("matrix product with mismatched shapes");
  Matrix<BigInt> c(a.rows(), b.cols());
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (auto [i, v] : a.column(k))
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += v * b(k, j);
  return c;
}

}  // namespace coarsetr::homology
