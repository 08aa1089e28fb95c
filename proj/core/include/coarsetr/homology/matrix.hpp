#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "coarsetr/homology/integer.hpp"

namespace coarsetr::homology {

/// Dense row-major integer matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  T* row(std::size_t i) { return data_.data() + i * cols_; }
  T const* row(std::size_t i) const { return data_.data() + i * cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
  }
  /// row[dst] += k * row[src], restricted to columns >= from.
  void add_row(std::size_t dst, std::size_t src, T const& k,
               std::size_t from = 0) {
    T* d = row(dst);
    T const* s = row(src);
    for (std::size_t j = from; j < cols_; ++j)
      if (s[j] != 0) d[j] = num::add(d[j], num::mul(k, s[j]));
  }
  /// col[dst] += k * col[src], restricted to rows >= from.
  void add_col(std::size_t dst, std::size_t src, T const& k,
               std::size_t from = 0) {
    for (std::size_t i = from; i < rows_; ++i) {
      T const& s = data_[i * cols_ + src];
      if (s != 0)
        data_[i * cols_ + dst] = num::add(data_[i * cols_ + dst], num::mul(k, s));
    }
  }

  bool operator==(Matrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> multiply(Matrix<T> const& a, Matrix<T> const& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      T const& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = num::add(c(i, j), num::mul(x, b(k, j)));
    }
  return c;
}

template <class To, class From>
Matrix<To> convert(Matrix<From> const& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Column-compressed sparse integer matrix with small entries; used for
/// boundary maps and chain maps, whose entries are counts.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  /// Entries of column j sorted by row, without zeros.
  std::vector<Entry> const& column(std::size_t j) const { return columns_[j]; }
  /// Adds v at (i, j).
  void add(std::uint32_t i, std::size_t j, std::int64_t v);
  /// Sorts and merges duplicate entries, dropping zeros.
  void normalize();
  std::int64_t at(std::size_t i, std::size_t j) const;

  template <class T>
  Matrix<T> dense() const {
    Matrix<T> m(rows_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (auto [i, v] : columns_[j]) m(i, j) = T(v);
    return m;
  }

  bool operator==(SparseMatrix const& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// a * b
SparseMatrix multiply(SparseMatrix const& a, SparseMatrix const& b);
SparseMatrix add(SparseMatrix const& a, SparseMatrix const& b);
SparseMatrix scale(SparseMatrix const& a, std::int64_t k);
SparseMatrix sparse_identity(std::size_t n);
bool is_zero(SparseMatrix const& a);
/// Dense BigInt product of a sparse matrix and a dense one.
Matrix<BigInt> multiply(SparseMatrix const& a, Matrix<BigInt> const& b);

}  // namespace coarsetr::homology
