#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "silt/scalar.hpp"

namespace silt {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& v) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel(Matrix m);
/// Some solution of m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
/// Indices of a maximal linearly independent subset of `vectors`, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t dim);

/// Incremental row-echelon basis for membership and extension queries.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns true when it was independent of the current span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Vec reduce(Vec v) const;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);

}  // namespace silt
