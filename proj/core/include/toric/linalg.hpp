#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric::linalg {

using Vec = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec apply(const Vec& x) const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero(const Vec& v);

// Basis of {x : m x = 0}, one vector per free column of the reduced echelon
// form, in increasing free-column order.
std::vector<Vec> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim);

// Inverse of a square matrix; throws InvalidArgument if singular.
Matrix inverse(const Matrix& m);

// Incrementally built subspace in echelon form. Every stored row remembers
// how it combines the vectors that were accepted by insert(), so membership
// queries can also return coordinates.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }

  // Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  // Coordinates of v with respect to the accepted vectors, in acceptance order.
  std::optional<Vec> coordinates(const Vec& v) const;
  const std::vector<Vec>& accepted() const { return accepted_; }

 private:
  struct Row {
    Vec v;
    Vec combo;
    std::size_t pivot;
  };
  // Reduces v in place by the stored rows; accumulates -coefficients into combo.
  void reduce(Vec& v, Vec& combo) const;

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<Vec> accepted_;
};

}  // namespace toric::linalg
