#include "toric/linalg.hpp"

#include <utility>

#include "toric/errors.hpp"

namespace toric::linalg {

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw InvalidArgument("dimension mismatch in Matrix::apply");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero() && !(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("dimension mismatch in Matrix product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return rref(r).size();
}

std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim) {
  Span s(dim);
  for (const auto& v : vectors) s.insert(v);
  return s.dim();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw InvalidArgument("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

void Span::reduce(Vec& v, Vec& combo) const {
  for (const auto& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    Rational f = v[row.pivot];  // row.v[pivot] == 1
    for (std::size_t j = row.pivot; j < dim_; ++j)
      if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
    for (std::size_t j = 0; j < row.combo.size(); ++j)
      if (!row.combo[j].is_zero()) combo[j] -= f * row.combo[j];
  }
}

bool Span::insert(const Vec& v) {
  if (v.size() != dim_) throw InvalidArgument("dimension mismatch in Span::insert");
  Vec r = v;
  Vec combo(accepted_.size() + 1);
  combo.back() = 1;
  reduce(r, combo);
  std::size_t pivot = 0;
  while (pivot < dim_ && r[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  Rational inv = Rational(1) / r[pivot];
  for (auto& x : r) x *= inv;
  for (auto& x : combo) x *= inv;
  for (auto& row : rows_) row.combo.resize(accepted_.size() + 1);
  rows_.push_back({std::move(r), std::move(combo), pivot});
  accepted_.push_back(v);
  return true;
}

bool Span::contains(const Vec& v) const {
  if (v.size() != dim_) throw InvalidArgument("dimension mismatch in Span::contains");
  Vec r = v;
  Vec combo(accepted_.size());
  reduce(r, combo);
  return is_zero(r);
}

std::optional<Vec> Span::coordinates(const Vec& v) const {
  if (v.size() != dim_) throw InvalidArgument("dimension mismatch in Span::coordinates");
  Vec r = v;
  Vec combo(accepted_.size());
  reduce(r, combo);
  if (!is_zero(r)) return std::nullopt;
  // reduce() subtracted f*row from v, so v = sum f_i row_i and combo = -sum f_i combo_i.
  for (auto& x : combo) x = -x;
  return combo;
}

}  // namespace toric::linalg
