#include "cgf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgf {

void Matrix::add_row(Vec row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  data_.push_back(std::move(row));
}

Matrix Matrix::rref(std::vector<size_t>* pivot_cols) const {
  Matrix m = *this;
  auto& a = m.data_;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t k = c; k < cols_; ++k) a[r][k] *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational factor = a[i][c];
      for (size_t k = c; k < cols_; ++k) a[i][k] -= factor * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return m;
}

size_t Matrix::rank() const {
  std::vector<size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<Vec> Matrix::kernel_basis() const {
  std::vector<size_t> piv;
  Matrix m = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t fcol = 0; fcol < cols_; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec v(cols_, Rational(0));
    v[fcol] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.data_[i][fcol];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out;
  out.reserve(rows());
  for (const auto& row : data_) out.push_back(dot(row, v));
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec axpy(const Rational& a, const Vec& x, const Vec& y) {
  Vec out = y;
  for (size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

}  // namespace cgf
