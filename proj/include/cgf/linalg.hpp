#pragma once

#include "cgf/rational.hpp"

#include <vector>

namespace cgf {

using Vec = std::vector<Rational>;

// Dense matrix over the rationals, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(size_t cols) : cols_(cols) {}

  void add_row(Vec row);
  size_t rows() const { return data_.size(); }
  size_t cols() const { return cols_; }
  const Vec& row(size_t i) const { return data_[i]; }
  const std::vector<Vec>& data() const { return data_; }

  // Reduced row echelon form; pivots taken from the first nonzero column,
  // choosing the smallest row index among candidates.
  Matrix rref(std::vector<size_t>* pivot_cols = nullptr) const;
  size_t rank() const;
  // Basis of {v : M v = 0}, one vector per free column.
  std::vector<Vec> kernel_basis() const;
  Vec apply(const Vec& v) const;

 private:
  size_t cols_ = 0;
  std::vector<Vec> data_;
};

Rational dot(const Vec& a, const Vec& b);
Vec axpy(const Rational& a, const Vec& x, const Vec& y);  // a*x + y
bool is_zero(const Vec& v);

}  // namespace cgf
