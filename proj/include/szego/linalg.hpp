#pragma once

// Small dense exact matrices: elimination, determinant, characteristic
// polynomial.

#include "szego/poly.hpp"

#include <optional>
#include <vector>

namespace szego {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Solves a x = b for square a; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);
Rational determinant(Matrix a);
/// det(t I - a), monic, via the Faddeev-LeVerrier recurrence.
RatPoly characteristic_polynomial(const Matrix& a);

}  // namespace szego
