#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polybisim/rational.hpp"

namespace polybisim {

using Vector = std::vector<Rational>;
using Point = Vector;

/// Dense row-major rational matrix. Sizes are tiny (n <= 4 at desk scale),
/// so no attempt is made at blocking or expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector operator*(std::span<const Rational> x) const;
  Matrix operator*(const Matrix& other) const;

  /// Returns this^T * y without materializing the transpose.
  Vector transpose_times(std::span<const Rational> y) const;

  /// Rank by exact Gaussian elimination.
  std::size_t rank() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero(std::span<const Rational> v);

}  // namespace polybisim
