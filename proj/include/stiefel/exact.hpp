#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "stiefel/errors.hpp"

namespace stiefel {

// GMP keeps mpq_class canonical (positive denominator, lowest terms) after
// every arithmetic operation; construction from a raw pair needs
// canonicalize(), which make_rational() does.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);
std::string to_string(const BigRat& value);

BigInt factorial(std::uint32_t n);

/// Binomial coefficient for arbitrary integers. Zero when k < 0 or when
/// 0 <= n < k; for negative n the usual extension (-1)^k C(k-n-1, k).
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt pow2(std::uint32_t exponent);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) {
        throw DimensionError("ragged matrix initializer");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<T>& entries() const { return entries_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
    }
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact.
BigInt det(const IntMatrix& m);

/// Exact determinant of a rational matrix. Integral input is routed through
/// Bareiss; anything else through Gaussian elimination over Q.
BigRat det(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace stiefel
