#include "stiefel/exact.hpp"

namespace stiefel {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRat& value) { return value.get_str(10); }

BigInt factorial(std::uint32_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  BigInt top(static_cast<long>(n));
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

BigInt pow2(std::uint32_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  BigInt previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

bool is_integral(const RatMatrix& m) {
  for (const auto& q : m.entries()) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

BigRat gaussian_det(RatMatrix a) {
  const std::size_t n = a.rows();
  BigRat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRat factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
      }
    }
  }
  return result;
}

}  // namespace

BigRat det(const RatMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  if (is_integral(m)) {
    IntMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num();
    }
    return BigRat(det(z));
  }
  return gaussian_det(m);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = BigRat(m(i, j));
  }
  return q;
}

}  // namespace stiefel
