#include <random>

#include "doctest.h"
#include "stiefel/exact.hpp"

using namespace stiefel;

namespace {

// Laplace expansion along the first row.
BigRat cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigRat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cj++) = m(i, j);
      }
    }
    const BigRat term = m(0, c) * cofactor_det(minor);
    total += c % 2 == 0 ? term : BigRat(-term);
  }
  return total;
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  BigInt product = 1;
  for (int i = 1; i <= 10; ++i) product *= i;
  CHECK(factorial(10) == product);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("rationals stay normalized") {
  const BigRat q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("determinant examples") {
  CHECK(det(IntMatrix{{35, 10, 1}, {15, 6, 1}, {1, 1, 1}}) == 44);
  CHECK(det(IntMatrix::identity(4)) == 1);
  const IntMatrix aztec{{2, 1, 0}, {4, 6, 4}, {6, 15, 20}};
  CHECK(det(aztec) == 64);
  CHECK(cofactor_det(to_rational(aztec)) == 64);
  CHECK(det(IntMatrix(0, 0)) == 1);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant errors") {
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(det(RatMatrix(3, 2)), DimensionError);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DimensionError);
}

TEST_CASE("rational determinant") {
  RatMatrix m{{make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 4), 1}};
  CHECK(det(m) == make_rational(1, 2) - make_rational(1, 12));
  CHECK(det(m) == cofactor_det(m));
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937 rng(20240611);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const IntMatrix m = random_int_matrix(rng, n);
      CHECK(BigRat(det(m)) == cofactor_det(to_rational(m)));
    }
  }
}

TEST_CASE("row swap negates the determinant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = make_rational(num(rng), den(rng));
    }
    const BigRat d = det(m);
    CHECK(d == cofactor_det(m));
    RatMatrix swapped = m;
    swapped.swap_rows(trial % 4, (trial + 1) % 4);
    CHECK(det(swapped) == -d);
  }
}

TEST_CASE("determinant is linear in a row") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = random_int_matrix(rng, 4);
    const IntMatrix b = random_int_matrix(rng, 4);
    IntMatrix sum = a;
    IntMatrix mixed = a;
    for (std::size_t j = 0; j < 4; ++j) {
      sum(0, j) = a(0, j) + b(0, j);
      mixed(0, j) = b(0, j);
    }
    CHECK(det(sum) == det(a) + det(mixed));
  }
}
