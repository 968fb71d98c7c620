#include "stiefel/volumes.hpp"

#include "stiefel/errors.hpp"
#include "stiefel/gt.hpp"

namespace stiefel {

MultiPoly VolumeFormula::polynomial() const { return scalar * alt_poly(omega, rank); }

BigRat VolumeFormula::evaluate(std::span<const BigRat> lambda) const {
  if (static_cast<int>(lambda.size()) != rank) {
    throw DimensionError("volume needs " + std::to_string(rank) + " top-row values, got " +
                         std::to_string(lambda.size()));
  }
  // a_omega(lambda) as an exact determinant; cheaper than expanding.
  RatMatrix m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      BigRat power = 1;
      for (int e = 0; e < omega[i] + rank - 1 - i; ++e) power *= lambda[j];
      m(i, j) = power;
    }
  }
  return scalar * det(m);
}

std::string VolumeFormula::to_string() const {
  return stiefel::to_string(scalar) + " · a_" + omega.to_string();
}

VolumeFormula vol_closed(int k, int n) {
  if (k < 1 || n < k || n > 2 * k - 1) {
    throw DomainError("closed volume formula needs k <= n <= 2k-1, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
  const int r = n / 2;
  const Partition omega = omega_closed(k, n);
  BigInt denominator = 1;
  for (int j = 1; j <= r; ++j) denominator *= factorial(omega[j - 1] + r - j);
  return {make_rational(pow2(k - r), denominator), omega, r};
}

VolumeFormula vol_so_n(int n) {
  if (n < 2) {
    throw DomainError("vol_so_n needs n >= 2, got " + std::to_string(n));
  }
  const int r = n / 2;
  const bool odd = n % 2 == 1;
  std::vector<int> omega(r);
  BigInt denominator = 1;
  for (int j = 1; j <= r; ++j) {
    omega[j - 1] = odd ? r - j + 1 : r - j;
    denominator *= factorial(odd ? 2 * (r - j) + 1 : 2 * (r - j));
  }
  return {make_rational(pow2(odd ? r : r - 1), denominator), Partition(std::move(omega)), r};
}

namespace {

std::string label_name(int row, int box) {
  return "m" + std::to_string(row) + "_" + std::to_string(box + 1);
}

}  // namespace

MultiPoly vol_symbolic(int k, int n) {
  if (k < 1 || n < k + 1 || n > 2 * k - 1) {
    throw DomainError("symbolic volume needs k+1 <= n <= 2k-1, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
  const GTShape shape(n, n - k);
  const int r = n / 2;
  const auto zero = shape.forced_zero();
  const int rows = shape.row_count();

  std::vector<std::string> names = lambda_variables(r);
  const std::size_t lambda_count = names.size();
  for (int row = 1; row + 1 < rows; ++row) {
    for (int b = 0; b < shape.boxes(row); ++b) {
      if (!zero[row][b]) names.push_back(label_name(row, b));
    }
  }
  const int free_count = static_cast<int>(names.size() - lambda_count);
  if (free_count > kMaxSymbolicVariables) {
    throw SizeError("symbolic volume of (" + std::to_string(k) + "," + std::to_string(n) +
                    ") has " + std::to_string(free_count) + " free labels, limit is " +
                    std::to_string(kMaxSymbolicVariables));
  }

  const MultiPoly zero_poly(names);
  auto label = [&](int row, int box) {
    if (zero[row][box]) return zero_poly;
    if (row == 0) return MultiPoly::variable(names, names[box]);
    return MultiPoly::variable(names, label_name(row, box));
  };

  MultiPoly volume = MultiPoly::constant(names, 1);
  int doublings = 0;
  for (int row = rows - 2; row >= 1; --row) {
    for (int b = shape.boxes(row) - 1; b >= 0; --b) {
      if (zero[row][b]) continue;
      const BoxRule rule = shape.rule(row, b);
      const MultiPoly upper = label(row - 1, rule.north_west);
      // A mirrored box ranges over [-NW, NW]; everything below sees it only
      // through |x|, so integrate over [0, NW] and double.
      const MultiPoly lower =
          rule.kind == LowerBound::Mirror ? zero_poly : label(row - 1, rule.north_east);
      volume = integrate_poly(volume, label_name(row, b), lower, upper);
      if (rule.kind == LowerBound::Mirror) {
        volume *= 2;
        ++doublings;
      }
    }
  }
  if (doublings != k - r) {
    throw ConsistencyError("symbolic volume of (" + std::to_string(k) + "," + std::to_string(n) +
                           ") doubled " + std::to_string(doublings) + " integrals, expected " +
                           std::to_string(k - r));
  }
  return volume.with_variables(lambda_variables(r));
}

}  // namespace stiefel
