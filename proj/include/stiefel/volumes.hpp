#pragma once

#include <span>
#include <string>

#include "stiefel/exact.hpp"
#include "stiefel/symb.hpp"
#include "stiefel/weights.hpp"

namespace stiefel {

/// vol = scalar * a_omega(l1..lr).
struct VolumeFormula {
  BigRat scalar;
  Partition omega;
  int rank = 0;

  MultiPoly polynomial() const;
  BigRat evaluate(std::span<const BigRat> lambda) const;
  /// "1/6 · a_(1,1,1)"
  std::string to_string() const;

  friend bool operator==(const VolumeFormula&, const VolumeFormula&) = default;
};

/// Volume of the GT polytope of shape (SO(n-k), SO(n)) as a function of the
/// top row, k <= n <= 2k-1:  2^(k-r) / prod_j (omega_j + r - j)! * a_omega.
VolumeFormula vol_closed(int k, int n);

/// Volume of the full GT polytope of shape (SO(1), SO(n)), n >= 2.
VolumeFormula vol_so_n(int n);

/// Largest number of free pattern labels vol_symbolic() will integrate.
inline constexpr int kMaxSymbolicVariables = 15;

/// The same volume obtained by nested symbolic integration over the free
/// labels of the pattern, lowest row innermost. Needs k+1 <= n <= 2k-1.
/// Throws SizeError above kMaxSymbolicVariables free labels.
MultiPoly vol_symbolic(int k, int n);

}  // namespace stiefel
