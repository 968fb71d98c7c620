#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace stiefel {

/// Size and rank of SO(n): r = floor(n/2).
struct Rank {
  int n = 0;
  int r = 0;
  bool odd = false;

  static Rank of(int n);
};

/// Integer sequence of fixed length (the rank of the group it belongs to).
/// Trailing zeros are stored. Whether it is a valid dominant weight depends
/// on the group, see is_dominant_weight().
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}

  static Partition zeros(int length) { return Partition(std::vector<int>(length, 0)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }

  /// Sum of parts.
  std::int64_t sum() const;
  /// Sum of absolute values of parts; the size |lambda| of a signed weight.
  std::int64_t abs_sum() const;

  bool is_weakly_decreasing() const;
  bool is_zero() const;

  Partition scaled(int factor) const;
  /// First `length` parts, zero-padded when the partition is shorter.
  Partition resized(int length) const;
  /// (parts..., value)
  Partition appended(int value) const;
  /// parts + (1, ..., 1)
  Partition plus_ones() const;

  /// "(1,1,0)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// True when `lambda` has length floor(n/2) and is a dominant integral
/// weight of SO(n): lambda_1 >= ... >= lambda_r >= 0 for odd n, and
/// lambda_1 >= ... >= lambda_{r-1} >= |lambda_r| for even n.
bool is_dominant_weight(int n, const Partition& lambda);

/// Throws DomainError unless is_dominant_weight(n, lambda).
void require_dominant_weight(int n, const Partition& lambda);

/// Omega_{k,n} from its defining recursion. Requires k >= 1 and
/// k <= n <= 2k-1; the result has length floor(n/2).
Partition omega_recursive(int k, int n);

/// Omega_{k,n} from the closed form: n-k copies of k-r followed by
/// k-r-1, k-r-2, ... down to 0 (n even) or 1 (n odd).
Partition omega_closed(int k, int n);

/// dim St(k,n) = C(n,2) - C(n-k,2).
std::int64_t dim_stiefel(int k, int n);

/// Dimension of the part at infinity of the naive homogenization:
/// max over 1 <= s <= min(k, floor(n/2)) of ns - (3s^2+s)/2 + ks - 1.
/// Returns -1 (empty variety) when the range of s is empty, i.e. n = 1.
std::int64_t dim_z_infinity(int k, int n);

/// C(k+1,2), the number of defining quadrics.
std::int64_t codim_stiefel(int k, int n);

}  // namespace stiefel
