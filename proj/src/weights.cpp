#include "stiefel/weights.hpp"

#include <algorithm>
#include <cstdlib>

#include "stiefel/errors.hpp"

namespace stiefel {

Rank Rank::of(int n) {
  if (n < 0) {
    throw DomainError("group size must be nonnegative, got " + std::to_string(n));
  }
  return Rank{n, n / 2, n % 2 == 1};
}

std::int64_t Partition::sum() const {
  std::int64_t total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::int64_t Partition::abs_sum() const {
  std::int64_t total = 0;
  for (int p : parts_) total += std::abs(p);
  return total;
}

bool Partition::is_weakly_decreasing() const {
  return std::is_sorted(parts_.rbegin(), parts_.rend());
}

bool Partition::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

Partition Partition::scaled(int factor) const {
  std::vector<int> out = parts_;
  for (int& p : out) p *= factor;
  return Partition(std::move(out));
}

Partition Partition::resized(int length) const {
  std::vector<int> out = parts_;
  out.resize(length, 0);
  return Partition(std::move(out));
}

Partition Partition::appended(int value) const {
  std::vector<int> out = parts_;
  out.push_back(value);
  return Partition(std::move(out));
}

Partition Partition::plus_ones() const {
  std::vector<int> out = parts_;
  for (int& p : out) ++p;
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool is_dominant_weight(int n, const Partition& lambda) {
  if (n < 0) return false;
  const Rank rank = Rank::of(n);
  if (lambda.size() != rank.r) return false;
  const auto& p = lambda.parts();
  if (rank.r == 0) return true;
  for (int i = 0; i + 2 < rank.r; ++i) {
    if (p[i] < p[i + 1]) return false;
  }
  const int last = p[rank.r - 1];
  if (rank.odd) {
    if (rank.r >= 2 && p[rank.r - 2] < last) return false;
    return last >= 0;
  }
  if (rank.r == 1) return true;  // SO(2): any integer
  return p[rank.r - 2] >= std::abs(last);
}

void require_dominant_weight(int n, const Partition& lambda) {
  if (!is_dominant_weight(n, lambda)) {
    throw DomainError(lambda.to_string() + " is not a dominant integral weight of SO(" +
                      std::to_string(n) + ")");
  }
}

namespace {

void require_omega_range(int k, int n) {
  if (k < 1 || n < k || n > 2 * k - 1) {
    throw DomainError("Omega_{k,n} needs 1 <= k <= n <= 2k-1, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
}

}  // namespace

Partition omega_recursive(int k, int n) {
  require_omega_range(k, n);
  if (n == 2 * k - 1) {
    return Partition(std::vector<int>(k - 1, 1));
  }
  const Partition previous = omega_recursive(k - 1, n - 1);
  return n % 2 == 0 ? previous.appended(0) : previous.plus_ones();
}

Partition omega_closed(int k, int n) {
  require_omega_range(k, n);
  const int r = n / 2;
  const int stop = n % 2 == 0 ? 0 : 1;
  std::vector<int> parts(n - k, k - r);
  for (int v = k - r - 1; v >= stop; --v) parts.push_back(v);
  return Partition(std::move(parts));
}

namespace {

void require_frame(int k, int n) {
  if (k < 1) {
    throw DomainError("k must be >= 1, got " + std::to_string(k));
  }
  if (k > n) {
    throw DomainError("k must be ≤ n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                      ")");
  }
}

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

std::int64_t dim_stiefel(int k, int n) {
  require_frame(k, n);
  return choose2(n) - choose2(n - k);
}

std::int64_t dim_z_infinity(int k, int n) {
  require_frame(k, n);
  const std::int64_t s_max = std::min(k, n / 2);
  std::int64_t best = -1;
  for (std::int64_t s = 1; s <= s_max; ++s) {
    const std::int64_t dim = n * s - (3 * s * s + s) / 2 + k * s - 1;
    best = std::max(best, dim);
  }
  return best;
}

std::int64_t codim_stiefel(int k, int n) {
  require_frame(k, n);
  return choose2(k + 1);
}

}  // namespace stiefel
