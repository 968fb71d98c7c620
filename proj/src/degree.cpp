#include "stiefel/degree.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "stiefel/errors.hpp"
#include "stiefel/symb.hpp"
#include "stiefel/volumes.hpp"
#include "stiefel/weights.hpp"

namespace stiefel {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Bezout:
      return "bezout";
    case Regime::Determinant:
      return "determinant";
    case Regime::OrthogonalGroup:
      return "orthogonal-group";
  }
  return "unknown";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Auto:
      return "auto";
    case Method::ClosedForm:
      return "closed-form";
    case Method::Determinant:
      return "determinant";
    case Method::Paths:
      return "paths";
    case Method::Integral:
      return "integral";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "determinant") return Method::Determinant;
  if (name == "paths") return Method::Paths;
  if (name == "integral") return Method::Integral;
  throw DomainError("unknown method '" + name + "'");
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

// The lattice-path formula applies on k+1 <= n <= 2k-1; the seam n = 2k-1
// also covers k = n = 1 with an empty family of paths.
bool in_path_range(int k, int n) { return k >= 1 && n <= 2 * k - 1 && (n > k || n == 2 * k - 1); }

void require_path_range(int k, int n, const char* what) {
  if (!in_path_range(k, n)) {
    throw DomainError(std::string(what) + " needs k+1 <= n <= 2k-1, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
}

BigInt bezout_degree(int k) { return pow2(static_cast<std::uint32_t>(k * (k + 1) / 2)); }

}  // namespace

PathConfig path_config(int k, int n) {
  require_path_range(k, n, "path configuration");
  const int r = n / 2;
  const Partition omega = omega_closed(k, n);
  PathConfig cfg;
  for (int j = 1; j <= r; ++j) {
    cfg.starts.push_back({-(omega[j - 1] + r - j), 0});
    cfg.ends.push_back({0, n - 2 * j});
  }
  return cfg;
}

std::pair<std::vector<int>, std::vector<int>> endpoint_offsets(int k, int n) {
  require_path_range(k, n, "endpoint lists");
  const int r = n / 2;
  std::vector<int> a, b;
  for (int i = 1; i <= n - k; ++i) a.push_back(k - i);
  for (int i = 0; i < r - (n - k); ++i) a.push_back(2 * k - n - 2 - 2 * i);
  for (int j = 1; j <= r; ++j) b.push_back(n - 2 * j);
  return {a, b};
}

BigInt count_paths(Point from, Point to) {
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

IntMatrix lgv_matrix(const PathConfig& cfg) {
  if (cfg.starts.size() != cfg.ends.size()) {
    throw DimensionError("path configuration with " + std::to_string(cfg.starts.size()) +
                         " starts and " + std::to_string(cfg.ends.size()) + " ends");
  }
  const std::size_t r = cfg.starts.size();
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m(i, j) = count_paths(cfg.starts[i], cfg.ends[j]);
  }
  return m;
}

namespace {

constexpr std::size_t kMaxBruteForcePaths = 4;
constexpr int kMaxBruteForceCoordinate = 8;

class PathFamilyCounter {
 public:
  explicit PathFamilyCounter(const PathConfig& cfg) : cfg_(cfg) {}

  BigInt run() {
    start_path(0);
    return count_;
  }

 private:
  void start_path(std::size_t j) {
    if (j == cfg_.starts.size()) {
      ++count_;
      return;
    }
    walk(j, cfg_.starts[j]);
  }

  void walk(std::size_t j, Point p) {
    const Point target = cfg_.ends[j];
    if (p.x > target.x || p.y > target.y) return;
    const auto [it, fresh] = occupied_.insert({p.x, p.y});
    if (!fresh) return;
    if (p == target) {
      start_path(j + 1);
    } else {
      walk(j, {p.x + 1, p.y});
      walk(j, {p.x, p.y + 1});
    }
    occupied_.erase(it);
  }

  const PathConfig& cfg_;
  std::set<std::pair<int, int>> occupied_;
  BigInt count_ = 0;
};

}  // namespace

BigInt count_nilp_bruteforce(const PathConfig& cfg) {
  if (cfg.starts.size() != cfg.ends.size()) {
    throw DimensionError("path configuration with " + std::to_string(cfg.starts.size()) +
                         " starts and " + std::to_string(cfg.ends.size()) + " ends");
  }
  if (cfg.starts.size() > kMaxBruteForcePaths) {
    throw SizeError("brute-force path count is limited to " +
                    std::to_string(kMaxBruteForcePaths) + " paths, got " +
                    std::to_string(cfg.starts.size()));
  }
  auto too_far = [](Point p) {
    return std::abs(p.x) > kMaxBruteForceCoordinate || std::abs(p.y) > kMaxBruteForceCoordinate;
  };
  if (std::any_of(cfg.starts.begin(), cfg.starts.end(), too_far) ||
      std::any_of(cfg.ends.begin(), cfg.ends.end(), too_far)) {
    throw SizeError("brute-force path count needs coordinates within [-" +
                    std::to_string(kMaxBruteForceCoordinate) + ", " +
                    std::to_string(kMaxBruteForceCoordinate) + "]");
  }
  return PathFamilyCounter(cfg).run();
}

BigInt binomial_determinant(int k, int n) {
  require_path_range(k, n, "binomial determinant");
  const int r = n / 2;
  const Partition omega = omega_closed(k, n);
  const Partition omega_so = n >= 2 ? omega_closed(n - 1, n) : Partition{};
  IntMatrix m(r, r);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      m(i - 1, j - 1) = binomial(omega[i - 1] + omega_so[j - 1] + 2 * r - i - j,
                                 omega[i - 1] + r - i);
    }
  }
  return det(m);
}

BigInt degree_via_integral(int k, int n) {
  if (k < 1 || n < k + 1 || n > 2 * k - 1) {
    throw DomainError("integral route needs k+1 <= n <= 2k-1, got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
  const int r = n / 2;
  const Partition omega = omega_closed(k, n);
  const Partition omega_so = omega_closed(n - 1, n);
  const std::int64_t total = static_cast<std::int64_t>(r) * r + omega.sum() + omega_so.sum();
  const BigRat chamber = make_rational(n % 2 == 0 ? 2 : 1, factorial(r));
  const BigRat value = BigRat(factorial(static_cast<std::uint32_t>(total))) *
                       vol_closed(k, n).scalar * vol_so_n(n).scalar * chamber *
                       integral_product_simplex(omega, omega_so, r);
  if (value.get_den() != 1) {
    throw ConsistencyError("integral route for (" + std::to_string(k) + "," + std::to_string(n) +
                           ") is not an integer: " + to_string(value));
  }
  return value.get_num();
}

namespace {

// 2^k * L by the requested lattice-path method, checked against the LGV
// determinant of the same configuration.
DegreeResult lattice_degree(int k, int n, Method method) {
  DegreeResult out;
  out.k = k;
  out.n = n;
  out.method = method;
  out.regime = n == 2 * k - 1 ? Regime::Bezout : Regime::Determinant;
  out.paths = path_config(k, n);
  out.path_matrix = lgv_matrix(*out.paths);
  const BigInt lgv = det(*out.path_matrix);
  const BigInt factor = pow2(static_cast<std::uint32_t>(k));

  switch (method) {
    case Method::Determinant: {
      const BigInt binomial_det = binomial_determinant(k, n);
      if (binomial_det != lgv) {
        throw ConsistencyError("binomial determinant " + to_string(binomial_det) +
                               " differs from path matrix determinant " + to_string(lgv));
      }
      out.path_count = lgv;
      out.degree = factor * lgv;
      break;
    }
    case Method::Paths: {
      const BigInt counted = count_nilp_bruteforce(*out.paths);
      if (counted != lgv) {
        throw ConsistencyError("counted " + to_string(counted) +
                               " path families, path matrix determinant is " + to_string(lgv));
      }
      out.path_count = counted;
      out.degree = factor * counted;
      break;
    }
    case Method::Integral:
      out.path_count = lgv;
      out.degree = degree_via_integral(k, n);
      if (out.degree != factor * lgv) {
        throw ConsistencyError("integral route gives " + to_string(out.degree) +
                               ", path route gives " + to_string(BigInt(factor * lgv)));
      }
      break;
    default:
      throw DomainError("lattice route does not accept method " + to_string(method));
  }

  if (n == 2 * k - 1 && out.degree != bezout_degree(k)) {
    throw ConsistencyError("at n = 2k-1 = " + std::to_string(n) + " the path route gives " +
                           to_string(out.degree) + ", the Bezout bound is " +
                           to_string(bezout_degree(k)));
  }
  return out;
}

}  // namespace

DegreeResult degree(int k, int n, Method method) {
  require_frame(k, n);
  if (method == Method::ClosedForm) {
    throw DomainError("closed-form is chosen by auto dispatch, not requested directly");
  }

  if (method == Method::Auto && n >= 2 * k - 1) {
    DegreeResult out;
    if (n == 2 * k - 1) {
      out = lattice_degree(k, n, Method::Determinant);
    } else {
      out.k = k;
      out.n = n;
    }
    out.degree = bezout_degree(k);
    out.regime = Regime::Bezout;
    out.method = Method::ClosedForm;
    return out;
  }
  if (method != Method::Auto && n >= 2 * k) {
    throw DomainError("method " + to_string(method) +
                      " applies for n <= 2k-1; St(" + std::to_string(k) + "," +
                      std::to_string(n) + ") is a complete intersection, use auto");
  }

  if (n == k && !in_path_range(k, n)) {
    DegreeResult out = degree(n - 1, n, method);
    out.k = k;
    out.n = n;
    out.degree *= 2;
    out.regime = Regime::OrthogonalGroup;
    return out;
  }

  return lattice_degree(k, n, method == Method::Auto ? Method::Determinant : method);
}

std::pair<BigInt, BigInt> aztec_check(int r) {
  if (r < 1) {
    throw DomainError("aztec_check needs r >= 1, got " + std::to_string(r));
  }
  IntMatrix m(r, r);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) m(i - 1, j - 1) = binomial(2 * i, j);
  }
  return {pow2(static_cast<std::uint32_t>(r * (r + 1) / 2)), det(m)};
}

std::vector<DegreeResult> degree_table(int max_n) {
  if (max_n < 1) {
    throw DomainError("degree table needs max_n >= 1, got " + std::to_string(max_n));
  }
  std::vector<DegreeResult> table;
  for (int k = 1; k <= max_n; ++k) {
    for (int n = k; n <= max_n; ++n) table.push_back(degree(k, n));
  }
  return table;
}

}  // namespace stiefel
