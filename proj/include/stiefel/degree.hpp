#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stiefel/exact.hpp"

namespace stiefel {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Start points A and end points B of a family of north/east lattice paths,
/// path j running from A[j] to B[j].
struct PathConfig {
  std::vector<Point> starts;
  std::vector<Point> ends;
  friend bool operator==(const PathConfig&, const PathConfig&) = default;
};

enum class Regime { Bezout, Determinant, OrthogonalGroup };
enum class Method { Auto, ClosedForm, Determinant, Paths, Integral };

std::string to_string(Regime regime);
std::string to_string(Method method);
/// Parses "auto", "determinant", "paths", "integral"; throws DomainError.
Method parse_method(const std::string& name);

struct DegreeResult {
  int k = 0;
  int n = 0;
  BigInt degree;
  Regime regime = Regime::Bezout;
  Method method = Method::ClosedForm;
  /// Path data of the lattice-path count; for n == k these belong to
  /// (n-1, n).
  std::optional<PathConfig> paths;
  std::optional<IntMatrix> path_matrix;
  std::optional<BigInt> path_count;
};

/// Endpoints for St(k,n), k+1 <= n <= 2k-1 (and the empty family at
/// k = n = 1): A_j = (-(omega_j + r - j), 0), B_j = (0, n - 2j).
PathConfig path_config(int k, int n);

/// Endpoint offsets of the degree formula: the x-offsets
/// a = (k-1, ..., 2k-n, 2k-n-2, 2k-n-4, ..., n-2r) and heights
/// b = (n-2, n-4, ..., n-2r).
std::pair<std::vector<int>, std::vector<int>> endpoint_offsets(int k, int n);

/// Number of north/east lattice paths between two points (0 if unreachable).
BigInt count_paths(Point from, Point to);

/// M(i,j) = number of paths from starts[i] to ends[j].
IntMatrix lgv_matrix(const PathConfig& cfg);

/// Counts families of vertex-disjoint paths starts[j] -> ends[j] by depth
/// first search. Limited to at most 4 paths and coordinates within [-8, 8];
/// larger inputs throw SizeError.
BigInt count_nilp_bruteforce(const PathConfig& cfg);

/// det[ C(omega_i + omega'_j + 2r - i - j, omega_i + r - i) ] with
/// omega = Omega_{k,n}, omega' = Omega_{n-1,n}; this is L_{k,n}.
BigInt binomial_determinant(int k, int n);

/// Degree of St(k,n). Auto dispatches by regime. The explicit methods
/// apply to k+1 <= n <= 2k-1 directly and to n == k through (n-1, n);
/// they throw DomainError for n >= 2k.
DegreeResult degree(int k, int n, Method method = Method::Auto);

/// N! * (volume scalars) * (2/r! or 1/r!) * integral over the simplex,
/// for k+1 <= n <= 2k-1.
BigInt degree_via_integral(int k, int n);

/// (2^C(r+1,2), det[C(2i, j)]_{i,j=1..r}).
std::pair<BigInt, BigInt> aztec_check(int r);

/// Every (k, n) with 1 <= k <= n <= max_n, ordered by k then n.
std::vector<DegreeResult> degree_table(int max_n);

}  // namespace stiefel
