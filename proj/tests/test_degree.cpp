#include "doctest.h"
#include "stiefel/degree.hpp"
#include "stiefel/verify.hpp"
#include "stiefel/weights.hpp"

using namespace stiefel;

namespace {

PathConfig pairs(std::vector<Point> starts, std::vector<Point> ends) {
  return PathConfig{std::move(starts), std::move(ends)};
}

bool brute_force_feasible(const PathConfig& cfg) {
  if (cfg.starts.size() > 4) return false;
  for (const auto& p : cfg.starts) {
    if (std::abs(p.x) > 8 || std::abs(p.y) > 8) return false;
  }
  for (const auto& p : cfg.ends) {
    if (std::abs(p.x) > 8 || std::abs(p.y) > 8) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("path configurations") {
  CHECK(path_config(4, 6) == pairs({{-3, 0}, {-2, 0}, {0, 0}}, {{0, 4}, {0, 2}, {0, 0}}));
  CHECK(path_config(3, 5) == pairs({{-2, 0}, {-1, 0}}, {{0, 3}, {0, 1}}));
  CHECK(path_config(5, 7) == pairs({{-4, 0}, {-3, 0}, {-1, 0}}, {{0, 5}, {0, 3}, {0, 1}}));
  CHECK(path_config(1, 1) == PathConfig{});
  CHECK_THROWS_AS(path_config(3, 6), DomainError);
  CHECK_THROWS_AS(path_config(3, 3), DomainError);
}

TEST_CASE("end heights follow the orthogonal omega") {
  for (int n = 3; n <= 20; ++n) {
    const Partition so = omega_closed(n - 1, n);
    for (int j = 1; j <= n / 2; ++j) CHECK(n - 2 * j == so[j - 1] + n / 2 - j);
  }
}

TEST_CASE("endpoint offsets") {
  for (int k = 2; k <= 10; ++k) {
    for (int n = k + 1; n <= 2 * k - 1; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const auto [a, b] = endpoint_offsets(k, n);
      const PathConfig cfg = path_config(k, n);
      REQUIRE(a.size() == cfg.starts.size());
      REQUIRE(b.size() == cfg.ends.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(cfg.starts[j] == Point{-a[j], 0});
        CHECK(cfg.ends[j] == Point{0, b[j]});
      }
    }
  }
}

TEST_CASE("path matrices") {
  CHECK(lgv_matrix(path_config(4, 6)) == IntMatrix{{35, 10, 1}, {15, 6, 1}, {1, 1, 1}});
  CHECK(lgv_matrix(pairs({{-1, 0}}, {{0, 1}})) == IntMatrix{{2}});
  CHECK(lgv_matrix(pairs({{0, 0}}, {{0, 0}})) == IntMatrix{{1}});
  CHECK(lgv_matrix(pairs({{1, 0}}, {{0, 3}})) == IntMatrix{{0}});
  CHECK(count_paths({0, 2}, {3, 0}) == 0);
  CHECK_THROWS_AS(lgv_matrix(pairs({{0, 0}}, {})), DimensionError);
}

TEST_CASE("brute-force path families") {
  CHECK(count_nilp_bruteforce(path_config(4, 6)) == 44);
  CHECK(count_nilp_bruteforce(pairs({{0, 0}}, {{0, 0}})) == 1);
  CHECK(count_nilp_bruteforce(path_config(3, 4)) == det(lgv_matrix(path_config(3, 4))));
  CHECK(count_nilp_bruteforce(path_config(3, 4)) == 5);
  // a vertical and a horizontal path sharing (0,1)
  CHECK(count_nilp_bruteforce(pairs({{0, 0}, {-1, 1}}, {{0, 2}, {1, 1}})) == 0);
  CHECK_THROWS_AS(count_nilp_bruteforce(path_config(9, 10)), SizeError);
  CHECK_THROWS_AS(count_nilp_bruteforce(pairs({{-9, 0}}, {{0, 0}})), SizeError);
}

TEST_CASE("brute force equals determinant") {
  for (int k = 2; k <= 10; ++k) {
    for (int n = k + 1; n <= 2 * k - 1; ++n) {
      const PathConfig cfg = path_config(k, n);
      if (!brute_force_feasible(cfg)) continue;
      CAPTURE(k);
      CAPTURE(n);
      CHECK(count_nilp_bruteforce(cfg) == det(lgv_matrix(cfg)));
    }
  }
}

TEST_CASE("degree examples") {
  const DegreeResult d46 = degree(4, 6);
  CHECK(d46.degree == 704);
  CHECK(d46.regime == Regime::Determinant);
  CHECK(d46.method == Method::Determinant);
  REQUIRE(d46.path_count);
  CHECK(*d46.path_count == 44);

  CHECK(degree(5, 8).degree == 23808);
  const DegreeResult seam = degree(3, 5);
  CHECK(seam.degree == 64);
  CHECK(seam.regime == Regime::Bezout);
  REQUIRE(seam.path_count);
  CHECK(8 * *seam.path_count == 64);

  const DegreeResult diagonal = degree(6, 6);
  CHECK(diagonal.degree == 9536);
  CHECK(diagonal.regime == Regime::OrthogonalGroup);
  CHECK(degree(2, 9).degree == 8);
  CHECK(degree(1, 1).degree == 2);
  CHECK(degree(2, 2).degree == 4);
  CHECK_THROWS_AS(degree(3, 2), DomainError);
  CHECK_THROWS_WITH_AS(degree(3, 2), "k must be ≤ n (got k=3, n=2)", DomainError);
}

TEST_CASE("explicit methods") {
  CHECK(degree(4, 6, Method::Paths).degree == 704);
  CHECK(degree(4, 6, Method::Integral).degree == 704);
  CHECK(degree(5, 7, Method::Paths).degree == 14848);
  CHECK(degree(5, 5, Method::Integral).degree == 768);
  CHECK(degree(3, 5, Method::Determinant).degree == 64);
  CHECK_THROWS_AS(degree(3, 6, Method::Determinant), DomainError);
  CHECK_THROWS_AS(degree(9, 10, Method::Paths), SizeError);
  CHECK(parse_method("paths") == Method::Paths);
  CHECK_THROWS_AS(parse_method("magic"), DomainError);
}

TEST_CASE("integral route") {
  CHECK(degree_via_integral(4, 6) == 704);
  CHECK(degree_via_integral(3, 4) == 40);
  CHECK(degree_via_integral(6, 9) == 1064960);
  CHECK_THROWS_AS(degree_via_integral(4, 4), DomainError);
  CHECK_THROWS_AS(degree_via_integral(4, 8), DomainError);
}

TEST_CASE("routes agree") {
  for (int k = 2; k <= 8; ++k) {
    for (int n = k + 1; n <= 2 * k - 1; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const BigInt by_det = degree(k, n, Method::Determinant).degree;
      CHECK(by_det == degree_via_integral(k, n));
      CHECK(by_det == pow2(k) * binomial_determinant(k, n));
      const PathConfig cfg = path_config(k, n);
      if (brute_force_feasible(cfg)) CHECK(by_det == pow2(k) * count_nilp_bruteforce(cfg));
    }
  }
}

TEST_CASE("regime seam") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(pow2(k) * det(lgv_matrix(path_config(k, 2 * k - 1))) == pow2(k * (k + 1) / 2));
  }
}

TEST_CASE("aztec identity") {
  CHECK(aztec_check(1) == std::pair<BigInt, BigInt>{2, 2});
  CHECK(aztec_check(3) == std::pair<BigInt, BigInt>{64, 64});
  for (int r = 1; r <= 12; ++r) {
    const auto [lhs, rhs] = aztec_check(r);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(aztec_check(0), DomainError);
}

TEST_CASE("diagonal doubles the last column") {
  for (int n = 2; n <= 10; ++n) CHECK(degree(n, n).degree == 2 * degree(n - 1, n).degree);
}

TEST_CASE("degree table reproduces the published values") {
  const auto table = degree_table(10);
  const auto& reference = reference_degrees();
  REQUIRE(table.size() == 55);
  REQUIRE(reference.size() == 55);
  for (std::size_t i = 0; i < table.size(); ++i) {
    CAPTURE(table[i].k);
    CAPTURE(table[i].n);
    CHECK(table[i].k == reference[i].k);
    CHECK(table[i].n == reference[i].n);
    CHECK(table[i].degree == reference[i].degree);
  }
  CHECK(table.back().degree == BigInt("29989282816"));
  for (int n = 1; n <= 10; ++n) CHECK(table[n - 1].degree == 2);
  CHECK(degree_table(1).size() == 1);
  CHECK_THROWS_AS(degree_table(0), DomainError);
}
