#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "stiefel/symb.hpp"

using namespace stiefel;

namespace {

MultiPoly var(const std::vector<std::string>& vars, const std::string& name) {
  return MultiPoly::variable(vars, name);
}

MultiPoly constant(const std::vector<std::string>& vars, const BigRat& c) {
  return MultiPoly::constant(vars, c);
}

std::vector<Partition> partitions_up_to(int r, int max_size) {
  std::vector<Partition> out;
  std::vector<int> parts(r);
  std::function<void(int, int, int)> fill = [&](int i, int cap, int budget) {
    if (i == r) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= std::min(cap, budget); ++v) {
      parts[i] = v;
      fill(i + 1, v, budget - v);
    }
  };
  fill(0, max_size, max_size);
  return out;
}

// Integrates p over mu_i in [l_{i+1}, l_i], i = 1..r, with the mu renamed
// into the first r of r+1 variables.
MultiPoly integrate_interlaced(const MultiPoly& p, int r) {
  auto vars = lambda_variables(r + 1);
  std::vector<std::string> all = vars;
  for (int i = 1; i <= r; ++i) all.push_back("mu" + std::to_string(i));
  MultiPoly q(all);
  for (const auto& [e, c] : p.terms()) {
    Exponents ex(all.size(), 0);
    for (int i = 0; i < r; ++i) ex[r + 1 + i] = e[i];
    q.add_term(ex, c);
  }
  for (int i = 1; i <= r; ++i) {
    q = integrate_poly(q, "mu" + std::to_string(i), var(all, "l" + std::to_string(i + 1)),
                       var(all, "l" + std::to_string(i)));
  }
  return q.with_variables(vars);
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const auto v = lambda_variables(3);
  const auto l1 = var(v, "l1"), l2 = var(v, "l2"), l3 = var(v, "l3");
  const MultiPoly p = make_rational(1, 6) * l1.pow(3) * l2.pow(2) * l3 - l1.pow(2) * l2 +
                      constant(v, 2);
  CHECK(p.to_string() == "1/6*l1^3*l2^2*l3 - l1^2*l2 + 2");
  CHECK(p.total_degree() == 6);
  CHECK(p.degree_in("l3") == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  CHECK((-l1).to_string() == "-l1");
  CHECK(((l1 + l2) * (l1 - l2)) == l1.pow(2) - l2.pow(2));
  CHECK(p.coefficient({1, 1, 0}) == 0);
  CHECK(p.coefficient({2, 1, 0}) == -1);
  const std::vector<BigRat> at{1, 2, 3};
  CHECK(p.evaluate(at) == make_rational(1, 6) * 12 - 2 + 2);
  CHECK_THROWS_AS(p.index_of("x"), DomainError);
  CHECK_THROWS_AS(p + MultiPoly(lambda_variables(2)), DimensionError);
}

TEST_CASE("substitution") {
  const auto v = lambda_variables(2);
  const auto l1 = var(v, "l1"), l2 = var(v, "l2");
  const MultiPoly p = l1.pow(2) + l2;
  CHECK(p.substitute("l1", l2 + constant(v, 1)) == l2.pow(2) + 3 * l2 + constant(v, 1));
}

TEST_CASE("alternating polynomial examples") {
  const auto v2 = lambda_variables(2);
  const auto l1 = var(v2, "l1"), l2 = var(v2, "l2");
  CHECK(alt_poly({0, 0}, 2) == l1 - l2);
  CHECK(alt_poly({1, 1}, 2) == l1.pow(2) * l2 - l1 * l2.pow(2));

  const auto v3 = lambda_variables(3);
  const auto x = var(v3, "l1"), y = var(v3, "l2"), z = var(v3, "l3");
  CHECK(alt_poly({1, 1, 1}, 3) == x * y * z * (x - y) * (x - z) * (y - z));
  CHECK_THROWS_AS(alt_poly({1, 0}, 3), DimensionError);
  CHECK_THROWS_AS(alt_poly({0, 1}, 2), DomainError);
}

TEST_CASE("alternating polynomials are antisymmetric") {
  for (int r = 2; r <= 4; ++r) {
    const auto vars = lambda_variables(r);
    for (const Partition& mu : partitions_up_to(r, 3)) {
      const MultiPoly a = alt_poly(mu, r);
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) CHECK(a.swapped(vars[i], vars[j]) == -a);
      }
    }
  }
}

TEST_CASE("setting the last variable to zero") {
  for (int r = 1; r <= 3; ++r) {
    for (const Partition& pi : partitions_up_to(r, 4)) {
      const auto vars = lambda_variables(r + 1);
      const MultiPoly restricted = alt_poly(pi.appended(0), r + 1)
                                       .substitute(vars.back(), MultiPoly(vars))
                                       .with_variables(lambda_variables(r));
      CHECK(restricted == alt_poly(pi.plus_ones(), r));
    }
  }
}

TEST_CASE("integrate_poly") {
  const std::vector<std::string> v{"l1", "l2", "l3", "mu"};
  const auto l1 = var(v, "l1"), l2 = var(v, "l2"), l3 = var(v, "l3"), mu = var(v, "mu");
  const MultiPoly one = constant(v, 1), zero(v);
  CHECK(integrate_poly(one, "mu", l2, l1) == l1 - l2);
  CHECK(integrate_poly(one, "mu", zero, l3) == l3);
  CHECK(integrate_poly(mu.pow(2), "mu", l2, l1) ==
        make_rational(1, 3) * (l1.pow(3) - l2.pow(3)));
  CHECK(integrate_poly(mu * l1, "mu", zero, l2) == make_rational(1, 2) * l1 * l2.pow(2));
  CHECK_THROWS_AS(integrate_poly(one, "mu", zero, mu), DomainError);
}

TEST_CASE("integral of an alternating polynomial") {
  auto a = integral_alternating({0}, 1);
  CHECK(a.scalar == 1);
  CHECK(a.result == Partition{0, 0});
  a = integral_alternating({1, 1}, 2);
  CHECK(a.scalar == make_rational(1, 6));
  CHECK(a.result == Partition{1, 1, 0});
  a = integral_alternating({0, 0}, 2);
  CHECK(a.scalar == make_rational(1, 2));
  CHECK(a.result == Partition{0, 0, 0});
  CHECK_THROWS_AS(integral_alternating({0, 1}, 2), DomainError);
}

TEST_CASE("interlaced integration matches the closed form") {
  for (int r = 1; r <= 3; ++r) {
    for (const Partition& pi : partitions_up_to(r, 3)) {
      CAPTURE(pi.to_string());
      const auto closed = integral_alternating(pi, r);
      CHECK(integrate_interlaced(alt_poly(pi, r), r) ==
            closed.scalar * alt_poly(closed.result, r + 1));
    }
  }
}

TEST_CASE("integral over the simplex") {
  CHECK(integral_product_simplex({2}, {3}, 1) == make_rational(1, 6));
  CHECK(integral_product_simplex({0, 0}, {0, 0}, 2) == make_rational(1, 12));
  CHECK_THROWS_AS(integral_product_simplex({0}, {0, 0}, 2), DimensionError);
}

TEST_CASE("simplex integral matches iterated integration") {
  // simplex {l1, l2 >= 0, l1 + l2 <= 1}
  const auto vars = lambda_variables(2);
  const auto l1 = var(vars, "l1");
  const MultiPoly zero(vars), one = constant(vars, 1);
  for (const Partition& mu : partitions_up_to(2, 2)) {
    for (const Partition& nu : partitions_up_to(2, 2)) {
      MultiPoly p = alt_poly(mu, 2) * alt_poly(nu, 2);
      p = integrate_poly(p, "l2", zero, one - l1);
      p = integrate_poly(p, "l1", zero, one);
      CAPTURE(mu.to_string());
      CAPTURE(nu.to_string());
      CHECK(p.coefficient({0, 0}) == integral_product_simplex(mu, nu, 2));
      CHECK(p.total_degree() <= 0);
    }
  }
}

TEST_CASE("simplex integral for r = 3 against iterated integration") {
  const auto vars = lambda_variables(3);
  const auto l1 = var(vars, "l1"), l2 = var(vars, "l2");
  const MultiPoly zero(vars), one = constant(vars, 1);
  const Partition mu{1, 1, 0}, nu{2, 1, 0};
  MultiPoly p = alt_poly(mu, 3) * alt_poly(nu, 3);
  p = integrate_poly(p, "l3", zero, one - l1 - l2);
  p = integrate_poly(p, "l2", zero, one - l1);
  p = integrate_poly(p, "l1", zero, one);
  CHECK(p.coefficient({0, 0, 0}) == integral_product_simplex(mu, nu, 3));
}
