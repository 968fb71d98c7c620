#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stiefel/exact.hpp"
#include "stiefel/weights.hpp"

namespace stiefel {

using Exponents = std::vector<int>;

/// Orders monomials by total degree, then lexicographically, largest first
/// (graded lex with x1 > x2 > ...).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with exact rational coefficients over an ordered
/// list of named variables. No zero coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigRat, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const BigRat& value);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Index of `name` in variables(); throws DomainError when absent.
  std::size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  /// Adds coeff * x^exponents.
  void add_term(const Exponents& exponents, const BigRat& coeff);

  /// Coefficient of x^exponents (zero if absent).
  BigRat coefficient(const Exponents& exponents) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(const std::string& name) const;
  bool involves(const std::string& name) const { return degree_in(name) > 0; }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRat& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const BigRat& s) { return a *= s; }
  friend MultiPoly operator*(const BigRat& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  MultiPoly pow(int exponent) const;

  /// Replaces variable `name` by the polynomial `value` (same variable list).
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;

  /// Exact value at the point (one entry per variable).
  BigRat evaluate(std::span<const BigRat> point) const;

  /// Same polynomial expressed over `variables`. Every variable that occurs
  /// with positive degree must be present in the new list.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;

  /// Swaps variables a and b.
  MultiPoly swapped(const std::string& a, const std::string& b) const;

  /// Canonical text, graded lex order: "1/6*l1^3*l2^2*l3 - l1^2*l2 + 2".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_variables(const MultiPoly& other) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

/// Variable names l1..lr used for the top row of a pattern.
std::vector<std::string> lambda_variables(int r);

/// a_mu(l1..lr) = det[ l_j^(mu_i + r - i) ], expanded as a sum over S_r.
MultiPoly alt_poly(const Partition& mu, int r);

/// Definite integral of p in `var` from `lower` to `upper`. The bounds must
/// share p's variables and must not involve `var`.
MultiPoly integrate_poly(const MultiPoly& p, const std::string& var, const MultiPoly& lower,
                         const MultiPoly& upper);

struct AlternatingIntegral {
  BigRat scalar;
  Partition result;  ///< (pi, 0), length r + 1
};

/// Integrating a_pi(mu_1..mu_r) over mu_i in [l_{i+1}, l_i] yields
/// scalar * a_{(pi,0)}(l_1..l_{r+1}) with scalar = 1 / prod_j (pi_j + r - j + 1).
AlternatingIntegral integral_alternating(const Partition& pi, int r);

/// Integral of a_mu * a_nu over the simplex {l >= 0, l_1 + ... + l_r <= 1}:
/// r! / (r^2 + |mu| + |nu|)! * det[(nu_i + mu_j + 2r - i - j)!].
BigRat integral_product_simplex(const Partition& mu, const Partition& nu, int r);

}  // namespace stiefel
