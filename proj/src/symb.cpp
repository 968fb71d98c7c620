#include "stiefel/symb.hpp"

#include <algorithm>
#include <numeric>

#include "stiefel/errors.hpp"

namespace stiefel {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigRat& value) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw DomainError("unknown variable '" + name + "'");
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

bool MultiPoly::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

void MultiPoly::add_term(const Exponents& exponents, const BigRat& coeff) {
  if (exponents.size() != variables_.size()) {
    throw DimensionError("exponent vector length " + std::to_string(exponents.size()) +
                         " does not match " + std::to_string(variables_.size()) + " variables");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRat MultiPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRat(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& top = terms_.begin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

int MultiPoly::degree_in(const std::string& name) const {
  const std::size_t idx = index_of(name);
  int degree = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) degree = std::max(degree, e[idx]);
  return degree;
}

void MultiPoly::require_same_variables(const MultiPoly& other) const {
  if (variables_ != other.variables_) {
    throw DimensionError("polynomials over different variable lists");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b);
  MultiPoly out(a.variables_);
  Exponents e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) {
    throw DomainError("negative polynomial power");
  }
  MultiPoly result = constant(variables_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

// out += coeff * x^monomial * p
void add_monomial_times(MultiPoly& out, const Exponents& monomial, const BigRat& coeff,
                        const MultiPoly& p) {
  Exponents e(monomial.size());
  for (const auto& [ep, cp] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = monomial[i] + ep[i];
    out.add_term(e, coeff * cp);
  }
}

}  // namespace

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  require_same_variables(value);
  const std::size_t idx = index_of(name);
  std::vector<MultiPoly> powers{constant(variables_, 1)};
  MultiPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[idx]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx] = 0;
    add_monomial_times(out, rest, c, powers[e[idx]]);
  }
  return out;
}

BigRat MultiPoly::evaluate(std::span<const BigRat> point) const {
  if (point.size() != variables_.size()) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(variables_.size()) +
                         " variables");
  }
  BigRat total = 0;
  for (const auto& [e, c] : terms_) {
    BigRat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int d = 0; d < e[i]; ++d) term *= point[i];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  std::vector<int> target(variables_.size(), -1);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto it = std::find(variables.begin(), variables.end(), variables_[i]);
    if (it != variables.end()) target[i] = static_cast<int>(it - variables.begin());
  }
  MultiPoly out(variables);
  Exponents e(variables.size());
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      if (target[i] < 0) {
        throw DomainError("variable '" + variables_[i] + "' still occurs in the polynomial");
      }
      e[target[i]] = src[i];
    }
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::swapped(const std::string& a, const std::string& b) const {
  const std::size_t ia = index_of(a);
  const std::size_t ib = index_of(b);
  MultiPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    Exponents moved = e;
    std::swap(moved[ia], moved[ib]);
    out.add_term(moved, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigRat magnitude = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      s += stiefel::to_string(magnitude);
    } else if (magnitude == 1) {
      s += monomial;
    } else {
      s += stiefel::to_string(magnitude) + "*" + monomial;
    }
  }
  return s;
}

std::vector<std::string> lambda_variables(int r) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("l" + std::to_string(i));
  return names;
}

MultiPoly alt_poly(const Partition& mu, int r) {
  if (mu.size() != r) {
    throw DimensionError("alternating polynomial: partition " + mu.to_string() +
                         " does not have length " + std::to_string(r));
  }
  if (!mu.is_weakly_decreasing() || (r > 0 && mu[r - 1] < 0)) {
    throw DomainError("alternating polynomial needs a partition, got " + mu.to_string());
  }
  MultiPoly out(lambda_variables(r));
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  Exponents e(r);
  do {
    int inversions = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) inversions += sigma[i] > sigma[j] ? 1 : 0;
    }
    // row i of the matrix contributes l_{sigma(i)}^(mu_i + r - 1 - i)
    for (int i = 0; i < r; ++i) e[sigma[i]] = mu[i] + r - 1 - i;
    out.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

MultiPoly integrate_poly(const MultiPoly& p, const std::string& var, const MultiPoly& lower,
                         const MultiPoly& upper) {
  const std::size_t idx = p.index_of(var);
  if (lower.variables() != p.variables() || upper.variables() != p.variables()) {
    throw DimensionError("integration bounds must use the integrand's variables");
  }
  if (lower.involves(var) || upper.involves(var)) {
    throw DomainError("integration bounds involve the integration variable '" + var + "'");
  }
  // differences[d] = upper^d - lower^d
  std::vector<MultiPoly> upper_powers{MultiPoly::constant(p.variables(), 1)};
  std::vector<MultiPoly> lower_powers{MultiPoly::constant(p.variables(), 1)};
  std::vector<MultiPoly> differences{MultiPoly(p.variables())};
  MultiPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    const int d = e[idx] + 1;
    while (static_cast<int>(differences.size()) <= d) {
      upper_powers.push_back(upper_powers.back() * upper);
      lower_powers.push_back(lower_powers.back() * lower);
      differences.push_back(upper_powers.back() - lower_powers.back());
    }
    Exponents rest = e;
    rest[idx] = 0;
    add_monomial_times(out, rest, c / d, differences[d]);
  }
  return out;
}

AlternatingIntegral integral_alternating(const Partition& pi, int r) {
  if (pi.size() != r) {
    throw DimensionError("partition " + pi.to_string() + " does not have length " +
                         std::to_string(r));
  }
  if (!pi.is_weakly_decreasing() || (r > 0 && pi[r - 1] < 0)) {
    throw DomainError("integral_alternating needs a partition, got " + pi.to_string());
  }
  BigInt denominator = 1;
  for (int j = 1; j <= r; ++j) denominator *= pi[j - 1] + r - j + 1;
  return {make_rational(1, denominator), pi.appended(0)};
}

BigRat integral_product_simplex(const Partition& mu, const Partition& nu, int r) {
  if (mu.size() != r || nu.size() != r) {
    throw DimensionError("integral_product_simplex: partitions " + mu.to_string() + ", " +
                         nu.to_string() + " must have length " + std::to_string(r));
  }
  IntMatrix m(r, r);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const int arg = nu[i - 1] + mu[j - 1] + 2 * r - i - j;
      if (arg < 0) {
        throw DomainError("integral_product_simplex: negative factorial argument");
      }
      m(i - 1, j - 1) = factorial(static_cast<std::uint32_t>(arg));
    }
  }
  const std::int64_t top = static_cast<std::int64_t>(r) * r + mu.sum() + nu.sum();
  if (top < 0) {
    throw DomainError("integral_product_simplex: negative total degree");
  }
  return make_rational(factorial(r) * det(m), factorial(static_cast<std::uint32_t>(top)));
}

}  // namespace stiefel
