#include "stiefel/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "stiefel/degree.hpp"
#include "stiefel/errors.hpp"
#include "stiefel/gt.hpp"
#include "stiefel/symb.hpp"
#include "stiefel/volumes.hpp"

namespace stiefel {

const std::vector<ReferenceDegree>& reference_degrees() {
  static const std::vector<ReferenceDegree> table = [] {
    // row k lists the degrees for n = k, ..., 10
    const std::vector<std::vector<const char*>> rows = {
        {"2", "2", "2", "2", "2", "2", "2", "2", "2", "2"},
        {"4", "8", "8", "8", "8", "8", "8", "8", "8"},
        {"16", "40", "64", "64", "64", "64", "64", "64"},
        {"80", "384", "704", "1024", "1024", "1024", "1024"},
        {"768", "4768", "14848", "23808", "32768", "32768"},
        {"9536", "111616", "420736", "1064960", "1581056"},
        {"223232", "3433600", "22429696", "66082816"},
        {"6867200", "196968448", "1604859904"},
        {"393936896", "14994641408"},
        {"29989282816"},
    };
    std::vector<ReferenceDegree> out;
    for (int k = 1; k <= 10; ++k) {
      for (std::size_t i = 0; i < rows[k - 1].size(); ++i) {
        out.push_back({k, k + static_cast<int>(i), BigInt(rows[k - 1][i])});
      }
    }
    return out;
  }();
  return table;
}

const std::vector<ReferenceOmega>& reference_omegas() {
  static const std::vector<ReferenceOmega> table = {
      {2, 3, {1}},          {3, 4, {1, 0}},          {3, 5, {1, 1}},
      {4, 5, {2, 1}},       {4, 6, {1, 1, 0}},       {4, 7, {1, 1, 1}},
      {5, 6, {2, 1, 0}},    {5, 7, {2, 2, 1}},       {5, 8, {1, 1, 1, 0}},
      {5, 9, {1, 1, 1, 1}}, {6, 7, {3, 2, 1}},       {6, 8, {2, 2, 1, 0}},
      {6, 9, {2, 2, 2, 1}}, {6, 10, {1, 1, 1, 1, 0}}, {7, 8, {3, 2, 1, 0}},
      {7, 9, {3, 3, 2, 1}}, {7, 10, {2, 2, 2, 1, 0}}, {8, 9, {4, 3, 2, 1}},
      {8, 10, {3, 3, 2, 1, 0}}, {9, 10, {4, 3, 2, 1, 0}},
  };
  return table;
}

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "fast") return VerifyLevel::Fast;
  if (name == "full") return VerifyLevel::Full;
  throw DomainError("unknown verification level '" + name + "'");
}

namespace {

std::string pair_str(int k, int n) {
  return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

// Each check returns "" on success, otherwise a description of the first
// failure.
using CheckBody = std::function<std::string()>;

std::string check_table() {
  const auto table = degree_table(10);
  const auto& reference = reference_degrees();
  if (table.size() != reference.size()) {
    return "table has " + std::to_string(table.size()) + " cells, expected " +
           std::to_string(reference.size());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& got = table[i];
    const auto& want = reference[i];
    if (got.k != want.k || got.n != want.n || got.degree != want.degree) {
      return "cell " + pair_str(want.k, want.n) + ": got " + to_string(got.degree) +
             ", expected " + to_string(want.degree);
    }
    const Regime expected = got.n >= 2 * got.k - 1 ? Regime::Bezout
                            : got.n == got.k      ? Regime::OrthogonalGroup
                                                  : Regime::Determinant;
    if (got.regime != expected) {
      return "cell " + pair_str(got.k, got.n) + " tagged " + to_string(got.regime);
    }
  }
  return "";
}

std::string check_worked_example() {
  const DegreeResult result = degree(4, 6);
  const IntMatrix expected{{35, 10, 1}, {15, 6, 1}, {1, 1, 1}};
  if (!result.path_matrix || *result.path_matrix != expected) return "path matrix differs";
  if (!result.path_count || *result.path_count != 44) return "determinant is not 44";
  if (result.degree != 704) return "degree is " + to_string(result.degree);
  if (result.regime != Regime::Determinant) return "regime is " + to_string(result.regime);
  return "";
}

std::string check_path_oracle() {
  const std::vector<std::pair<int, int>> cases = {{3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}};
  for (auto [k, n] : cases) {
    const PathConfig cfg = path_config(k, n);
    const BigInt counted = count_nilp_bruteforce(cfg);
    const BigInt d = det(lgv_matrix(cfg));
    if (counted != d) {
      return pair_str(k, n) + ": counted " + to_string(counted) + ", determinant " +
             to_string(d);
    }
  }
  return "";
}

bool brute_force_feasible(const PathConfig& cfg) {
  if (cfg.starts.size() > 4) return false;
  for (const auto& p : cfg.starts) {
    if (p.x < -8 || p.x > 8 || p.y < -8 || p.y > 8) return false;
  }
  for (const auto& p : cfg.ends) {
    if (p.x < -8 || p.x > 8 || p.y < -8 || p.y > 8) return false;
  }
  return true;
}

std::string check_routes() {
  for (int k = 2; k <= 8; ++k) {
    for (int n = k + 1; n <= 2 * k - 1; ++n) {
      const BigInt by_det = degree(k, n, Method::Determinant).degree;
      const BigInt by_integral = degree_via_integral(k, n);
      const PathConfig cfg = path_config(k, n);
      const BigInt paths = brute_force_feasible(cfg) ? count_nilp_bruteforce(cfg)
                                                     : det(lgv_matrix(cfg));
      const BigInt by_paths = pow2(k) * paths;
      if (by_det != by_integral || by_det != by_paths) {
        return pair_str(k, n) + ": determinant " + to_string(by_det) + ", integral " +
               to_string(by_integral) + ", paths " + to_string(by_paths);
      }
    }
  }
  return "";
}

std::string check_seam() {
  for (int k = 1; k <= 10; ++k) {
    const int n = 2 * k - 1;
    const BigInt paths = pow2(k) * det(lgv_matrix(path_config(k, n)));
    const BigInt bezout = pow2(k * (k + 1) / 2);
    if (paths != bezout) {
      return "k=" + std::to_string(k) + ": 2^k L = " + to_string(paths) + ", Bezout " +
             to_string(bezout);
    }
  }
  for (int r = 1; r <= 12; ++r) {
    const auto [lhs, rhs] = aztec_check(r);
    if (lhs != rhs) {
      return "aztec r=" + std::to_string(r) + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
  }
  return "";
}

MultiPoly printed_example_volume() {
  const auto vars = lambda_variables(3);
  const auto l1 = MultiPoly::variable(vars, "l1");
  const auto l2 = MultiPoly::variable(vars, "l2");
  const auto l3 = MultiPoly::variable(vars, "l3");
  return make_rational(1, 6) * ((l1 - l2) * (l2 - l3) * (l1 - l3) * l1 * l2 * l3);
}

std::string check_volumes() {
  int compared = 0;
  for (int k = 2; k <= 12; ++k) {
    for (int n = k + 1; n <= 2 * k - 1; ++n) {
      if (gt_polytope_dim(k, n) > 12) continue;
      const MultiPoly symbolic = vol_symbolic(k, n);
      const MultiPoly closed = vol_closed(k, n).polynomial();
      if (symbolic != closed) {
        return pair_str(k, n) + ": integrated " + symbolic.to_string() + ", closed form " +
               closed.to_string();
      }
      ++compared;
    }
  }
  if (vol_symbolic(4, 7) != printed_example_volume()) {
    return "(4,7) differs from the expanded product";
  }
  if (compared == 0) return "no shapes compared";
  return "";
}

std::vector<Partition> weights_up_to(int n, int max_abs_sum) {
  const int r = n / 2;
  std::vector<Partition> out;
  std::vector<int> parts(r);
  std::function<void(int, int)> fill = [&](int i, int budget) {
    if (i == r) {
      Partition p(parts);
      if (is_dominant_weight(n, p)) out.push_back(p);
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      parts[i] = v;
      fill(i + 1, budget - (v < 0 ? -v : v));
    }
  };
  fill(0, max_abs_sum);
  return out;
}

std::string check_representations() {
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> parts(n / 2, 0);
    parts[0] = 1;
    const BigInt d = dim_irrep(n, Partition(parts));
    if (d != n) return "dim of the vector representation of SO(" + std::to_string(n) + ") is " +
                       to_string(d);
  }
  if (dim_irrep(5, {1, 1}) != 10) return "dim V_(1,1) of SO(5) is not 10";
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lambda : weights_up_to(n, 5)) {
      for (int m = 0; m <= n; ++m) {
        const BigInt dp = count_invariants(n, lambda, m);
        std::size_t listed = 0;
        for_each_filling(n, lambda, m, [&listed](const GTFilling&) { ++listed; });
        if (dp != listed) {
          return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                 " m=" + std::to_string(m) + ": counted " + to_string(dp) + ", listed " +
                 std::to_string(listed);
        }
      }
    }
  }
  return "";
}

std::string check_asymptotics() {
  constexpr int j = 60;
  const std::vector<std::pair<int, int>> cases = {{3, 4}, {4, 6}, {4, 7}};
  for (auto [k, n] : cases) {
    const int r = n / 2;
    std::vector<int> base = {3, 2, 1};
    base.resize(r);
    const Partition lambda(base);
    const int d = gt_polytope_dim(k, n);
    const BigInt points = count_invariants(n, lambda.scaled(j), n - k);
    BigInt scale = 1;
    for (int i = 0; i < d; ++i) scale *= j;
    std::vector<BigRat> at(base.begin(), base.end());
    const BigRat volume = vol_closed(k, n).evaluate(at);
    const BigRat ratio = make_rational(points, scale);
    const BigRat error = abs(ratio - volume) / volume;
    if (error >= make_rational(5, 100)) {
      return pair_str(k, n) + ": scaled count " + std::to_string(ratio.get_d()) + ", volume " +
             to_string(volume);
    }
  }
  return "";
}

std::string check_omegas() {
  for (int k = 1; k <= 12; ++k) {
    for (int n = k; n <= 2 * k - 1; ++n) {
      if (omega_recursive(k, n) != omega_closed(k, n)) {
        return pair_str(k, n) + ": recursion " + omega_recursive(k, n).to_string() +
               ", closed form " + omega_closed(k, n).to_string();
      }
    }
  }
  for (const auto& entry : reference_omegas()) {
    if (omega_closed(entry.k, entry.n) != entry.omega) {
      return pair_str(entry.k, entry.n) + ": computed " +
             omega_closed(entry.k, entry.n).to_string() + ", published " +
             entry.omega.to_string();
    }
  }
  return "";
}

struct CheckDef {
  int id;
  const char* name;
  double limit_seconds;
  bool fast;
  std::string (*body)();
};

const std::vector<CheckDef>& check_defs() {
  static const std::vector<CheckDef> defs = {
      {1, "degree table n <= 10", 10, true, check_table},
      {2, "worked example St(4,6)", 0, true, check_worked_example},
      {3, "path count equals LGV determinant", 30, false, check_path_oracle},
      {4, "determinant, integral and path routes agree (k <= 8)", 0, false, check_routes},
      {5, "regime seam and Aztec identity", 0, true, check_seam},
      {6, "symbolic volumes match closed form", 60, false, check_volumes},
      {7, "representation dimensions", 0, true, check_representations},
      {8, "lattice points approach volume (j = 60)", 60, false, check_asymptotics},
      {9, "Omega recursion, closed form and table", 0, true, check_omegas},
  };
  return defs;
}

CheckResult execute(const CheckDef& def) {
  CheckResult result;
  result.id = def.id;
  result.name = def.name;
  result.limit_seconds = def.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = def.body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.passed && def.limit_seconds > 0 && result.seconds >= def.limit_seconds) {
    result.passed = false;
    std::ostringstream msg;
    msg << "took " << result.seconds << " s, limit " << def.limit_seconds << " s";
    result.detail = msg.str();
  }
  return result;
}

}  // namespace

std::vector<CheckResult> run_checks(VerifyLevel level) {
  std::vector<CheckResult> out;
  for (const auto& def : check_defs()) {
    if (level == VerifyLevel::Fast && !def.fast) continue;
    out.push_back(execute(def));
  }
  return out;
}

CheckResult run_check(int id) {
  for (const auto& def : check_defs()) {
    if (def.id == id) return execute(def);
  }
  throw DomainError("no check with id " + std::to_string(id));
}

}  // namespace stiefel
