#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stiefel/degree.hpp"
#include "stiefel/gt.hpp"
#include "stiefel/verify.hpp"
#include "stiefel/volumes.hpp"

namespace py = pybind11;
using namespace stiefel;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str(10).c_str(), nullptr, 10));
}

py::object to_py(const BigRat& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigInt(q.get_num())), to_py(BigInt(q.get_den())));
}

BigRat from_py_rational(const py::handle& h) {
  py::object fraction = py::module_::import("fractions").attr("Fraction")(h);
  const std::string num = py::str(fraction.attr("numerator"));
  const std::string den = py::str(fraction.attr("denominator"));
  return make_rational(BigInt(num), BigInt(den));
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

PathConfig make_config(const std::vector<std::pair<int, int>>& starts,
                       const std::vector<std::pair<int, int>>& ends) {
  PathConfig cfg;
  for (auto [x, y] : starts) cfg.starts.push_back({x, y});
  for (auto [x, y] : ends) cfg.ends.push_back({x, y});
  return cfg;
}

py::dict degree_to_py(const DegreeResult& r) {
  py::dict d;
  d["k"] = r.k;
  d["n"] = r.n;
  d["degree"] = to_py(r.degree);
  d["regime"] = to_string(r.regime);
  d["method"] = to_string(r.method);
  if (r.path_matrix) d["path_matrix"] = matrix_to_py(*r.path_matrix);
  if (r.path_count) d["path_count"] = to_py(*r.path_count);
  return d;
}

std::vector<int> parts(const Partition& p) { return p.parts(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degrees of Stiefel manifolds, Gelfand-Tsetlin counts and volumes";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def(
      "degree",
      [](int k, int n, const std::string& method) {
        return degree_to_py(degree(k, n, parse_method(method)));
      },
      py::arg("k"), py::arg("n"), py::arg("method") = "auto",
      "Degree of St(k,n) with regime, method and path witnesses.");

  m.def(
      "degree_table",
      [](int max_n) {
        py::list rows;
        for (const auto& r : degree_table(max_n)) rows.append(degree_to_py(r));
        return rows;
      },
      py::arg("max_n"));

  m.def(
      "degree_via_integral", [](int k, int n) { return to_py(degree_via_integral(k, n)); },
      py::arg("k"), py::arg("n"));

  m.def(
      "omega", [](int k, int n) { return parts(omega_closed(k, n)); }, py::arg("k"),
      py::arg("n"));

  m.def(
      "path_config",
      [](int k, int n) {
        const PathConfig cfg = path_config(k, n);
        std::vector<std::pair<int, int>> starts, ends;
        for (const auto& p : cfg.starts) starts.emplace_back(p.x, p.y);
        for (const auto& p : cfg.ends) ends.emplace_back(p.x, p.y);
        return std::make_pair(starts, ends);
      },
      py::arg("k"), py::arg("n"));

  m.def(
      "lgv_matrix",
      [](const std::vector<std::pair<int, int>>& starts,
         const std::vector<std::pair<int, int>>& ends) {
        return matrix_to_py(lgv_matrix(make_config(starts, ends)));
      },
      py::arg("starts"), py::arg("ends"));

  m.def(
      "count_nilp",
      [](const std::vector<std::pair<int, int>>& starts,
         const std::vector<std::pair<int, int>>& ends) {
        return to_py(count_nilp_bruteforce(make_config(starts, ends)));
      },
      py::arg("starts"), py::arg("ends"), "Brute-force count of non-intersecting path families.");

  m.def(
      "det",
      [](const std::vector<std::vector<py::object>>& rows) {
        const std::size_t n = rows.size();
        RatMatrix a(n, n == 0 ? 0 : rows[0].size());
        for (std::size_t i = 0; i < n; ++i) {
          if (rows[i].size() != a.cols()) throw DimensionError("ragged matrix");
          for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = from_py_rational(rows[i][j]);
        }
        return to_py(det(a));
      },
      py::arg("rows"), "Exact determinant; entries may be ints or Fractions.");

  m.def(
      "aztec_check",
      [](int r) {
        const auto [lhs, rhs] = aztec_check(r);
        return py::make_tuple(to_py(lhs), to_py(rhs));
      },
      py::arg("r"));

  m.def(
      "vol_closed",
      [](int k, int n) {
        const VolumeFormula f = vol_closed(k, n);
        return py::make_tuple(to_py(f.scalar), parts(f.omega));
      },
      py::arg("k"), py::arg("n"), "(scalar, omega) with volume = scalar * a_omega.");

  m.def(
      "volume",
      [](int k, int n, const std::vector<py::object>& at) {
        std::vector<BigRat> point;
        for (const auto& v : at) point.push_back(from_py_rational(v));
        return to_py(vol_closed(k, n).evaluate(point));
      },
      py::arg("k"), py::arg("n"), py::arg("at"));

  m.def(
      "vol_symbolic", [](int k, int n) { return vol_symbolic(k, n).to_string(); }, py::arg("k"),
      py::arg("n"));

  m.def(
      "count_invariants",
      [](int n, const std::vector<int>& lambda, int mm) {
        return to_py(count_invariants(n, Partition(lambda), mm));
      },
      py::arg("n"), py::arg("lam"), py::arg("m"));

  m.def(
      "dim_irrep",
      [](int n, const std::vector<int>& lambda) { return to_py(dim_irrep(n, Partition(lambda))); },
      py::arg("n"), py::arg("lam"));

  m.def("gt_polytope_dim", &gt_polytope_dim, py::arg("k"), py::arg("n"));

  m.def(
      "verify",
      [](const std::string& level) {
        py::list out;
        for (const auto& r : run_checks(parse_verify_level(level))) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("level") = "fast");
}
