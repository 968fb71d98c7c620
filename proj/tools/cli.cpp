#include "cli.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stiefel/errors.hpp"
#include "stiefel/gt.hpp"
#include "stiefel/verify.hpp"
#include "stiefel/volumes.hpp"
#include "stiefel/weights.hpp"

namespace stiefel::cli {

Json OutputRecord::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["witnesses"] = witnesses;
  return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
  OutputRecord rec;
  rec.command = j.at("command").get<std::string>();
  rec.inputs = j.at("inputs");
  rec.result = j.at("result");
  rec.witnesses = j.at("witnesses");
  return rec;
}

namespace {

std::string num(long long v) { return std::to_string(v); }

std::string point_str(const Point& p) { return "(" + num(p.x) + "," + num(p.y) + ")"; }

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_str(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) s += ",";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

Json witnesses_json(const DegreeResult& r) {
  Json w = Json::object();
  if (r.paths) {
    Json starts = Json::array();
    Json ends = Json::array();
    for (const auto& p : r.paths->starts) starts.push_back(point_str(p));
    for (const auto& p : r.paths->ends) ends.push_back(point_str(p));
    w["starts"] = starts;
    w["ends"] = ends;
  }
  if (r.path_matrix) w["path_matrix"] = matrix_json(*r.path_matrix);
  if (r.path_count) w["path_count"] = to_string(*r.path_count);
  return w;
}

std::string regime_mark(Regime regime) {
  switch (regime) {
    case Regime::Bezout:
      return "b";
    case Regime::Determinant:
      return "d";
    case Regime::OrthogonalGroup:
      return "o";
  }
  return "?";
}

}  // namespace

OutputRecord degree_record(const DegreeResult& result, Method requested) {
  OutputRecord rec;
  rec.command = "degree";
  rec.inputs["k"] = num(result.k);
  rec.inputs["n"] = num(result.n);
  rec.inputs["method"] = to_string(requested);
  rec.result["degree"] = to_string(result.degree);
  rec.result["regime"] = to_string(result.regime);
  rec.result["method"] = to_string(result.method);
  rec.witnesses = witnesses_json(result);
  return rec;
}

OutputRecord table_record(const std::vector<DegreeResult>& table, int max_n) {
  OutputRecord rec;
  rec.command = "table";
  rec.inputs["max_n"] = num(max_n);
  Json rows = Json::array();
  for (const auto& r : table) {
    Json row = Json::object();
    row["k"] = num(r.k);
    row["n"] = num(r.n);
    row["degree"] = to_string(r.degree);
    row["regime"] = to_string(r.regime);
    row["method"] = to_string(r.method);
    rows.push_back(row);
  }
  rec.result["rows"] = rows;
  return rec;
}

std::string table_markdown(const std::vector<DegreeResult>& table, int max_n) {
  std::map<std::pair<int, int>, const DegreeResult*> cells;
  for (const auto& r : table) cells[{r.k, r.n}] = &r;
  std::ostringstream s;
  s << "| k \\ n |";
  for (int n = 1; n <= max_n; ++n) s << " " << n << " |";
  s << "\n|---|";
  for (int n = 1; n <= max_n; ++n) s << "---|";
  s << "\n";
  for (int k = 1; k <= max_n; ++k) {
    s << "| " << k << " |";
    for (int n = 1; n <= max_n; ++n) {
      const auto it = cells.find({k, n});
      if (it == cells.end()) {
        s << " * |";
      } else {
        s << " " << to_string(it->second->degree) << " " << regime_mark(it->second->regime)
          << " |";
      }
    }
    s << "\n";
  }
  s << "\nb: bezout (complete intersection), d: determinant, o: orthogonal-group\n";
  return s.str();
}

std::string table_csv(const std::vector<DegreeResult>& table) {
  std::ostringstream s;
  s << "k,n,degree,regime\n";
  for (const auto& r : table) {
    s << r.k << "," << r.n << "," << to_string(r.degree) << "," << to_string(r.regime) << "\n";
  }
  return s.str();
}

namespace {

struct Options {
  int k = 0;
  int n = 0;
  int m = 0;
  int max_n = 0;
  std::string method = "auto";
  std::string format;
  std::string level = "fast";
  std::vector<std::string> at;
  std::vector<int> lambda;
  bool enumerate = false;
};

int cmd_degree(const Options& o, std::ostream& out) {
  const Method method = parse_method(o.method);
  const DegreeResult r = degree(o.k, o.n, method);
  if (o.format == "json") {
    out << degree_record(r, method).to_json().dump(2) << "\n";
    return 0;
  }
  out << "St(" << r.k << "," << r.n << "): degree " << to_string(r.degree) << "\n";
  out << "regime: " << to_string(r.regime) << "\n";
  out << "method: " << to_string(r.method) << "\n";
  if (r.paths) {
    out << "starts:";
    for (const auto& p : r.paths->starts) out << " " << point_str(p);
    out << "\nends:";
    for (const auto& p : r.paths->ends) out << " " << point_str(p);
    out << "\n";
  }
  if (r.path_matrix) out << "path matrix: " << matrix_str(*r.path_matrix) << "\n";
  if (r.path_count) out << "path families: " << to_string(*r.path_count) << "\n";
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto table = degree_table(o.max_n);
  if (o.format == "csv") {
    out << table_csv(table);
  } else if (o.format == "json") {
    out << table_record(table, o.max_n).to_json().dump(2) << "\n";
  } else {
    out << table_markdown(table, o.max_n);
  }
  return 0;
}

BigRat parse_rational(const std::string& text) {
  BigRat q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

// Expanding a_omega is a sum over r! permutations.
constexpr int kMaxExpandedRank = 8;

int cmd_volume(const Options& o, std::ostream& out) {
  const VolumeFormula f = vol_closed(o.k, o.n);
  OutputRecord rec;
  rec.command = "volume";
  rec.inputs["k"] = num(o.k);
  rec.inputs["n"] = num(o.n);
  rec.result["formula"] = f.to_string();
  rec.result["scalar"] = to_string(f.scalar);
  rec.result["omega"] = f.omega.to_string();
  if (f.rank <= kMaxExpandedRank) rec.result["expanded"] = f.polynomial().to_string();
  if (!o.at.empty()) {
    std::vector<BigRat> point;
    for (const auto& s : o.at) point.push_back(parse_rational(s));
    Json at = Json::array();
    for (const auto& q : point) at.push_back(to_string(q));
    rec.inputs["at"] = at;
    rec.result["value"] = to_string(f.evaluate(point));
  }
  if (o.format == "json") {
    out << rec.to_json().dump(2) << "\n";
    return 0;
  }
  out << "formula: " << rec.result["formula"].get<std::string>() << "\n";
  if (rec.result.contains("expanded")) {
    out << "expanded: " << rec.result["expanded"].get<std::string>() << "\n";
  }
  if (rec.result.contains("value")) {
    out << "value: " << rec.result["value"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_gt_count(const Options& o, std::ostream& out) {
  const Partition lambda(o.lambda);
  OutputRecord rec;
  rec.command = "gt-count";
  rec.inputs["n"] = num(o.n);
  rec.inputs["lambda"] = lambda.to_string();
  rec.inputs["m"] = num(o.m);
  rec.result["count"] = to_string(count_invariants(o.n, lambda, o.m));
  if (o.enumerate) {
    Json fillings = Json::array();
    for_each_filling(o.n, lambda, o.m,
                     [&fillings](const GTFilling& f) { fillings.push_back(f.to_string()); });
    rec.result["fillings"] = fillings;
  }
  if (o.format == "json") {
    out << rec.to_json().dump(2) << "\n";
    return 0;
  }
  out << "count: " << rec.result["count"].get<std::string>() << "\n";
  if (o.enumerate) {
    for (const auto& f : rec.result["fillings"]) out << f.get<std::string>() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_checks(parse_verify_level(o.level));
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " ("
        << r.seconds << " s)";
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of Stiefel manifolds and related Gelfand-Tsetlin data", "stiefel"};
  app.require_subcommand(1);
  Options o;

  auto* deg = app.add_subcommand("degree", "Degree of St(k,n)");
  deg->add_option("--k", o.k, "number of frame vectors")->required();
  deg->add_option("--n", o.n, "ambient dimension")->required();
  deg->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "determinant", "paths", "integral"}));
  deg->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "Degree table for 1 <= k <= n <= max-n");
  table->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 1 << 20));
  table->add_option("--format", o.format)->check(CLI::IsMember({"markdown", "csv", "json"}));

  auto* vol = app.add_subcommand("volume", "Closed-form GT polytope volume, n <= 2k-1");
  vol->add_option("--k", o.k)->required();
  vol->add_option("--n", o.n)->required();
  vol->add_option("--at", o.at, "top-row values, comma separated")->delimiter(',');
  vol->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* gt = app.add_subcommand("gt-count", "Count GT fillings = dim of SO(m)-invariants");
  gt->add_option("--n", o.n)->required();
  gt->add_option("--lambda", o.lambda, "top row, comma separated")->delimiter(',')->required();
  gt->add_option("--m", o.m)->required();
  gt->add_flag("--enumerate", o.enumerate, "list every filling");
  gt->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("--level", o.level)->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*deg) return cmd_degree(o, out);
    if (*table) return cmd_table(o, out);
    if (*vol) return cmd_volume(o, out);
    if (*gt) return cmd_gt_count(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"stiefel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stiefel::cli
