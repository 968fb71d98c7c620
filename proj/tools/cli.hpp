#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "stiefel/degree.hpp"

namespace stiefel::cli {

using Json = nlohmann::ordered_json;

/// One command's output. Keys keep insertion order and every integer is a
/// decimal string, so printing is deterministic and lossless.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Json witnesses = Json::object();

  Json to_json() const;
  static OutputRecord from_json(const Json& j);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord degree_record(const DegreeResult& result, Method requested);
OutputRecord table_record(const std::vector<DegreeResult>& table, int max_n);

std::string table_markdown(const std::vector<DegreeResult>& table, int max_n);
std::string table_csv(const std::vector<DegreeResult>& table);

/// Exit status: 0 success, 1 domain or consistency failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stiefel::cli
