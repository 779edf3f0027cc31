// Check records, JSON reports and the regression replay.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace kwj {

inline constexpr const char* kReportSchema = "kwj-report/1";

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Skipped;
  nlohmann::json details;
};

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();

  void add(const std::string& name, bool ok, nlohmann::json details = nlohmann::json::object());
  void skip(const std::string& name, nlohmann::json details = nlohmann::json::object());
  bool all_pass() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json() const;
  // Exit code 0 when every check passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }
};

// Fixture replay for every module plus the property suite (checks named "property.*").
Report regression_report();
Report property_suite();

}  // namespace kwj
