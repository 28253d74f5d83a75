#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coopstore::cli {

inline constexpr const char* kReportSchema = "coopstore-report/1";

/// One pass/fail verdict. A report passes iff every check passes.
struct CheckRow {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Measured vs predicted secrecy capacity over all placements of one (l1, l2).
struct CapacityRow {
  unsigned l1 = 0;
  unsigned l2 = 0;
  std::size_t placements = 0;
  std::size_t measured_min = 0;
  std::size_t measured_max = 0;
  /// nullopt renders as "not-covered".
  std::optional<std::size_t> predicted;
  /// Predictions are not compared for unstable codes.
  bool measured_only = false;

  bool agree() const { return measured_only || (predicted && measured_min == *predicted && measured_max == *predicted); }
};

struct Timing {
  std::string phase;
  double millis = 0;
};

struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRow> checks;
  std::vector<CapacityRow> capacity;
  nlohmann::json placements = nlohmann::json::array();
  nlohmann::json lemmas = nlohmann::json::array();
  nlohmann::json attacks = nlohmann::json::array();
  nlohmann::json extra = nlohmann::json::object();
  std::vector<Timing> timings;
  /// Free-form lines printed before the check table.
  std::vector<std::string> log;

  void check(std::string name, bool pass, std::string detail = {});
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  nlohmann::json to_json() const;
  std::string to_text() const;
  /// Header l1,l2,placements,measured_min,measured_max,predicted,agree.
  std::string capacity_csv() const;
};

}  // namespace coopstore::cli
