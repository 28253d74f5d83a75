#include "coopstore/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace coopstore::cli {

namespace {

std::string predicted_text(const CapacityRow& r) { return r.predicted ? std::to_string(*r.predicted) : "not-covered"; }

std::string agree_text(const CapacityRow& r) { return r.measured_only ? "measured-only" : (r.agree() ? "yes" : "NO"); }

}  // namespace

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back(CheckRow{std::move(name), pass, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRow& c) { return c.pass; }) &&
         std::all_of(capacity.begin(), capacity.end(), [](const CapacityRow& r) { return r.agree(); });
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["config"] = config;
  j["passed"] = passed();
  auto cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  auto cap = nlohmann::json::array();
  for (const auto& r : capacity) {
    nlohmann::json row = {{"l1", r.l1},
                          {"l2", r.l2},
                          {"placements", r.placements},
                          {"measured_min", r.measured_min},
                          {"measured_max", r.measured_max},
                          {"measured_only", r.measured_only},
                          {"agree", r.agree()}};
    if (r.predicted) {
      row["predicted"] = *r.predicted;
    } else {
      row["predicted"] = "not-covered";
    }
    cap.push_back(row);
  }
  j["capacity"] = cap;
  j["placements"] = placements;
  j["lemmas"] = lemmas;
  j["attacks"] = attacks;
  j["extra"] = extra;
  auto ts = nlohmann::json::array();
  for (const auto& t : timings) ts.push_back({{"phase", t.phase}, {"ms", t.millis}});
  j["timings"] = ts;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& line : log) os << line << '\n';
  if (!capacity.empty()) {
    os << "\n  l1  l2  placements  measured    predicted  agree\n";
    for (const auto& r : capacity) {
      std::string measured = std::to_string(r.measured_min);
      if (r.measured_max != r.measured_min) measured += ".." + std::to_string(r.measured_max);
      os << std::setw(4) << r.l1 << std::setw(4) << r.l2 << std::setw(12) << r.placements << std::setw(10) << measured
         << std::setw(13) << predicted_text(r) << "  " << agree_text(r) << '\n';
    }
  }
  if (!checks.empty()) {
    os << '\n';
    for (const auto& c : checks) {
      os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << '\n';
    }
  }
  os << '\n' << command << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string Report::capacity_csv() const {
  std::ostringstream os;
  os << "l1,l2,placements,measured_min,measured_max,predicted,agree\n";
  for (const auto& r : capacity) {
    os << r.l1 << ',' << r.l2 << ',' << r.placements << ',' << r.measured_min << ',' << r.measured_max << ','
       << predicted_text(r) << ',' << agree_text(r) << '\n';
  }
  return os.str();
}

}  // namespace coopstore::cli
