#include "morreykit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

namespace morreykit {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ReportSet::append(const ReportSet& other) {
  reports_.insert(reports_.end(), other.reports_.begin(), other.reports_.end());
}

bool ReportSet::all_passed() const { return failures() == 0; }

std::size_t ReportSet::failures() const {
  return static_cast<std::size_t>(
      std::count_if(reports_.begin(), reports_.end(), [](const auto& r) { return !r.pass; }));
}

void ReportSet::sort() {
  std::stable_sort(reports_.begin(), reports_.end(), [](const auto& a, const auto& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.params.dump() < b.params.dump();
  });
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void ReportSet::write_csv(std::ostream& os) const {
  os << "check_id,params_json,lhs,rhs,constant_used,pass,witness_json\n";
  for (const auto& r : reports_) {
    os << r.check_id << ',' << csv_quote(r.params.dump()) << ',' << format_real(r.lhs) << ','
       << format_real(r.rhs) << ',' << format_real(r.constant) << ',' << (r.pass ? "true" : "false")
       << ',' << csv_quote(r.witness.dump()) << '\n';
  }
}

nlohmann::json ReportSet::summary() const {
  std::map<std::string, std::pair<int, int>> counts;
  for (const auto& r : reports_) {
    auto& c = counts[r.check_id];
    (r.pass ? c.first : c.second) += 1;
  }
  nlohmann::json suites = nlohmann::json::object();
  for (const auto& [id, c] : counts) suites[id] = {{"passed", c.first}, {"failed", c.second}};
  return {{"total", reports_.size()}, {"failed", failures()}, {"suites", suites}};
}

}  // namespace morreykit
