#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace morreykit {

/// Outcome of one inequality check: lhs <= rhs with the constant that was used.
struct VerificationReport {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;
  bool pass = false;
  nlohmann::json witness = nlohmann::json::object();
  std::string note;
};

// Relative slack granted to floating-point comparisons of two sides that are
// mathematically ordered.
inline constexpr double kRoundingSlack = 1e-12;

inline bool leq_with_rounding(double lhs, double rhs) {
  return lhs <= rhs + kRoundingSlack * (rhs < 0 ? -rhs : rhs);
}

/// "%.17g" formatting used for every reported floating-point value.
std::string format_real(double v);

class ReportSet {
 public:
  void add(VerificationReport r) { reports_.push_back(std::move(r)); }
  void append(const ReportSet& other);
  const std::vector<VerificationReport>& reports() const { return reports_; }
  bool all_passed() const;
  std::size_t failures() const;

  // Orders reports by (check_id, params) so output is independent of
  // evaluation order.
  void sort();

  void write_csv(std::ostream& os) const;
  nlohmann::json summary() const;

 private:
  std::vector<VerificationReport> reports_;
};

}  // namespace morreykit
