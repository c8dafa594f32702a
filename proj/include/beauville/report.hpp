#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace beauville {

enum class Status { verified, refuted, unsupported };

const char* status_name(Status s);

/// One checked identity. A refuted report always carries a nonempty witness.
struct Report {
  std::string check;
  Status status = Status::verified;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> assumptions;
  std::string witness;
  std::string value;  // computed result worth printing, e.g. an obstruction polynomial
  double elapsed_ms = 0;

  bool ok() const { return status == Status::verified; }
  nlohmann::ordered_json to_json(bool with_timing) const;
};

/// Collects reports for one parameter set. Each report is timed from the
/// previous one (or from construction).
class ReportSink {
 public:
  explicit ReportSink(nlohmann::ordered_json params = nlohmann::ordered_json::object())
      : params_(std::move(params)), last_(std::chrono::steady_clock::now()) {}

  Report& expect(const std::string& check, bool holds, const std::string& witness_if_not = "");
  Report& unsupported(const std::string& check, const std::string& why);
  void assume(const std::string& axiom);  // attached to the most recent report

  const std::vector<Report>& reports() const { return reports_; }
  std::vector<Report> take() { return std::move(reports_); }
  bool all_ok() const;

 private:
  Report& push(Report r);

  nlohmann::ordered_json params_;
  std::vector<Report> reports_;
  std::chrono::steady_clock::time_point last_;
};

/// Sorted by check name, then by serialized params, for byte-stable output.
void sort_reports(std::vector<Report>& reports);

}  // namespace beauville
