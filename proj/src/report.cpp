#include "beauville/report.hpp"

#include <algorithm>

namespace beauville {

const char* status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::unsupported: return "unsupported";
  }
  return "?";
}

nlohmann::ordered_json Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = status_name(status);
  j["params"] = params;
  j["assumptions"] = assumptions;
  if (!value.empty()) j["value"] = value;
  if (!witness.empty()) j["witness"] = witness;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

Report& ReportSink::expect(const std::string& check, bool holds, const std::string& witness_if_not) {
  Report r;
  r.check = check;
  r.params = params_;
  r.status = holds ? Status::verified : Status::refuted;
  if (!holds) r.witness = witness_if_not.empty() ? "nonzero difference" : witness_if_not;
  return push(std::move(r));
}

Report& ReportSink::unsupported(const std::string& check, const std::string& why) {
  Report r;
  r.check = check;
  r.params = params_;
  r.status = Status::unsupported;
  r.witness = why;
  return push(std::move(r));
}

Report& ReportSink::push(Report r) {
  const auto now = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(now - last_).count();
  last_ = now;
  reports_.push_back(std::move(r));
  return reports_.back();
}

void ReportSink::assume(const std::string& axiom) {
  if (!reports_.empty()) reports_.back().assumptions.push_back(axiom);
}

bool ReportSink::all_ok() const {
  return std::all_of(reports_.begin(), reports_.end(), [](const Report& r) { return r.ok(); });
}

void sort_reports(std::vector<Report>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
}

}  // namespace beauville
