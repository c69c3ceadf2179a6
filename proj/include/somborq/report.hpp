#ifndef SOMBORQ_REPORT_HPP
#define SOMBORQ_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace somborq {

/// One checked instance of a claim, usually a single (n,k).
struct DetailRecord {
  int n = 0;
  int k = 0;                        // 0 when not applicable
  std::string item;                 // short label, e.g. "level 2" or "f(23,4)"
  std::string expected;             // decimal string, 12 significant digits
  std::string observed;
  double expected_value = 0.0;
  double observed_value = 0.0;
  double gap = 0.0;                 // observed - expected
  bool extremal_match = true;       // representative graphs matched prediction
  bool pass = false;
  std::vector<std::string> representatives;  // edge-list texts
  std::string note;
};

/// Outcome of one claim over a parameter range.
struct VerificationReport {
  std::string claim;                // e.g. "thm3.1"
  std::string description;          // what the claim checks, in words
  std::string params;               // e.g. "n=5..9, k=1..n-1"
  bool pass = false;
  bool advisory = false;            // reported but never fails a battery
  long long checked = 0;            // instances examined
  long long failures = 0;
  std::vector<DetailRecord> details;  // all failures plus highlight records
  bool details_truncated = false;     // passing records elided on big sweeps
  long long runtime_ms = 0;

  void finalize();                  // derive pass/failures from details + counters
};

/// Top-level document: tool identity, invocation echo, precision policy and
/// the reports. Serialisation round-trips losslessly.
struct ReportDocument {
  std::string tool = "somborq";
  std::string version;
  std::string invocation;
  double escalation_threshold = 0.0;
  double hard_equality_threshold = 0.0;
  double cluster_radius = 0.0;
  int extended_fraction_bits = 0;
  std::vector<VerificationReport> reports;

  bool all_pass() const;            // ignores advisory reports
};

ReportDocument make_report_document(const std::string& invocation);

nlohmann::json to_json(const DetailRecord& d);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ReportDocument& doc);

DetailRecord detail_from_json(const nlohmann::json& j);
VerificationReport report_from_json(const nlohmann::json& j);
ReportDocument document_from_json(const nlohmann::json& j);

std::string format_double_12(double v);

}  // namespace somborq

#endif
