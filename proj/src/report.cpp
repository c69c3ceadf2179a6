#include "somborq/report.hpp"

#include <cstdio>

#include "somborq/precision.hpp"

namespace somborq {

using nlohmann::json;

std::string format_double_12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void VerificationReport::finalize() {
  failures = 0;
  for (const auto& d : details)
    if (!d.pass) ++failures;
  pass = failures == 0;
}

bool ReportDocument::all_pass() const {
  for (const auto& r : reports)
    if (!r.advisory && !r.pass) return false;
  return true;
}

ReportDocument make_report_document(const std::string& invocation) {
  ReportDocument doc;
  doc.version = "1.0.0";
  doc.invocation = invocation;
  doc.escalation_threshold = precision::kEscalation;
  doc.hard_equality_threshold = precision::kHardEquality;
  doc.cluster_radius = precision::kClusterRadius;
  doc.extended_fraction_bits = precision::kFractionBits;
  return doc;
}

json to_json(const DetailRecord& d) {
  return json{{"n", d.n},
              {"k", d.k},
              {"item", d.item},
              {"expected", d.expected},
              {"observed", d.observed},
              {"expected_value", d.expected_value},
              {"observed_value", d.observed_value},
              {"gap", d.gap},
              {"extremal_match", d.extremal_match},
              {"pass", d.pass},
              {"representatives", d.representatives},
              {"note", d.note}};
}

json to_json(const VerificationReport& r) {
  json details = json::array();
  for (const auto& d : r.details) details.push_back(to_json(d));
  return json{{"claim", r.claim},
              {"description", r.description},
              {"params", r.params},
              {"status", r.pass ? "pass" : "fail"},
              {"advisory", r.advisory},
              {"checked", r.checked},
              {"failures", r.failures},
              {"details", details},
              {"details_truncated", r.details_truncated},
              {"runtime_ms", r.runtime_ms}};
}

json to_json(const ReportDocument& doc) {
  json reports = json::array();
  for (const auto& r : doc.reports) reports.push_back(to_json(r));
  return json{{"tool", doc.tool},
              {"version", doc.version},
              {"invocation", doc.invocation},
              {"precision",
               {{"escalation_threshold", doc.escalation_threshold},
                {"hard_equality_threshold", doc.hard_equality_threshold},
                {"cluster_radius", doc.cluster_radius},
                {"extended_fraction_bits", doc.extended_fraction_bits}}},
              {"reports", reports}};
}

DetailRecord detail_from_json(const json& j) {
  DetailRecord d;
  d.n = j.at("n").get<int>();
  d.k = j.at("k").get<int>();
  d.item = j.at("item").get<std::string>();
  d.expected = j.at("expected").get<std::string>();
  d.observed = j.at("observed").get<std::string>();
  d.expected_value = j.at("expected_value").get<double>();
  d.observed_value = j.at("observed_value").get<double>();
  d.gap = j.at("gap").get<double>();
  d.extremal_match = j.at("extremal_match").get<bool>();
  d.pass = j.at("pass").get<bool>();
  d.representatives = j.at("representatives").get<std::vector<std::string>>();
  d.note = j.at("note").get<std::string>();
  return d;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.params = j.at("params").get<std::string>();
  r.pass = j.at("status").get<std::string>() == "pass";
  r.advisory = j.at("advisory").get<bool>();
  r.checked = j.at("checked").get<long long>();
  r.failures = j.at("failures").get<long long>();
  for (const auto& d : j.at("details")) r.details.push_back(detail_from_json(d));
  r.details_truncated = j.at("details_truncated").get<bool>();
  r.runtime_ms = j.at("runtime_ms").get<long long>();
  return r;
}

ReportDocument document_from_json(const json& j) {
  ReportDocument doc;
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  doc.invocation = j.at("invocation").get<std::string>();
  const auto& p = j.at("precision");
  doc.escalation_threshold = p.at("escalation_threshold").get<double>();
  doc.hard_equality_threshold = p.at("hard_equality_threshold").get<double>();
  doc.cluster_radius = p.at("cluster_radius").get<double>();
  doc.extended_fraction_bits = p.at("extended_fraction_bits").get<int>();
  for (const auto& r : j.at("reports")) doc.reports.push_back(report_from_json(r));
  return doc;
}

}  // namespace somborq
