#include "pihall/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace pihall {
namespace {

// Families in the order the suites emit them; unknown ids sort last.
int family_rank(const std::string& check_id) {
  static const std::vector<std::string> kFamilies = {
      "main", "pr", "sylow", "dpi", "hall", "simple", "torus", "sharpness",
  };
  const auto dot = check_id.find('.');
  const std::string family = check_id.substr(0, dot);
  for (std::size_t i = 0; i < kFamilies.size(); ++i) {
    if (kFamilies[i] == family) return static_cast<int>(i);
  }
  return static_cast<int>(kFamilies.size());
}

// Empty pi sorts before any set; sets compare by size, then contents.
std::tuple<int, std::size_t, std::vector<std::uint64_t>> pi_key(
    const std::optional<PrimeSet>& pi) {
  if (!pi.has_value()) return {0, 0, {}};
  return {1, pi->size(), pi->primes()};
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::counterexample: return "counterexample";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::paper_value_mismatch: return "paper-value-mismatch";
  }
  return "unknown";
}

void Report::normalize() {
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return std::tuple(family_rank(a.check_id), a.group, pi_key(a.pi),
                                a.check_id, a.lhs, a.rhs, a.detail) <
                     std::tuple(family_rank(b.check_id), b.group, pi_key(b.pi),
                                b.check_id, b.lhs, b.rhs, b.detail);
            });
}

ReportSummary Report::summary() const {
  ReportSummary s;
  s.total = results.size();
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::verified: ++s.verified; break;
      case CheckStatus::counterexample: ++s.counterexamples; break;
      case CheckStatus::skipped: ++s.skipped; break;
      case CheckStatus::paper_value_mismatch: ++s.paper_value_mismatches; break;
    }
    if (r.premise_fired) ++s.premises_fired;
  }
  return s;
}

bool Report::has_counterexample() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::counterexample;
  });
}

std::string Report::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["artifact_version"] = artifact_version;
  doc["catalogue_version"] = catalogue_version;
  doc["results"] = nlohmann::json::array();
  for (const CheckResult& r : results) {
    nlohmann::json row;
    row["check_id"] = r.check_id;
    row["group"] = r.group;
    if (r.pi.has_value()) {
      row["pi"] = r.pi->to_string();
    } else {
      row["pi"] = nullptr;
    }
    row["status"] = to_string(r.status);
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["detail"] = r.detail;
    row["premise_fired"] = r.premise_fired;
    doc["results"].push_back(std::move(row));
  }
  const ReportSummary s = summary();
  doc["summary"] = {
      {"total", s.total},
      {"verified", s.verified},
      {"counterexamples", s.counterexamples},
      {"skipped", s.skipped},
      {"paper_value_mismatches", s.paper_value_mismatches},
      {"premises_fired", s.premises_fired},
  };
  return doc.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "check_id,group,pi,status,lhs,rhs,detail,premise_fired\n";
  for (const CheckResult& r : results) {
    out << csv_field(r.check_id) << ',' << csv_field(r.group) << ','
        << csv_field(r.pi ? r.pi->to_string() : "") << ','
        << to_string(r.status) << ',' << csv_field(r.lhs) << ','
        << csv_field(r.rhs) << ',' << csv_field(r.detail) << ','
        << (r.premise_fired ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "artifact_version: " << artifact_version << "\n";
  out << "catalogue_version: " << catalogue_version << "\n";
  out << "results:\n";
  for (const CheckResult& r : results) {
    out << "  [" << to_string(r.status) << "] " << r.check_id << ' '
        << r.group;
    if (r.pi.has_value()) out << " pi=" << r.pi->to_string();
    if (!r.lhs.empty()) out << " lhs=" << r.lhs;
    if (!r.rhs.empty()) out << " rhs=" << r.rhs;
    if (r.premise_fired) out << " premise=fired";
    if (!r.detail.empty()) out << " :: " << r.detail;
    out << "\n";
  }
  const ReportSummary s = summary();
  out << "summary: total=" << s.total << " verified=" << s.verified
      << " counterexamples=" << s.counterexamples << " skipped=" << s.skipped
      << " paper-value-mismatches=" << s.paper_value_mismatches
      << " premises-fired=" << s.premises_fired << "\n";
  return out.str();
}

}  // namespace pihall
