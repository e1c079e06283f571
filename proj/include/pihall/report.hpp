#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pihall/primes.hpp"

namespace pihall {

// Outcome of one check instance. A mismatch marks a spot where the exact
// computed value disagrees with a quoted reference value; it is
// informational and never fails a run.
enum class CheckStatus {
  verified,
  counterexample,
  skipped,
  paper_value_mismatch,
};

std::string to_string(CheckStatus status);

// One checked statement instance. A counterexample row carries everything
// needed to reproduce it: the group expression and the prime set.
struct CheckResult {
  std::string check_id;
  std::string group;
  std::optional<PrimeSet> pi;
  CheckStatus status = CheckStatus::verified;
  std::string lhs;
  std::string rhs;
  std::string detail;
  bool premise_fired = false;
};

struct ReportSummary {
  std::uint64_t total = 0;
  std::uint64_t verified = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t skipped = 0;
  std::uint64_t paper_value_mismatches = 0;
  std::uint64_t premises_fired = 0;
};

inline constexpr char kArtifactVersion[] = "0.1.0";
inline constexpr int kCatalogueVersion = 1;

struct Report {
  std::string suite;
  std::string artifact_version = kArtifactVersion;
  int catalogue_version = kCatalogueVersion;
  std::vector<CheckResult> results;

  // Sorts results into the canonical order (check family, group, pi,
  // check id) so identical inputs always serialize to identical bytes.
  void normalize();

  ReportSummary summary() const;
  bool has_counterexample() const;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace pihall
