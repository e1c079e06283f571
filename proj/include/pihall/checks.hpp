#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pihall/perm_group.hpp"
#include "pihall/report.hpp"

namespace pihall {

struct CheckOptions {
  // Largest prime-set size the sweep enumerates per group.
  int max_pi = 3;
  // Restrict suites to the group with this expression or label.
  std::optional<std::string> group;
  // Generator file for the optional degree-266 sporadic-group check;
  // without it that check reports skipped.
  std::optional<std::string> j1_file;
  std::uint64_t cap = kDefaultElementCap;
};

// Runs one verification suite and returns its normalized report.
// Suites: "sweep", "simple", "torus", "sharpness", and "all" which
// concatenates them.
Report run_suite(const std::string& suite, const CheckOptions& options = {});

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

}  // namespace pihall
