#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "pihall/report.hpp"

namespace pihall {
namespace {

CheckResult row(std::string id, std::string group,
                std::optional<PrimeSet> pi = std::nullopt,
                CheckStatus status = CheckStatus::verified) {
  CheckResult r;
  r.check_id = std::move(id);
  r.group = std::move(group);
  r.pi = std::move(pi);
  r.status = status;
  return r;
}

TEST_CASE("status names match the report vocabulary") {
  CHECK(to_string(CheckStatus::verified) == "verified");
  CHECK(to_string(CheckStatus::counterexample) == "counterexample");
  CHECK(to_string(CheckStatus::skipped) == "skipped");
  CHECK(to_string(CheckStatus::paper_value_mismatch) ==
        "paper-value-mismatch");
}

TEST_CASE("normalize orders rows by family, group, pi, and id") {
  Report report;
  report.suite = "test";
  report.results.push_back(row("sharpness.audit", "B"));
  report.results.push_back(row("pr.derived_bound", "B"));
  report.results.push_back(row("main.thresholds", "B", PrimeSet({3, 5})));
  report.results.push_back(row("main.thresholds", "B", PrimeSet({2})));
  report.results.push_back(row("main.thresholds", "B", PrimeSet({3})));
  report.results.push_back(row("main.thresholds", "A", PrimeSet({7})));
  report.results.push_back(row("dpi.subset_monotone", "B", PrimeSet({2, 3})));
  report.normalize();

  std::vector<std::string> ids;
  for (const CheckResult& r : report.results) {
    std::string key = r.check_id + " " + r.group;
    if (r.pi.has_value()) key += " " + r.pi->to_string();
    ids.push_back(key);
  }
  CHECK(ids == std::vector<std::string>{
                   "main.thresholds A {7}",
                   "main.thresholds B {2}",
                   "main.thresholds B {3}",
                   "main.thresholds B {3,5}",
                   "pr.derived_bound B",
                   "dpi.subset_monotone B {2,3}",
                   "sharpness.audit B",
               });
}

TEST_CASE("normalize puts a missing pi before any prime set") {
  Report report;
  report.results.push_back(row("main.thresholds", "G", PrimeSet({2})));
  report.results.push_back(row("main.thresholds", "G"));
  report.normalize();
  CHECK_FALSE(report.results[0].pi.has_value());
  CHECK(report.results[1].pi.has_value());
}

TEST_CASE("summary tallies statuses and premises") {
  Report report;
  report.results.push_back(row("main.a", "G"));
  report.results.push_back(
      row("main.b", "G", std::nullopt, CheckStatus::counterexample));
  report.results.push_back(
      row("main.c", "G", std::nullopt, CheckStatus::skipped));
  report.results.push_back(
      row("main.d", "G", std::nullopt, CheckStatus::paper_value_mismatch));
  report.results[0].premise_fired = true;
  report.results[3].premise_fired = true;

  const ReportSummary s = report.summary();
  CHECK(s.total == 4);
  CHECK(s.verified == 1);
  CHECK(s.counterexamples == 1);
  CHECK(s.skipped == 1);
  CHECK(s.paper_value_mismatches == 1);
  CHECK(s.premises_fired == 2);
  CHECK(report.has_counterexample());

  report.results[1].status = CheckStatus::verified;
  CHECK_FALSE(report.has_counterexample());
}

TEST_CASE("json output carries every field and the version stamps") {
  Report report;
  report.suite = "test";
  CheckResult r = row("main.thresholds", "Sym(3)", PrimeSet({2, 3}));
  r.lhs = "1/2";
  r.rhs = "5/8";
  r.detail = "example row";
  r.premise_fired = true;
  report.results.push_back(r);
  report.results.push_back(row("pr.derived_bound", "Sym(3)"));

  const nlohmann::json doc = nlohmann::json::parse(report.to_json());
  CHECK(doc["suite"] == "test");
  CHECK(doc["artifact_version"] == kArtifactVersion);
  CHECK(doc["catalogue_version"] == kCatalogueVersion);
  REQUIRE(doc["results"].size() == 2);
  const auto& first = doc["results"][0];
  CHECK(first["check_id"] == "main.thresholds");
  CHECK(first["group"] == "Sym(3)");
  CHECK(first["pi"] == "{2,3}");
  CHECK(first["status"] == "verified");
  CHECK(first["lhs"] == "1/2");
  CHECK(first["rhs"] == "5/8");
  CHECK(first["detail"] == "example row");
  CHECK(first["premise_fired"] == true);
  CHECK(doc["results"][1]["pi"].is_null());
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["verified"] == 2);
}

TEST_CASE("csv output quotes fields containing separators") {
  Report report;
  report.suite = "test";
  CheckResult r = row("main.thresholds", "Sym(4) x Cyclic(5)",
                      PrimeSet({2, 5}));
  r.detail = "says \"hello\", twice";
  report.results.push_back(r);

  const std::string csv = report.to_csv();
  const std::string expected =
      "check_id,group,pi,status,lhs,rhs,detail,premise_fired\n"
      "main.thresholds,Sym(4) x Cyclic(5),\"{2,5}\",verified,,,"
      "\"says \"\"hello\"\", twice\",false\n";
  CHECK(csv == expected);
}

TEST_CASE("text output renders one line per result plus a summary") {
  Report report;
  report.suite = "test";
  CheckResult r = row("main.thresholds", "Sym(3)", PrimeSet({3}));
  r.lhs = "2/3";
  r.rhs = "1/3 | 11/27";
  r.detail = "all good";
  r.premise_fired = true;
  report.results.push_back(r);

  const std::string text = report.to_text();
  CHECK(text ==
        "suite: test\n"
        "artifact_version: 0.1.0\n"
        "catalogue_version: 1\n"
        "results:\n"
        "  [verified] main.thresholds Sym(3) pi={3} lhs=2/3 rhs=1/3 | 11/27"
        " premise=fired :: all good\n"
        "summary: total=1 verified=1 counterexamples=0 skipped=0"
        " paper-value-mismatches=0 premises-fired=1\n");
}

TEST_CASE("serialization is stable under input order") {
  Report a;
  a.suite = "test";
  a.results.push_back(row("main.x", "G1", PrimeSet({2})));
  a.results.push_back(row("pr.y", "G2"));
  a.results.push_back(row("main.x", "G0", PrimeSet({5})));

  Report b = a;
  std::swap(b.results[0], b.results[2]);
  a.normalize();
  b.normalize();
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_text() == b.to_text());
}

}  // namespace
}  // namespace pihall
