#include "pihall/cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pihall/build.hpp"
#include "pihall/catalogue.hpp"
#include "pihall/checks.hpp"
#include "pihall/errors.hpp"
#include "pihall/expr.hpp"
#include "pihall/hall.hpp"
#include "pihall/invariants.hpp"
#include "pihall/report.hpp"
#include "pihall/structure.hpp"

namespace pihall {
namespace {

constexpr std::uint64_t kLargeCapThreshold = 10'000'000;

// Exit codes shared with the documentation.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitCounterexample = 3;

struct GroupArgs {
  std::string expr;
  std::string file;
  std::string pi_csv;
  std::string format = "text";
  std::uint64_t cap = kDefaultElementCap;
  bool allow_large_cap = false;
};

struct VerifyArgs {
  std::string suite;
  std::string group;
  int max_pi = 3;
  std::string j1_file;
  std::string format = "text";
  std::uint64_t cap = kDefaultElementCap;
  bool allow_large_cap = false;
};

struct GroupInput {
  std::string name;
  PermGroup group;
};

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

const char* yesno(bool b) { return b ? "true" : "false"; }

// Usage-level validation shared by the group commands; returns an exit
// code when the arguments are unusable.
std::optional<int> validate_group_args(const GroupArgs& a, bool& has_pi,
                                       PrimeSet& pi, std::ostream& err) {
  if (a.cap < 1) {
    err << "error: --cap must be at least 1\n";
    return kExitUsage;
  }
  if (a.cap > kLargeCapThreshold && !a.allow_large_cap) {
    err << "error: --cap above " << kLargeCapThreshold
        << " requires --allow-large-cap\n";
    return kExitUsage;
  }
  if (a.expr.empty() == a.file.empty()) {
    err << "error: provide exactly one of a group expression or --file\n";
    return kExitUsage;
  }
  has_pi = !a.pi_csv.empty();
  if (has_pi) {
    try {
      pi = PrimeSet::parse(a.pi_csv);
    } catch (const InvalidParameters& e) {
      err << "error: --pi: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return std::nullopt;
}

GroupInput load_group(const GroupArgs& a) {
  if (!a.file.empty()) {
    return {a.file, load_generators_file(a.file)};
  }
  const GroupExpr expr = parse_expr(a.expr);
  return {print_expr(expr), build_group(expr)};
}

int run_invariants(const GroupArgs& a, std::ostream& out, std::ostream& err) {
  bool has_pi = false;
  PrimeSet pi;
  if (const auto code = validate_group_args(a, has_pi, pi, err)) return *code;
  const GroupInput in = load_group(a);
  if (!has_pi) pi = PrimeSet(prime_divisors(in.group));

  const Integer order = in.group.order();
  const Integer order_pi = pi_part(order, pi);
  const std::uint64_t k = num_classes(in.group, a.cap);
  const std::uint64_t kp = k_pi(in.group, pi, a.cap);
  const Rational d = d_pi(in.group, pi, a.cap);
  const Rational pr = commuting_probability(in.group, a.cap);
  std::optional<Thresholds> t;
  std::optional<std::uint64_t> p;
  if (!pi.empty()) {
    p = pi.min();
    t = thresholds(*p);
  }
  const bool above_nilpotent = t.has_value() && d > t->nilpotent;
  const bool above_abelian = t.has_value() && d > t->abelian;

  if (a.format == "json") {
    nlohmann::json doc;
    doc["group"] = in.name;
    doc["order"] = order.get_str();
    doc["pi"] = pi.to_string();
    doc["order_pi"] = order_pi.get_str();
    doc["k"] = k;
    doc["k_pi"] = kp;
    doc["d_pi"] = d.str();
    doc["pr"] = pr.str();
    if (t.has_value()) {
      doc["p"] = *p;
      doc["threshold_nilpotent"] = t->nilpotent.str();
      doc["threshold_abelian"] = t->abelian.str();
    } else {
      doc["p"] = nullptr;
      doc["threshold_nilpotent"] = nullptr;
      doc["threshold_abelian"] = nullptr;
    }
    doc["d_pi_exceeds_nilpotent_threshold"] = above_nilpotent;
    doc["d_pi_exceeds_abelian_threshold"] = above_abelian;
    out << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "group,order,pi,order_pi,k,k_pi,d_pi,pr,p,threshold_nilpotent,"
           "threshold_abelian,d_pi_exceeds_nilpotent_threshold,"
           "d_pi_exceeds_abelian_threshold\n";
    out << csv_field(in.name) << ',' << order.get_str() << ','
        << csv_field(pi.to_string()) << ',' << order_pi.get_str() << ','
        << k << ',' << kp << ',' << d.str() << ',' << pr.str() << ','
        << (p ? std::to_string(*p) : "") << ','
        << (t ? t->nilpotent.str() : "") << ','
        << (t ? t->abelian.str() : "") << ',' << yesno(above_nilpotent)
        << ',' << yesno(above_abelian) << '\n';
  } else {
    out << "group: " << in.name << "\n";
    out << "order: " << order.get_str() << "\n";
    out << "pi: " << pi.to_string() << "\n";
    out << "order_pi: " << order_pi.get_str() << "\n";
    out << "k: " << k << "\n";
    out << "k_pi: " << kp << "\n";
    out << "d_pi: " << d.str() << "\n";
    out << "pr: " << pr.str() << "\n";
    if (t.has_value()) {
      out << "p: " << *p << "\n";
      out << "threshold_nilpotent: " << t->nilpotent.str() << "\n";
      out << "threshold_abelian: " << t->abelian.str() << "\n";
    } else {
      out << "p: none\n";
      out << "threshold_nilpotent: none\n";
      out << "threshold_abelian: none\n";
    }
    out << "d_pi_exceeds_nilpotent_threshold: " << yesno(above_nilpotent)
        << "\n";
    out << "d_pi_exceeds_abelian_threshold: " << yesno(above_abelian)
        << "\n";
  }
  return kExitOk;
}

int run_hall(const GroupArgs& a, std::ostream& out, std::ostream& err) {
  bool has_pi = false;
  PrimeSet pi;
  if (const auto code = validate_group_args(a, has_pi, pi, err)) return *code;
  const GroupInput in = load_group(a);
  if (!has_pi) pi = PrimeSet(prime_divisors(in.group));

  const HallSearch search = construct_nilpotent_hall(in.group, pi, a.cap);
  const bool nilpotent = search.status != HallStatus::none;
  const bool abelian = has_abelian_hall(in.group, pi, a.cap);
  std::optional<Integer> witness_order;
  std::optional<Integer> witness_derived;
  std::vector<std::string> witness_gens;
  if (search.subgroup.has_value()) {
    witness_order = search.subgroup->order();
    witness_derived = derived_subgroup(*search.subgroup).order();
    for (const Perm& x : search.subgroup->generators()) {
      witness_gens.push_back(x.cycle_string());
    }
  }

  if (a.format == "json") {
    nlohmann::json doc;
    doc["group"] = in.name;
    doc["pi"] = pi.to_string();
    doc["nilpotent_hall"] = nilpotent;
    doc["abelian_hall"] = abelian;
    if (witness_order.has_value()) {
      nlohmann::json w;
      w["order"] = witness_order->get_str();
      w["derived_order"] = witness_derived->get_str();
      w["generators"] = witness_gens;
      doc["witness"] = std::move(w);
    } else {
      doc["witness"] = nullptr;
    }
    out << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "group,pi,nilpotent_hall,abelian_hall,witness_order,"
           "witness_derived_order\n";
    out << csv_field(in.name) << ',' << csv_field(pi.to_string()) << ','
        << yesno(nilpotent) << ',' << yesno(abelian) << ','
        << (witness_order ? witness_order->get_str() : "") << ','
        << (witness_derived ? witness_derived->get_str() : "") << '\n';
  } else {
    out << "group: " << in.name << "\n";
    out << "pi: " << pi.to_string() << "\n";
    out << "nilpotent_hall: " << yesno(nilpotent) << "\n";
    out << "abelian_hall: " << yesno(abelian) << "\n";
    if (witness_order.has_value()) {
      out << "witness_order: " << witness_order->get_str() << "\n";
      out << "witness_derived_order: " << witness_derived->get_str() << "\n";
      out << "witness_generators:\n";
      for (const std::string& s : witness_gens) {
        out << "  " << s << "\n";
      }
    } else if (nilpotent) {
      out << "witness: none assembled\n";
    }
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  if (v.cap < 1) {
    err << "error: --cap must be at least 1\n";
    return kExitUsage;
  }
  if (v.cap > kLargeCapThreshold && !v.allow_large_cap) {
    err << "error: --cap above " << kLargeCapThreshold
        << " requires --allow-large-cap\n";
    return kExitUsage;
  }
  CheckOptions options;
  options.max_pi = v.max_pi;
  options.cap = v.cap;
  if (!v.group.empty()) options.group = v.group;
  if (!v.j1_file.empty()) options.j1_file = v.j1_file;
  const Report report = run_suite(v.suite, options);
  if (v.format == "json") {
    out << report.to_json();
  } else if (v.format == "csv") {
    out << report.to_csv();
  } else {
    out << report.to_text();
  }
  return report.has_counterexample() ? kExitCounterexample : kExitOk;
}

int run_catalogue(const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogueEntry& entry : catalogue()) {
      const PermGroup g = build_group(entry.name);
      nlohmann::json row;
      row["name"] = entry.name;
      row["order"] = g.order().get_str();
      row["degree"] = g.degree();
      row["tags"] = entry.tags;
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "name,order,degree,tags\n";
    for (const CatalogueEntry& entry : catalogue()) {
      const PermGroup g = build_group(entry.name);
      std::string tags;
      for (const std::string& tag : entry.tags) {
        if (!tags.empty()) tags += ';';
        tags += tag;
      }
      out << csv_field(entry.name) << ',' << g.order().get_str() << ','
          << g.degree() << ',' << csv_field(tags) << '\n';
    }
  } else {
    for (const CatalogueEntry& entry : catalogue()) {
      const PermGroup g = build_group(entry.name);
      out << entry.name << ": order " << g.order().get_str() << ", degree "
          << g.degree();
      if (!entry.tags.empty()) {
        out << ", tags:";
        for (const std::string& tag : entry.tags) out << ' ' << tag;
      }
      out << "\n";
    }
  }
  return kExitOk;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format: text, json, or csv")
      ->transform(CLI::IsMember({"text", "json", "csv"}))
      ->envname("PIHALL_FORMAT");
}

void add_group_options(CLI::App* cmd, GroupArgs& a) {
  cmd->add_option("expr", a.expr,
                  "group expression, e.g. \"Sym(4) x Cyclic(5)\"");
  cmd->add_option("--file", a.file, "generator file instead of an expression");
  cmd->add_option("--pi", a.pi_csv, "comma-separated primes, e.g. 3,5");
  add_format_option(cmd, a.format);
  cmd->add_option("--cap", a.cap, "largest element count to enumerate");
  cmd->add_flag("--allow-large-cap", a.allow_large_cap,
                "acknowledge a cap above 10000000");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact class-counting invariants and Hall subgroup decisions "
               "for finite permutation groups",
               "pihall"};
  app.require_subcommand(1);

  GroupArgs inv_args;
  CLI::App* inv = app.add_subcommand(
      "invariants", "order, class counts, d_pi, Pr, and thresholds");
  add_group_options(inv, inv_args);

  GroupArgs hall_args;
  CLI::App* hall = app.add_subcommand(
      "hall", "nilpotent and abelian Hall subgroup decisions");
  add_group_options(hall, hall_args);

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_args.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--group", verify_args.group,
                     "restrict to one group expression or label");
  verify->add_option("--max-pi", verify_args.max_pi,
                     "largest prime-set size in the sweep")
      ->check(CLI::PositiveNumber);
  verify->add_option("--j1-file", verify_args.j1_file,
                     "generator file for the optional degree-266 check");
  add_format_option(verify, verify_args.format);
  verify->add_option("--cap", verify_args.cap,
                     "largest element count to enumerate");
  verify->add_flag("--allow-large-cap", verify_args.allow_large_cap,
                   "acknowledge a cap above 10000000");

  std::string catalogue_format = "text";
  CLI::App* cat = app.add_subcommand(
      "catalogue", "list the built-in groups with orders and tags");
  add_format_option(cat, catalogue_format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv->parsed()) return run_invariants(inv_args, out, err);
    if (hall->parsed()) return run_hall(hall_args, out, err);
    if (verify->parsed()) return run_verify(verify_args, out, err);
    if (cat->parsed()) return run_catalogue(catalogue_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace pihall
