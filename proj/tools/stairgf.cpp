#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stairgf/paperdata.hpp"
#include "stairgf/polygons.hpp"
#include "stairgf/special.hpp"
#include "stairgf/verify.hpp"

using namespace stairgf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int cmd_series(const std::string& name, bool list, int order, bool machine) {
  if (list || name.empty()) {
    for (const auto& e : named_catalog()) std::cout << e.name << "  " << e.description << "\n";
    return list ? 0 : kExitUsage;
  }
  NamedSeries s = build_named(name, order);
  LaurentSeries shown = s.series.truncated(order);
  if (machine) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["order"] = order;
    j["series"] = shown.to_machine();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << s.name << " = " << shown.to_string() << "\n";
  }
  return 0;
}

int cmd_check(const std::string& id, int order, bool machine, bool parallel) {
  std::vector<CheckReport> reports;
  if (id == "all")
    reports = run_all(order, parallel);
  else
    reports.push_back(run_check(id, order));
  int passed = 0;
  for (const auto& r : reports) {
    std::cout << (machine ? r.to_machine() : r.to_text()) << "\n";
    if (r.passed()) ++passed;
  }
  if (!machine && reports.size() > 1)
    std::cout << passed << "/" << reports.size() << " checks passed\n";
  return passed == static_cast<int>(reports.size()) ? 0 : kExitFail;
}

std::optional<std::string> fixture_for(const std::string& cls) {
  if (cls == "punctured") return "P_P_series";
  if (cls == "three-choice") return "P_T_series";
  return std::nullopt;
}

int cmd_enumerate(const std::string& cls, int max, const std::string& convention, bool machine) {
  EnumOptions opt;
  opt.parallel = true;
  CountTable t;
  LaurentSeries reference;
  if (cls == "staircase") {
    t = enumerate_staircase(max, opt);
    reference = build_named("P_S", max + 1).series;
  } else if (cls == "punctured") {
    t = enumerate_punctured(max, opt);
    reference = get_fixture(*fixture_for(cls)).series();
  } else {
    t = enumerate_three_choice(max, ThreeChoiceConvention::parse(convention), opt);
    reference = get_fixture(*fixture_for(cls)).series();
  }
  bool all_match = true;
  for (const auto& [n, count] : t) {
    std::string verdict;
    if (n < reference.trunc()) {
      bool ok = reference.coeff(n) == Rational(count);
      all_match = all_match && ok;
      verdict = ok ? "match" : "mismatch (expected " + to_string(reference.coeff(n)) + ")";
    }
    if (machine) {
      nlohmann::ordered_json j{{"n", n}, {"count", to_string(count)}};
      if (!verdict.empty()) j["verdict"] = verdict.substr(0, verdict.find(' '));
      std::cout << j.dump() << "\n";
    } else {
      std::cout << n << " " << to_string(count) << (verdict.empty() ? "" : "  " + verdict) << "\n";
    }
  }
  return all_match ? 0 : kExitFail;
}

int cmd_fixtures(bool list, const std::string& dump, bool verify) {
  if (verify) {
    auto parsed = parse_fixture_file(embedded_fixture_text());
    std::cout << parsed.size() << " fixtures, checksum and double-entry checks ok\n";
    return 0;
  }
  if (!dump.empty()) {
    std::cout << serialize(get_fixture(dump)) << "\n";
    return 0;
  }
  if (list) {
    for (const auto& f : all_fixtures()) std::cout << f.name << "  " << to_string(f.kind) << "  " << f.anchor << "\n";
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generating functions for staircase polygon families"};
  app.require_subcommand(1);

  std::string output = "text";
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };

  auto* series = app.add_subcommand("series", "print a named series");
  std::string series_name;
  bool series_list = false;
  int order = kDefaultCheckOrder;
  series->add_option("name", series_name, "catalog name");
  series->add_flag("--list", series_list, "list the catalog");
  series->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
  add_output(series);

  auto* check = app.add_subcommand("check", "run a check or all of them");
  std::string check_id;
  bool parallel = false;
  check->add_option("id", check_id, "check id or 'all'")->required();
  check->add_option("--order", order, "series order")->check(CLI::PositiveNumber);
  check->add_flag("--parallel", parallel, "run checks concurrently");
  add_output(check);

  auto* enumerate = app.add_subcommand("enumerate", "count polygons by half-perimeter");
  std::string cls, convention = "rooted";
  int max = 0;
  enumerate->add_option("class", cls)->required()->check(CLI::IsMember({"staircase", "punctured", "three-choice"}));
  enumerate->add_option("--max", max, "largest half-perimeter")->required();
  enumerate->add_option("--convention", convention, "three-choice counting convention");
  add_output(enumerate);

  auto* fixtures = app.add_subcommand("fixtures", "inspect the embedded fixtures");
  bool fx_list = false, fx_verify = false;
  std::string fx_dump;
  fixtures->add_flag("--list", fx_list);
  fixtures->add_option("--dump", fx_dump, "print one record");
  fixtures->add_flag("--verify", fx_verify, "re-parse and verify checksums");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const bool machine = output == "machine";
  try {
    if (*series) return cmd_series(series_name, series_list, order, machine);
    if (*check) return cmd_check(check_id, order, machine, parallel);
    if (*enumerate) return cmd_enumerate(cls, max, convention, machine);
    if (*fixtures) return cmd_fixtures(fx_list, fx_dump, fx_verify);
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
