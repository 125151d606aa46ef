// lambda-lab: verification front end for products of fields, the power-set
// Boolean ring and the discrete scheme structure they carry.
//
// Subcommands:
//   suite   run the configured verification suites, emit a JSON-lines report
//   spec    print the spectrum table of a configured ring
//   scheme  run the sheaf/separatedness/affineness/duality checks
//   remark  print the Λ′ closure counterexample trace

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lambda_lab/product_ring.hpp"
#include "lambda_lab/scheme_functor.hpp"
#include "lambda_lab/spectrum.hpp"
#include "lambda_lab/suite.hpp"
#include "lambda_lab/version.hpp"

namespace {

using namespace lambda_lab;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(token);
  return out;
}

SuiteConfig config_from_flags(const std::string& points_flag, const std::string& fields_flag) {
  SuiteConfig config;
  if (!points_flag.empty()) {
    config.points = split_commas(points_flag);
    config.fields.assign(config.points.size(), "2");
  }
  if (!fields_flag.empty()) {
    config.fields = split_commas(fields_flag);
    if (config.fields.size() != config.points.size())
      throw std::invalid_argument("--fields must list one field per point");
  }
  config.ring();  // validate
  return config;
}

int apply_env_budget(SuiteConfig& config) {
  if (const char* env = std::getenv("LAMBDA_LAB_BUDGET")) {
    try {
      config.budget = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("LAMBDA_LAB_BUDGET must be an integer");
    }
    if (config.budget <= 0) throw std::invalid_argument("LAMBDA_LAB_BUDGET must be positive");
  }
  return config.budget;
}

int emit_report(const SuiteReport& report, const std::string& path) {
  if (path.empty()) {
    report.write_jsonl(std::cout);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << path << "\n";
      return 2;
    }
    report.write_jsonl(out);
  }
  return report.ok() ? 0 : 1;
}

int run_suite_command(const std::string& config_path, bool seed_set, std::uint64_t seed,
                      const std::string& report_path) {
  SuiteConfig config =
      config_path.empty() ? SuiteConfig{} : SuiteConfig::from_file(config_path);
  if (seed_set) config.seed = seed;
  apply_env_budget(config);
  return emit_report(run_suite(config), report_path);
}

int run_spec_command(const std::string& points_flag, const std::string& fields_flag) {
  SuiteConfig config = config_from_flags(points_flag, fields_flag);
  Ring ring = config.ring();

  size_t label_width = 5, gen_width = 16;
  std::vector<std::string> gens;
  for (int x = 0; x < ring->size(); ++x) {
    gens.push_back((ring->one() - ring->delta(x)).to_string());
    label_width = std::max(label_width, ring->label(x).size());
    gen_width = std::max(gen_width, gens.back().size());
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  std::cout << pad("point", label_width) << pad("generator 1-Δ_x", gen_width)
            << "residue field\n";
  for (int x = 0; x < ring->size(); ++x) {
    ResidueFieldWitness w = residue_field_at(ring, x);
    std::cout << pad(ring->label(x), label_width) << pad(gens[x], gen_width) << "F_"
              << ring->field(x)->name() << (w.ok() ? "" : "  (verification FAILED)") << "\n";
  }
  std::cout << ring->size() << " maximal ideals; Spec Λ is discrete and homeomorphic to X\n";
  return 0;
}

int run_scheme_command(const std::string& points_flag, const std::string& fields_flag,
                       const std::string& check, const std::string& report_path) {
  SuiteConfig config = config_from_flags(points_flag, fields_flag);
  Ring ring = config.ring();

  CheckReport checks;
  if (check == "all" || check == "sheaf") checks.merge(check_sheaf(ring));
  if (check == "all" || check == "separated") checks.merge(check_separated(ring));
  if (check == "all" || check == "affine") checks.merge(check_affine_iff_finite(ring));
  if (check == "all" || check == "duality") {
    std::vector<const FieldSpec*> fields = {FieldSpec::get(2), FieldSpec::get(3)};
    checks.merge(duality_suite_all(3, fields));
  }
  checks.sort();

  SuiteReport report;
  report.checks = std::move(checks);
  report.config_echo = config.to_json();
  report.version = kVersion;
  return emit_report(report, report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification kit for products of fields and the schemes they carry"};
  app.set_version_flag("--version", std::string("lambda-lab ") + lambda_lab::kVersion);
  app.require_subcommand(1);

  auto* suite_cmd = app.add_subcommand("suite", "run the verification suites");
  std::string config_path, report_path;
  std::uint64_t seed = 0;
  suite_cmd->add_option("--config", config_path, "JSON config file (defaults apply if omitted)");
  auto* seed_opt = suite_cmd->add_option("--seed", seed, "override the config seed");
  suite_cmd->add_option("--report", report_path, "write the JSON-lines report to this path");

  auto* spec_cmd = app.add_subcommand("spec", "print the spectrum table of a ring");
  std::string points_flag, fields_flag;
  spec_cmd->add_option("--points", points_flag, "comma-separated point labels");
  spec_cmd->add_option("--fields", fields_flag, "comma-separated fields, e.g. 2,3,2^2");

  auto* scheme_cmd = app.add_subcommand("scheme", "run the scheme checks");
  std::string scheme_points, scheme_fields, scheme_check = "all", scheme_report;
  scheme_cmd->add_option("--points", scheme_points, "comma-separated point labels");
  scheme_cmd->add_option("--fields", scheme_fields, "comma-separated fields");
  scheme_cmd->add_option("--check", scheme_check, "sheaf|separated|affine|duality|all")
      ->check(CLI::IsMember({"sheaf", "separated", "affine", "duality", "all"}));
  scheme_cmd->add_option("--report", scheme_report, "write the JSON-lines report to this path");

  auto* remark_cmd = app.add_subcommand("remark", "print the Λ′ closure counterexample trace");
  std::string remark_field = "3";
  remark_cmd->add_option("--field", remark_field, "field to search over (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*suite_cmd) return run_suite_command(config_path, seed_opt->count() > 0, seed, report_path);
    if (*spec_cmd) return run_spec_command(points_flag, fields_flag);
    if (*scheme_cmd)
      return run_scheme_command(scheme_points, scheme_fields, scheme_check, scheme_report);
    if (*remark_cmd) {
      std::cout << lambda_lab::lambda_prime_demo(lambda_lab::FieldSpec::parse(remark_field))
                << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
