#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lambda_lab/product_ring.hpp"
#include "lambda_lab/report.hpp"

namespace lambda_lab {

/// Configuration of a verification run. All fields are optional in the JSON
/// document; the defaults below apply. The seed fully determines every
/// random sample, so a run is a pure function of (config, version).
struct SuiteConfig {
  std::vector<std::string> points = {"a", "b", "c"};
  std::vector<std::string> fields = {"2", "2", "2"};  // per-point field names
  /// Per-point custom modulus coefficient lists; empty entries use the stock
  /// modulus for the named field.
  std::vector<std::vector<int>> moduli;
  std::uint64_t seed = 42;
  std::vector<std::string> suites;  // empty = all
  int budget = 1000;                // per-suite case cap

  static const std::vector<std::string>& known_suites();

  /// Parses a JSON document; throws std::invalid_argument with a field
  /// diagnostic on malformed input.
  static SuiteConfig from_json(const std::string& text);
  static SuiteConfig from_file(const std::string& path);

  /// Canonical JSON echo (sorted keys, suites expanded).
  std::string to_json() const;

  Ring ring() const;
  std::vector<std::string> effective_suites() const;
};

struct SuiteReport {
  CheckReport checks;
  std::string config_echo;
  std::string version;

  bool ok() const { return checks.all_pass(); }
  /// JSON lines: one record per line, then one summary object; byte-stable
  /// for a fixed (config, version).
  void write_jsonl(std::ostream& out) const;
  std::string to_jsonl() const;
};

/// Runs the selected suites against the configured ring. Suites execute
/// concurrently; records are emitted in deterministic sorted order.
SuiteReport run_suite(const SuiteConfig& config);

/// The printed closure-counterexample trace for Λ′ = {f : Su(f) finite or
/// cofinite} over the given field: over F_2 it reports closure, over any
/// larger field it exhibits the violating pair.
std::string lambda_prime_demo(const FieldSpec* field);

}  // namespace lambda_lab
