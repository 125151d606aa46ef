#pragma once

#include <string>
#include <vector>

namespace lambda_lab {

/// Verdicts for one verification record. "partial" is reserved for claims
/// that are only proxy-verified at desk scale (the infinite-direction items);
/// it does not count as a failure.
enum class Verdict { pass, fail, partial };

const char* to_string(Verdict v);

/// One verified (or refuted) claim: a stable check id, the mathematical
/// statement it certifies, the concrete instance it ran on, and an optional
/// counterexample or note.
struct CheckRecord {
  std::string id;
  std::string claim;
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

/// An accumulating list of check records with deterministic ordering.
class CheckReport {
 public:
  void add(std::string id, std::string claim, std::string instance, bool pass,
           std::string detail = "");
  void add_partial(std::string id, std::string claim, std::string instance,
                   std::string detail = "");
  void add(CheckRecord record);
  void merge(CheckReport other);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;  // no fail records (partial allowed)
  int count(Verdict v) const;

  /// Sorts by (id, instance, claim) for byte-stable output.
  void sort();

 private:
  std::vector<CheckRecord> records_;
};

/// One record as a JSON object on a single line, keys sorted.
std::string to_json_line(const CheckRecord& record);

}  // namespace lambda_lab
