#include "lambda_lab/report.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace lambda_lab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
  }
  return "?";
}

void CheckReport::add(std::string id, std::string claim, std::string instance, bool pass,
                      std::string detail) {
  records_.push_back(CheckRecord{std::move(id), std::move(claim), std::move(instance),
                                 pass ? Verdict::pass : Verdict::fail, std::move(detail)});
}

void CheckReport::add_partial(std::string id, std::string claim, std::string instance,
                              std::string detail) {
  records_.push_back(CheckRecord{std::move(id), std::move(claim), std::move(instance),
                                 Verdict::partial, std::move(detail)});
}

void CheckReport::add(CheckRecord record) { records_.push_back(std::move(record)); }

void CheckReport::merge(CheckReport other) {
  for (auto& r : other.records_) records_.push_back(std::move(r));
}

bool CheckReport::all_pass() const {
  return std::none_of(records_.begin(), records_.end(),
                      [](const CheckRecord& r) { return r.verdict == Verdict::fail; });
}

int CheckReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(records_.begin(), records_.end(),
                                        [&](const CheckRecord& r) { return r.verdict == v; }));
}

void CheckReport::sort() {
  std::sort(records_.begin(), records_.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.id, a.instance, a.claim) < std::tie(b.id, b.instance, b.claim);
  });
}

std::string to_json_line(const CheckRecord& record) {
  nlohmann::json j;
  j["check"] = record.id;
  j["claim"] = record.claim;
  j["instance"] = record.instance;
  j["verdict"] = to_string(record.verdict);
  if (!record.detail.empty()) j["detail"] = record.detail;
  return j.dump();
}

}  // namespace lambda_lab
