#include "lambda_lab/suite.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lambda_lab/ev_periodic.hpp"
#include "lambda_lab/version.hpp"
#include "suite_checks.hpp"

namespace lambda_lab {

namespace {

const std::vector<std::string> kSuites = {"algebra",      "ideals",   "tensor",
                                          "localization", "spectrum", "scheme",
                                          "duality",      "ev_periodic"};

}  // namespace

const std::vector<std::string>& SuiteConfig::known_suites() { return kSuites; }

std::vector<std::string> SuiteConfig::effective_suites() const {
  if (suites.empty()) return kSuites;
  return suites;
}

SuiteConfig SuiteConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: document must be a JSON object");

  SuiteConfig c;
  c.fields.clear();
  if (doc.contains("points")) {
    if (!doc["points"].is_array()) throw std::invalid_argument("config: points must be an array");
    c.points.clear();
    for (const auto& p : doc["points"]) {
      if (!p.is_string()) throw std::invalid_argument("config: points must be strings");
      c.points.push_back(p.get<std::string>());
    }
    if (c.points.empty()) throw std::invalid_argument("config: points must be nonempty");
  }

  auto parse_field = [&](const nlohmann::json& f) -> std::pair<std::string, std::vector<int>> {
    if (f.is_string()) {
      const FieldSpec* spec = FieldSpec::parse(f.get<std::string>());
      return {spec->name(), {}};
    }
    if (f.is_object()) {
      if (!f.contains("p") || !f.contains("k") || !f.contains("modulus"))
        throw std::invalid_argument("config: custom field needs p, k and modulus");
      std::vector<int> modulus = f["modulus"].get<std::vector<int>>();
      const FieldSpec* spec = FieldSpec::get(f["p"].get<int>(), f["k"].get<int>(), modulus);
      return {spec->name(), spec->modulus()};
    }
    throw std::invalid_argument("config: field entries must be strings or objects");
  };

  if (doc.contains("fields")) {
    const auto& fs = doc["fields"];
    if (fs.is_array()) {
      if (fs.size() != c.points.size())
        throw std::invalid_argument("config: fields array must match points");
      for (const auto& f : fs) {
        auto [name, modulus] = parse_field(f);
        c.fields.push_back(name);
        c.moduli.push_back(modulus);
      }
    } else if (fs.is_object()) {
      for (const auto& p : c.points) {
        if (!fs.contains(p))
          throw std::invalid_argument("config: fields object is missing point " + p);
        auto [name, modulus] = parse_field(fs.at(p));
        c.fields.push_back(name);
        c.moduli.push_back(modulus);
      }
    } else {
      throw std::invalid_argument("config: fields must be an array or an object");
    }
  } else {
    c.fields.assign(c.points.size(), "2");
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw std::invalid_argument("config: seed must be an integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("suites")) {
    if (!doc["suites"].is_array()) throw std::invalid_argument("config: suites must be an array");
    for (const auto& s : doc["suites"]) {
      std::string name = s.get<std::string>();
      if (std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end())
        throw std::invalid_argument("config: unknown suite " + name);
      c.suites.push_back(name);
    }
  }
  if (doc.contains("budget")) {
    c.budget = doc["budget"].get<int>();
    if (c.budget <= 0) throw std::invalid_argument("config: budget must be positive");
  }
  // the ring must be constructible as configured
  c.ring();
  return c;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::string SuiteConfig::to_json() const {
  nlohmann::json j;
  j["budget"] = budget;
  j["fields"] = fields;
  j["points"] = points;
  j["seed"] = seed;
  j["suites"] = effective_suites();
  bool any_custom = false;
  nlohmann::json moduli_obj = nlohmann::json::object();
  for (size_t i = 0; i < moduli.size() && i < points.size(); ++i)
    if (!moduli[i].empty()) {
      any_custom = true;
      moduli_obj[points[i]] = moduli[i];
    }
  if (any_custom) j["moduli"] = moduli_obj;
  return j.dump();
}

Ring SuiteConfig::ring() const {
  if (points.size() != fields.size())
    throw std::invalid_argument("config: fields must match points");
  std::vector<const FieldSpec*> specs;
  for (size_t i = 0; i < fields.size(); ++i) {
    const FieldSpec* base = FieldSpec::parse(fields[i]);
    if (i < moduli.size() && !moduli[i].empty())
      base = FieldSpec::get(base->characteristic(), base->degree(), moduli[i]);
    specs.push_back(base);
  }
  return IndexSet::make(points, specs);
}

void SuiteReport::write_jsonl(std::ostream& out) const {
  nlohmann::json header;
  header["config"] = nlohmann::json::parse(config_echo);
  header["tool"] = "lambda-lab";
  header["version"] = version;
  out << header.dump() << "\n";
  for (const CheckRecord& r : checks.records()) out << to_json_line(r) << "\n";
  nlohmann::json summary;
  summary["fail"] = checks.count(Verdict::fail);
  summary["partial"] = checks.count(Verdict::partial);
  summary["pass"] = checks.count(Verdict::pass);
  summary["records"] = checks.records().size();
  summary["summary"] = true;
  out << summary.dump() << "\n";
}

std::string SuiteReport::to_jsonl() const {
  std::ostringstream out;
  write_jsonl(out);
  return out.str();
}

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<std::string> selected = config.effective_suites();
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<std::future<CheckReport>> futures;
  futures.reserve(selected.size());
  for (const std::string& name : selected)
    futures.push_back(std::async(std::launch::async,
                                 [name, &config] { return detail::run_one_suite(name, config); }));

  SuiteReport report;
  for (auto& f : futures) report.checks.merge(f.get());
  report.checks.sort();
  report.config_echo = config.to_json();
  report.version = kVersion;
  return report;
}

namespace {

std::string preview(const EvPeriodic& f, int terms = 8) {
  std::string out;
  for (int n = 0; n < terms; ++n) {
    if (n) out += ",";
    out += std::to_string(f.at(n).index());
  }
  return out + ",...";
}

}  // namespace

std::string lambda_prime_demo(const FieldSpec* field) {
  std::ostringstream out;
  out << "Λ = ∏_{n∈ℕ} K with K = F_" << field->name() << "\n";
  out << "Λ′ = {f ∈ Λ : Su(f) is finite or cofinite}\n";

  ClosureReport result = lambda_prime_closure_test(field, 10000, 42);
  if (result.closed) {
    out << "deterministic search over all period pairs of length ≤ 4 and " << 10000
        << " seeded random pairs: every f, g ∈ Λ′ had f + g ∈ Λ′\n";
    out << "closed under addition (no counterexample exists)";
    return out.str();
  }

  const EvPeriodic& f = result.counterexample->f;
  const EvPeriodic& g = result.counterexample->g;
  EvPeriodic sum = f + g;
  bool one_plus = f == EvPeriodic::one(field);
  std::string g_name = one_plus ? "f" : "g";
  std::string sum_name = one_plus ? "1+f" : "f+g";
  if (one_plus) {
    out << "take f with f_n alternating: f = (" << preview(g) << ")  [literal \"" << g.to_string()
        << "\"]\n";
    out << "Su(f): " << to_string(g.support_class()) << "\n";
  } else {
    out << "f = (" << preview(f) << ")  [literal \"" << f.to_string() << "\"]\n";
    out << "Su(f): " << to_string(f.support_class()) << "\n";
    out << "g = (" << preview(g) << ")  [literal \"" << g.to_string() << "\"]\n";
    out << "Su(g): " << to_string(g.support_class()) << "\n";
  }
  out << sum_name << " = (" << preview(sum) << ")  [literal \"" << sum.to_string() << "\"]\n";
  out << "Su(" << sum_name << "): neither finite nor cofinite\n";
  out << "so " << (one_plus ? "f" : "f and g") << " lie" << (one_plus ? "s" : "")
      << " in Λ′ but " << sum_name << " does not\n";
  out << "Λ′ is not a subring of Λ";
  return out.str();
}

}  // namespace lambda_lab
