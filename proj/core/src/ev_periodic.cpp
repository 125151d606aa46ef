#include "lambda_lab/ev_periodic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lambda_lab {

const char* to_string(SupportClass c) {
  switch (c) {
    case SupportClass::finite: return "finite";
    case SupportClass::cofinite: return "cofinite";
    case SupportClass::neither: return "neither";
  }
  return "?";
}

EvPeriodic::EvPeriodic(const FieldSpec* field, std::vector<FieldElem> pre,
                       std::vector<FieldElem> per)
    : field_(field), pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("period must be nonempty");
  for (const auto& e : pre_)
    if (e.spec() != field_) throw std::invalid_argument("field mismatch");
  for (const auto& e : per_)
    if (e.spec() != field_) throw std::invalid_argument("field mismatch");

  // primitive period: shrink to the smallest divisor length that repeats
  int m = static_cast<int>(per_.size());
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < m && repeats; ++i) repeats = per_[i] == per_[i % d];
    if (repeats) {
      per_.resize(d);
      m = d;
      break;
    }
  }
  // minimal preperiod: absorb trailing entries equal to the periodic value,
  // rotating the block right by one for each absorbed entry
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

EvPeriodic EvPeriodic::make(const FieldSpec* field, std::vector<FieldElem> pre,
                            std::vector<FieldElem> per) {
  if (static_cast<int>(per.size()) > kMaxPeriod)
    throw std::overflow_error("period length exceeds cap 64");
  if (static_cast<int>(pre.size()) > kMaxPreperiod)
    throw std::overflow_error("preperiod length exceeds cap 256");
  return EvPeriodic(field, std::move(pre), std::move(per));
}

EvPeriodic EvPeriodic::constant(const FieldElem& value) {
  return make(value.spec(), {}, {value});
}

EvPeriodic EvPeriodic::zero(const FieldSpec* field) { return constant(field->zero()); }
EvPeriodic EvPeriodic::one(const FieldSpec* field) { return constant(field->one()); }

EvPeriodic EvPeriodic::delta(const FieldSpec* field, int n) {
  if (n < 0 || n >= kMaxPreperiod) throw std::invalid_argument("delta index out of range");
  std::vector<FieldElem> pre(n + 1, field->zero());
  pre[n] = field->one();
  return make(field, std::move(pre), {field->zero()});
}

EvPeriodic EvPeriodic::parse(const FieldSpec* field, std::string_view text) {
  size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("sequence literal must be \"pre;per\"");
  auto parse_list = [&](std::string_view part) {
    std::vector<FieldElem> out;
    size_t start = 0;
    while (start < part.size()) {
      size_t comma = part.find(',', start);
      if (comma == std::string_view::npos) comma = part.size();
      std::string token(part.substr(start, comma - start));
      bool digits = !token.empty() && token.size() <= 2 &&
                    std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!digits || std::stoi(token) >= field->order())
        throw std::invalid_argument("bad element \"" + token + "\" in sequence literal");
      out.push_back(field->element(std::stoi(token)));
      start = comma + 1;
    }
    return out;
  };
  auto per = parse_list(text.substr(semi + 1));
  if (per.empty()) throw std::invalid_argument("sequence literal needs a nonempty period");
  return make(field, parse_list(text.substr(0, semi)), std::move(per));
}

FieldElem EvPeriodic::at(std::uint64_t n) const {
  if (n < pre_.size()) return pre_[n];
  return per_[(n - pre_.size()) % per_.size()];
}

EvPeriodic EvPeriodic::combine(const EvPeriodic& o, bool multiply) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  std::uint64_t m = std::lcm(per_.size(), o.per_.size());
  if (m > kMaxPeriod) throw std::overflow_error("period length exceeds cap 64");
  std::uint64_t p = std::max(pre_.size(), o.pre_.size());
  std::vector<FieldElem> pre, per;
  pre.reserve(p);
  per.reserve(m);
  for (std::uint64_t n = 0; n < p; ++n)
    pre.push_back(multiply ? at(n) * o.at(n) : at(n) + o.at(n));
  for (std::uint64_t n = p; n < p + m; ++n)
    per.push_back(multiply ? at(n) * o.at(n) : at(n) + o.at(n));
  return EvPeriodic(field_, std::move(pre), std::move(per));
}

EvPeriodic EvPeriodic::operator+(const EvPeriodic& o) const { return combine(o, false); }
EvPeriodic EvPeriodic::operator*(const EvPeriodic& o) const { return combine(o, true); }
EvPeriodic EvPeriodic::operator-(const EvPeriodic& o) const { return *this + (-o); }

EvPeriodic EvPeriodic::operator-() const {
  std::vector<FieldElem> pre, per;
  for (const auto& e : pre_) pre.push_back(-e);
  for (const auto& e : per_) per.push_back(-e);
  return EvPeriodic(field_, std::move(pre), std::move(per));
}

bool EvPeriodic::operator==(const EvPeriodic& o) const {
  return field_ == o.field_ && pre_ == o.pre_ && per_ == o.per_;
}

SupportClass EvPeriodic::support_class() const {
  bool any_zero = false, any_nonzero = false;
  for (const auto& e : per_) (e.is_zero() ? any_zero : any_nonzero) = true;
  if (!any_nonzero) return SupportClass::finite;
  if (!any_zero) return SupportClass::cofinite;
  return SupportClass::neither;
}

EvPeriodic EvPeriodic::pseudo_inverse() const {
  std::vector<FieldElem> pre, per;
  for (const auto& e : pre_) pre.push_back(e.is_zero() ? e : e.inverse());
  for (const auto& e : per_) per.push_back(e.is_zero() ? e : e.inverse());
  return EvPeriodic(field_, std::move(pre), std::move(per));
}

EvPeriodic EvPeriodic::canonical_tail() const {
  // rotate the block so it is phased at absolute index 0: entry j of the
  // result is the value this sequence takes at all large n ≡ j (mod |per|)
  int m = static_cast<int>(per_.size());
  int shift = static_cast<int>(pre_.size()) % m;
  std::vector<FieldElem> per;
  per.reserve(m);
  for (int j = 0; j < m; ++j) per.push_back(per_[((j - shift) % m + m) % m]);
  return EvPeriodic(field_, {}, std::move(per));
}

std::string EvPeriodic::to_string() const {
  std::string out;
  for (size_t i = 0; i < pre_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pre_[i].index());
  }
  out += ";";
  for (size_t i = 0; i < per_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(per_[i].index());
  }
  return out;
}

bool mod_finite_equal(const EvPeriodic& f, const EvPeriodic& g) {
  return (f - g).support_class() == SupportClass::finite;
}

EvPeriodic localize_fraction(const EvPeriodic& f, const EvPeriodic& g) {
  if (g.support_class() != SupportClass::cofinite)
    throw std::invalid_argument("denominator support is not cofinite");
  return (f * g.pseudo_inverse()).canonical_tail();
}

namespace {

// all pure periods of the given length, digits in index order
bool next_digits(std::vector<int>& digits, int q) {
  int i = 0;
  int n = static_cast<int>(digits.size());
  while (i < n && ++digits[i] == q) digits[i++] = 0;
  return i < n;
}

EvPeriodic from_digits(const FieldSpec* field, const std::vector<int>& digits) {
  std::vector<FieldElem> per;
  per.reserve(digits.size());
  for (int d : digits) per.push_back(field->element(d));
  return EvPeriodic::make(field, {}, std::move(per));
}

}  // namespace

ClosureReport lambda_prime_closure_test(const FieldSpec* field, int trials, std::uint64_t seed) {
  ClosureReport report;
  auto consider = [&](const EvPeriodic& f, const EvPeriodic& g) {
    if (!f.in_lambda_prime() || !g.in_lambda_prime()) return false;
    ++report.cases_checked;
    if ((f + g).in_lambda_prime()) return false;
    report.closed = false;
    report.counterexample = ClosureCounterexample{f, g};
    return true;
  };

  // the alternating pattern first: 1 + (-1,1,-1,1,...) has support neither
  // finite nor cofinite whenever -1 ≠ 1
  EvPeriodic one = EvPeriodic::one(field);
  EvPeriodic alternating =
      EvPeriodic::make(field, {}, {-field->one(), field->one()});
  if (consider(one, alternating)) return report;

  // all pure period pairs of length ≤ 4
  for (int lf = 1; lf <= 4; ++lf) {
    std::vector<int> df(lf, 0);
    do {
      EvPeriodic f = from_digits(field, df);
      for (int lg = 1; lg <= 4; ++lg) {
        std::vector<int> dg(lg, 0);
        do {
          if (consider(f, from_digits(field, dg))) return report;
        } while (next_digits(dg, field->order()));
      }
    } while (next_digits(df, field->order()));
  }

  // seeded random preperiod+period pairs
  std::mt19937_64 rng(seed);
  auto random_seq = [&]() {
    std::uniform_int_distribution<int> len_pre(0, 4), len_per(1, 6),
        elem(0, field->order() - 1);
    std::vector<FieldElem> pre, per;
    int np = len_pre(rng), nq = len_per(rng);
    for (int i = 0; i < np; ++i) pre.push_back(field->element(elem(rng)));
    for (int i = 0; i < nq; ++i) per.push_back(field->element(elem(rng)));
    return EvPeriodic::make(field, std::move(pre), std::move(per));
  };
  for (int t = 0; t < trials; ++t)
    if (consider(random_seq(), random_seq())) return report;

  return report;
}

}  // namespace lambda_lab
