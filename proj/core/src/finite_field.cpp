#include "lambda_lab/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lambda_lab {

namespace {

constexpr int kMaxOrder = 64;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, little-endian coefficients, no leading zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      int& c = a[shift + i];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Exhaustive factor search: no monic divisor of degree 1..k/2.
bool is_irreducible(const Poly& m, int p) {
  int k = static_cast<int>(m.size()) - 1;
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d) {
    // all monic polynomials of degree d: p^d candidates
    std::vector<int> digits(d, 0);
    while (true) {
      Poly g(digits.begin(), digits.end());
      g.push_back(1);
      if (poly_is_zero(poly_mod(m, g, p))) return false;
      int i = 0;
      while (i < d && ++digits[i] == p) digits[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Moduli fixed for the stock extensions; everything else is found by
// deterministic search over monic polynomials in index order.
const std::map<std::pair<int, int>, std::vector<int>> kStockModuli = {
    {{2, 2}, {1, 1, 1}},     // t^2 + t + 1
    {{2, 3}, {1, 1, 0, 1}},  // t^3 + t + 1
    {{3, 2}, {1, 0, 1}},     // t^2 + 1
    {{5, 2}, {2, 0, 1}},     // t^2 + 2
    {{3, 3}, {1, 2, 0, 1}},  // t^3 + 2t + 1
};

std::vector<int> default_modulus(int p, int k) {
  auto it = kStockModuli.find({p, k});
  if (it != kStockModuli.end()) return it->second;
  std::vector<int> digits(k, 0);
  while (true) {
    Poly m(digits.begin(), digits.end());
    m.push_back(1);
    if (is_irreducible(m, p)) return m;
    int i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) break;
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable for prime p
}

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  // index <-> coefficient vector: base-p digits, digit i = coefficient of t^i
  auto coeffs_of = [&](int idx) {
    Poly c(k_);
    for (int i = 0; i < k_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  };
  auto index_of = [&](const Poly& c) {
    int idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  Poly mod_poly(modulus_.begin(), modulus_.end());
  for (int a = 0; a < q_; ++a) {
    Poly ca = coeffs_of(a);
    Poly na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(index_of(na));
    for (int b = 0; b < q_; ++b) {
      Poly cb = coeffs_of(b);
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint8_t>(index_of(s));
      Poly prod = k_ == 1 ? Poly{(a * b) % p_} : poly_mod(poly_mul(ca, cb, p_), mod_poly, p_);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(index_of(prod));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
  for (int a = 1; a < q_; ++a)
    if (inv_[a] == 0) throw std::logic_error("field table construction failed");
}

const FieldSpec* FieldSpec::get(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime power ≤ 64");
  if (k < 1) throw std::invalid_argument("extension degree must be ≥ 1");
  double q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxOrder)
    throw std::invalid_argument(std::to_string(p) + "^" + std::to_string(k) +
                                " is not a prime power ≤ 64");
  return get(p, k, k == 1 ? std::vector<int>{} : default_modulus(p, k));
}

const FieldSpec* FieldSpec::get(int p, int k, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime power ≤ 64");
  if (k < 1) throw std::invalid_argument("extension degree must be ≥ 1");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument(std::to_string(p) + "^" + std::to_string(k) +
                                  " is not a prime power ≤ 64");
  }
  std::vector<int> mod = modulus;
  if (k == 1) {
    mod.clear();
  } else {
    if (static_cast<int>(mod.size()) != k + 1)
      throw std::invalid_argument("modulus must have degree k");
    for (int& c : mod) c = ((c % p) + p) % p;
    if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(Poly(mod.begin(), mod.end()), p))
      throw std::invalid_argument("modulus is not irreducible");
  }

  struct Key {
    int p, k;
    std::vector<int> mod;
    bool operator<(const Key& o) const {
      return std::tie(p, k, mod) < std::tie(o.p, o.k, o.mod);
    }
  };
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<FieldSpec>>* registry =
      new std::map<Key, std::unique_ptr<FieldSpec>>();
  std::lock_guard<std::mutex> lock(mu);
  Key key{p, k, mod};
  auto it = registry->find(key);
  if (it == registry->end())
    it = registry->emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, k, mod))).first;
  return it->second.get();
}

const FieldSpec* FieldSpec::parse(std::string_view text) {
  auto bad = [&]() {
    return std::invalid_argument(std::string(text) + " is not a prime power ≤ 64");
  };
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 3) throw bad();
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  size_t caret = text.find('^');
  try {
    if (caret == std::string_view::npos) return get(parse_int(text), 1);
    return get(parse_int(text.substr(0, caret)), parse_int(text.substr(caret + 1)));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string FieldSpec::name() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

FieldElem FieldSpec::zero() const { return FieldElem(this, 0); }
FieldElem FieldSpec::one() const { return FieldElem(this, 1); }

FieldElem FieldSpec::element(int index) const { return FieldElem(this, index); }

FieldElem FieldSpec::element(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw std::invalid_argument("too many coefficients");
  int idx = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    idx = idx * p_ + (((c % p_) + p_) % p_);
  }
  return FieldElem(this, idx);
}

std::vector<FieldElem> FieldSpec::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (int i = 0; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

int FieldSpec::inv_index(int a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return inv_[a];
}

bool FieldSpec::frobenius_fixed() const {
  for (int a = 0; a < q_; ++a) {
    int acc = a;
    for (int i = 1; i < q_; ++i) acc = mul_index(acc, a);
    if (acc != a) return false;
  }
  return true;
}

FieldElem::FieldElem(const FieldSpec* spec, int index) : spec_(spec) {
  if (index < 0 || index >= spec->order()) throw std::out_of_range("element index out of range");
  index_ = static_cast<std::uint8_t>(index);
}

std::vector<int> FieldElem::coeffs() const {
  std::vector<int> c(spec_->degree());
  int idx = index_;
  for (int i = 0; i < spec_->degree(); ++i) {
    c[i] = idx % spec_->characteristic();
    idx /= spec_->characteristic();
  }
  return c;
}

void FieldElem::same_spec(const FieldElem& o) const {
  if (spec_ != o.spec_) throw std::invalid_argument("field mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  same_spec(o);
  return FieldElem(spec_, spec_->add_index(index_, o.index_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  same_spec(o);
  return FieldElem(spec_, spec_->add_index(index_, spec_->neg_index(o.index_)));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  same_spec(o);
  return FieldElem(spec_, spec_->mul_index(index_, o.index_));
}

FieldElem FieldElem::operator-() const { return FieldElem(spec_, spec_->neg_index(index_)); }

FieldElem FieldElem::inverse() const { return FieldElem(spec_, spec_->inv_index(index_)); }

FieldElem FieldElem::pow(std::uint64_t e) const {
  int acc = 1, base = index_;
  while (e) {
    if (e & 1) acc = spec_->mul_index(acc, base);
    base = spec_->mul_index(base, base);
    e >>= 1;
  }
  return FieldElem(spec_, acc);
}

bool FieldElem::operator<(const FieldElem& o) const {
  same_spec(o);
  return index_ < o.index_;
}

std::string FieldElem::to_string() const {
  if (spec_->degree() == 1) return std::to_string(index_);
  if (index_ == 0) return "0";
  std::string out;
  auto c = coeffs();
  for (int i = spec_->degree() - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace lambda_lab
