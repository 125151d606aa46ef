#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lambda_lab {

class FieldElem;

/// Exact arithmetic for one small finite field F_{p^k}, q = p^k <= 64.
///
/// Elements are residue polynomials over F_p reduced modulo a monic
/// irreducible modulus of degree k; element index i encodes the coefficient
/// vector as base-p digits (so 0 is the zero element and 1 the one element).
/// Specs are interned: get() with equal parameters returns the same pointer,
/// which makes spec equality a pointer comparison. All operations are table
/// driven and reentrant.
class FieldSpec {
 public:
  /// Interned spec for F_{p^k} with the built-in modulus (k > 1) or no
  /// modulus (k == 1). Throws std::invalid_argument for invalid p, k, or
  /// q > 64.
  static const FieldSpec* get(int p, int k = 1);
  /// Interned spec with an explicit monic irreducible modulus, given as a
  /// coefficient list c0..ck (ck = 1). Ignored when k == 1.
  static const FieldSpec* get(int p, int k, const std::vector<int>& modulus);
  /// Parses "p" or "p^k", e.g. "3" or "2^2".
  static const FieldSpec* parse(std::string_view text);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  /// The name used in configs: "p" or "p^k".
  std::string name() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem element(int index) const;
  FieldElem element(const std::vector<int>& coeffs) const;
  std::vector<FieldElem> elements() const;

  int add_index(int a, int b) const { return add_[a * q_ + b]; }
  int mul_index(int a, int b) const { return mul_[a * q_ + b]; }
  int neg_index(int a) const { return neg_[a]; }
  int inv_index(int a) const;

  /// True iff a^q = a for every element; holds in every finite field and
  /// exists as a self-test.
  bool frobenius_fixed() const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(int p, int k, std::vector<int> modulus);

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// An immutable element of a FieldSpec. Mixed-spec arithmetic throws
/// std::invalid_argument("field mismatch").
class FieldElem {
 public:
  FieldElem(const FieldSpec* spec, int index);

  const FieldSpec* spec() const { return spec_; }
  int index() const { return index_; }
  /// Length-k coefficient vector, entries in [0, p).
  std::vector<int> coeffs() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  /// Multiplicative inverse; throws std::domain_error("division by zero")
  /// on the zero element.
  FieldElem inverse() const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& o) const { return spec_ == o.spec_ && index_ == o.index_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  /// Order by element index within one spec; used for deterministic output.
  bool operator<(const FieldElem& o) const;

  /// "2" for prime fields, polynomial form like "t+1" for extensions.
  std::string to_string() const;

 private:
  void same_spec(const FieldElem& o) const;

  const FieldSpec* spec_;
  std::uint8_t index_;
};

}  // namespace lambda_lab
