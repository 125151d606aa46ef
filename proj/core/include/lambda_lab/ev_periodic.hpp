#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambda_lab/finite_field.hpp"

namespace lambda_lab {

/// Trichotomy of Su(f) for an eventually periodic sequence: the support is
/// finite iff the repeating block is all zeros, cofinite iff it has no zero,
/// and neither otherwise.
enum class SupportClass { finite, cofinite, neither };

const char* to_string(SupportClass c);

/// An eventually periodic sequence over one finite field K, modeling an
/// element of ∏_{n∈ℕ} K: a finite preperiod followed by a repeating block.
///
/// Values are held in canonical form: the repeating block is primitive (not a
/// repetition of a shorter block) and the preperiod is minimal (its last
/// entry differs from the value the periodic extension would take there).
/// Equality of canonical forms is equality of sequences.
class EvPeriodic {
 public:
  static constexpr int kMaxPeriod = 64;
  static constexpr int kMaxPreperiod = 256;

  /// Canonicalizes; period must be nonempty and within the caps.
  static EvPeriodic make(const FieldSpec* field, std::vector<FieldElem> pre,
                         std::vector<FieldElem> per);
  static EvPeriodic constant(const FieldElem& value);
  static EvPeriodic zero(const FieldSpec* field);
  static EvPeriodic one(const FieldSpec* field);
  /// The Kronecker delta Δ_n: 1 at index n, 0 elsewhere.
  static EvPeriodic delta(const FieldSpec* field, int n);
  /// Parses "pre;per" with comma-separated element indices, e.g. "0;2,1".
  static EvPeriodic parse(const FieldSpec* field, std::string_view text);

  const FieldSpec* field() const { return field_; }
  const std::vector<FieldElem>& preperiod() const { return pre_; }
  const std::vector<FieldElem>& period() const { return per_; }

  /// Value at index n (n may be far beyond the preperiod).
  FieldElem at(std::uint64_t n) const;

  EvPeriodic operator+(const EvPeriodic& o) const;
  EvPeriodic operator-(const EvPeriodic& o) const;
  EvPeriodic operator*(const EvPeriodic& o) const;
  EvPeriodic operator-() const;

  bool operator==(const EvPeriodic& o) const;
  bool operator!=(const EvPeriodic& o) const { return !(*this == o); }

  SupportClass support_class() const;
  bool in_lambda_prime() const { return support_class() != SupportClass::neither; }

  /// g*: pointwise inverse on the support, zero off it. 1 - g·g* always has
  /// finite support when Su(g) is cofinite.
  EvPeriodic pseudo_inverse() const;

  /// The canonical representative of this sequence modulo finite-support
  /// differences: empty preperiod and the repeating block rotated so that it
  /// is phased at index 0 (the sequence equal to this one beyond the
  /// preperiod). Two sequences are equal modulo finite support iff their
  /// canonical tails are identical.
  EvPeriodic canonical_tail() const;

  /// "pre;per" by element index, e.g. ";2,1" for a purely periodic sequence.
  std::string to_string() const;

 private:
  EvPeriodic(const FieldSpec* field, std::vector<FieldElem> pre, std::vector<FieldElem> per);

  EvPeriodic combine(const EvPeriodic& o, bool multiply) const;

  const FieldSpec* field_;
  std::vector<FieldElem> pre_;
  std::vector<FieldElem> per_;
};

/// True iff f - g has finite support.
bool mod_finite_equal(const EvPeriodic& f, const EvPeriodic& g);

/// ψ(f/g) = f·g* + 𝔉(Λ) as its canonical tail; the denominator must have
/// cofinite support (g ∈ T), otherwise std::invalid_argument is thrown.
EvPeriodic localize_fraction(const EvPeriodic& f, const EvPeriodic& g);

struct ClosureCounterexample {
  EvPeriodic f, g;  // both in Λ′ with f + g ∉ Λ′
};

struct ClosureReport {
  bool closed = true;
  std::uint64_t cases_checked = 0;
  std::optional<ClosureCounterexample> counterexample;
};

/// Tests whether Λ′ = {f : Su(f) finite or cofinite} is closed under
/// addition over the given field. Deterministic stage first: the alternating
/// pattern (1, periodic [-1,1]) and then all pure period pairs of length ≤ 4;
/// after that, `trials` seeded random pairs. Over F_2 the search finds
/// nothing; over any larger field it returns a counterexample.
ClosureReport lambda_prime_closure_test(const FieldSpec* field, int trials, std::uint64_t seed);

}  // namespace lambda_lab
