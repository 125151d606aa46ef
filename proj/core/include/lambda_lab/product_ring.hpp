#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambda_lab/finite_field.hpp"
#include "lambda_lab/subset.hpp"

namespace lambda_lab {

class ProdElem;
class IndexSet;

/// Shared immutable handle to an index set; two handles denote the same ring
/// when the pointee is identical or structurally equal (see IndexSet::same_as).
using Ring = std::shared_ptr<const IndexSet>;

/// An explicit finite index set X with one finite field per point; the ring
/// Λ = ∏_{x∈X} K_x lives over it. Top-level rings are nonempty; empty index
/// sets appear only as quotient codomains (the zero ring) via restricted().
class IndexSet : public std::enable_shared_from_this<IndexSet> {
 public:
  /// Builds a ring from (label, field string) pairs, e.g. {("a","2"),("b","3^2")}.
  static Ring make(const std::vector<std::pair<std::string, std::string>>& labeled_fields);
  static Ring make(std::vector<std::string> labels, std::vector<const FieldSpec*> fields);
  /// Constant-field ring Fun(X, K) over the given labels.
  static Ring constant(std::vector<std::string> labels, const FieldSpec* field);

  /// The subring over the kept positions. May be empty (the zero ring).
  Ring restricted(const Subset& keep) const;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int pos) const { return labels_[pos]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const FieldSpec* field(int pos) const { return fields_[pos]; }
  /// Position of a label, or -1.
  int position(std::string_view label) const;
  /// Position of a label; throws std::invalid_argument("unknown label ...").
  int require_position(std::string_view label) const;

  bool same_as(const IndexSet& other) const;

  Subset all_points() const { return Subset::all(size()); }
  Subset no_points() const { return Subset::none(size()); }
  /// Subset from labels like {"a","c"}.
  Subset subset_of_labels(const std::vector<std::string>& labels) const;
  std::string subset_to_string(const Subset& s) const;

  /// |Λ| = ∏ q_x; throws std::overflow_error above 2^62.
  std::uint64_t cardinality() const { return cardinality_; }

  ProdElem zero() const;
  ProdElem one() const;
  /// Kronecker delta: 1 at the given point, 0 elsewhere.
  ProdElem delta(int pos) const;
  ProdElem delta(std::string_view label) const;
  /// Indicator of a subset: 1 on S, 0 off S (an idempotent).
  ProdElem indicator(const Subset& s) const;

  /// Mixed-radix enumeration of all ring elements, rank in [0, cardinality()).
  ProdElem element_at(std::uint64_t rank) const;
  std::uint64_t rank_of(const ProdElem& f) const;
  ProdElem random_element(std::mt19937_64& rng) const;

  /// "a:2 b:3 c:2^2" — used in report instance strings.
  std::string describe() const;

 private:
  IndexSet(std::vector<std::string> labels, std::vector<const FieldSpec*> fields);

  std::vector<std::string> labels_;
  std::vector<const FieldSpec*> fields_;
  std::uint64_t cardinality_;
};

/// An element f = (f_x) of Λ. Immutable; arithmetic is coordinatewise and
/// mixed-ring arithmetic throws std::invalid_argument("ring mismatch").
class ProdElem {
 public:
  ProdElem(Ring ring, std::vector<FieldElem> coords);

  const Ring& ring() const { return ring_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const FieldElem& at(int pos) const { return coords_[pos]; }
  const FieldElem& at(std::string_view label) const;
  const std::vector<FieldElem>& coords() const { return coords_; }

  /// Su(f): the positions with nonzero coordinate.
  Subset support() const;

  ProdElem operator+(const ProdElem& o) const;
  ProdElem operator-(const ProdElem& o) const;
  ProdElem operator*(const ProdElem& o) const;
  ProdElem operator-() const;
  ProdElem pow(std::uint64_t e) const;

  /// f is invertible iff Su(f) = X.
  bool is_unit() const { return support().full(); }
  /// Coordinatewise inverse; throws std::domain_error unless is_unit().
  ProdElem inverse() const;
  /// Coordinatewise inverse-or-zero: g* with g*_x = g_x^{-1} on Su(g), else 0.
  ProdElem pseudo_inverse() const;

  bool operator==(const ProdElem& o) const;
  bool operator!=(const ProdElem& o) const { return !(*this == o); }

  /// "(1,0,t+1)".
  std::string to_string() const;

 private:
  void same_ring(const ProdElem& o) const;

  Ring ring_;
  std::vector<FieldElem> coords_;
};

/// True iff (f) = (g), i.e. Su(f) = Su(g).
bool ideal_equal(const ProdElem& f, const ProdElem& g);

/// For Su(h) ⊆ Su(f), the multiplier h' with h = h'·f
/// (h'_x = h_x f_x^{-1} on Su(h), else 0). Throws otherwise.
ProdElem division_witness(const ProdElem& h, const ProdElem& f);

/// An ideal of Λ presented by its support subset S: the set
/// {h ∈ Λ : Su(h) ⊆ S}. Over a finite index set every ideal has this form
/// (the enumeration oracle in the spectrum module cross-checks that).
class SupportIdeal {
 public:
  SupportIdeal(Ring ring, Subset support);

  /// (f) = {h : Su(h) ⊆ Su(f)}.
  static SupportIdeal principal(const ProdElem& f);
  /// 𝔪_x = {f : f_x = 0}, generated by 1 - Δ_x.
  static SupportIdeal maximal(const Ring& ring, int pos);
  static SupportIdeal maximal(const Ring& ring, std::string_view label);
  /// gen(f_1..f_n): support is the union of the generators' supports.
  static SupportIdeal generated_by(const std::vector<ProdElem>& gens);

  const Ring& ring() const { return ring_; }
  const Subset& support() const { return support_; }

  bool contains(const ProdElem& h) const;
  std::uint64_t cardinality() const;
  /// All members, enumerated; guarded by the cardinality overflow check.
  std::vector<ProdElem> members() const;

  bool is_proper() const { return !support_.full(); }
  bool is_zero() const { return support_.empty(); }

  /// Ideal sum and intersection; on supports these are union and intersection.
  SupportIdeal sum(const SupportIdeal& o) const;
  SupportIdeal intersect(const SupportIdeal& o) const;

  bool operator==(const SupportIdeal& o) const;
  bool operator!=(const SupportIdeal& o) const { return !(*this == o); }

 private:
  Ring ring_;
  Subset support_;
};

/// The canonical projection Λ → ∏_{x∈kept} K_x.
struct Projection {
  Ring source;
  Ring target;
  Subset kept;

  ProdElem apply(const ProdElem& f) const;
};

/// Λ/(f) realized as the coordinate projection onto X∖Su(f); the kernel of
/// the projection is exactly (f).
Projection quotient_by(const ProdElem& f);

/// The coordinate-partition isomorphism ∏_{Su(f)∪Su(g)} K_x ≅ R × R' for
/// disjoint supports; throws std::invalid_argument("supports overlap")
/// otherwise.
struct SplitWitness {
  Ring joint;  // over Su(f) ∪ Su(g)
  Ring left;   // over Su(f)
  Ring right;  // over Su(g)
  /// Which joint positions belong to the left factor (complement: right).
  Subset left_in_joint;

  std::pair<ProdElem, ProdElem> forward(const ProdElem& u) const;
  ProdElem backward(const ProdElem& a, const ProdElem& b) const;
};

SplitWitness split_disjoint(const ProdElem& f, const ProdElem& g);

}  // namespace lambda_lab
