#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lambda_lab/product_ring.hpp"
#include "lambda_lab/report.hpp"
#include "lambda_lab/smith.hpp"

namespace lambda_lab {

/// A quotient Λ-algebra Λ/{h : Su(h) ⊆ S} presented by the killed support S;
/// canonically the product ring over the surviving coordinates X∖S, with the
/// coordinate projection as structure map.
class QuotAlgebra {
 public:
  QuotAlgebra(Ring base, Subset kill);
  static QuotAlgebra whole(const Ring& base);
  static QuotAlgebra surviving(const Ring& base, const Subset& survivors);
  /// R = ∏_{x∈Su(f)} K_x, i.e. Λ/(h) for the complementary indicator h.
  static QuotAlgebra over_support(const ProdElem& f);

  const Ring& base() const { return base_; }
  const Subset& kill() const { return kill_; }
  Subset survivors() const { return kill_.complement(); }
  /// The product ring over the survivors (possibly empty: the zero ring).
  const Ring& algebra_ring() const { return ring_; }
  std::uint64_t cardinality() const { return ring_->cardinality(); }

  /// Structure map Λ → A (coordinate projection).
  ProdElem project(const ProdElem& f) const;
  /// Zero-extension of an algebra element back to Λ (a set-level lift:
  /// project(lift(a)) = a).
  ProdElem lift(const ProdElem& a) const;

  bool same_base(const QuotAlgebra& o) const { return base_->same_as(*o.base_); }
  bool operator==(const QuotAlgebra& o) const { return same_base(o) && kill_ == o.kill_; }

 private:
  Ring base_;
  Subset kill_;
  Ring ring_;
};

/// A ⊗_Λ B realized structurally: the kill sets add, so the survivors
/// intersect.
QuotAlgebra tensor(const QuotAlgebra& a, const QuotAlgebra& b);

/// The canonical bilinear map A × B → A⊗B, (a,b) ↦ product of the lifts'
/// projections. Surjectivity of its additive span is the separatedness
/// criterion's content.
ProdElem tensor_bilinear(const QuotAlgebra& a, const QuotAlgebra& b, const ProdElem& va,
                         const ProdElem& vb);

/// A finite abelian group with an induced bilinear multiplication, presented
/// by invariant factors; the output of the first-principles tensor oracle.
/// Elements are residue tuples over the invariant factors > 1.
class AbstractRing {
 public:
  using Elt = std::vector<long long>;

  const std::vector<long long>& invariant_factors() const { return factors_; }
  std::uint64_t cardinality() const;

  Elt zero() const;
  const Elt& one() const { return one_; }
  Elt add(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  std::vector<Elt> elements() const;  // all ∏ d_i tuples

  /// Class of the pair generator (a, b), by ranks in the two factor algebras.
  Elt pair_class(std::uint64_t rank_a, std::uint64_t rank_b) const;

  /// For each basis class, an integer combination of pair generators
  /// representing it; used to transport the canonical bilinear map.
  const std::vector<std::vector<long long>>& basis_lift() const { return basis_lift_; }

 private:
  friend AbstractRing tensor_oracle(const QuotAlgebra&, const QuotAlgebra&, std::uint64_t);

  std::vector<long long> factors_;          // invariant factors > 1
  Elt one_;                                 // class of (1_A, 1_B)
  std::vector<Elt> generator_class_;        // class of each pair generator
  std::vector<std::vector<Elt>> basis_mul_; // products of the basis classes
  std::vector<std::vector<long long>> basis_lift_;
  std::uint64_t card_b_ = 0;
};

/// Computes A ⊗_Λ B from first principles: the free abelian group on all
/// |A|·|B| pairs modulo bilinearity and balancing relations (balancing over a
/// Z-module generating set of Λ), reduced by integer Smith normal form.
/// Requires |A|·|B| ≤ 256 (throws std::overflow_error beyond).
AbstractRing tensor_oracle(const QuotAlgebra& a, const QuotAlgebra& b,
                           std::uint64_t step_budget = 200'000'000);

/// Verifies that the structural tensor and the oracle are isomorphic rings by
/// building the canonical map and checking it is additive, multiplicative,
/// unital, and bijective. On failure, `why` (if given) receives a reason.
bool tensor_matches_oracle(const QuotAlgebra& a, const QuotAlgebra& b, std::string* why = nullptr,
                           std::uint64_t step_budget = 200'000'000);

/// A multiplicatively closed subset of Λ containing 1, as an explicit element
/// list.
class MultiplicativeSet {
 public:
  /// Validates closure and membership of 1; throws std::invalid_argument
  /// ("denominator set is not multiplicatively closed") otherwise.
  static MultiplicativeSet from_elements(const Ring& base, std::vector<ProdElem> elements);
  /// {f^n : n ≥ 0}, closed by iterating until the power cycle repeats.
  static MultiplicativeSet powers_of(const ProdElem& f);

  const Ring& base() const { return base_; }
  const std::vector<ProdElem>& elements() const { return elements_; }
  bool contains(const ProdElem& f) const;

 private:
  MultiplicativeSet(Ring base, std::vector<ProdElem> elements);

  Ring base_;
  std::vector<ProdElem> elements_;  // sorted by rank
};

/// A formal fraction f/g with g in the denominator set.
struct Fraction {
  ProdElem num;
  ProdElem den;

  std::string to_string() const { return num.to_string() + "/" + den.to_string(); }
};

/// T^{-1}Λ as formal fractions under the standard equivalence
/// f/g ~ f'/g' iff t(fg' - f'g) = 0 for some t in the denominator set;
/// equality is decided by brute-force witness search.
class FractionRing {
 public:
  FractionRing(Ring base, MultiplicativeSet dens);

  const Ring& base() const { return base_; }
  const MultiplicativeSet& denominators() const { return dens_; }

  /// The canonical map π: Λ → T^{-1}Λ, f ↦ f/1.
  Fraction from(const ProdElem& f) const;
  Fraction make(const ProdElem& num, const ProdElem& den) const;

  Fraction add(const Fraction& a, const Fraction& b) const;
  Fraction mul(const Fraction& a, const Fraction& b) const;
  Fraction neg(const Fraction& a) const;
  bool equal(const Fraction& a, const Fraction& b) const;
  bool is_zero(const Fraction& a) const;

  /// True iff 1/1 ~ 0/1 (e.g. whenever 0 is a denominator).
  bool is_zero_ring() const;

  /// All |Λ|·|dens| formal fractions (not classes).
  std::vector<Fraction> all_fractions() const;

 private:
  Ring base_;
  MultiplicativeSet dens_;
};

/// Λ localized at the given multiplicative set.
FractionRing localize(const Ring& base, const MultiplicativeSet& dens);

/// The isomorphism Λ_f ≅ ∏_{x∈Su(f)} K_x, verified exhaustively: the induced
/// map π'_f(g/f^n) = π(g)·π(f)^{-n} is surjective (targets lift through g/1)
/// and injective (kernel fractions are equivalent to 0), and a ring morphism.
struct LocalizationWitness {
  QuotAlgebra target;          // survivors Su(f)
  std::uint64_t fraction_count = 0;
  std::uint64_t class_count = 0;  // distinct fraction classes
  bool surjective = false;
  bool injective = false;
  bool ring_morphism = false;
  std::string detail;

  bool ok() const { return surjective && injective && ring_morphism; }
};

LocalizationWitness check_localization_at_element(const ProdElem& f);

/// The degenerate finite-index-set instance of inverting all cofinite-support
/// denominators: with X finite, every support is finite, so the
/// finite-support ideal is all of Λ, 0 lies in T, and both T^{-1}Λ and
/// Λ/𝔉(Λ) are the zero ring. Every maximal ideal meets T (it contains
/// 1 - Δ_x), and no maximal ideal contains 𝔉(Λ). The nondegenerate statement
/// lives in the eventually periodic model and is cross-referenced there.
CheckReport check_finite_localization(const Ring& base, std::uint64_t seed = 42, int trials = 200);

}  // namespace lambda_lab
