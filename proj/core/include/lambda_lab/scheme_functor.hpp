#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lambda_lab/finite_field.hpp"
#include "lambda_lab/point_map.hpp"
#include "lambda_lab/product_ring.hpp"
#include "lambda_lab/report.hpp"

namespace lambda_lab {

/// The structure sheaf on the discrete space X: U ↦ ∏_{x∈U} K_x with the
/// coordinate projections as restrictions. Sections are materialized lazily,
/// one open at a time; the full presheaf is never stored.
class SheafedSet {
 public:
  explicit SheafedSet(Ring base) : base_(std::move(base)) {}

  const Ring& base() const { return base_; }
  Ring sections(const Subset& u) const { return base_->restricted(u); }
  /// Restriction O(from) → O(to) for to ⊆ from.
  ProdElem restrict(const ProdElem& s, const Subset& from, const Subset& to) const;

 private:
  Ring base_;
};

/// Presheaf and sheaf axioms on the discrete topology: identity and unique
/// gluing over every cover of every open (exhaustive for |X| ≤ 4; throws
/// beyond).
CheckReport check_sheaf(const Ring& base);

/// The morphism (η, η#) into the prime spectrum: η(x) = 𝔪_x is a bijection
/// onto the oracle's primes and a homeomorphism on basic opens
/// (η^{-1}(D(f)) = Su(f), and D(f) ⊆ D(g) iff Su(f) ⊆ Su(g)); each
/// comparison ψ_{D(f)}: Λ_f → O(Su(f)) is a verified ring isomorphism and
/// commutes with restrictions.
struct SchemeMorphismWitness {
  bool points_bijective = false;
  bool basic_opens_match = false;
  bool containment_iff = false;
  bool comparisons_iso = false;
  bool squares_commute = false;
  CheckReport report;

  bool ok() const {
    return points_bijective && basic_opens_match && containment_iff && comparisons_iso &&
           squares_commute;
  }
};

SchemeMorphismWitness eta_morphism(const Ring& base);

/// The separatedness criterion on every pair of opens: the canonical map
/// O(U) ⊗_{O(X)} O(V) → O(U∩V), s⊗t ↦ (s|)(t|), is surjective. Verified
/// structurally (the tensor's surviving coordinates are exactly U∩V) and
/// semantically (the additive closure of all products of restrictions is the
/// whole target), and the two paths must agree.
CheckReport check_separated(const Ring& base);

/// Affineness of the finite instance: η is an isomorphism onto Spec Λ, the
/// singleton cover witnesses quasi-compactness minimally (|X| members), and
/// the stalk at each point collapses to K_x. The infinite ("only if")
/// direction is recorded as a partial proxy.
CheckReport check_affine_iff_finite(const Ring& base);

/// Fun(f): Fun(Y,K) → Fun(X,K), g ↦ g∘f, together with the scheme morphism
/// it induces (f# over U is Fun of the restricted map f^{-1}(U) → U).
struct FunMorphism {
  PointMap map;            // f: X → Y
  const FieldSpec* field;  // K
  Ring domain;             // Fun(Y, K)
  Ring codomain;           // Fun(X, K)

  ProdElem apply(const ProdElem& g) const;
};

FunMorphism fun_functor(const PointMap& f, const FieldSpec* k);

/// The contraction/duality facts for one map f: X → Y:
/// Fun(f)*(𝔪_x) = 𝔪_{f(x)}, injective(f) ⇔ surjective(Fun(f)),
/// surjective(f) ⇔ injective(Fun(f)).
CheckReport duality_suite(const PointMap& f, const FieldSpec* k);

/// Functor laws for Fun(-, K) and 𝒫(-) over all maps between label sets of
/// size ≤ max_size, plus the naturality of A ↦ χ_A; duality in both
/// directions over the same maps.
CheckReport duality_suite_all(int max_size, const std::vector<const FieldSpec*>& fields);

}  // namespace lambda_lab
