#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lambda_lab/product_ring.hpp"
#include "lambda_lab/report.hpp"

namespace lambda_lab {

/// Every ideal of a finite Λ, found without assuming anything about their
/// shape: by full subset enumeration for |Λ| ≤ 16 and by generator-closure
/// search above (up to |Λ| ≤ 4096). Each listed ideal is verified closed
/// under addition and under multiplication by arbitrary ring elements.
struct IdealOracleResult {
  Ring base;
  /// Each ideal as a sorted list of element ranks; the zero ideal is first.
  std::vector<std::vector<std::uint64_t>> ideals;
  std::vector<int> primes;    // indices into `ideals`
  std::vector<int> maximals;  // indices into `ideals`

  bool contains(int ideal, std::uint64_t rank) const;
  /// Index of the ideal equal to the given member set, or -1.
  int find(const std::vector<std::uint64_t>& sorted_ranks) const;
  /// Index of the ideal with exactly the members of the given support ideal.
  int find(const SupportIdeal& ideal) const;
  /// Support subset of an ideal: union of the members' supports.
  Subset support_of(int ideal) const;
  /// True iff the ideal equals {h : Su(h) ⊆ S} for its support S.
  bool is_support_ideal(int ideal) const;
  /// True iff the ideal equals its radical (no outside element has a power
  /// inside).
  bool is_radical(int ideal) const;
  /// Longest strictly increasing chain in the inclusion order of `ideals`.
  int longest_chain() const;
};

IdealOracleResult enumerate_ideals(const Ring& base);

/// D(f): the basic Zariski-open of primes not containing f. Over finite Λ
/// its points are exactly {𝔪_x : x ∈ Su(f)}.
struct BasicOpen {
  ProdElem f;
  Subset points;  // = Su(f)
};

BasicOpen basic_open(const ProdElem& f);

/// The finite-index-set equivalences, verified on a concrete ring:
/// ⋂𝔪_x = 0, oracle maximals = primes = {𝔪_x}, ascending and descending
/// chains bounded by |X|+1, Σ Δ_x = 1. The converse directions for infinite
/// X are not desk-verifiable and are reported as partial with proxies.
CheckReport finiteness_suite(const Ring& base);

/// The quotient of a ring by a maximal support ideal, built by coset
/// enumeration and compared against the expected residue field.
struct ResidueFieldWitness {
  const FieldSpec* residue_field = nullptr;
  std::uint64_t coset_count = 0;
  bool canonical_map_bijective = false;
  bool canonical_map_morphism = false;
  bool frobenius_identity = false;  // f = f^q for all ring elements
  std::string detail;

  bool ok() const {
    return canonical_map_bijective && canonical_map_morphism && frobenius_identity;
  }
};

/// For a constant-field ring Fun(X, F_q) and a maximal ideal M, verifies that
/// R/M has exactly q elements and that F_q → R → R/M is a ring isomorphism.
/// Throws std::invalid_argument("ideal is not maximal") unless M has the
/// maximal shape, and requires all factors equal.
ResidueFieldWitness residue_field(const Ring& base, const SupportIdeal& m);

/// The same quotient construction at one point of a mixed-field ring:
/// R/𝔪_x ≅ K_x.
ResidueFieldWitness residue_field_at(const Ring& base, int pos);

}  // namespace lambda_lab
