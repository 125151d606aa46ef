#pragma once

#include <cstdint>
#include <vector>

namespace lambda_lab {

/// Result of the integer Smith normal form of a relation matrix whose rows
/// span a sublattice L of Z^n. `diagonal` holds the nonnegative diagonal of
/// U·M·V with d_1 | d_2 | ...; V and its inverse track the column basis
/// change, so for a row vector x in Z^n the coordinates z = x·V satisfy:
/// x ∈ L iff z_i ≡ 0 (mod d_i) for d_i > 0 and z_i = 0 for d_i = 0.
struct SmithResult {
  std::vector<long long> diagonal;            // length n (generator count)
  std::vector<std::vector<long long>> v;      // n×n unimodular
  std::vector<std::vector<long long>> v_inv;  // its inverse

  /// z = x·V.
  std::vector<long long> coordinates(const std::vector<long long>& x) const;
};

/// Naive elementary row/column reduction over Z; correctness over speed.
/// `step_budget` caps the elimination work and throws std::runtime_error
/// ("step budget exceeded") when exhausted, making long runs cancellable.
SmithResult smith_normal_form(std::vector<std::vector<long long>> rows, int cols,
                              std::uint64_t step_budget = 200'000'000);

}  // namespace lambda_lab
