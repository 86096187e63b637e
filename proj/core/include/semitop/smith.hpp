#pragma once

// Smith normal form over the integers.
//
// Two routes are provided.  The sparse route (no transforms) runs pivoted
// elimination directly on the column lists with Markowitz-style pivot choice,
// preferring unit pivots; it works in checked 64-bit arithmetic and restarts
// in arbitrary precision if any intermediate value overflows.  The dense route
// keeps the unimodular transforms U, V (and V^-1) with U * A * V = D, always in
// arbitrary precision, and is meant for matrices of a few hundred rows.

#include <optional>
#include <vector>

#include "semitop/matrix.hpp"

namespace semitop {

  struct SnfTransforms {
    BigMatrix u;          // rows x rows
    BigMatrix v;          // cols x cols
    BigMatrix v_inverse;  // cols x cols
  };

  struct SnfResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // min(rows, cols) nonnegative entries, d_1 | d_2 | ..., zeros last.
    std::vector<BigInt>          diagonal;
    std::size_t                  rank = 0;
    std::optional<SnfTransforms> transforms;

    // Diagonal entries greater than one.
    std::vector<BigInt> torsion() const;
  };

  SnfResult smith_normal_form(SparseMatrix const& a, bool with_transforms = false);
  SnfResult smith_normal_form(BigMatrix const& a, bool with_transforms = false);

  // Rank over Q by fraction-free sparse elimination; skips the divisibility
  // work the full Smith form needs.
  std::size_t rational_rank(SparseMatrix const& a);

  // Invariant factors of the diagonal matrix with the given nonzero entries,
  // ascending under divisibility.
  std::vector<BigInt> invariant_factors(std::vector<BigInt> pivots);

  // Columns of V beyond the rank: a Z-basis of ker A.  Requires transforms.
  BigMatrix kernel_basis(SnfResult const& snf);

  // Coordinates of the columns of b in the kernel basis above.  Throws Error
  // if some column of b is not in ker A.
  BigMatrix kernel_coordinates(SnfResult const& snf, BigMatrix const& b);

}  // namespace semitop
