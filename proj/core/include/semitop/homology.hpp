#pragma once

// Bar chain complexes of finite monoids and their integral homology.
//
// C_q is free on q-tuples of elements (non-identity elements in the
// normalized complex) and the boundary is the alternating sum of the face
// maps d_0 (drop the first entry), d_i (multiply entries i and i+1) and d_q
// (drop the last entry).  In the normalized complex a face containing the
// identity is zero.  C_0 is a single vertex.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semitop/matrix.hpp"
#include "semitop/semigroup.hpp"

namespace semitop {

  struct HomologyGroup {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors >= 2, each dividing the next

    // Normalizes torsion into invariant factors and drops units.
    static HomologyGroup make(std::size_t free_rank, std::vector<BigInt> torsion);

    bool is_zero() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    bool operator==(HomologyGroup const&) const = default;

    // "0", "Z", "Z^2 + Z/2", ...
    std::string to_string() const;
  };

  // Direct sum, in invariant-factor form.
  HomologyGroup direct_sum(HomologyGroup const& a, HomologyGroup const& b);

  nlohmann::json to_json(HomologyGroup const& h);

  struct ChainComplex {
    // dims[q] is the rank of C_q for q = 0..qmax.
    std::vector<std::size_t> dims;
    // boundaries[q - 1] is d_q : C_q -> C_{q-1}, a dims[q-1] x dims[q] matrix.
    std::vector<SparseMatrix> boundaries;

    std::size_t qmax() const noexcept {
      return dims.empty() ? 0 : dims.size() - 1;
    }
    SparseMatrix const& boundary(std::size_t q) const {
      return boundaries.at(q - 1);
    }
  };

  // Throws Error if shapes do not chain or some d_{q-1} d_q is nonzero.
  void check_chain_complex(ChainComplex const& c);

  struct BarComplexOptions {
    bool        normalized = true;
    std::size_t column_cap = 1'000'000;
  };

  // Builds C_0..C_qmax.  Normalized mode requires a monoid (NotAMonoid);
  // DegreeTooLarge if the rank of C_qmax exceeds the column cap.
  ChainComplex bar_complex(FiniteSemigroup const& s, std::size_t qmax, BarComplexOptions options = {});

  // H_q = ker d_q / im d_{q+1}.  The torsion is read off the elementary
  // divisors of d_{q+1}: since C_q / ker d_q embeds in C_{q-1} it is free, so
  // coker d_{q+1} = H_q + (free part).  Throws InsufficientDegrees when
  // q + 1 > qmax.
  HomologyGroup homology(ChainComplex const& c, std::size_t q);

  // The same group computed the long way: a kernel basis of d_q from a Smith
  // form with transforms, d_{q+1} rewritten in that basis, and the Smith form
  // of the result.  Dense; for cross-checks on small complexes.
  HomologyGroup homology_via_kernel_basis(ChainComplex const& c, std::size_t q);

  // Free rank of H_q from rational ranks only.
  std::size_t rational_betti(ChainComplex const& c, std::size_t q);

  // Called after each boundary matrix has been reduced.
  using BoundaryObserver = std::function<void(std::size_t q, SparseMatrix const& d, double seconds)>;

  // H_0..H_{qmax-1}, reducing each boundary matrix once.
  std::vector<HomologyGroup> homology_profile(ChainComplex const& c, BoundaryObserver const& observer = {});

  std::vector<HomologyGroup> homology_profile(FiniteSemigroup const& s,
                                              std::size_t            qmax,
                                              BarComplexOptions      options = {});

}  // namespace semitop
