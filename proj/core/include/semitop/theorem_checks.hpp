#pragma once

// Numerical checks of homology statements about the constructions: the
// projective resolution of Z over M_n and the complex obtained from it, the
// degree shift of the suspension monoid, additivity under the wedge monoid,
// and vanishing of high-degree homology for regular monoids.

#include <cstdint>
#include <vector>

#include "semitop/constructions.hpp"
#include "semitop/homology.hpp"
#include "semitop/report.hpp"

namespace semitop {

  // The resolution
  //   0 <- Z <-eps- ZM(x,0) <-phi- ZM <-psi- ZM(0,t) + ZK <-xi- ZK <- 0
  // of the trivial module over M = M_n, realized over Z.  Each map is a
  // matrix whose column j is the image of basis element j of its source.
  struct ResolutionData {
    std::uint32_t  n = 0;
    MooreSemigroup moore;

    std::vector<Element> p0;        // orbit M(x,0), increasing
    std::vector<Element> p1;        // all of M
    std::vector<Element> p2_orbit;  // orbit M(0,t), increasing; then K_n follows
    std::vector<Element> p3;        // K_n

    SparseMatrix epsilon;  // 1 x |p0|
    SparseMatrix phi;      // |p0| x |p1|
    SparseMatrix psi;      // |p1| x (|p2_orbit| + |K|)
    SparseMatrix xi;       // (|p2_orbit| + |K|) x |K|

    std::size_t p2_size() const noexcept {
      return p2_orbit.size() + p3.size();
    }
  };

  // Left orbit M a, read off the table.
  std::vector<Element> left_orbit(FiniteSemigroup const& m, Element a);

  ResolutionData build_resolution(std::uint32_t n);

  // Checks, over Z:
  //   (a) consecutive composites vanish,
  //   (b) rank in + rank out = dimension at each interior term,
  //   (c) the image of each incoming map is saturated in the kernel of the
  //       outgoing one (coordinates in a Smith kernel basis have unit
  //       elementary divisors and full rank),
  //   (d) xi is injective,
  //   (e) eps is onto Z.
  // The terms are free abelian on the listed bases, so exactness of these
  // integer matrices is exactness of the module maps.  Throws
  // ExactnessFailure on the first failed check.
  std::vector<CheckReport> verify_exactness(ResolutionData const& r);

  // Row-vector convention (matrices act by right multiplication).  After
  // tensoring, ZM(x,0) and ZM become Z, ZM(0,t) + ZK becomes Z^{n+1} with
  // the M(0,t) summand first and then the summands M(x,i) for i = 0..n-1,
  // and ZK becomes Z^n in the order of i.  No further permutation is needed.
  struct TensoredComplex {
    std::uint32_t                          n   = 0;
    std::int64_t                           phi = 0;  // the map Z <- Z
    std::vector<std::vector<std::int64_t>> a;        // (n+1) x 1
    std::vector<std::vector<std::int64_t>> b;        // n x (n+1)
    std::vector<std::vector<std::int64_t>> b_prime;  // b with its last row replaced by the row sum
  };

  // Collapses each orbit summand to one generator.  Throws Error if the
  // coefficients are not constant along an orbit.
  TensoredComplex tensored_complex(ResolutionData const& r);

  // The matrices as displayed for the theorem, built directly from n.
  TensoredComplex expected_tensored_complex(std::uint32_t n);

  // 0 <- Z <-0- Z <-A- Z^{n+1} <-B- Z^n <- 0 as a chain complex in degrees
  // 0..4 (C_4 = 0).
  ChainComplex chain_complex(TensoredComplex const& t);

  // H_0..H_3 of the tensored complex.
  std::vector<HomologyGroup> homology_from_resolution(std::uint32_t n);

  // Resolution, exactness, tensored matrices and homology (Z, 0, Z/n, 0).
  SuiteReport check_moore(std::uint32_t n);

  // H_1(BJ(S)) = 0 and H_q(BJ(S)) = H_{q-1}(BS) for 2 <= q <= qmax - 1.
  SuiteReport check_suspension_shift(FiniteSemigroup const& s, std::size_t qmax, BarComplexOptions options = {});

  // Reduced H_q of the wedge monoid equals the sum of those of M and N for
  // q <= qmax - 1.
  SuiteReport check_wedge_additivity(FiniteSemigroup const& m,
                                     FiniteSemigroup const& n,
                                     std::size_t            qmax,
                                     BarComplexOptions      options = {});

  // For aperiodic regular S: H_q = 0 on [q_lo, q_hi], which must lie above
  // 3c - 2 for c the number of J-classes.  For other regular S: the rational
  // Betti numbers vanish on the range.  Throws NotRegular, or
  // InfeasibleDegree if the column cap blocks degree q_hi + 1.
  SuiteReport check_regular_vanishing(FiniteSemigroup const& s,
                                      std::size_t            q_lo,
                                      std::size_t            q_hi,
                                      BarComplexOptions      options = {});

  // Reduced homology: H_0 loses one copy of Z.
  HomologyGroup reduced(HomologyGroup h, std::size_t q);

  std::string profile_to_string(std::vector<HomologyGroup> const& profile);

}  // namespace semitop
