#pragma once

// Explicit semigroups and monoids: rectangular bands, cyclic groups, the
// Moore semigroups S_n and M_n = S_n^1, the suspension monoid J(S) and the
// wedge monoid of a pair of monoids.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "semitop/semigroup.hpp"
#include "semitop/structure.hpp"

namespace semitop {

  // A x B with (p, q)(p', q') = (p, q').  Element (p, q) has index p * b + q.
  FiniteSemigroup rectangular_band(std::size_t a, std::size_t b);

  // Z / n under addition; identity 0.
  FiniteSemigroup cyclic_group(std::size_t n);

  // Index bookkeeping for S_n = K_n + T_n and M_n = S_n^1.
  //
  // K_n = {x, y, 0..n-1} x {0..n-1} comes first, row-major, with the left
  // coordinate ordered x, y, 0, ..., n-1.  T_n = C_n x {s, t} follows in the
  // order (0,s), (0,t), (1,s), ...  The identity of M_n is the last element.
  struct MooreSemigroupLayout {
    enum class Letter : std::uint8_t { s = 0, t = 1 };

    // Left coordinate of a K_n element: 0 = x, 1 = y, 2 + l = the number l.
    static constexpr std::uint32_t kX = 0;
    static constexpr std::uint32_t kY = 1;

    std::uint32_t n = 0;

    static constexpr std::uint32_t numeral(std::uint32_t l) noexcept {
      return 2 + l;
    }

    std::size_t k_size() const noexcept {
      return static_cast<std::size_t>(n + 2) * n;
    }
    std::size_t t_size() const noexcept {
      return 2 * static_cast<std::size_t>(n);
    }
    std::size_t s_order() const noexcept {
      return k_size() + t_size();
    }

    Element k(std::uint32_t row, std::uint32_t col) const noexcept {
      return row * n + col;
    }
    Element t(std::uint32_t k_value, Letter z) const noexcept {
      return static_cast<Element>(k_size() + 2 * k_value + static_cast<std::uint32_t>(z));
    }
    Element identity() const noexcept {
      return static_cast<Element>(s_order());
    }

    bool in_k(Element e) const noexcept {
      return e < k_size();
    }
    bool in_t(Element e) const noexcept {
      return e >= k_size() && e < s_order();
    }
    // (row, col) of a K_n element.
    std::pair<std::uint32_t, std::uint32_t> k_coords(Element e) const noexcept {
      return {e / n, e % n};
    }
    // (k, letter) of a T_n element.
    std::pair<std::uint32_t, Letter> t_coords(Element e) const noexcept {
      auto const off = static_cast<std::uint32_t>(e - k_size());
      return {off / 2, static_cast<Letter>(off % 2)};
    }

    std::vector<Element> k_block() const;
    std::vector<Element> t_block() const;
  };

  struct MooreSemigroup {
    FiniteSemigroup      s;  // S_n
    FiniteSemigroup      m;  // M_n = S_n with an identity adjoined
    MooreSemigroupLayout layout;
  };

  // S_n and M_n for n >= 2, built from the seven product rules with all
  // arithmetic on layout coordinates modulo n.
  MooreSemigroup moore_semigroup(std::uint32_t n);

  // J(S) = S + K with K = {1,2} x S a rectangular band, s(i, s') = (i, s') and
  // (i, s')s = (i, s's).  S occupies indices 0..|S|-1 and (i, s) sits at
  // |S| + (i - 1)|S| + s.  Throws NotAMonoid.
  FiniteSemigroup suspension_monoid(FiniteSemigroup const& s);

  struct WedgeMonoid {
    FiniteSemigroup monoid;
    // from_m[m] is the index of (m, 1_N).
    std::vector<Element> from_m;
    // from_kn[(k, n)] is the index of (k, n) for k in K and any n in N,
    // including n = 1_N, which lands in the image of M.
    std::map<std::pair<Element, Element>, Element> from_kn;
    // Inverse: the (m, n) pair in M x N of each element.
    std::vector<std::pair<Element, Element>> coordinates;
    IdealData                                 k;  // minimal ideal of M
  };

  // The submonoid (M x {1}) + (K x N) of M x N, where K is the minimal ideal
  // of M.  Elements of M come first (in M's order), then K x (N \ {1}) with K
  // in increasing order and N in increasing order.  Throws NotAMonoid or
  // MinimalIdealNotRectangular.
  WedgeMonoid wedge_monoid(FiniteSemigroup const& m, FiniteSemigroup const& n);

}  // namespace semitop
