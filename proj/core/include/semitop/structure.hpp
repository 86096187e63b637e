#pragma once

// Structural analysis of finite semigroups: idempotents, ideals, the minimal
// ideal, regularity, aperiodicity, maximal subgroups, principal series and
// Rees quotients.

#include <vector>

#include "semitop/semigroup.hpp"

namespace semitop {

  struct IdealData {
    std::vector<Element> elements;  // sorted
    bool                 is_minimal = false;

    bool contains(Element a) const;
    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  struct MaximalSubgroupData {
    Element              idempotent = 0;
    std::vector<Element> elements;  // sorted, contains idempotent
    // table[i][j] indexes into `elements`.
    std::vector<std::vector<std::size_t>> table;

    std::size_t order() const noexcept {
      return elements.size();
    }
  };

  enum class SeriesFactor { simple, zero_simple, null };

  struct PrincipalSeries {
    // ideals[0] is the whole semigroup, ideals.back() the minimal ideal, and
    // each term is strictly contained in the previous one.
    std::vector<IdealData> ideals;
    // factors[j] describes ideals[j] / ideals[j + 1]; the last entry describes
    // the minimal ideal itself, which is always simple.
    std::vector<SeriesFactor> factors;
    // True when every consecutive pair was checked to admit no intermediate
    // ideal.  Only done for semigroups of order at most kCertifyLimit.
    bool certified = false;

    static constexpr std::size_t kCertifyLimit = 25;

    std::size_t length() const noexcept {
      return ideals.size();
    }
  };

  std::vector<Element> idempotents(FiniteSemigroup const& s);

  bool is_band(FiniteSemigroup const& s);

  // Smallest ideal containing `generators` (S^1 X S^1).
  std::vector<Element> ideal_closure(FiniteSemigroup const& s, std::vector<Element> generators);

  // Principal two-sided ideal S^1 a S^1.
  std::vector<Element> principal_ideal(FiniteSemigroup const& s, Element a);

  bool is_ideal(FiniteSemigroup const& s, std::vector<Element> const& subset);

  // The intersection of all ideals; computed as the principal ideal of the
  // element whose principal ideal is smallest, ties broken by least index.
  IdealData minimal_ideal(FiniteSemigroup const& s);

  bool is_rectangular_band(FiniteSemigroup const& s);

  // Checks the rectangular band identities on the elements of `ideal`, which
  // must be a subsemigroup.
  bool is_rectangular_band(FiniteSemigroup const& s, IdealData const& ideal);

  bool is_regular(FiniteSemigroup const& s);

  // Every maximal subgroup is trivial.
  bool is_aperiodic(FiniteSemigroup const& s);

  // s^k = s^(k+1) for all s, with k = |S|.  Equivalent to is_aperiodic.
  bool is_aperiodic_by_powers(FiniteSemigroup const& s);

  // Group of units of eSe.  Throws NotIdempotent.
  MaximalSubgroupData maximal_subgroup(FiniteSemigroup const& s, Element e);

  PrincipalSeries principal_series(FiniteSemigroup const& s);

  // Classes of the two-sided Green relation J, each sorted, listed in order of
  // their least element.
  std::vector<std::vector<Element>> j_classes(FiniteSemigroup const& s);

  // S / I with the class of I placed last as the zero.  Throws NotAnIdeal.
  FiniteSemigroup rees_quotient(FiniteSemigroup const& s, IdealData const& ideal);

  // The subsemigroup on `elements` (sorted), reindexed 0..k-1 in that order.
  // Throws Error if the set is not closed under multiplication.
  FiniteSemigroup restrict_to(FiniteSemigroup const& s, std::vector<Element> const& elements);

}  // namespace semitop
