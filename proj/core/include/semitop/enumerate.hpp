#pragma once

// Brute-force enumeration of small semigroups, used as test corpora.

#include <vector>

#include "semitop/semigroup.hpp"

namespace semitop {

  // Every associative table on {0..order-1}, in lexicographic order of the
  // flattened table.  Feasible for order <= 3 (throws Error above that).
  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t order);

  // Every associative table on {0..order-1} in which order-1 is the identity.
  // Feasible for order <= 4 (throws Error above that).
  std::vector<FiniteSemigroup> enumerate_monoids(std::size_t order);

  // Lexicographically least relabelled table over all permutations.
  std::vector<Element> canonical_table(FiniteSemigroup const& s);

  // Keeps the first representative of each isomorphism class.
  std::vector<FiniteSemigroup> up_to_isomorphism(std::vector<FiniteSemigroup> const& all);

}  // namespace semitop
