#include "semitop/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semitop {

  namespace {
    // Odometer over the free cells of a table; fixed cells keep their value.
    template <typename Visit>
    void for_each_table(std::size_t                order,
                        std::vector<Element>       table,
                        std::vector<bool> const&   free,
                        Visit&&                    visit) {
      std::vector<std::size_t> cells;
      for (std::size_t c = 0; c < table.size(); ++c) {
        if (free[c]) {
          cells.push_back(c);
          table[c] = 0;
        }
      }
      while (true) {
        visit(table);
        std::size_t i = cells.size();
        while (i > 0) {
          auto& v = table[cells[i - 1]];
          if (++v < order) {
            break;
          }
          v = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
      }
    }
  }  // namespace

  std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t order) {
    if (order == 0 || order > 3) {
      throw Error("enumerate_semigroups supports orders 1..3");
    }
    std::vector<FiniteSemigroup> out;
    std::vector<bool>            free(order * order, true);
    for_each_table(order, std::vector<Element>(order * order), free, [&](auto const& t) {
      if (!find_nonassociative_triple(order, t)) {
        out.push_back(validate_flat(order, t));
      }
    });
    return out;
  }

  std::vector<FiniteSemigroup> enumerate_monoids(std::size_t order) {
    if (order == 0 || order > 4) {
      throw Error("enumerate_monoids supports orders 1..4");
    }
    auto const           one = static_cast<Element>(order - 1);
    std::vector<Element> table(order * order);
    std::vector<bool>    free(order * order, true);
    for (Element a = 0; a < order; ++a) {
      table[one * order + a] = a;
      table[a * order + one] = a;
      free[one * order + a]  = false;
      free[a * order + one]  = false;
    }
    std::vector<FiniteSemigroup> out;
    for_each_table(order, table, free, [&](auto const& t) {
      if (!find_nonassociative_triple(order, t)) {
        out.push_back(validate_flat(order, t));
      }
    });
    return out;
  }

  std::vector<Element> canonical_table(FiniteSemigroup const& s) {
    std::size_t const    n = s.order();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> best;
    std::vector<Element> t(n * n);
    do {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          t[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
        }
      }
      if (best.empty() || t < best) {
        best = t;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::vector<FiniteSemigroup> up_to_isomorphism(std::vector<FiniteSemigroup> const& all) {
    std::set<std::vector<Element>> seen;
    std::vector<FiniteSemigroup>   out;
    for (auto const& s : all) {
      if (seen.insert(canonical_table(s)).second) {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace semitop
