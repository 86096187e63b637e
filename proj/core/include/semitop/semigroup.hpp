#pragma once

// Finite semigroups given by multiplication tables.
//
// Elements are dense indices 0..order-1 and the table is stored row-major, so
// the product of a and b is table[a * order + b].  A FiniteSemigroup is only
// ever produced by validate(), which checks shape and associativity, so every
// instance in circulation is a genuine semigroup.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semitop/errors.hpp"

namespace semitop {

  class FiniteSemigroup {
   public:
    std::size_t order() const noexcept {
      return _order;
    }

    Element mul(Element a, Element b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _order + b];
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_table.data() + static_cast<std::size_t>(a) * _order, _order};
    }

    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    std::optional<Element> zero() const noexcept {
      return _zero;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    std::string const& name(Element a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<Element> const& flat_table() const noexcept {
      return _table;
    }

    std::vector<std::vector<Element>> table() const;

    // Tables are compared; names are display-only.
    bool operator==(FiniteSemigroup const& other) const noexcept {
      return _order == other._order && _table == other._table;
    }

   private:
    friend FiniteSemigroup validate(std::vector<std::vector<std::int64_t>> const&,
                                    std::vector<std::string>);
    friend FiniteSemigroup validate_flat(std::size_t, std::vector<Element>,
                                         std::vector<std::string>);

    std::size_t              _order = 0;
    std::vector<Element>     _table;
    std::optional<Element>   _identity;
    std::optional<Element>   _zero;
    std::vector<std::string> _names;
  };

  // Checks a raw square table and returns the semigroup it defines, with
  // identity and zero detected.  Throws ShapeError for ragged, empty or
  // out-of-range input and NonAssociative naming the first violating triple
  // (i, j, k) in lexicographic order.  Empty names default to "0", "1", ...
  FiniteSemigroup validate(std::vector<std::vector<std::int64_t>> const& table,
                           std::vector<std::string> names = {});

  // Same checks on an already flattened row-major table.
  FiniteSemigroup validate_flat(std::size_t order,
                                std::vector<Element> table,
                                std::vector<std::string> names = {});

  // Returns the first (i, j, k) with (ij)k != i(jk), if any.
  std::optional<std::array<Element, 3>> find_nonassociative_triple(
      std::size_t order, std::span<Element const> table);

  // S with a fresh identity appended as the last element, even if S already
  // has one.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  // S with a fresh absorbing element appended as the last element.
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

  // Componentwise product; element (a, b) has index a * |T| + b.
  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t);

  // The isomorphic copy in which element a is renamed perm[a].
  FiniteSemigroup relabel(FiniteSemigroup const& s, std::span<Element const> perm);

}  // namespace semitop
