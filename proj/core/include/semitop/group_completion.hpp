#pragma once

// The group completion G(S) of a finite semigroup, computed by coset
// enumeration on the multiplication-table presentation
//   < x_s (s in S) | x_s x_t = x_{st}, x_e = 1 if e is the identity >.
// G(S) is a quotient of S, so it has at most |S| elements; it is also the
// fundamental group of BS.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semitop/homology.hpp"
#include "semitop/semigroup.hpp"

namespace semitop {

  struct GroupPresentation {
    // Letter 2g is generator g, letter 2g + 1 its inverse.
    using Letter = std::uint32_t;
    using Word   = std::vector<Letter>;

    std::size_t       generator_count = 0;
    std::vector<Word> relators;

    static constexpr Letter gen(std::size_t g) noexcept {
      return static_cast<Letter>(2 * g);
    }
    static constexpr Letter inv(std::size_t g) noexcept {
      return static_cast<Letter>(2 * g + 1);
    }
  };

  // One generator per element; relators x_s x_t x_{st}^-1 in row-major order,
  // then x_e when S has an identity e.
  GroupPresentation presentation(FiniteSemigroup const& s);

  struct FiniteGroupTable {
    std::size_t          order = 0;
    std::vector<Element> table;  // row-major, element 0 is the identity
    // Image of each generator, i.e. of each semigroup element.
    std::vector<Element> generator_images;

    Element mul(Element a, Element b) const noexcept {
      return table[static_cast<std::size_t>(a) * order + b];
    }
    FiniteSemigroup as_semigroup() const;
  };

  // HLT enumeration of the cosets of the trivial subgroup with coincidence
  // processing.  When a definition would push the number of live cosets past
  // max_cosets a lookahead pass (scanning without defining) runs first; if
  // that frees nothing, CosetCapExceeded is thrown.
  FiniteGroupTable todd_coxeter(GroupPresentation const& p, std::size_t max_cosets);

  // todd_coxeter(presentation(s), cap), cap defaulting to 4|S|.  Checks that
  // the result is a group and that s -> image(s) is a homomorphism.
  FiniteGroupTable group_completion(FiniteSemigroup const& s, std::optional<std::size_t> max_cosets = {});

  bool is_simply_connected(FiniteSemigroup const& s);

  // G / [G, G] from the Smith form of the relation matrix of the abelianized
  // multiplication-table presentation.
  HomologyGroup abelianization(FiniteGroupTable const& g);

  // Throws Error unless the table is associative with identity 0 and inverses.
  void check_group(FiniteGroupTable const& g);

}  // namespace semitop
