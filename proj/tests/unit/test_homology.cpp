#include <algorithm>
#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "semitop/constructions.hpp"
#include "semitop/enumerate.hpp"
#include "semitop/expression.hpp"
#include "semitop/homology.hpp"

using namespace semitop;

namespace {

  HomologyGroup Z(std::size_t r = 1) {
    return HomologyGroup::make(r, {});
  }
  HomologyGroup T(long n) {
    return HomologyGroup::make(0, {BigInt(n)});
  }
  HomologyGroup const zero{};

}  // namespace

TEST_CASE("homology group normal form") {
  REQUIRE(zero.to_string() == "0");
  REQUIRE(Z().to_string() == "Z");
  REQUIRE(HomologyGroup::make(2, {BigInt(2), BigInt(1), BigInt(0)}).to_string() == "Z^2 + Z/2");
  REQUIRE(HomologyGroup::make(0, {BigInt(4), BigInt(6)}).to_string() == "Z/2 + Z/12");
  REQUIRE(HomologyGroup::make(0, {BigInt(2), BigInt(3)}) == T(6));
  REQUIRE(direct_sum(Z(), T(2)).to_string() == "Z + Z/2");
  auto j = to_json(HomologyGroup::make(1, {BigInt(3)}));
  REQUIRE(j["free_rank"] == 1);
  REQUIRE(j["torsion"][0] == 3);
}

TEST_CASE("bar complex shape and boundary identity") {
  auto const m = parse_expression("M(2)");
  auto const c = bar_complex(m, 3);
  REQUIRE(c.dims == std::vector<std::size_t>{1, 12, 144, 1728});
  REQUIRE(c.boundary(1).is_zero());
  check_chain_complex(c);
  check_chain_complex(bar_complex(m, 3, {.normalized = false}));
  check_chain_complex(bar_complex(parse_expression("RB(2,2)"), 4, {.normalized = false}));

  auto broken = c;
  broken.boundaries[1].add(0, 0, 1);
  REQUIRE_THROWS_AS(check_chain_complex(broken), Error);
}

TEST_CASE("known homology profiles") {
  REQUIRE(homology_profile(cyclic_group(1), 4) == std::vector<HomologyGroup>{Z(), zero, zero, zero});
  for (long n = 2; n <= 5; ++n) {
    auto const h = homology_profile(cyclic_group(static_cast<std::size_t>(n)), 5);
    REQUIRE(h == std::vector<HomologyGroup>{Z(), T(n), zero, T(n), zero});
  }
  // {1, 0}: has a zero, so contractible.
  auto const semilattice = validate({{0, 1}, {1, 1}});
  REQUIRE(homology_profile(semilattice, 5) == std::vector<HomologyGroup>{Z(), zero, zero, zero, zero});
  REQUIRE(homology_profile(parse_expression("I(RB(2,2))"), 4) == std::vector<HomologyGroup>{Z(), zero, Z(), zero});
  REQUIRE(homology_profile(parse_expression("I(RB(2,1))"), 4) == std::vector<HomologyGroup>{Z(), zero, zero, zero});
  REQUIRE(homology_profile(parse_expression("I(RB(2,3))"), 3) == std::vector<HomologyGroup>{Z(), zero, Z(2)});
  REQUIRE(homology_profile(parse_expression("J(C(2))"), 5) == std::vector<HomologyGroup>{Z(), zero, T(2), zero, T(2)});
  REQUIRE(homology_profile(parse_expression("M(2)"), 3) == std::vector<HomologyGroup>{Z(), zero, T(2)});
  REQUIRE(homology_profile(parse_expression("P(C(2),C(2))"), 3) == std::vector<HomologyGroup>{Z(), HomologyGroup::make(0, {BigInt(2), BigInt(2)}), T(2)});
}

TEST_CASE("normalized and unnormalized complexes agree") {
  for (auto const& e : {"I(RB(2,2))", "C(3)", "M(2)", "J(C(2))"}) {
    auto const s     = parse_expression(e);
    std::size_t qmax = s.order() > 6 ? 3 : 4;
    REQUIRE(homology_profile(s, qmax) == homology_profile(s, qmax, {.normalized = false}));
  }
  // BS and BS^1 have the same homology.
  REQUIRE(homology_profile(parse_expression("RB(2,2)"), 4, {.normalized = false})
          == homology_profile(parse_expression("I(RB(2,2))"), 4));
}

TEST_CASE("kernel-basis route agrees with the elementary-divisor route") {
  std::vector<FiniteSemigroup> monoids;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& m : up_to_isomorphism(enumerate_monoids(n))) {
      monoids.push_back(std::move(m));
    }
  }
  monoids.push_back(parse_expression("J(C(2))"));
  monoids.push_back(parse_expression("P(C(2),C(2))"));
  for (auto const& m : monoids) {
    auto const c = bar_complex(m, 4);
    for (std::size_t q = 0; q < 4; ++q) {
      auto const h = homology(c, q);
      REQUIRE(homology_via_kernel_basis(c, q) == h);
      REQUIRE(rational_betti(c, q) == h.free_rank);
    }
  }
}

TEST_CASE("homology is invariant under relabelling") {
  auto const           m = parse_expression("M(2)");
  std::vector<Element> perm(m.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(homology_profile(relabel(m, perm), 3) == homology_profile(m, 3));
  }
}

TEST_CASE("homology errors") {
  auto const m = parse_expression("M(2)");
  REQUIRE_THROWS_AS(bar_complex(m, 4, {.column_cap = 10'000}), DegreeTooLarge);
  try {
    bar_complex(m, 4, {.column_cap = 10'000});
  } catch (DegreeTooLarge const& e) {
    REQUIRE(e.degree == 4);
    REQUIRE(e.rank == 20736);
  }
  auto const c = bar_complex(m, 2);
  REQUIRE_THROWS_AS(homology(c, 2), InsufficientDegrees);
  REQUIRE_NOTHROW(homology(c, 1));
  REQUIRE_THROWS_AS(bar_complex(parse_expression("RB(2,2)"), 2), NotAMonoid);
}
