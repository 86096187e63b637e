#include <catch_amalgamated.hpp>

#include "semitop/constructions.hpp"
#include "semitop/enumerate.hpp"
#include "semitop/expression.hpp"
#include "semitop/smith.hpp"
#include "semitop/structure.hpp"
#include "semitop/theorem_checks.hpp"

using namespace semitop;

namespace {

  HomologyGroup Z(std::size_t r = 1) {
    return HomologyGroup::make(r, {});
  }
  HomologyGroup T(long n) {
    return HomologyGroup::make(0, {BigInt(n)});
  }

}  // namespace

TEST_CASE("resolution bases") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto const r = build_resolution(n);
    REQUIRE(r.p0.size() == n + 2);
    REQUIRE(r.p1.size() == r.moore.m.order());
    REQUIRE(r.p2_orbit.size() == (n + 2) * n + n);  // all of K, and (k,t)
    REQUIRE(r.p3.size() == (n + 2) * n);
    REQUIRE(r.epsilon.rows() == 1);
    REQUIRE(r.phi.rows() == r.p0.size());
    REQUIRE(r.psi.cols() == r.p2_size());
    REQUIRE(r.xi.cols() == r.p3.size());
    REQUIRE(r.xi.rows() == r.p2_size());
  }
  auto const r = build_resolution(2);
  REQUIRE(r.p0.size() == 4);
  REQUIRE(r.p1.size() == 13);
  REQUIRE(r.p2_size() == 18);
  REQUIRE(r.p3.size() == 8);
}

TEST_CASE("left orbits") {
  auto const ms = moore_semigroup(3);
  auto const& L = ms.layout;
  auto const  x = left_orbit(ms.m, L.k(MooreSemigroupLayout::kX, 0));
  REQUIRE(x.size() == 5);  // (x,0), (y,0)... all (i,0)
  for (auto e : x) {
    REQUIRE(e % 3 == 0);
  }
  REQUIRE(left_orbit(ms.s, L.k(MooreSemigroupLayout::kX, 0)).size() == 5);
  REQUIRE(left_orbit(cyclic_group(4), 1).size() == 4);
}

TEST_CASE("exactness of the resolution") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    auto const reports = verify_exactness(build_resolution(n));
    REQUIRE(!reports.empty());
    for (auto const& c : reports) {
      INFO(c.to_text());
      REQUIRE(c.passed);
    }
  }
  // phi kills everything in K: phi composed with psi restricted to K is zero.
  auto const r = build_resolution(3);
  REQUIRE(multiply(r.phi, r.psi).is_zero());
  REQUIRE(multiply(r.psi, r.xi).is_zero());

  auto broken = build_resolution(2);
  broken.psi.add(0, 0, 1);
  try {
    verify_exactness(broken);
    FAIL("expected ExactnessFailure");
  } catch (ExactnessFailure const& e) {
    REQUIRE(e.defect.rfind("(a)", 0) == 0);
  }
  auto unfaithful = build_resolution(2);
  unfaithful.xi = SparseMatrix(unfaithful.xi.rows(), unfaithful.xi.cols());
  REQUIRE_THROWS_AS(verify_exactness(unfaithful), ExactnessFailure);
}

TEST_CASE("tensored matrices") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto const t = tensored_complex(build_resolution(n));
    auto const e = expected_tensored_complex(n);
    REQUIRE(t.phi == 0);
    REQUIRE(t.a == e.a);
    REQUIRE(t.b == e.b);
    REQUIRE(t.b_prime == e.b_prime);
    REQUIRE(t.a.size() == n + 1);
    REQUIRE(t.b.size() == n);
    check_chain_complex(chain_complex(t));
  }
  auto const e = expected_tensored_complex(2);
  REQUIRE(e.a == std::vector<std::vector<std::int64_t>>{{0}, {1}, {1}});
  REQUIRE(e.b == std::vector<std::vector<std::int64_t>>{{1, -1, 1}, {1, 1, -1}});
  REQUIRE(e.b_prime == std::vector<std::vector<std::int64_t>>{{1, -1, 1}, {2, 0, 0}});

  // B for n = 3 as displayed: rank 3, elementary divisors 1, 1, 3.
  std::vector<std::vector<std::int64_t>> const b3{{1, -1, 1, 0}, {1, 0, -1, 1}, {1, 1, 0, -1}};
  REQUIRE(expected_tensored_complex(3).b == b3);
  auto const snf = smith_normal_form(SparseMatrix::from_dense(b3));
  REQUIRE(snf.rank == 3);
  REQUIRE(snf.diagonal == std::vector<BigInt>{1, 1, 3});
}

TEST_CASE("homology of M_n from the resolution") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    auto const h = homology_from_resolution(n);
    REQUIRE(h == std::vector<HomologyGroup>{Z(), {}, T(n), {}});
  }
  REQUIRE(homology_from_resolution(2) == homology_profile(moore_semigroup(2).m, 4));
  auto const bar3 = homology_profile(moore_semigroup(3).m, 3);
  auto const res3 = homology_from_resolution(3);
  REQUIRE(std::vector<HomologyGroup>(res3.begin(), res3.begin() + 3) == bar3);
}

TEST_CASE("Moore suite") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    auto const suite = check_moore(n);
    REQUIRE(suite.suite == "moore");
    REQUIRE(suite.passed());
    auto const again = SuiteReport::from_json(suite.to_json());
    REQUIRE(again.to_json() == suite.to_json());
  }
}

TEST_CASE("suspension shifts homology") {
  std::vector<FiniteSemigroup> monoids;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& m : up_to_isomorphism(enumerate_monoids(n))) {
      monoids.push_back(std::move(m));
    }
  }
  for (auto const& m : monoids) {
    auto const suite = check_suspension_shift(m, 4);
    for (auto const& c : suite.checks) {
      INFO(c.to_text());
      REQUIRE(c.passed);
    }
  }
  auto const c2 = check_suspension_shift(cyclic_group(2), 5);
  REQUIRE(c2.passed());
  REQUIRE_THROWS_AS(check_suspension_shift(rectangular_band(2, 2), 3), NotAMonoid);
}

TEST_CASE("wedge additivity") {
  auto const rb = parse_expression("I(RB(2,2))");
  auto const s  = check_wedge_additivity(rb, rb, 4);
  REQUIRE(s.passed());
  auto const w = wedge_monoid(rb, rb).monoid;
  REQUIRE(homology_profile(w, 3) == std::vector<HomologyGroup>{Z(), {}, Z(2)});

  REQUIRE(check_wedge_additivity(rb, cyclic_group(1), 4).passed());
  REQUIRE(check_wedge_additivity(rb, parse_expression("I(RB(2,3))"), 3).passed());
  REQUIRE(check_wedge_additivity(parse_expression("M(2)"), rb, 3).passed());
  REQUIRE(check_wedge_additivity(parse_expression("J(C(2))"), rb, 3).passed());

  // Iterated wedge: three 2-spheres.
  auto const w3 = wedge_monoid(w, rb).monoid;
  REQUIRE(w3.order() == 85);
  REQUIRE(homology_profile(w3, 3)[2] == Z(3));
}

TEST_CASE("regular vanishing") {
  auto const rb = parse_expression("I(RB(2,2))");
  REQUIRE(j_classes(rb).size() == 2);
  REQUIRE(check_regular_vanishing(rb, 5, 5).passed());
  REQUIRE(check_regular_vanishing(cyclic_group(1), 2, 4).passed());
  auto const semilattice = validate({{0, 1}, {1, 1}});
  REQUIRE(check_regular_vanishing(semilattice, 5, 6).passed());
  // M_2 is regular but not aperiodic; rational Betti numbers vanish.
  REQUIRE(check_regular_vanishing(parse_expression("M(2)"), 1, 3).passed());
  // C_2 is regular with H_3 = Z/2, so only the rational statement holds.
  REQUIRE(check_regular_vanishing(cyclic_group(2), 1, 4).passed());

  REQUIRE_THROWS_AS(check_regular_vanishing(rb, 2, 3), Error);
  auto const nil = adjoin_identity(validate({{0, 0}, {0, 0}}));
  REQUIRE_THROWS_AS(check_regular_vanishing(nil, 5, 5), NotRegular);
  REQUIRE_THROWS_AS(check_regular_vanishing(rb, 5, 9, {.column_cap = 100'000}), InfeasibleDegree);
}

TEST_CASE("reduced homology and report formatting") {
  REQUIRE(reduced(Z(), 0) == HomologyGroup{});
  REQUIRE(reduced(Z(2), 0) == Z());
  REQUIRE(reduced(Z(), 2) == Z());
  REQUIRE(profile_to_string({Z(), {}, T(2)}) == "(Z, 0, Z/2)");

  CheckReport c;
  c.claim      = "claim";
  c.parameters = {{"n", 2}};
  c.expected   = "Z/2";
  c.computed   = "Z/2";
  c.passed     = true;
  c.elapsed    = 0.25;
  auto const j = c.to_json();
  REQUIRE(j["verdict"] == "pass");
  REQUIRE(CheckReport::from_json(j).to_json() == j);
  REQUIRE(c.to_text().rfind("PASS", 0) == 0);
  c.passed = false;
  REQUIRE(c.to_text().find("expected Z/2") != std::string::npos);
  REQUIRE_THROWS_AS(CheckReport::from_json(nlohmann::json{{"claim", 3}}), Error);
}
