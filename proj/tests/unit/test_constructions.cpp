#include <variant>

#include <catch_amalgamated.hpp>

#include "semitop/constructions.hpp"
#include "semitop/expression.hpp"
#include "semitop/structure.hpp"

using namespace semitop;

namespace {

  // Independent model of S_n: K elements (i, j) with i in {x, y, 0..n-1}
  // coded as -2, -1, 0..n-1; T elements (k, z) with z in {s, t}.
  struct KElt {
    int i, j;
  };
  struct TElt {
    int  k;
    char z;
  };
  using Elt = std::variant<KElt, TElt>;

  int mod(int a, int n) {
    return ((a % n) + n) % n;
  }

  Elt product(Elt const& a, Elt const& b, int n) {
    if (auto const* p = std::get_if<KElt>(&a)) {
      if (auto const* q = std::get_if<KElt>(&b)) {
        return KElt{p->i, q->j};  // rectangular band
      }
      auto const& q = std::get<TElt>(b);
      return KElt{p->i, mod(q.k + p->j, n)};  // (i,j)(k,z) = (i,k+j)
    }
    auto const& p = std::get<TElt>(a);
    if (auto const* q = std::get_if<TElt>(&b)) {
      return TElt{mod(p.k + q->k, n), q->z};  // (k,z)(l,w) = (k+l,w)
    }
    auto const& q = std::get<KElt>(b);
    if (q.i == -2) {
      return q;  // (k,z)(x,i) = (x,i)
    }
    if (q.i >= 0) {
      return KElt{mod(p.k + q.i, n), q.j};  // (k,z)(l,i) = (k+l,i)
    }
    if (p.z == 's') {
      return KElt{mod(p.k - 1, n), q.j};  // (k,s)(y,i) = (k-1,i)
    }
    return KElt{p.k, q.j};  // (k,t)(y,i) = (k,i)
  }

  // Position in the documented layout.
  Element index(Elt const& e, int n) {
    if (auto const* p = std::get_if<KElt>(&e)) {
      return static_cast<Element>((p->i + 2) * n + p->j);
    }
    auto const& t = std::get<TElt>(e);
    return static_cast<Element>((n + 2) * n + 2 * t.k + (t.z == 't' ? 1 : 0));
  }

  std::vector<Elt> elements(int n) {
    std::vector<Elt> out;
    for (int i = -2; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.push_back(KElt{i, j});
      }
    }
    for (int k = 0; k < n; ++k) {
      out.push_back(TElt{k, 's'});
      out.push_back(TElt{k, 't'});
    }
    return out;
  }

}  // namespace

TEST_CASE("rectangular band and cyclic group") {
  auto rb = rectangular_band(2, 3);
  REQUIRE(rb.order() == 6);
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      REQUIRE(rb.mul(a, b) == (a / 3) * 3 + b % 3);
    }
  }
  REQUIRE(rb.name(4) == "(1,1)");
  auto c = cyclic_group(7);
  REQUIRE(c.identity() == Element{0});
  REQUIRE(c.mul(5, 4) == 2);
}

TEST_CASE("Moore semigroup matches the product rules") {
  for (int n = 2; n <= 6; ++n) {
    auto const ms  = moore_semigroup(static_cast<std::uint32_t>(n));
    auto const all = elements(n);
    REQUIRE(ms.s.order() == static_cast<std::size_t>((n + 2) * n + 2 * n));
    REQUIRE(ms.m.order() == ms.s.order() + 1);
    REQUIRE(ms.m.identity() == Element(ms.s.order()));
    REQUIRE_FALSE(ms.s.identity());
    for (auto const& a : all) {
      for (auto const& b : all) {
        Element want = index(product(a, b, n), n);
        REQUIRE(ms.s.mul(index(a, n), index(b, n)) == want);
        REQUIRE(ms.m.mul(index(a, n), index(b, n)) == want);
      }
    }
    auto const& L = ms.layout;
    REQUIRE(L.k(MooreSemigroupLayout::kX, 0) == 0);
    REQUIRE(L.k(MooreSemigroupLayout::kY, 1) == static_cast<Element>(n + 1));
    REQUIRE(L.k(MooreSemigroupLayout::numeral(0), 0) == static_cast<Element>(2 * n));
    REQUIRE(L.t(1, MooreSemigroupLayout::Letter::t) == static_cast<Element>((n + 2) * n + 3));
    REQUIRE(ms.s.name(0) == "(x,0)");
    REQUIRE(ms.s.name(L.t(0, MooreSemigroupLayout::Letter::s)) == "(0,s)");
    REQUIRE(minimal_ideal(ms.m).size() == static_cast<std::size_t>((n + 2) * n));
    REQUIRE(is_rectangular_band(ms.m, minimal_ideal(ms.m)));
  }
  REQUIRE_THROWS_AS(moore_semigroup(1), Error);
}

TEST_CASE("suspension monoid") {
  for (auto const& e : {"C(1)", "C(2)", "I(RB(2,2))", "M(2)"}) {
    auto const s = parse_expression(e);
    auto const j = suspension_monoid(s);
    std::size_t const m = s.order();
    REQUIRE(j.order() == 3 * m);
    REQUIRE(j.identity() == s.identity());
    auto const k = minimal_ideal(j);
    REQUIRE(k.size() == 2 * m);
    REQUIRE(k.elements.front() == m);
    REQUIRE(is_rectangular_band(j, k));
    for (Element a = 0; a < m; ++a) {
      for (std::size_t i = 1; i <= 2; ++i) {
        for (Element u = 0; u < m; ++u) {
          Element const iu = static_cast<Element>(m + (i - 1) * m + u);
          REQUIRE(j.mul(a, iu) == iu);
          REQUIRE(j.mul(iu, a) == m + (i - 1) * m + s.mul(u, a));
        }
      }
    }
  }
  REQUIRE_THROWS_AS(suspension_monoid(rectangular_band(2, 2)), NotAMonoid);
}

TEST_CASE("wedge monoid") {
  auto const m = parse_expression("I(RB(2,2))");
  auto const w = wedge_monoid(m, m);
  REQUIRE(w.monoid.order() == 21);
  REQUIRE(w.monoid.identity() == w.from_m[*m.identity()]);
  auto const k = minimal_ideal(w.monoid);
  REQUIRE(k.size() == 16);
  // The minimal ideal is K x J, J the minimal ideal of N.
  auto const j = minimal_ideal(m);
  std::set<Element> expect;
  for (auto a : w.k.elements) {
    for (auto b : j.elements) {
      expect.insert(w.from_kn.at({a, b}));
    }
  }
  REQUIRE(std::set<Element>(k.elements.begin(), k.elements.end()) == expect);
  for (Element u = 0; u < w.monoid.order(); ++u) {
    for (Element v = 0; v < w.monoid.order(); ++v) {
      auto [a1, b1] = w.coordinates[u];
      auto [a2, b2] = w.coordinates[v];
      REQUIRE(w.coordinates[w.monoid.mul(u, v)] == std::pair{m.mul(a1, a2), m.mul(b1, b2)});
    }
  }
  REQUIRE(wedge_monoid(m, cyclic_group(1)).monoid.order() == m.order());
  REQUIRE(wedge_monoid(parse_expression("M(2)"), m).monoid.order() == 13 + 8 * 4);
  REQUIRE_THROWS_AS(wedge_monoid(cyclic_group(2), m), MinimalIdealNotRectangular);
  REQUIRE_THROWS_AS(wedge_monoid(rectangular_band(2, 2), m), NotAMonoid);
}
