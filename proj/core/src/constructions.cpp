#include "semitop/constructions.hpp"

namespace semitop {

  FiniteSemigroup rectangular_band(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) {
      throw ShapeError("rectangular band dimensions must be positive");
    }
    std::size_t const        m = a * b;
    std::vector<Element>     t(m * m);
    std::vector<std::string> names(m);
    for (std::size_t u = 0; u < m; ++u) {
      names[u] = "(" + std::to_string(u / b) + "," + std::to_string(u % b) + ")";
      for (std::size_t v = 0; v < m; ++v) {
        t[u * m + v] = static_cast<Element>((u / b) * b + v % b);
      }
    }
    return validate_flat(m, std::move(t), std::move(names));
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw ShapeError("cyclic group order must be positive");
    }
    std::vector<Element> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = static_cast<Element>((i + j) % n);
      }
    }
    return validate_flat(n, std::move(t));
  }

  std::vector<Element> MooreSemigroupLayout::k_block() const {
    std::vector<Element> out(k_size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<Element>(i);
    }
    return out;
  }

  std::vector<Element> MooreSemigroupLayout::t_block() const {
    std::vector<Element> out(t_size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<Element>(k_size() + i);
    }
    return out;
  }

  MooreSemigroup moore_semigroup(std::uint32_t n) {
    if (n < 2) {
      throw ShapeError("the Moore semigroup needs modulus n >= 2");
    }
    using Letter = MooreSemigroupLayout::Letter;
    MooreSemigroupLayout L{};
    L.n = n;
    auto const mod = [n](std::int64_t v) {
      return static_cast<std::uint32_t>(((v % n) + n) % n);
    };
    auto const is_numeral = [](std::uint32_t row) {
      return row >= 2;
    };

    std::size_t const        order = L.s_order();
    std::vector<Element>     t(order * order);
    std::vector<std::string> names(order);

    for (Element a = 0; a < order; ++a) {
      if (L.in_k(a)) {
        auto [row, col] = L.k_coords(a);
        std::string r   = row == L.kX ? "x" : row == L.kY ? "y" : std::to_string(row - 2);
        names[a]        = "(" + r + "," + std::to_string(col) + ")";
      } else {
        auto [k, z] = L.t_coords(a);
        names[a]    = "(" + std::to_string(k) + "," + (z == Letter::s ? "s" : "t") + ")";
      }
    }

    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) {
        Element p = 0;
        if (L.in_k(a) && L.in_k(b)) {
          // (i,j)(k,l) = (i,l)
          p = L.k(L.k_coords(a).first, L.k_coords(b).second);
        } else if (L.in_t(a) && L.in_t(b)) {
          // (k,z)(l,w) = (k+l,w)
          auto [k, z] = L.t_coords(a);
          auto [l, w] = L.t_coords(b);
          (void) z;
          p = L.t(mod(std::int64_t{k} + l), w);
        } else if (L.in_k(a)) {
          // (i,j)(k,z) = (i,k+j)
          auto [i, j] = L.k_coords(a);
          auto [k, z] = L.t_coords(b);
          (void) z;
          p = L.k(i, mod(std::int64_t{k} + j));
        } else {
          auto [k, z]   = L.t_coords(a);
          auto [row, i] = L.k_coords(b);
          if (row == L.kX) {
            // (k,z)(x,i) = (x,i)
            p = b;
          } else if (is_numeral(row)) {
            // (k,z)(l,i) = (k+l,i)
            p = L.k(L.numeral(mod(std::int64_t{k} + (row - 2))), i);
          } else if (z == Letter::s) {
            // (k,s)(y,i) = (k-1,i)
            p = L.k(L.numeral(mod(std::int64_t{k} - 1)), i);
          } else {
            // (k,t)(y,i) = (k,i)
            p = L.k(L.numeral(k), i);
          }
        }
        t[a * order + b] = p;
      }
    }
    auto s = validate_flat(order, std::move(t), std::move(names));
    auto m = adjoin_identity(s);
    return MooreSemigroup{std::move(s), std::move(m), L};
  }

  FiniteSemigroup suspension_monoid(FiniteSemigroup const& s) {
    if (!s.identity()) {
      throw NotAMonoid("the suspension monoid is defined for monoids only");
    }
    std::size_t const m     = s.order();
    std::size_t const order = 3 * m;
    // Element (i, u) of K, i in {1, 2}.
    auto const kidx = [m](std::size_t i, std::size_t u) {
      return static_cast<Element>(m + (i - 1) * m + u);
    };
    std::vector<Element>     t(order * order);
    std::vector<std::string> names(order);
    for (std::size_t a = 0; a < order; ++a) {
      names[a] = a < m ? s.name(static_cast<Element>(a))
                       : "(" + std::to_string((a - m) / m + 1) + ","
                             + s.name(static_cast<Element>((a - m) % m)) + ")";
    }
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        Element p = 0;
        if (a < m && b < m) {
          p = s.mul(static_cast<Element>(a), static_cast<Element>(b));
        } else if (a < m) {
          // s(i, s') = (i, s')
          p = static_cast<Element>(b);
        } else if (b < m) {
          // (i, s')s = (i, s's)
          std::size_t const i = (a - m) / m + 1;
          auto const        u = static_cast<Element>((a - m) % m);
          p                   = kidx(i, s.mul(u, static_cast<Element>(b)));
        } else {
          // (i, s)(j, s') = (i, s')
          p = kidx((a - m) / m + 1, (b - m) % m);
        }
        t[a * order + b] = p;
      }
    }
    return validate_flat(order, std::move(t), std::move(names));
  }

  WedgeMonoid wedge_monoid(FiniteSemigroup const& m, FiniteSemigroup const& n) {
    if (!m.identity() || !n.identity()) {
      throw NotAMonoid("the wedge monoid needs two monoids");
    }
    WedgeMonoid out;
    out.k = minimal_ideal(m);
    if (!is_rectangular_band(m, out.k)) {
      throw MinimalIdealNotRectangular("the minimal ideal of the first monoid is not a rectangular band");
    }
    Element const one_n = *n.identity();

    for (Element a = 0; a < m.order(); ++a) {
      out.from_m.push_back(static_cast<Element>(out.coordinates.size()));
      out.coordinates.emplace_back(a, one_n);
    }
    for (auto k : out.k.elements) {
      out.from_kn[{k, one_n}] = out.from_m[k];
      for (Element b = 0; b < n.order(); ++b) {
        if (b == one_n) {
          continue;
        }
        out.from_kn[{k, b}] = static_cast<Element>(out.coordinates.size());
        out.coordinates.emplace_back(k, b);
      }
    }

    std::size_t const        order = out.coordinates.size();
    std::vector<Element>     t(order * order);
    std::vector<std::string> names(order);
    auto const               index_of = [&](Element a, Element b) -> Element {
      if (b == one_n) {
        return out.from_m[a];
      }
      // a lies in K whenever b != 1, because K is an ideal of M.
      return out.from_kn.at({a, b});
    };
    for (std::size_t u = 0; u < order; ++u) {
      auto [a1, b1] = out.coordinates[u];
      names[u]      = "(" + m.name(a1) + "," + n.name(b1) + ")";
      for (std::size_t v = 0; v < order; ++v) {
        auto [a2, b2]    = out.coordinates[v];
        t[u * order + v] = index_of(m.mul(a1, a2), n.mul(b1, b2));
      }
    }
    out.monoid = validate_flat(order, std::move(t), std::move(names));
    return out;
  }

}  // namespace semitop
