#include "semitop/semigroup.hpp"

#include <numeric>

namespace semitop {

  namespace {
    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::to_string(i);
      }
      return out;
    }
  }  // namespace

  std::vector<std::vector<Element>> FiniteSemigroup::table() const {
    std::vector<std::vector<Element>> out(_order);
    for (std::size_t i = 0; i < _order; ++i) {
      auto r = row(static_cast<Element>(i));
      out[i].assign(r.begin(), r.end());
    }
    return out;
  }

  std::optional<std::array<Element, 3>> find_nonassociative_triple(
      std::size_t order, std::span<Element const> t) {
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        std::size_t const ij = t[i * order + j];
        for (std::size_t k = 0; k < order; ++k) {
          if (t[ij * order + k] != t[i * order + t[j * order + k]]) {
            return std::array<Element, 3>{static_cast<Element>(i),
                                          static_cast<Element>(j),
                                          static_cast<Element>(k)};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup validate_flat(std::size_t              order,
                                std::vector<Element>     table,
                                std::vector<std::string> names) {
    if (order == 0) {
      throw ShapeError("a semigroup must have at least one element");
    }
    if (table.size() != order * order) {
      throw ShapeError("table has " + std::to_string(table.size())
                       + " entries, expected " + std::to_string(order * order));
    }
    for (auto v : table) {
      if (v >= order) {
        throw ShapeError("table entry " + std::to_string(v) + " is out of range");
      }
    }
    if (names.empty()) {
      names = default_names(order);
    } else if (names.size() != order) {
      throw ShapeError("expected " + std::to_string(order) + " names, got "
                       + std::to_string(names.size()));
    }
    if (auto bad = find_nonassociative_triple(order, table)) {
      throw NonAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    }

    FiniteSemigroup s;
    s._order = order;
    s._table = std::move(table);
    s._names = std::move(names);
    for (Element e = 0; e < order; ++e) {
      bool is_identity = true;
      bool is_zero     = true;
      for (Element a = 0; a < order; ++a) {
        is_identity = is_identity && s.mul(e, a) == a && s.mul(a, e) == a;
        is_zero     = is_zero && s.mul(e, a) == e && s.mul(a, e) == e;
      }
      // Both are unique when they exist.
      if (is_identity && !s._identity) {
        s._identity = e;
      }
      if (is_zero && !s._zero) {
        s._zero = e;
      }
    }
    return s;
  }

  FiniteSemigroup validate(std::vector<std::vector<std::int64_t>> const& table,
                           std::vector<std::string>                      names) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw ShapeError("a semigroup must have at least one element");
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ShapeError("row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size()) + " entries, expected "
                         + std::to_string(n));
      }
      for (auto v : table[i]) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
          throw ShapeError("table entry " + std::to_string(v) + " in row "
                           + std::to_string(i) + " is out of range");
        }
        flat.push_back(static_cast<Element>(v));
      }
    }
    return validate_flat(n, std::move(flat), std::move(names));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const    n = s.order();
    std::size_t const    m = n + 1;
    auto const           one = static_cast<Element>(n);
    std::vector<Element> t(m * m);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        t[a * m + b] = a == one ? b : b == one ? a : s.mul(a, b);
      }
    }
    auto names = s.names();
    names.push_back("1");
    return validate_flat(m, std::move(t), std::move(names));
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
    std::size_t const    n = s.order();
    std::size_t const    m = n + 1;
    auto const           z = static_cast<Element>(n);
    std::vector<Element> t(m * m);
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        t[a * m + b] = (a == z || b == z) ? z : s.mul(a, b);
      }
    }
    auto names = s.names();
    names.push_back("0");
    return validate_flat(m, std::move(t), std::move(names));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    std::size_t const        ns = s.order();
    std::size_t const        nt = t.order();
    std::size_t const        m  = ns * nt;
    std::vector<Element>     table(m * m);
    std::vector<std::string> names(m);
    for (Element a = 0; a < m; ++a) {
      Element const a1 = a / nt, a2 = a % nt;
      names[a]         = "(" + s.name(a1) + "," + t.name(a2) + ")";
      for (Element b = 0; b < m; ++b) {
        Element const b1 = b / nt, b2 = b % nt;
        table[a * m + b] = static_cast<Element>(s.mul(a1, b1) * nt + t.mul(a2, b2));
      }
    }
    return validate_flat(m, std::move(table), std::move(names));
  }

  FiniteSemigroup relabel(FiniteSemigroup const& s, std::span<Element const> perm) {
    std::size_t const n = s.order();
    if (perm.size() != n) {
      throw ShapeError("relabelling has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw ShapeError("relabelling is not a permutation");
      }
      seen[p] = true;
    }
    std::vector<Element>     t(n * n);
    std::vector<std::string> names(n);
    for (Element a = 0; a < n; ++a) {
      names[perm[a]] = s.name(a);
      for (Element b = 0; b < n; ++b) {
        t[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
      }
    }
    return validate_flat(n, std::move(t), std::move(names));
  }

}  // namespace semitop
