#pragma once

// Slow, independent reference computations used as test oracles.  Integer
// arithmetic here is Boost.Multiprecision, not GMP, and the Smith form uses
// Bezout row/column operations rather than the library's pivoting scheme.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semitop/matrix.hpp"
#include "semitop/semigroup.hpp"

namespace oracle {

  using Int   = boost::multiprecision::cpp_int;
  using Dense = std::vector<std::vector<std::int64_t>>;
  using Table = std::vector<std::vector<std::uint32_t>>;

  inline Int from_big(semitop::BigInt const& v) {
    return Int(v.get_str());
  }

  inline std::vector<Int> from_big(std::vector<semitop::BigInt> const& v) {
    std::vector<Int> out;
    for (auto const& x : v) {
      out.push_back(from_big(x));
    }
    return out;
  }

  // (g, x, y) with a x + b y = g >= 0.
  inline void ext_gcd(Int a, Int b, Int& g, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int r = a - q * b;
      a     = b;
      b     = r;
      Int t = x0 - q * x1;
      x0    = x1;
      x1    = t;
      t     = y0 - q * y1;
      y0    = y1;
      y1    = t;
    }
    if (a < 0) {
      a  = -a;
      x0 = -x0;
      y0 = -y0;
    }
    g = a;
    x = x0;
    y = y0;
  }

  // Smith diagonal (min(m, n) entries, zeros last) by Bezout elimination and
  // a final gcd/lcm sweep of the diagonal.  Multiples of the pivot are cleared
  // by subtraction so that a Bezout step always shrinks the pivot; otherwise
  // the row and column passes can trade equal pivots forever.
  inline std::vector<Int> smith_diagonal(Dense const& in) {
    std::size_t const m = in.size();
    std::size_t const n = m == 0 ? 0 : in[0].size();
    std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = in[i][j];
      }
    }
    std::vector<Int> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // First nonzero entry in column-major order of the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t j = t; j < n && pi == m; ++j) {
        for (std::size_t i = t; i < m; ++i) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == m) {
        break;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) {
        std::swap(row[t], row[pj]);
      }
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) {
            continue;
          }
          if (a[i][t] % a[t][t] == 0) {
            Int const f = a[i][t] / a[t][t];
            for (std::size_t j = t; j < n; ++j) {
              a[i][j] -= f * a[t][j];
            }
            continue;
          }
          Int g, x, y;
          ext_gcd(a[t][t], a[i][t], g, x, y);
          Int const p = a[t][t] / g;
          Int const q = a[i][t] / g;
          for (std::size_t j = t; j < n; ++j) {
            Int const top = a[t][j];
            Int const bot = a[i][j];
            a[t][j]       = x * top + y * bot;
            a[i][j]       = -q * top + p * bot;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) {
            continue;
          }
          if (a[t][j] % a[t][t] == 0) {
            Int const f = a[t][j] / a[t][t];
            for (std::size_t i = t; i < m; ++i) {
              a[i][j] -= f * a[i][t];
            }
            continue;
          }
          Int g, x, y;
          ext_gcd(a[t][t], a[t][j], g, x, y);
          Int const p = a[t][t] / g;
          Int const q = a[t][j] / g;
          for (std::size_t i = t; i < m; ++i) {
            Int const left  = a[i][t];
            Int const right = a[i][j];
            a[i][t]         = x * left + y * right;
            a[i][j]         = -q * left + p * right;
          }
          dirty = true;
        }
        for (std::size_t i = t + 1; i < m && !dirty; ++i) {
          dirty = a[i][t] != 0;
        }
      }
      diag.push_back(abs(a[t][t]));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
          Int g = boost::multiprecision::gcd(diag[i], diag[j]);
          if (g != diag[i]) {
            Int l   = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
            changed = true;
          }
        }
      }
    }
    diag.resize(std::min(m, n), 0);
    return diag;
  }

  // Determinant by cofactor expansion along the first row.
  inline Int cofactor_det(std::vector<std::vector<Int>> const& a) {
    std::size_t const n = a.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return a[0][0];
    }
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[0][j] == 0) {
        continue;
      }
      std::vector<std::vector<Int>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<Int> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) {
            row.push_back(a[i][k]);
          }
        }
        minor.push_back(row);
      }
      Int term = a[0][j] * cofactor_det(minor);
      det += j % 2 == 0 ? term : Int(-term);
    }
    return det;
  }

  inline void for_each_subset(std::size_t n, std::size_t k, std::function<void(std::vector<std::size_t> const&)> const& f) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos == k) {
        f(pick);
        return;
      }
      for (std::size_t x = from; x + (k - pos) <= n; ++x) {
        pick[pos] = x;
        rec(pos + 1, x + 1);
      }
    };
    rec(0, 0);
  }

  // Smith diagonal from determinantal divisors: d_k = gcd of k x k minors.
  // Exponential; only for tiny matrices.
  inline std::vector<Int> smith_by_minors(Dense const& a) {
    std::size_t const m = a.size();
    std::size_t const n = m == 0 ? 0 : a[0].size();
    std::vector<Int>  diag;
    Int               prev = 1;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
      Int g = 0;
      for_each_subset(m, k, [&](auto const& rows) {
        for_each_subset(n, k, [&](auto const& cols) {
          std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              minor[i][j] = a[rows[i]][cols[j]];
            }
          }
          g = boost::multiprecision::gcd(g, abs(cofactor_det(minor)));
        });
      });
      if (g == 0) {
        break;
      }
      diag.push_back(g / prev);
      prev = g;
    }
    diag.resize(std::min(m, n), 0);
    return diag;
  }

  inline Dense random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int bound) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int>     value(-bound, bound);
    Dense                                  a(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : a) {
      for (auto& x : row) {
        if (coin(rng) < density) {
          x = value(rng);
        }
      }
    }
    return a;
  }

  inline bool associative(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every associative table on {0..n-1}, by counting through all n^(n*n)
  // tables.
  inline std::vector<Table> all_semigroup_tables(std::size_t n) {
    std::vector<Table>         out;
    std::vector<std::uint32_t> cells(n * n, 0);
    while (true) {
      Table t(n, std::vector<std::uint32_t>(n));
      for (std::size_t i = 0; i < n * n; ++i) {
        t[i / n][i % n] = cells[i];
      }
      if (associative(t)) {
        out.push_back(t);
      }
      std::size_t k = 0;
      while (k < cells.size() && ++cells[k] == n) {
        cells[k++] = 0;
      }
      if (k == cells.size()) {
        break;
      }
    }
    return out;
  }

  // Every nonempty subset closed under multiplication by S on both sides.
  inline std::vector<std::set<std::uint32_t>> all_ideals(semitop::FiniteSemigroup const& s) {
    std::size_t const                     n = s.order();
    std::vector<std::set<std::uint32_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool ok = true;
      for (std::uint32_t a = 0; a < n && ok; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (std::uint32_t x = 0; x < n && ok; ++x) {
          ok = (mask >> s.mul(a, x) & 1) && (mask >> s.mul(x, a) & 1);
        }
      }
      if (ok) {
        std::set<std::uint32_t> ideal;
        for (std::uint32_t a = 0; a < n; ++a) {
          if (mask >> a & 1) {
            ideal.insert(a);
          }
        }
        out.push_back(ideal);
      }
    }
    return out;
  }

  // S^1 a S^1 as a set.
  inline std::set<std::uint32_t> two_sided(semitop::FiniteSemigroup const& s, std::uint32_t a) {
    std::set<std::uint32_t> out{a};
    for (std::uint32_t x = 0; x < s.order(); ++x) {
      out.insert(s.mul(x, a));
      out.insert(s.mul(a, x));
      for (std::uint32_t y = 0; y < s.order(); ++y) {
        out.insert(s.mul(s.mul(x, a), y));
      }
    }
    return out;
  }

  inline std::size_t j_class_count(semitop::FiniteSemigroup const& s) {
    std::set<std::set<std::uint32_t>> ideals;
    for (std::uint32_t a = 0; a < s.order(); ++a) {
      ideals.insert(two_sided(s, a));
    }
    return ideals.size();
  }

  inline bool regular_by_definition(semitop::FiniteSemigroup const& s) {
    for (std::uint32_t a = 0; a < s.order(); ++a) {
      bool found = false;
      for (std::uint32_t t = 0; t < s.order() && !found; ++t) {
        found = s.mul(s.mul(a, t), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle
