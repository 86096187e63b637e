#include "semitop/smith.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

#include "semitop/errors.hpp"

namespace semitop {

  std::vector<BigInt> SnfResult::torsion() const {
    std::vector<BigInt> out;
    for (auto const& d : diagonal) {
      if (d > 1) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::vector<BigInt> invariant_factors(std::vector<BigInt> pivots) {
    for (auto& p : pivots) {
      p = abs(p);
    }
    // Units are already in place; only the rest needs gcd/lcm normalization.
    std::size_t const units = static_cast<std::size_t>(
        std::count_if(pivots.begin(), pivots.end(), [](auto const& p) { return p == 1; }));
    std::vector<BigInt> rest;
    for (auto& p : pivots) {
      if (p != 1) {
        rest.push_back(p);
      }
    }
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        BigInt g = gcd(rest[i], rest[j]);
        if (g != rest[i]) {
          BigInt l = rest[i] / g * rest[j];
          rest[i]  = g;
          rest[j]  = l;
        }
      }
    }
    std::vector<BigInt> out(units, BigInt(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  namespace {

    struct Overflow {};

    // Checked 64-bit arithmetic; any overflow aborts the run so it can be
    // redone in arbitrary precision.
    struct Checked64 {
      using T = std::int64_t;

      static T sub_mul(T a, T q, T b) {
        T p = 0, r = 0;
        if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) {
          throw Overflow{};
        }
        return r;
      }
      static T mul(T a, T b) {
        T p = 0;
        if (__builtin_mul_overflow(a, b, &p)) {
          throw Overflow{};
        }
        return p;
      }
      static T quot(T b, T a) {
        if (b == INT64_MIN && a == -1) {
          throw Overflow{};
        }
        return b / a;
      }
      static T abs(T a) {
        if (a == INT64_MIN) {
          throw Overflow{};
        }
        return a < 0 ? -a : a;
      }
      static bool is_unit(T a) {
        return a == 1 || a == -1;
      }
      static T from(std::int64_t v) {
        return v;
      }
      static BigInt big(T v) {
        return BigInt(static_cast<long>(v));
      }
    };

    struct Arbitrary {
      using T = BigInt;

      static T sub_mul(T const& a, T const& q, T const& b) {
        return a - q * b;
      }
      static T mul(T const& a, T const& b) {
        return a * b;
      }
      static T quot(T const& b, T const& a) {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        return q;
      }
      static T abs(T const& a) {
        return ::abs(a);
      }
      static bool is_unit(T const& a) {
        return a == 1 || a == -1;
      }
      static T from(std::int64_t v) {
        return BigInt(static_cast<long>(v));
      }
      static BigInt big(T const& v) {
        return v;
      }
    };

    using Index = SparseMatrix::Index;

    // Elimination on a column-list copy of the matrix.  Columns of A are the
    // stored vectors; "slots" are the rows of A.  A pivot at (slot r, column
    // j) first clears slot r from every other column by column operations,
    // then (Smith mode) reduces column j against the pivot by row operations
    // that only touch column j, and finally drops column j.  In rank mode the
    // column operations are fraction-free and column j is dropped unreduced.
    template <typename A>
    class Eliminator {
      using T = typename A::T;
      struct Entry {
        Index row;
        T     value;
      };
      using Col = std::vector<Entry>;

     public:
      Eliminator(SparseMatrix const& m, bool rank_only)
          : _slot_cols(m.rows()),
            _slot_count(m.rows(), 0),
            _stamp(m.cols(), 0),
            _rank_only(rank_only) {
        _cols.resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
          for (auto const& [i, v] : m.column(j)) {
            _cols[j].push_back(Entry{i, A::from(v)});
            _slot_cols[i].push_back(static_cast<Index>(j));
            ++_slot_count[i];
          }
          if (!_cols[j].empty()) {
            _active.push_back(static_cast<Index>(j));
          }
        }
      }

      std::vector<BigInt> run() {
        Index r = 0, j = 0;
        while (choose(r, j)) {
          pivot(r, j);
        }
        return std::move(_pivots);
      }

     private:
      T const* find(Index col, Index row) const {
        auto const& c  = _cols[col];
        auto        it = std::lower_bound(c.begin(), c.end(), row, [](Entry const& e, Index r) {
          return e.row < r;
        });
        return it != c.end() && it->row == row ? &it->value : nullptr;
      }

      // col[k] <- alpha * col[k] - beta * col[j]; alpha == nullptr means 1.
      void combine(Index k, T const* alpha, T const& beta, Index j) {
        Col const& cj = _cols[j];
        Col&       ck = _cols[k];
        _scratch.clear();
        std::size_t a = 0, b = 0;
        while (a < ck.size() || b < cj.size()) {
          if (b == cj.size() || (a < ck.size() && ck[a].row < cj[b].row)) {
            T v = alpha ? A::mul(*alpha, ck[a].value) : ck[a].value;
            _scratch.push_back(Entry{ck[a].row, std::move(v)});
            ++a;
          } else if (a == ck.size() || cj[b].row < ck[a].row) {
            Index const row = cj[b].row;
            _scratch.push_back(Entry{row, A::sub_mul(T(0), beta, cj[b].value)});
            ++_slot_count[row];
            _slot_cols[row].push_back(k);
            ++b;
          } else {
            Index const row = ck[a].row;
            T           v   = alpha ? A::mul(*alpha, ck[a].value) : ck[a].value;
            v               = A::sub_mul(v, beta, cj[b].value);
            if (v != 0) {
              _scratch.push_back(Entry{row, std::move(v)});
            } else {
              --_slot_count[row];
            }
            ++a;
            ++b;
          }
        }
        std::swap(ck, _scratch);
      }

      // Live columns other than `except` with a nonzero entry in slot r; also
      // rewrites the slot's column list without stale or repeated entries.
      std::vector<Index> columns_in_slot(Index r, Index except) {
        ++_generation;
        std::vector<Index> out;
        std::vector<Index> fresh;
        for (auto k : _slot_cols[r]) {
          if (_stamp[k] == _generation) {
            continue;
          }
          _stamp[k] = _generation;
          if (find(k, r) != nullptr) {
            fresh.push_back(k);
            if (k != except) {
              out.push_back(k);
            }
          }
        }
        _slot_cols[r] = std::move(fresh);
        std::sort(out.begin(), out.end());
        return out;
      }

      void pivot(Index r, Index j) {
        while (true) {
          T const a = *find(j, r);

          // Clear slot r from every other column.
          bool  improved = false;
          Index best_col = 0;
          T     best_abs = 0;
          for (Index k : columns_in_slot(r, j)) {
            T const b = *find(k, r);
            if (_rank_only) {
              combine(k, &a, b, j);
              continue;
            }
            combine(k, nullptr, A::quot(b, a), j);
            if (T const* rem = find(k, r)) {
              T const ra = A::abs(*rem);
              if (!improved || ra < best_abs) {
                improved = true;
                best_col = k;
                best_abs = ra;
              }
            }
          }
          if (improved) {
            j = best_col;
            continue;
          }

          if (!_rank_only) {
            // Slot r now meets only column j, so row operations against slot r
            // change nothing but column j: reduce its other entries mod a.
            Col&        cj       = _cols[j];
            bool        leftover = false;
            Index       best_row = 0;
            T           best     = 0;
            std::size_t out      = 0;
            for (std::size_t e = 0; e < cj.size(); ++e) {
              if (cj[e].row != r) {
                T rem = A::sub_mul(cj[e].value, A::quot(cj[e].value, a), a);
                if (rem == 0) {
                  --_slot_count[cj[e].row];
                  continue;
                }
                T const ra = A::abs(rem);
                if (!leftover || ra < best) {
                  leftover = true;
                  best_row = cj[e].row;
                  best     = ra;
                }
                cj[e].value = std::move(rem);
              }
              cj[out++] = std::move(cj[e]);
            }
            cj.resize(out);
            if (leftover) {
              r = best_row;
              continue;
            }
          }

          _pivots.push_back(A::big(A::abs(a)));
          for (auto const& e : _cols[j]) {
            --_slot_count[e.row];
          }
          _cols[j].clear();
          _slot_cols[r].clear();
          return;
        }
      }

      // Markowitz-style choice: a unit pivot minimizing (slot count - 1) *
      // (column length - 1), searched over the shortest columns; failing
      // that, the entry of least absolute value, ties broken the same way.
      bool choose(Index& r, Index& j) {
        std::size_t out = 0;
        for (auto c : _active) {
          if (!_cols[c].empty()) {
            _active[out++] = c;
          }
        }
        _active.resize(out);
        if (_active.empty()) {
          return false;
        }

        std::size_t max_len = 0;
        for (auto c : _active) {
          max_len = std::max(max_len, _cols[c].size());
        }
        _bucket_start.assign(max_len + 2, 0);
        for (auto c : _active) {
          ++_bucket_start[_cols[c].size() + 1];
        }
        for (std::size_t l = 1; l < _bucket_start.size(); ++l) {
          _bucket_start[l] += _bucket_start[l - 1];
        }
        _order.resize(_active.size());
        {
          auto fill = _bucket_start;
          for (auto c : _active) {
            _order[fill[_cols[c].size()]++] = c;
          }
        }

        bool        found      = false;
        std::size_t best_score = 0;
        std::size_t first_len  = 0;
        for (auto c : _order) {
          std::size_t const len = _cols[c].size();
          if (found && (len > first_len + 1 || best_score == 0)) {
            break;
          }
          for (auto const& e : _cols[c]) {
            if (!A::is_unit(e.value)) {
              continue;
            }
            std::size_t const score = (_slot_count[e.row] - 1) * (len - 1);
            if (!found || score < best_score) {
              if (!found) {
                first_len = len;
              }
              found      = true;
              best_score = score;
              r          = e.row;
              j          = c;
            }
          }
        }
        if (found) {
          return true;
        }

        T best_abs = 0;
        for (auto c : _order) {
          std::size_t const len = _cols[c].size();
          for (auto const& e : _cols[c]) {
            T const           v     = A::abs(e.value);
            std::size_t const score = (_slot_count[e.row] - 1) * (len - 1);
            if (!found || v < best_abs || (v == best_abs && score < best_score)) {
              found      = true;
              best_abs   = v;
              best_score = score;
              r          = e.row;
              j          = c;
            }
          }
        }
        return true;
      }

      std::vector<Col>                _cols;
      std::vector<std::vector<Index>> _slot_cols;
      std::vector<std::size_t>        _slot_count;
      std::vector<Index>              _active;
      std::vector<std::uint64_t>      _stamp;
      std::uint64_t                   _generation = 0;
      std::vector<std::size_t>        _bucket_start;
      std::vector<Index>              _order;
      Col                             _scratch;
      std::vector<BigInt>             _pivots;
      bool                            _rank_only;
    };

    std::vector<BigInt> sparse_pivots(SparseMatrix const& a, bool rank_only) {
      try {
        return Eliminator<Checked64>(a, rank_only).run();
      } catch (Overflow const&) {
        return Eliminator<Arbitrary>(a, rank_only).run();
      }
    }

    BigInt min_abs_nonzero_position(BigMatrix const& a,
                                    std::size_t      from_row,
                                    std::size_t      from_col,
                                    std::size_t&     pi,
                                    std::size_t&     pj) {
      BigInt best = 0;
      for (std::size_t i = from_row; i < a.rows(); ++i) {
        for (std::size_t j = from_col; j < a.cols(); ++j) {
          if (a(i, j) != 0 && (best == 0 || abs(a(i, j)) < best)) {
            best = abs(a(i, j));
            pi   = i;
            pj   = j;
          }
        }
      }
      return best;
    }

    BigInt truncated_quotient(BigInt const& b, BigInt const& a) {
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
      return q;
    }

    SnfResult dense_snf(BigMatrix a, bool with_transforms) {
      std::size_t const m = a.rows();
      std::size_t const n = a.cols();
      BigMatrix         u, v, vinv;
      if (with_transforms) {
        u    = BigMatrix::identity(m);
        v    = BigMatrix::identity(n);
        vinv = BigMatrix::identity(n);
      }
      auto row_add = [&](std::size_t dst, std::size_t src, BigInt const& q) {
        a.add_row_multiple(dst, src, q);
        if (with_transforms) {
          u.add_row_multiple(dst, src, q);
        }
      };
      auto col_add = [&](std::size_t dst, std::size_t src, BigInt const& q) {
        a.add_col_multiple(dst, src, q);
        if (with_transforms) {
          v.add_col_multiple(dst, src, q);
          vinv.add_row_multiple(src, dst, -q);
        }
      };
      auto row_swap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        if (with_transforms) {
          u.swap_rows(x, y);
        }
      };
      auto col_swap = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        if (with_transforms) {
          v.swap_cols(x, y);
          vinv.swap_rows(x, y);
        }
      };

      std::size_t const limit = std::min(m, n);
      std::size_t       t     = 0;
      for (; t < limit; ++t) {
        std::size_t pi = 0, pj = 0;
        if (min_abs_nonzero_position(a, t, t, pi, pj) == 0) {
          break;
        }
        row_swap(t, pi);
        col_swap(t, pj);
        while (true) {
          bool clean = true;
          for (std::size_t i = t + 1; i < m; ++i) {
            if (a(i, t) != 0) {
              row_add(i, t, -truncated_quotient(a(i, t), a(t, t)));
              clean = clean && a(i, t) == 0;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a(t, j) != 0) {
              col_add(j, t, -truncated_quotient(a(t, j), a(t, t)));
              clean = clean && a(t, j) == 0;
            }
          }
          if (!clean) {
            // A remainder smaller than the pivot sits in row t or column t.
            BigInt      best = 0;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i) {
              if (a(i, t) != 0 && (best == 0 || abs(a(i, t)) < best)) {
                best = abs(a(i, t));
                bi   = i;
                bj   = t;
              }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
              if (a(t, j) != 0 && (best == 0 || abs(a(t, j)) < best)) {
                best = abs(a(t, j));
                bi   = t;
                bj   = j;
              }
            }
            row_swap(t, bi);
            col_swap(t, bj);
            continue;
          }
          // Enforce divisibility of the trailing block by the pivot.
          bool fixed = false;
          for (std::size_t i = t + 1; i < m && !fixed; ++i) {
            for (std::size_t j = t + 1; j < n && !fixed; ++j) {
              if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                row_add(t, i, 1);
                fixed = true;
              }
            }
          }
          if (!fixed) {
            break;
          }
        }
        if (a(t, t) < 0) {
          for (std::size_t j = 0; j < n; ++j) {
            a(t, j) = -a(t, j);
          }
          if (with_transforms) {
            for (std::size_t j = 0; j < m; ++j) {
              u(t, j) = -u(t, j);
            }
          }
        }
      }

      SnfResult out;
      out.rows = m;
      out.cols = n;
      out.rank = t;
      out.diagonal.resize(limit);
      for (std::size_t i = 0; i < limit; ++i) {
        out.diagonal[i] = a(i, i);
      }
      if (with_transforms) {
        out.transforms = SnfTransforms{std::move(u), std::move(v), std::move(vinv)};
      }
      return out;
    }

  }  // namespace

  SnfResult smith_normal_form(BigMatrix const& a, bool with_transforms) {
    return dense_snf(a, with_transforms);
  }

  SnfResult smith_normal_form(SparseMatrix const& a, bool with_transforms) {
    if (with_transforms) {
      return dense_snf(to_big(a), true);
    }
    auto      factors = invariant_factors(sparse_pivots(a, false));
    SnfResult out;
    out.rows = a.rows();
    out.cols = a.cols();
    out.rank = factors.size();
    out.diagonal.assign(std::min(a.rows(), a.cols()), BigInt(0));
    std::copy(factors.begin(), factors.end(), out.diagonal.begin());
    return out;
  }

  std::size_t rational_rank(SparseMatrix const& a) {
    return sparse_pivots(a, true).size();
  }

  BigMatrix kernel_basis(SnfResult const& snf) {
    if (!snf.transforms) {
      throw Error("kernel_basis needs a Smith form computed with transforms");
    }
    return snf.transforms->v.col_block(snf.rank, snf.cols - snf.rank);
  }

  BigMatrix kernel_coordinates(SnfResult const& snf, BigMatrix const& b) {
    if (!snf.transforms) {
      throw Error("kernel_coordinates needs a Smith form computed with transforms");
    }
    if (b.rows() != snf.cols) {
      throw ShapeError("matrix does not map into the kernel's ambient space");
    }
    BigMatrix const full = multiply(snf.transforms->v_inverse, b);
    for (std::size_t i = 0; i < snf.rank; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (full(i, j) != 0) {
          throw Error("column " + std::to_string(j) + " does not lie in the kernel");
        }
      }
    }
    return full.row_block(snf.rank, snf.cols - snf.rank);
  }

}  // namespace semitop
