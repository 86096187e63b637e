#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "semitop/errors.hpp"
#include "semitop/matrix.hpp"

namespace semitop {

  std::string to_string(BigInt const& v) {
    return v.get_str();
  }

  namespace {
    void normalize(SparseMatrix::Column& col) {
      std::sort(col.begin(), col.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      std::size_t out = 0;
      for (std::size_t i = 0; i < col.size();) {
        auto         row = col[i].first;
        std::int64_t sum = 0;
        for (; i < col.size() && col[i].first == row; ++i) {
          if (__builtin_add_overflow(sum, col[i].second, &sum)) {
            throw std::overflow_error("sparse matrix entry overflows 64 bits");
          }
        }
        if (sum != 0) {
          col[out++] = {row, sum};
        }
      }
      col.resize(out);
    }
  }  // namespace

  SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<Column> columns) {
    SparseMatrix m;
    m._rows = rows;
    for (auto& col : columns) {
      for (auto const& [r, v] : col) {
        if (r >= rows) {
          throw ShapeError("row index " + std::to_string(r) + " out of range");
        }
        (void) v;
      }
      normalize(col);
    }
    m._columns = std::move(columns);
    return m;
  }

  SparseMatrix SparseMatrix::from_dense(std::vector<std::vector<std::int64_t>> const& rows) {
    std::size_t const r = rows.size();
    std::size_t const c = r == 0 ? 0 : rows.front().size();
    SparseMatrix      m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw ShapeError("ragged dense matrix");
      }
      for (std::size_t j = 0; j < c; ++j) {
        if (rows[i][j] != 0) {
          m._columns[j].emplace_back(static_cast<Index>(i), rows[i][j]);
        }
      }
    }
    return m;
  }

  std::size_t SparseMatrix::nnz() const noexcept {
    std::size_t n = 0;
    for (auto const& c : _columns) {
      n += c.size();
    }
    return n;
  }

  std::int64_t SparseMatrix::at(std::size_t i, std::size_t j) const {
    auto const& col = _columns.at(j);
    auto        it  = std::lower_bound(col.begin(), col.end(), i, [](auto const& e, std::size_t r) {
      return e.first < r;
    });
    return it != col.end() && it->first == i ? it->second : 0;
  }

  void SparseMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
    if (i >= _rows || j >= _columns.size()) {
      throw ShapeError("sparse matrix index out of range");
    }
    auto& col = _columns[j];
    auto  it  = std::lower_bound(col.begin(), col.end(), i, [](auto const& e, std::size_t r) {
      return e.first < r;
    });
    if (it != col.end() && it->first == i) {
      if (__builtin_add_overflow(it->second, v, &it->second)) {
        throw std::overflow_error("sparse matrix entry overflows 64 bits");
      }
      if (it->second == 0) {
        col.erase(it);
      }
    } else if (v != 0) {
      col.insert(it, {static_cast<Index>(i), v});
    }
  }

  std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
    std::vector<std::vector<std::int64_t>> out(_rows, std::vector<std::int64_t>(cols(), 0));
    for (std::size_t j = 0; j < cols(); ++j) {
      for (auto const& [i, v] : _columns[j]) {
        out[i][j] = v;
      }
    }
    return out;
  }

  SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), _rows);
    for (std::size_t j = 0; j < cols(); ++j) {
      for (auto const& [i, v] : _columns[j]) {
        t._columns[i].emplace_back(static_cast<Index>(j), v);
      }
    }
    return t;
  }

  void SparseMatrix::write_text(std::ostream& out) const {
    out << _rows << ' ' << cols() << ' ' << nnz() << '\n';
    for (std::size_t j = 0; j < cols(); ++j) {
      for (auto const& [i, v] : _columns[j]) {
        out << i << ' ' << j << ' ' << v << '\n';
      }
    }
  }

  SparseMatrix SparseMatrix::read_text(std::istream& in) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> rows >> cols >> nnz)) {
      throw ShapeError("sparse matrix header must be 'rows cols nnz'");
    }
    std::vector<Column> columns(cols);
    for (std::size_t k = 0; k < nnz; ++k) {
      std::size_t  i = 0, j = 0;
      std::int64_t v = 0;
      if (!(in >> i >> j >> v)) {
        throw ShapeError("truncated sparse matrix: expected " + std::to_string(nnz) + " triples");
      }
      if (j >= cols) {
        throw ShapeError("column index " + std::to_string(j) + " out of range");
      }
      columns[j].emplace_back(static_cast<Index>(i), v);
    }
    return from_columns(rows, std::move(columns));
  }

  SparseMatrix multiply(SparseMatrix const& a, SparseMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw ShapeError("matrix shapes do not compose");
    }
    std::vector<SparseMatrix::Column> out(b.cols());
    std::vector<BigInt>               acc(a.rows());
    std::vector<bool>                 touched(a.rows(), false);
    std::vector<SparseMatrix::Index>  rows;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      rows.clear();
      for (auto const& [k, bv] : b.column(j)) {
        for (auto const& [i, av] : a.column(k)) {
          if (!touched[i]) {
            touched[i] = true;
            acc[i]     = 0;
            rows.push_back(i);
          }
          acc[i] += BigInt(static_cast<long>(av)) * static_cast<long>(bv);
        }
      }
      for (auto i : rows) {
        touched[i] = false;
        if (acc[i] != 0) {
          if (!acc[i].fits_slong_p()) {
            throw std::overflow_error("matrix product entry overflows 64 bits");
          }
          out[j].emplace_back(i, acc[i].get_si());
        }
      }
    }
    return SparseMatrix::from_columns(a.rows(), std::move(out));
  }

  BigMatrix to_big(SparseMatrix const& a) {
    BigMatrix m(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (auto const& [i, v] : a.column(j)) {
        m(i, j) = static_cast<long>(v);
      }
    }
    return m;
  }

  BigMatrix multiply(BigMatrix const& a, BigMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw ShapeError("matrix shapes do not compose");
    }
    BigMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(k, j) != 0) {
            out(i, j) += a(i, k) * b(k, j);
          }
        }
      }
    }
    return out;
  }

  BigInt determinant(BigMatrix m) {
    std::size_t const n = m.rows();
    if (m.cols() != n) {
      throw ShapeError("determinant of a non-square matrix");
    }
    if (n == 0) {
      return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        m.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          m(i, j) = v;
        }
        m(i, k) = 0;
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

}  // namespace semitop
