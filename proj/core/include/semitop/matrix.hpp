#pragma once

// Integer matrices.
//
// SparseMatrix stores columns as sorted (row, value) lists with 64-bit
// entries; boundary matrices and other inputs live here.  DenseMatrix<T> is a
// plain row-major matrix, instantiated with BigInt wherever entries may grow.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace semitop {

  using BigInt = mpz_class;

  std::string to_string(BigInt const& v);

  class SparseMatrix {
   public:
    using Index  = std::uint32_t;
    using Entry  = std::pair<Index, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _columns(cols) {}

    // Columns may hold unsorted and repeated rows; they are sorted, summed and
    // stripped of zeros.
    static SparseMatrix from_columns(std::size_t rows, std::vector<Column> columns);

    static SparseMatrix from_dense(std::vector<std::vector<std::int64_t>> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _columns.size();
    }
    std::size_t nnz() const noexcept;

    Column const& column(std::size_t j) const {
      return _columns.at(j);
    }
    std::vector<Column> const& columns() const noexcept {
      return _columns;
    }

    std::int64_t at(std::size_t i, std::size_t j) const;

    // Adds v to entry (i, j).
    void add(std::size_t i, std::size_t j, std::int64_t v);

    bool is_zero() const noexcept {
      return nnz() == 0;
    }

    std::vector<std::vector<std::int64_t>> to_dense() const;

    SparseMatrix transpose() const;

    bool operator==(SparseMatrix const&) const = default;

    // Header "rows cols nnz" followed by one "row col value" triple per line.
    void                write_text(std::ostream& out) const;
    static SparseMatrix read_text(std::istream& in);

   private:
    std::size_t         _rows = 0;
    std::vector<Column> _columns;
  };

  // Exact product with BigInt accumulation; every entry of the result must fit
  // in 64 bits (throws std::overflow_error otherwise).
  SparseMatrix multiply(SparseMatrix const& a, SparseMatrix const& b);

  template <typename T>
  class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
      DenseMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    T& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    T const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    bool operator==(DenseMatrix const&) const = default;

    void swap_rows(std::size_t a, std::size_t b) {
      if (a != b) {
        for (std::size_t j = 0; j < _cols; ++j) {
          std::swap((*this)(a, j), (*this)(b, j));
        }
      }
    }

    void swap_cols(std::size_t a, std::size_t b) {
      if (a != b) {
        for (std::size_t i = 0; i < _rows; ++i) {
          std::swap((*this)(i, a), (*this)(i, b));
        }
      }
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, T const& q) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(src, j) != 0) {
          (*this)(dst, j) += q * (*this)(src, j);
        }
      }
    }

    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, T const& q) {
      for (std::size_t i = 0; i < _rows; ++i) {
        if ((*this)(i, src) != 0) {
          (*this)(i, dst) += q * (*this)(i, src);
        }
      }
    }

    DenseMatrix transpose() const {
      DenseMatrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    // Rows [first, first + count) as a new matrix.
    DenseMatrix row_block(std::size_t first, std::size_t count) const {
      DenseMatrix out(count, _cols);
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          out(i, j) = (*this)(first + i, j);
        }
      }
      return out;
    }

    DenseMatrix col_block(std::size_t first, std::size_t count) const {
      DenseMatrix out(_rows, count);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          out(i, j) = (*this)(i, first + j);
        }
      }
      return out;
    }

   private:
    std::size_t    _rows = 0;
    std::size_t    _cols = 0;
    std::vector<T> _data;
  };

  using BigMatrix = DenseMatrix<BigInt>;

  BigMatrix to_big(SparseMatrix const& a);
  BigMatrix multiply(BigMatrix const& a, BigMatrix const& b);

  // Bareiss fraction-free determinant of a square matrix.
  BigInt determinant(BigMatrix m);

}  // namespace semitop
