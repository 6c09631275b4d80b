#pragma once

// Dense arbitrary-precision integer matrices and the lattice operations
// built on them: Smith and Hermite normal forms, determinants, integer
// kernels, and column-lattice predicates.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ckinv {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Row-major dense matrix over Z. A matrix with zero columns is the empty
/// generating set of the zero lattice in Z^rows.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// Horizontal concatenation [*this | other].
  IntMatrix hcat(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);

/// u * m * v == d with u, v unimodular and d diagonal, d(i,i) >= 0 and
/// d(i,i) | d(i+1,i+1). Zeros trail.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SmithDecomposition snf(const IntMatrix& m);

/// Canonical basis of the column lattice of m: lower echelon, zero columns
/// dropped, positive pivots, and entries left of each pivot reduced into
/// [0, pivot). The result has rows(m) rows and rank(m) columns.
IntMatrix hnf_columns(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}, in hnf_columns form.
IntMatrix kernel_basis(const IntMatrix& m);

bool lattice_equal(const IntMatrix& m1, const IntMatrix& m2);
bool lattice_contains(const IntMatrix& m, std::span<const Integer> v);

/// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace ckinv
