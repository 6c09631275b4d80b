#include "ckinv/exactmat.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "ckinv/error.hpp"

namespace ckinv {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    }
    std::size_t j = 0;
    for (long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch, "column length");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "hcat row counts differ");
  }
  IntMatrix r(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
  }
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  }
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  }
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product");
  }
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols_ != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  }
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x = -x;
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(d.rows(), d.cols());
  while (r < k && d(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(d.rows(), d.cols());
  std::vector<Integer> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = d(i, i);
  return diag;
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(
    const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& x = d(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!best || ax < best_abs) {
        best = {i, j};
        best_abs = ax;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  const std::size_t n = m.rows(), cols = m.cols();
  SmithDecomposition s{IntMatrix::identity(n), m, IntMatrix::identity(cols)};
  IntMatrix& d = s.d;
  const std::size_t steps = std::min(n, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool finished = false;
    for (;;) {
      auto pivot = min_abs_entry(d, t);
      if (!pivot) {
        finished = true;
        break;
      }
      d.swap_rows(t, pivot->first);
      s.u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      s.v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = -floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        s.u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = -floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        s.v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull a row with a non-multiple entry into row t and
      // reduce again; the pivot strictly shrinks.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (finished) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hermite normal form (column style)

IntMatrix hnf_columns(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t n = h.rows(), cols = h.cols();
  std::size_t k = 0;
  for (std::size_t r = 0; r < n && k < cols; ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      Integer best_abs;
      for (std::size_t j = k; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        Integer a = abs(h(r, j));
        if (!best || a < best_abs) {
          best = j;
          best_abs = a;
        }
      }
      if (!best) break;
      h.swap_cols(k, *best);
      bool clean = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        h.add_col_multiple(j, k, -floor_div(h(r, j), h(r, k)));
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (k >= cols || h(r, k) == 0) continue;
    if (h(r, k) < 0) h.negate_col(k);
    for (std::size_t j = 0; j < k; ++j) {
      h.add_col_multiple(j, k, -floor_div(h(r, j), h(r, k)));
    }
    ++k;
  }
  IntMatrix out(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = h(i, j);
  return out;
}

// ---------------------------------------------------------------------------

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  // Bareiss fraction-free elimination; every division is exact.
  IntMatrix a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithDecomposition s = snf(m);
  const std::size_t r = s.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = s.v(i, j);
  return hnf_columns(k);
}

bool lattice_equal(const IntMatrix& m1, const IntMatrix& m2) {
  if (m1.rows() != m2.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "lattices live in different ambient ranks");
  }
  return hnf_columns(m1) == hnf_columns(m2);
}

bool lattice_contains(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from row count");
  }
  // Back-substitution against the echelon basis.
  const IntMatrix h = hnf_columns(m);
  IntVector residual(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    while (h(r, j) == 0) {
      if (residual[r] != 0) return false;
      ++r;
    }
    if (!mpz_divisible_p(residual[r].get_mpz_t(), h(r, j).get_mpz_t())) return false;
    Integer q = residual[r] / h(r, j);
    for (std::size_t i = r; i < h.rows(); ++i) residual[i] -= q * h(i, j);
    ++r;
  }
  for (; r < residual.size(); ++r)
    if (residual[r] != 0) return false;
  return true;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse");
  // u m v = I  =>  m^{-1} = v u
  const SmithDecomposition s = snf(m);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (s.d(i, i) != 1) throw Error(ErrorCode::InternalError, "matrix is not unimodular");
  }
  return s.v * s.u;
}

}  // namespace ckinv
