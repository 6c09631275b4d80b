#include "ckinv/ckext.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ckinv {

namespace {

void check_index(std::size_t n, std::size_t size, const char* what) {
  if (n < 1 || n > size) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(what) + " = " + std::to_string(n) +
                                                " outside 1.." + std::to_string(size));
  }
}

IntVector unit_vector(std::size_t size, std::size_t index0) {
  IntVector e(size);
  e[index0] = 1;
  return e;
}

IntVector ones(std::size_t size) { return IntVector(size, Integer(1)); }

IntMatrix column_matrix(const IntVector& v) { return IntMatrix::from_columns(v.size(), {v}); }

// Rows of a stacked on top of rows of b.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

// j_A(l) = (-(l_2 + ... + l_N), l_2, ..., l_N)
IntMatrix j_map(std::size_t n) {
  IntMatrix j(n, n);
  for (std::size_t c = 1; c < n; ++c) {
    j(0, c) = -1;
    j(c, c) = 1;
  }
  return j;
}

}  // namespace

ZeroOneMatrix ZeroOneMatrix::transpose() const {
  return ZeroOneMatrix(matrix_.transpose(), violations_);
}

IntMatrix ZeroOneMatrix::i_minus_a() const { return IntMatrix::identity(n()) - matrix_; }

bool is_permutation_matrix(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  std::vector<int> col_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1) return false;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

bool is_strongly_connected(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) adj[i].push_back(j);

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, components = 0;

  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        ++components;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
      }
    }
  }
  return components == 1;
}

static void check_shape_and_entries(const IntMatrix& raw) {
  if (!raw.is_square()) {
    throw Error(ErrorCode::NotSquare,
                std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
  }
  if (raw.rows() <= 1) {
    throw Error(ErrorCode::TooSmall, "N = " + std::to_string(raw.rows()) + ", need N > 1");
  }
  for (std::size_t i = 0; i < raw.rows(); ++i)
    for (std::size_t j = 0; j < raw.cols(); ++j)
      if (raw(i, j) != 0 && raw(i, j) != 1) {
        throw Error(ErrorCode::NotZeroOne, "entry (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ") = " +
                                               raw(i, j).get_str());
      }
}

ZeroOneMatrix validate(const IntMatrix& raw) {
  check_shape_and_entries(raw);
  if (is_permutation_matrix(raw)) {
    throw Error(ErrorCode::IsPermutation, "A is a permutation matrix");
  }
  if (!is_strongly_connected(raw)) {
    throw Error(ErrorCode::NotIrreducible, "the graph of A is not strongly connected");
  }
  return ZeroOneMatrix(raw, {});
}

ZeroOneMatrix validate_relaxed(const IntMatrix& raw) {
  check_shape_and_entries(raw);
  std::vector<ErrorCode> violations;
  if (is_permutation_matrix(raw)) violations.push_back(ErrorCode::IsPermutation);
  if (!is_strongly_connected(raw)) violations.push_back(ErrorCode::NotIrreducible);
  return ZeroOneMatrix(raw, std::move(violations));
}

IntMatrix row_unit_matrix(std::size_t n, std::size_t size) {
  check_index(n, size, "n");
  IntMatrix r(size, size);
  for (std::size_t j = 0; j < size; ++j) r(n - 1, j) = 1;
  return r;
}

IntMatrix a_hat(const ZeroOneMatrix& a, std::size_t n) {
  const std::size_t size = a.n();
  const IntMatrix r = row_unit_matrix(n, size);
  const IntMatrix& m = a.matrix();
  IntMatrix result = m + r - m * r;
  const IntMatrix id = IntMatrix::identity(size);
  if (id - result != a.i_minus_a() * (id - r)) {
    throw Error(ErrorCode::InternalError, "I - Ahat != (I - A)(I - R_n)");
  }
  return result;
}

static IntMatrix i_minus_a_hat(const ZeroOneMatrix& a, std::size_t n = 1) {
  return IntMatrix::identity(a.n()) - a_hat(a, n);
}

FgAbelianGroup extw(const ZeroOneMatrix& a) { return FgAbelianGroup::cokernel(a.i_minus_a()); }

FgAbelianGroup exts(const ZeroOneMatrix& a) { return FgAbelianGroup::cokernel(i_minus_a_hat(a)); }

GroupElement iota_hat_from(const ZeroOneMatrix& a, std::span<const Integer> k) {
  return exts(a).class_of(a.i_minus_a() * k);
}

GroupElement iota_hat(const ZeroOneMatrix& a, const Integer& m) {
  IntVector k(a.n());
  k[0] = m;
  return iota_hat_from(a, k);
}

GroupElement toeplitz_strong(const ZeroOneMatrix& a) {
  const FgAbelianGroup g = exts(a);
  IntVector k(a.n());
  k[0] = 1;
  const IntVector v = -(a.i_minus_a() * std::span<const Integer>(k)) - ones(a.n());
  return g.class_of(v);
}

GroupElement toeplitz_weak(const ZeroOneMatrix& a) {
  return extw(a).class_of(-ones(a.n()));
}

IntVector toeplitz_d_vector(const ZeroOneMatrix& a, std::size_t m) {
  check_index(m, a.n(), "m");
  const std::size_t col = m - 1;
  IntVector d(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    const bool edge = a.entry(i, col);
    if (i == col) {
      d[i] = edge ? -1 : -2;
    } else {
      d[i] = edge ? 0 : -1;
    }
  }
  const IntVector e = unit_vector(a.n(), col);
  const IntVector expected = -(a.i_minus_a() * std::span<const Integer>(e)) - ones(a.n());
  if (d != expected) {
    throw Error(ErrorCode::InternalError, "index vector disagrees with -(I-A)e_m - 1");
  }
  return d;
}

GroupElement hat_q(const ZeroOneMatrix& a, const GroupElement& x) {
  const FgAbelianGroup s = exts(a);
  if (!x.parent().same_as(s)) {
    throw Error(ErrorCode::ParentMismatch, "hat_q expects an element of Ext_s(A)");
  }
  const IntMatrix strong_rel = s.presentation();
  const IntMatrix weak_rel = a.i_minus_a();
  for (std::size_t j = 0; j < strong_rel.cols(); ++j) {
    if (!lattice_contains(weak_rel, strong_rel.column(j))) {
      throw Error(ErrorCode::InternalError, "(I - Ahat)Z^N is not inside (I - A)Z^N");
    }
  }
  return extw(a).class_of(s.representative(x));
}

Integer iota_kernel_generator(const ZeroOneMatrix& a) {
  const IntMatrix k = kernel_basis(a.i_minus_a());
  Integer g = 0;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < k.rows(); ++i) sum += k(i, j);
    g = gcd(g, sum);
  }
  return g;
}

IntMatrix im0_generators(const ZeroOneMatrix& a) {
  const std::size_t n = a.n();
  IntMatrix diffs(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diffs(i, i) = 1;
    diffs(i + 1, i) = -1;
  }
  return a.i_minus_a() * diffs;
}

bool verify_im0_identity(const ZeroOneMatrix& a) {
  const IntMatrix im0 = im0_generators(a);
  for (std::size_t n = 1; n <= a.n(); ++n) {
    if (!lattice_equal(im0, i_minus_a_hat(a, n))) return false;
  }
  return true;
}

ExactSequenceReport verify_exact_sequence(const ZeroOneMatrix& a) {
  ExactSequenceReport r;
  const std::size_t n = a.n();
  const IntMatrix weak_rel = a.i_minus_a();
  const IntMatrix strong_rel = i_minus_a_hat(a);
  const IntVector e1 = unit_vector(n, 0);
  const IntMatrix e1_col = column_matrix(e1);
  const IntMatrix ker_hat = kernel_basis(strong_rel);

  // i_1(n) = n e_1 lands in Ker(I - Ahat); injective since e_1 != 0.
  r.i1_into_kernel_injective =
      (strong_rel * std::span<const Integer>(e1)) == IntVector(n) &&
      lattice_contains(ker_hat, e1);

  const IntMatrix j = j_map(n);
  const IntMatrix j_on_kernel = j * ker_hat;
  {
    const IntMatrix coeffs = kernel_basis(j_on_kernel);
    r.kernel_j_equals_image_i1 = lattice_equal(ker_hat * coeffs, e1_col);
  }
  {
    IntMatrix sum_row(1, n);
    for (std::size_t c = 0; c < n; ++c) sum_row(0, c) = 1;
    const IntMatrix ker_s = kernel_basis(vstack(weak_rel, sum_row));
    r.image_j_equals_kernel_s = lattice_equal(j_on_kernel, ker_s);
  }
  {
    const Integer g = iota_kernel_generator(a);
    const auto order = element_order(iota_hat(a, 1));
    const bool orders_agree = order ? (*order == g) : (g == 0);
    r.image_s_equals_kernel_iota = orders_agree && iota_hat(a, g).is_zero();
  }
  {
    const IntMatrix gens = strong_rel.hcat(column_matrix(weak_rel.column(0)));
    r.kernel_q_equals_image_iota = lattice_equal(gens, weak_rel);
  }
  {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c)
      ok = lattice_contains(weak_rel, strong_rel.column(c));
    if (ok) {
      const FgAbelianGroup s = exts(a), w = extw(a);
      for (std::size_t i = 0; i < n && ok; ++i) {
        const IntVector e = unit_vector(n, i);
        ok = hat_q(a, s.class_of(e)) == w.class_of(e);
      }
    }
    r.q_surjective = ok;
  }
  return r;
}

bool verify_toeplitz_consistency(const ZeroOneMatrix& a) {
  const FgAbelianGroup s = exts(a);
  const GroupElement strong = toeplitz_strong(a);
  for (std::size_t m = 1; m <= a.n(); ++m) {
    if (!(s.class_of(toeplitz_d_vector(a, m)) == strong)) return false;
  }
  return true;
}

bool verify_commutation(const ZeroOneMatrix& a) {
  if (!(hat_q(a, toeplitz_strong(a)) == toeplitz_weak(a))) return false;
  for (long m = -3; m <= 3; ++m) {
    if (!hat_q(a, iota_hat(a, m)).is_zero()) return false;
  }
  return true;
}

VerificationSummary verify_all(const ZeroOneMatrix& a) {
  VerificationSummary v;
  v.im0_identity = verify_im0_identity(a);
  v.exact_sequence = verify_exact_sequence(a);
  v.toeplitz_consistency = verify_toeplitz_consistency(a);
  v.commutation = verify_commutation(a);
  return v;
}

ExtInvariantReport invariants_report(const ZeroOneMatrix& a) {
  ExtInvariantReport r{a,
                       extw(a),
                       exts(a),
                       toeplitz_weak(a),
                       toeplitz_strong(a),
                       iota_hat(a, 1),
                       determinant(a.i_minus_a()),
                       iota_kernel_generator(a)};
  if (!r.toeplitz_weak.parent().same_as(r.extw_group) ||
      !r.toeplitz_strong.parent().same_as(r.exts_group) ||
      !r.iota_one.parent().same_as(r.exts_group)) {
    throw Error(ErrorCode::InternalError, "report elements live in the wrong groups");
  }
  if (!(hat_q(a, r.toeplitz_strong) == r.toeplitz_weak)) {
    throw Error(ErrorCode::InternalError, "q([T_A]_s) != [T_A]_w");
  }
  return r;
}

}  // namespace ckinv
