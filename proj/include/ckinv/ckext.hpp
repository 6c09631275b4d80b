#pragma once

// Extension-group invariants of Cuntz-Krieger algebras O_A.
//
//   Ext_w(O_A) = Z^N / (I - A) Z^N
//   Ext_s(O_A) = Z^N / (I - Ahat) Z^N,   Ahat = A + R_1 - A R_1
//
// with the distinguished classes
//
//   iota(m)   = [(I - A) k]  for any k with sum(k) = m
//   [T_A]_s   = -iota(1) - [1,...,1]     in Ext_s
//   [T_A]_w   = -[1,...,1]               in Ext_w
//
// Matrix indices in this header are 1-based where they name a row R_n or a
// column m, to match the usual statement of the formulas.

#include <optional>
#include <string>
#include <vector>

#include "ckinv/error.hpp"
#include "ckinv/exactmat.hpp"
#include "ckinv/fgab.hpp"

namespace ckinv {

/// Square matrix with entries in {0,1}, N > 1. Built through validate();
/// a matrix constructed with validate_relaxed() may additionally carry
/// irreducibility or permutation violations, recorded in violations().
class ZeroOneMatrix {
 public:
  std::size_t n() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  bool entry(std::size_t i, std::size_t j) const { return matrix_(i, j) != 0; }
  const std::vector<ErrorCode>& violations() const { return violations_; }

  ZeroOneMatrix transpose() const;
  /// I - A
  IntMatrix i_minus_a() const;

  friend bool operator==(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  friend ZeroOneMatrix validate(const IntMatrix&);
  friend ZeroOneMatrix validate_relaxed(const IntMatrix&);
  ZeroOneMatrix(IntMatrix m, std::vector<ErrorCode> violations)
      : matrix_(std::move(m)), violations_(std::move(violations)) {}

  IntMatrix matrix_;
  std::vector<ErrorCode> violations_;
};

/// Throws NotSquare, TooSmall, NotZeroOne, IsPermutation or NotIrreducible.
ZeroOneMatrix validate(const IntMatrix& raw);
/// Same shape and entry checks; irreducibility and permutation failures are
/// recorded instead of thrown.
ZeroOneMatrix validate_relaxed(const IntMatrix& raw);

/// Tarjan's algorithm over the digraph i -> j iff a(i,j) != 0.
bool is_strongly_connected(const IntMatrix& a);
bool is_permutation_matrix(const IntMatrix& a);

IntMatrix row_unit_matrix(std::size_t n, std::size_t size);
IntMatrix a_hat(const ZeroOneMatrix& a, std::size_t n);

FgAbelianGroup extw(const ZeroOneMatrix& a);
FgAbelianGroup exts(const ZeroOneMatrix& a);

GroupElement iota_hat(const ZeroOneMatrix& a, const Integer& m);
/// iota computed from an arbitrary k; the class depends only on sum(k).
GroupElement iota_hat_from(const ZeroOneMatrix& a, std::span<const Integer> k);

GroupElement toeplitz_strong(const ZeroOneMatrix& a);
GroupElement toeplitz_weak(const ZeroOneMatrix& a);

/// Fredholm-index vector d_i of the Toeplitz extension against the trivial
/// extension built from column m. Checked against -(I-A)e_m - 1.
IntVector toeplitz_d_vector(const ZeroOneMatrix& a, std::size_t m);

/// Quotient map Ext_s -> Ext_w induced by (I - Ahat)Z^N inside (I - A)Z^N.
GroupElement hat_q(const ZeroOneMatrix& a, const GroupElement& x);

/// g >= 0 with {sum(l) : (I - A) l = 0} = gZ. Zero means iota is injective.
Integer iota_kernel_generator(const ZeroOneMatrix& a);

/// Generators (I - A)(e_i - e_{i+1}), i = 1..N-1, of the image of the
/// coordinate-sum-zero sublattice.
IntMatrix im0_generators(const ZeroOneMatrix& a);

/// Im(I - A)_0 == (I - Ahat_n) Z^N for every n = 1..N.
bool verify_im0_identity(const ZeroOneMatrix& a);

struct ExactSequenceReport {
  bool i1_into_kernel_injective = false;   // Z -> Ker(I - Ahat)
  bool kernel_j_equals_image_i1 = false;   // exact at Ker(I - Ahat)
  bool image_j_equals_kernel_s = false;    // exact at Ker(I - A)
  bool image_s_equals_kernel_iota = false; // exact at Z
  bool kernel_q_equals_image_iota = false; // exact at Ext_s
  bool q_surjective = false;               // exact at Ext_w

  bool all() const {
    return i1_into_kernel_injective && kernel_j_equals_image_i1 &&
           image_j_equals_kernel_s && image_s_equals_kernel_iota &&
           kernel_q_equals_image_iota && q_surjective;
  }
};

ExactSequenceReport verify_exact_sequence(const ZeroOneMatrix& a);

/// Class of toeplitz_d_vector(a, m) equals toeplitz_strong(a) for every m.
bool verify_toeplitz_consistency(const ZeroOneMatrix& a);
/// hat_q(T_s) == T_w and hat_q(iota(m)) == 0 for the sampled m.
bool verify_commutation(const ZeroOneMatrix& a);

struct VerificationSummary {
  bool im0_identity = false;
  ExactSequenceReport exact_sequence;
  bool toeplitz_consistency = false;
  bool commutation = false;

  bool all() const {
    return im0_identity && exact_sequence.all() && toeplitz_consistency && commutation;
  }
};

VerificationSummary verify_all(const ZeroOneMatrix& a);

struct ExtInvariantReport {
  ZeroOneMatrix matrix;
  FgAbelianGroup extw_group;
  FgAbelianGroup exts_group;
  GroupElement toeplitz_weak;
  GroupElement toeplitz_strong;
  GroupElement iota_one;
  Integer det_i_minus_a;
  Integer iota_kernel_generator;
};

ExtInvariantReport invariants_report(const ZeroOneMatrix& a);

}  // namespace ckinv
