#include <gtest/gtest.h>

#include "ckinv/error.hpp"
#include "ckinv/exactmat.hpp"
#include "support.hpp"

using namespace ckinv;
using testsupport::Rng;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    }
  }
  return true;
}

bool is_unimodular(const IntMatrix& m) {
  const Integer det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace

TEST(Snf, WorkedExample) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithDecomposition s = snf(m);
  EXPECT_EQ(s.u * m * s.v, s.d);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(s.rank(), 3u);
}

TEST(Snf, ZeroAndEmpty) {
  const SmithDecomposition z = snf(IntMatrix(3, 2));
  EXPECT_EQ(z.rank(), 0u);
  EXPECT_TRUE(z.d.is_zero());
  const SmithDecomposition e = snf(IntMatrix(3, 0));
  EXPECT_EQ(e.u * IntMatrix(3, 0) * e.v, e.d);
  EXPECT_EQ(e.rank(), 0u);
}

TEST(Snf, RandomDecompositionProperties) {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t r = testsupport::uniform(rng, 1, 8);
    const std::size_t c = testsupport::uniform(rng, 1, 8);
    const IntMatrix m = testsupport::random_matrix(rng, r, c, -9, 9);
    const SmithDecomposition s = snf(m);
    ASSERT_EQ(s.u * m * s.v, s.d) << m;
    ASSERT_TRUE(is_diagonal_chain(s.d)) << s.d;
    ASSERT_TRUE(is_unimodular(s.u));
    ASSERT_TRUE(is_unimodular(s.v));
  }
}

TEST(Snf, AgreesWithDeterminantalDivisors) {
  Rng rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t r = testsupport::uniform(rng, 1, 5);
    const std::size_t c = testsupport::uniform(rng, 1, 5);
    IntMatrix m = testsupport::random_matrix(rng, r, c, -6, 6);
    // Bias toward rank deficiency and large factors.
    if (iter % 3 == 0 && r > 1) m = IntMatrix::from_columns(r, {m.column(0)}).hcat(m);
    std::vector<Integer> diag = snf(m).diagonal();
    std::vector<Integer> nonzero;
    for (const auto& d : diag)
      if (d != 0) nonzero.push_back(d);
    EXPECT_EQ(nonzero, testsupport::invariant_factors_oracle(m)) << m;
  }
}

TEST(Hnf, CanonicalUnderUnimodularColumnOps) {
  Rng rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = testsupport::uniform(rng, 1, 6);
    const std::size_t c = testsupport::uniform(rng, 1, 6);
    const IntMatrix m = testsupport::random_matrix(rng, r, c, -9, 9);
    IntMatrix w = IntMatrix::identity(c);
    for (int k = 0; k < 12; ++k) {
      const std::size_t a = testsupport::uniform(rng, 0, c - 1);
      const std::size_t b = testsupport::uniform(rng, 0, c - 1);
      if (a != b) w.add_col_multiple(a, b, testsupport::uniform(rng, -3, 3));
      if (k % 5 == 0) w.swap_cols(a, b);
      if (k % 7 == 0) w.negate_col(a);
    }
    const IntMatrix h = hnf_columns(m);
    ASSERT_EQ(hnf_columns(m * w), h);
    ASSERT_EQ(hnf_columns(h), h);
    ASSERT_TRUE(lattice_equal(m, h));
    ASSERT_EQ(h.cols(), snf(m).rank());
  }
}

TEST(Hnf, ShapeExample) {
  const IntMatrix h = hnf_columns(IntMatrix{{2, 4}, {3, 5}});
  EXPECT_EQ(h, (IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(hnf_columns(IntMatrix{{0, 0}, {2, 4}}), (IntMatrix{{0}, {2}}));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 24);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Determinant, NonSquareThrows) {
  try {
    determinant(IntMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(Determinant, MatchesLeibnizAndSmith) {
  Rng rng(14);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = testsupport::uniform(rng, 1, 6);
    const IntMatrix m = testsupport::random_matrix(rng, n, n, -9, 9);
    const Integer det = determinant(m);
    ASSERT_EQ(det, testsupport::leibniz_det(m)) << m;
    const SmithDecomposition s = snf(m);
    Integer prod = 1;
    for (const auto& d : s.diagonal()) prod *= d;
    ASSERT_EQ(det, determinant(s.u) * determinant(s.v) * prod);
  }
}

TEST(Determinant, Multiplicative) {
  Rng rng(15);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testsupport::uniform(rng, 1, 7);
    const IntMatrix a = testsupport::random_matrix(rng, n, n, -5, 5);
    const IntMatrix b = testsupport::random_matrix(rng, n, n, -5, 5);
    ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Kernel, BasisProperties) {
  Rng rng(16);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = testsupport::uniform(rng, 1, 6);
    const std::size_t c = testsupport::uniform(rng, 1, 7);
    IntMatrix m = testsupport::random_matrix(rng, r, c, -4, 4);
    const IntMatrix k = kernel_basis(m);
    ASSERT_EQ(k.rows(), c);
    ASSERT_EQ(k.cols() + snf(m).rank(), c);
    ASSERT_TRUE((m * k).is_zero());
    // Saturation: Z^c / ker is torsion-free, so the kernel basis extends to
    // a basis and all its invariant factors are 1.
    for (const auto& d : snf(k).diagonal())
      if (d != 0) ASSERT_EQ(d, 1);
    const IntVector x = testsupport::random_vector(rng, k.cols(), -5, 5);
    const IntVector v = k * std::span<const Integer>(x);
    ASSERT_TRUE(lattice_contains(k, v));
  }
}

TEST(Kernel, Example) {
  EXPECT_EQ(kernel_basis(IntMatrix{{1, 1, 1}}).cols(), 2u);
  EXPECT_EQ(kernel_basis(IntMatrix{{1, 0}, {0, 1}}).cols(), 0u);
  EXPECT_EQ(kernel_basis(IntMatrix{{2, -4}}), (IntMatrix{{2}, {1}}));
}

TEST(Lattice, ContainsAndEquality) {
  const IntMatrix m{{2, 0}, {0, 3}};
  const IntVector in{4, -3};
  const IntVector out{1, 0};
  EXPECT_TRUE(lattice_contains(m, in));
  EXPECT_FALSE(lattice_contains(m, out));
  EXPECT_TRUE(lattice_equal(m, IntMatrix{{2, 2}, {3, 0}}));
  EXPECT_FALSE(lattice_equal(m, IntMatrix{{2, 0}, {0, 6}}));
  EXPECT_THROW(lattice_equal(m, IntMatrix(3, 1)), Error);
}

TEST(Lattice, ContainsAgreesWithSolvability) {
  // v in L(m) iff every invariant factor d_i divides (U v)_i, and
  // (U v)_i = 0 past the rank.
  Rng rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t r = testsupport::uniform(rng, 1, 5);
    const std::size_t c = testsupport::uniform(rng, 1, 5);
    const IntMatrix m = testsupport::random_matrix(rng, r, c, -6, 6);
    const IntVector v = testsupport::random_vector(rng, r, -6, 6);
    const SmithDecomposition s = snf(m);
    const IntVector uv = s.u * std::span<const Integer>(v);
    bool expected = true;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer d = i < std::min(r, c) ? s.d(i, i) : Integer(0);
      if (d == 0 ? uv[i] != 0 : uv[i] % d != 0) expected = false;
    }
    ASSERT_EQ(lattice_contains(m, v), expected) << m;
  }
}

TEST(Unimodular, InverseRoundTrip) {
  Rng rng(18);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = testsupport::uniform(rng, 1, 6);
    const SmithDecomposition s = snf(testsupport::random_matrix(rng, n, n, -9, 9));
    ASSERT_EQ(s.u * inverse_unimodular(s.u), IntMatrix::identity(n));
    ASSERT_EQ(inverse_unimodular(s.v) * s.v, IntMatrix::identity(n));
  }
}

TEST(Arithmetic, LargeEntriesStayExact) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 1) = Integer("123456789012345678901234567890");
  EXPECT_EQ(determinant(m), 1);
  EXPECT_EQ(determinant(m * m), 1);
  EXPECT_EQ((m * m)(0, 1), Integer("246913578024691357802469135780"));
}
