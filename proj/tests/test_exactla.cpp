#include <gtest/gtest.h>

#include <random>

#include "lefschetz/exactla.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_pct, int range) {
  std::uniform_int_distribution<int> pct(0, 99), val(-range, range), den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < density_pct) m.set(r, c, make_rational(val(rng), den(rng)));
  return m;
}

oracle::Dense to_oracle(const RatMatrix& m) { return m.to_dense(); }

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(0, 5).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(RatMatrix, NeverStoresZeros) {
  RatMatrix m(2, 3);
  m.set(0, 1, Rational(5));
  m.set(0, 1, Rational(0));
  EXPECT_EQ(m.nnz(), 0u);
  EXPECT_THROW(m.set(2, 0, Rational(1)), Error);
  EXPECT_THROW(m.append_row({SparseEntry(0, Rational(0))}), Error);
  EXPECT_THROW(m.append_row({SparseEntry(3, Rational(1))}), Error);
}

TEST(Rref, Identity) {
  auto e = rref(RatMatrix::identity(3));
  EXPECT_EQ(e.rank, 3u);
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, ZeroMatrix) {
  auto e = rref(RatMatrix(2, 4));
  EXPECT_EQ(e.rank, 0u);
  EXPECT_TRUE(e.pivot_columns.empty());
}

TEST(Rref, ProportionalRows) {
  auto e = rref(RatMatrix::from_ints({{1, 2}, {2, 4}}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e.matrix, RatMatrix::from_ints({{1, 2}}));
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(RatMatrix::from_ints({{1, 0}, {0, 1}})), 2u);
  EXPECT_EQ(rank(RatMatrix::from_ints({{1, 1, 1, 1, 1}})), 1u);
}

TEST(Rank, DegreeTwoSliceOfSmallGorensteinIdeal) {
  // Generators x^2, y^2 - xz, z^2, xy, yz on the basis x^2, xy, xz, y^2, yz, z^2.
  auto m = RatMatrix::from_ints({
      {1, 0, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 0},
      {0, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0},
  });
  EXPECT_EQ(oracle::rank(to_oracle(m)), 5u);
  EXPECT_EQ(rank(m), 5u);
}

TEST(KernelBasis, EdgeCases) {
  EXPECT_TRUE(kernel_basis(RatMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(RatMatrix(1, 3)).size(), 3u);
  auto k = kernel_basis(RatMatrix::from_ints({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(RatMatrix::identity(4)), 1);
  EXPECT_EQ(determinant(RatMatrix::from_ints({{1, -3}, {2, 1}})), 7);
  EXPECT_EQ(determinant(RatMatrix::from_ints({{2, 4}, {1, 2}})), 0);
  EXPECT_EQ(determinant(RatMatrix::from_ints({{0, 1}, {1, 0}})), -1);
  try {
    determinant(RatMatrix(2, 3));
    FAIL() << "expected NotSquare";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquare);
  }
}

TEST(Determinant, MatchesCofactorExpansionWithFractions) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 6;
    RatMatrix m = random_matrix(rng, n, n, 70, 5);
    EXPECT_EQ(determinant(m), oracle::cofactor_det(to_oracle(m))) << "trial " << t;
  }
}

TEST(Determinant, ElementaryOperationsScaleAsExpected) {
  // Product of row scalings and shears applied to I has det = product of scalings.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 5), val(-4, 4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 6;
    auto a = RatMatrix::identity(n).to_dense();
    Rational expected = 1;
    for (int op = 0; op < 12; ++op) {
      std::size_t i = static_cast<std::size_t>(pick(rng)), j = static_cast<std::size_t>(pick(rng));
      if (op % 2 == 0) {
        Rational s = make_rational(val(rng) < 0 ? -1 - pick(rng) : 1 + pick(rng), 1 + pick(rng));
        for (auto& x : a[i]) x *= s;
        expected *= s;
      } else if (i != j) {
        Rational f = val(rng);
        for (std::size_t k = 0; k < n; ++k) a[i][k] += f * a[j][k];
      }
    }
    EXPECT_EQ(determinant(RatMatrix::from_dense(a, n)), expected);
  }
}

TEST(Properties, RandomMatrices) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + t % 7, cols = 1 + (t / 7) % 8;
    RatMatrix m = random_matrix(rng, rows, cols, 15 + (t % 5) * 20, 3);
    EchelonForm e = rref(m);

    // Rank agrees with the oracle and with the transpose.
    EXPECT_EQ(e.rank, oracle::rank(to_oracle(m)));
    EXPECT_EQ(e.rank, rank(m.transpose()));
    EXPECT_EQ(e.rank, e.pivot_columns.size());

    // Reduced echelon shape.
    for (std::size_t i = 0; i < e.rank; ++i) {
      if (i > 0) EXPECT_LT(e.pivot_columns[i - 1], e.pivot_columns[i]);
      for (std::size_t r = 0; r < e.rank; ++r)
        EXPECT_EQ(e.matrix.at(r, e.pivot_columns[i]), r == i ? 1 : 0);
    }

    // Idempotence.
    EchelonForm again = rref(e.matrix);
    EXPECT_EQ(again.matrix, e.matrix);
    EXPECT_EQ(again.pivot_columns, e.pivot_columns);

    // Row space preserved: stacking both does not raise the rank.
    RatMatrix stacked = m;
    for (std::size_t r = 0; r < e.rank; ++r) stacked.append_row(e.matrix.row(r));
    EXPECT_EQ(rank(stacked), e.rank);

    // Kernel: right size, annihilated, independent.
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size() + e.rank, cols);
    for (const auto& v : k)
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
    if (!k.empty()) EXPECT_EQ(rank(RatMatrix::from_dense(k, cols)), k.size());

    // Sparse and dense eliminations agree exactly.
    std::vector<SparseRow> rows_sparse;
    for (std::size_t r = 0; r < rows; ++r) rows_sparse.push_back(m.row(r));
    EchelonForm s = detail::rref_sparse(rows_sparse, cols);
    EchelonForm d = detail::rref_dense(m.to_dense(), cols);
    EXPECT_EQ(s.matrix, d.matrix);
    EXPECT_EQ(s.pivot_columns, d.pivot_columns);
    EXPECT_EQ(s.matrix, e.matrix);
  }
}

TEST(EchelonBuilder, ContainsTracksRowSpace) {
  EchelonBuilder b(3);
  EXPECT_TRUE(b.insert({SparseEntry(0, Rational(2)), SparseEntry(2, Rational(4))}));
  EXPECT_FALSE(b.insert({SparseEntry(0, Rational(1)), SparseEntry(2, Rational(2))}));
  EXPECT_TRUE(b.contains({SparseEntry(0, Rational(-3)), SparseEntry(2, Rational(-6))}));
  EXPECT_FALSE(b.contains({SparseEntry(1, Rational(1))}));
  EXPECT_EQ(b.rank(), 1u);
}

TEST(RatMatrix, ProductAndTranspose) {
  auto a = RatMatrix::from_ints({{1, 2}, {0, 1}});
  auto b = RatMatrix::from_ints({{3, 0}, {1, -1}});
  EXPECT_EQ(a * b, RatMatrix::from_ints({{5, -2}, {1, -1}}));
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_THROW(a * RatMatrix(3, 1), Error);
}
