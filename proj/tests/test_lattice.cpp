#include <gtest/gtest.h>

#include <random>

#include "dlcombi/lattice.hpp"

using namespace dlcombi;

namespace {

bool is_diagonal_chain(const IntMatrix &d) {
  std::size_t r = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0)
        return false;
  for (std::size_t i = 0; i < r; ++i)
    if (d(i, i) < 0)
      return false;
  for (std::size_t i = 1; i < r; ++i) {
    if (d(i - 1, i - 1) == 0 && d(i, i) != 0)
      return false;
    if (d(i - 1, i - 1) != 0 && d(i, i) % d(i - 1, i - 1) != 0)
      return false;
  }
  return true;
}

void expect_valid_smith(const IntMatrix &m) {
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D) << m.str();
  EXPECT_EQ(iabs(determinant(s.U)), 1);
  EXPECT_EQ(iabs(determinant(s.V)), 1);
  EXPECT_TRUE((s.U * s.Uinv).is_identity());
  EXPECT_TRUE(is_diagonal_chain(s.D)) << s.D.str();
}

// k-th determinantal divisor by brute force over all k x k minors
Integer determinantal_divisor(const IntMatrix &m, std::size_t k) {
  const std::size_t n = m.rows();
  Integer g = 0;
  std::vector<bool> rsel(n), csel(n);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      IntMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!rsel[i])
          continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (csel[j])
            sub(a, b++) = m(i, j);
        ++a;
      }
      g = igcd(g, determinant(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

IntMatrix random_matrix(std::mt19937 &rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = d(rng);
  return m;
}

} // namespace

TEST(Smith, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_TRUE(s.U.is_identity());
  EXPECT_TRUE(s.D.is_identity());
  EXPECT_TRUE(s.V.is_identity());
}

TEST(Smith, DiagonalCoprime) {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
  expect_valid_smith(IntMatrix{{2, 0}, {0, 3}});
}

TEST(Smith, CoxeterTorusOfGL2AtThree) {
  IntMatrix m{{-1, 3}, {3, -1}};
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 8}}));
  // independent: determinantal divisors
  EXPECT_EQ(determinantal_divisor(m, 1), 1);
  EXPECT_EQ(determinantal_divisor(m, 2), 8);
}

TEST(Smith, RectangularAndSingular) {
  expect_valid_smith(IntMatrix{{2, 4, 6}, {4, 8, 12}});
  expect_valid_smith(IntMatrix{{0, 0}, {0, 0}});
  expect_valid_smith(IntMatrix{{1, 2}, {3, 4}, {5, 6}});
}

TEST(Smith, Idempotent) {
  for (auto m : {IntMatrix{{2, 0}, {0, 3}}, IntMatrix{{-1, 3}, {3, -1}},
                 IntMatrix{{4, 6, 2}, {0, 3, 9}, {1, 1, 7}}}) {
    auto d = smith_normal_form(m).D;
    EXPECT_EQ(smith_normal_form(d).D, d);
  }
}

TEST(Smith, Deterministic) {
  IntMatrix m{{4, 6, 2}, {0, 3, 9}, {1, 1, 7}};
  auto a = smith_normal_form(m), b = smith_normal_form(m);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
}

TEST(Smith, RandomMatchesDeterminantalDivisors) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto m = random_matrix(rng, n, -6, 6);
    expect_valid_smith(m);
    auto d = smith_normal_form(m).D;
    Integer prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      Integer dk = determinantal_divisor(m, k);
      if (dk == 0) {
        EXPECT_EQ(d(k - 1, k - 1), 0);
        continue;
      }
      EXPECT_EQ(d(k - 1, k - 1), dk / prev) << m.str();
      prev = dk;
    }
  }
}

TEST(Smith, LargeEntriesDoNotOverflow) {
  Integer big = ipow(Integer(3), 50) - 1;
  IntMatrix m(2, 2);
  m(0, 0) = big;
  m(1, 1) = big * 2;
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.D(1, 1), big * 2);
  EXPECT_EQ(cokernel(m).order(), big * big * 2);
}

TEST(Cokernel, TwoTimesIdentity) {
  auto g = cokernel(IntMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{2, 2}));
}

TEST(Cokernel, Cyclic8) {
  auto g = cokernel(IntMatrix{{-1, 3}, {3, -1}});
  EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{8}));
}

TEST(Cokernel, UnitFactorCollapses) {
  auto g = cokernel(IntMatrix{{1, 0}, {0, 5}});
  EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{5}));
  EXPECT_EQ(g.rank(), 1u);
}

TEST(Cokernel, SingularRejected) {
  try {
    cokernel(IntMatrix{{1, 2}, {2, 4}});
    FAIL() << "expected SingularPresentation";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularPresentation);
  }
}

TEST(Cokernel, OrderIsAbsDeterminantAndProjectionKillsImage) {
  std::mt19937 rng(777);
  int done = 0;
  while (done < 40) {
    auto m = random_matrix(rng, 2 + done % 2, -5, 5);
    Integer det = determinant(m);
    if (det == 0)
      continue;
    ++done;
    auto g = cokernel(m);
    EXPECT_EQ(g.order(), iabs(det));
    for (std::size_t j = 0; j < m.cols(); ++j)
      EXPECT_TRUE(g.is_zero(g.project(m.column(j))));
    // projection(v) == 0 iff v in image, checked on a box of vectors
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
      cols.push_back(m.column(j));
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        IntVector v(m.rows());
        v[0] = a;
        v[1] = b;
        auto x = solve_columns(cols, to_rational(v));
        bool in_image = x && is_integral(*x);
        EXPECT_EQ(g.is_zero(g.project(v)), in_image);
      }
    // canonical representative is stable and lift/project round-trips
    for (auto &e : g.elements()) {
      auto v = g.lift(e);
      EXPECT_EQ(g.project(v), e);
      EXPECT_EQ(g.canonical(v), v);
    }
  }
}

TEST(AbelianGroup, ArithmeticAndOrders) {
  FiniteAbelianGroup g({2, 6});
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.exponent(), 6);
  auto a = g.reduce({1, 4});
  EXPECT_EQ(g.element_order(a), 6);
  EXPECT_TRUE(g.is_zero(g.add(a, g.neg(a))));
  EXPECT_EQ(g.elements().size(), 12u);
  EXPECT_THROW(FiniteAbelianGroup({4, 6}), Error);
}

TEST(AbelianGroup, EnumerationCap) {
  FiniteAbelianGroup g({1000, 1000});
  try {
    g.elements(Integer(10000));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ScaleExceeded);
  }
}

TEST(Lattice, KernelAndRationalSpan) {
  IntMatrix m{{1, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  auto k = integer_kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (auto &v : k)
    EXPECT_TRUE(is_zero(m * v));
  EXPECT_EQ(integer_kernel(m), integer_kernel(m));
  RationalSpan span({IntVector{1, 0, 1}, IntVector{0, 1, 0}}, 3);
  EXPECT_TRUE(span.contains(IntVector{2, 5, 2}));
  EXPECT_FALSE(span.contains(IntVector{1, 0, 0}));
}

TEST(Lattice, UnimodularInverse) {
  IntMatrix m{{2, 1}, {1, 1}};
  EXPECT_TRUE((m * inverse_unimodular(m)).is_identity());
  EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
}
