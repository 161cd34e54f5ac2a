#include <gtest/gtest.h>

#include "galtwist/errors.hpp"
#include "galtwist/linalg.hpp"

using namespace galtwist;
using namespace galtwist::linalg;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Independent 3x3 determinant by cofactor expansion.
Integer det3(const IntMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST(Hnf, SmallExample) {
  const Lattice l = hnf(IntMatrix{{2, 4}, {1, 3}});
  EXPECT_EQ(l.basis(), (IntMatrix{{1, 1}, {0, 2}}));
}

TEST(Hnf, CanonicalAcrossGenerators) {
  const Lattice a = Lattice::span({vec({3, 1, 0}), vec({0, 2, 4})}, 3);
  const Lattice b = Lattice::span({vec({3, 3, 4}), vec({3, 1, 0}), vec({6, 4, 4})}, 3);
  EXPECT_EQ(a, b);
}

TEST(Hnf, ZeroLatticeHasNoRows) {
  const Lattice l = hnf(IntMatrix(2, 3));
  EXPECT_TRUE(l.is_zero());
  EXPECT_EQ(l.basis().rows(), 0U);
  EXPECT_EQ(l.ambient_rank(), 3U);
}

TEST(Hnf, EntriesAbovePivotsReduced) {
  const Lattice l = hnf(IntMatrix{{1, 7, -3}, {0, 5, 11}, {0, 0, 4}});
  const auto& b = l.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const std::size_t p = l.pivots()[i];
    EXPECT_GT(b(i, p), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(b(k, p), 0);
      EXPECT_LT(b(k, p), b(i, p));
    }
  }
}

TEST(Smith, TextbookExample) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(snf_diagonal(m), vec({2, 6, 12}));
  const SmithForm s = smith(m);
  EXPECT_EQ(s.left * m * s.right, s.diagonal);
  EXPECT_EQ(abs(determinant(s.left)), 1);
  EXPECT_EQ(abs(determinant(s.right)), 1);
}

TEST(Smith, RankDeficient) {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  EXPECT_EQ(snf_diagonal(m), vec({1}));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(determinant(m), -144);
  EXPECT_EQ(determinant(m), det3(m));
  const IntMatrix n{{0, 3, 1}, {5, -2, 7}, {1, 1, 0}};
  EXPECT_EQ(determinant(n), det3(n));
}

TEST(UnimodularInverse, RoundTrip) {
  const IntMatrix u{{1, 2, 0}, {0, 1, 3}, {1, 2, 1}};
  ASSERT_EQ(abs(determinant(u)), 1);
  EXPECT_TRUE((u * unimodular_inverse(u)).is_identity());
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), PreconditionError);
}

TEST(Kernel, LeftKernel) {
  const Lattice k = kernel(IntMatrix{{1}, {1}});
  ASSERT_EQ(k.rank(), 1U);
  EXPECT_EQ(k.basis().row(0), vec({1, -1}));
}

TEST(Kernel, SaturatedAndCorrect) {
  const IntMatrix m{{2, 0}, {0, 2}, {2, 2}, {4, 6}};
  const Lattice k = kernel(m);
  EXPECT_EQ(k.rank(), 2U);
  EXPECT_TRUE(is_saturated(k));
  for (std::size_t i = 0; i < k.rank(); ++i) EXPECT_TRUE((k.basis().row(i) * m) == vec({0, 0}));
}

TEST(Saturation, DetectsTorsion) {
  const Lattice l = Lattice::span({vec({2, 4})}, 2);
  EXPECT_FALSE(is_saturated(l));
  EXPECT_EQ(saturate(l), Lattice::span({vec({1, 2})}, 2));
}

TEST(Lattice, ContainsAndCoordinates) {
  const Lattice l = Lattice::span({vec({1, 1}), vec({0, 2})}, 2);
  EXPECT_TRUE(l.contains(vec({3, 5})));
  EXPECT_FALSE(l.contains(vec({1, 2})));
  const auto c = l.coordinates(vec({3, 5}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c * l.basis(), vec({3, 5}));
}

TEST(Lattice, IntersectSumIndex) {
  const Lattice a = Lattice::span({vec({2, 0}), vec({0, 1})}, 2);
  const Lattice b = Lattice::span({vec({1, 0}), vec({0, 3})}, 2);
  EXPECT_EQ(intersect(a, b), Lattice::span({vec({2, 0}), vec({0, 3})}, 2));
  EXPECT_EQ(sum(a, b), Lattice::full(2));
  EXPECT_EQ(index_in(intersect(a, b), Lattice::full(2)), Integer(6));
  EXPECT_FALSE(index_in(Lattice::span({vec({1, 0})}, 2), Lattice::full(2)).has_value());
  EXPECT_THROW(index_in(Lattice::full(2), a), PreconditionError);
}

TEST(Lattice, IntersectWithZero) {
  const Lattice a = Lattice::full(3);
  EXPECT_TRUE(intersect(a, Lattice(3)).is_zero());
}

TEST(Matrix, KroneckerAndStacks) {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix i = IntMatrix::identity(2);
  const IntMatrix k = kronecker(a, i);
  EXPECT_EQ(k, (IntMatrix{{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}}));
  EXPECT_EQ(hstack(a, i).cols(), 4U);
  EXPECT_EQ(vstack(a, i).rows(), 4U);
  EXPECT_EQ(determinant(k), determinant(a) * determinant(a));
}
