#include <gtest/gtest.h>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/errors.hpp"

using namespace galtwist;
using namespace galtwist::cyclo;

TEST(Cyclotomic, SmallValues) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(psi(6), (IntPoly{-1, -1, 0, 1, 1}));
}

TEST(Cyclotomic, Phi105HasTwoCoefficientsMinusTwo) {
  const IntPoly p = cyclotomic(105);
  EXPECT_EQ(p.degree(), 48);
  int count = 0;
  for (const auto& c : p.coefficients()) count += c == -2 ? 1 : 0;
  EXPECT_EQ(count, 2);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPoly::x_pow_minus_one(n)) << n;
    EXPECT_EQ(cyclotomic(n).degree(), static_cast<long>(euler_phi(n))) << n;
  }
}

TEST(Cyclotomic, ValuesAtPrimePowers) {
  EXPECT_EQ(cyclotomic(6).evaluate(5), 21);
  EXPECT_EQ(cyclotomic(6).evaluate(2), 3);
  EXPECT_EQ(cyclotomic(4).evaluate(3), 10);
  EXPECT_EQ(cyclotomic(5).evaluate(2), 31);
  EXPECT_EQ(cyclotomic(3).evaluate(7), 57);
  EXPECT_EQ(cyclotomic(6).evaluate(13), 157);
}

TEST(Arithmetic, NumberTheory) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(euler_phi(30), 8U);
  EXPECT_EQ(prime_factors(60), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
}

TEST(Division, MonicAndExact) {
  const IntPoly a = IntPoly::x_pow_minus_one(6);
  const auto dr = divmod_monic(a, cyclotomic(3));
  EXPECT_TRUE(dr.remainder.is_zero());
  EXPECT_EQ(dr.quotient * cyclotomic(3), a);
  EXPECT_THROW(exact_divide(IntPoly{1, 0, 1}, IntPoly{1, 1}), PreconditionError);
}

TEST(Charpoly, FaddeevLeVerrier) {
  const linalg::IntMatrix m{{0, -5}, {1, -3}};
  EXPECT_EQ(characteristic_polynomial(m), (IntPoly{5, 3, 1}));
  const linalg::IntMatrix rot{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  EXPECT_EQ(characteristic_polynomial(rot), IntPoly::x_pow_minus_one(3));
}

TEST(Inflate, WorkedExamples) {
  // X - 5 over primitive 6th roots: X^2 - 5X + 25.
  EXPECT_EQ(inflate_charpoly(IntPoly{-5, 1}, 6, 6), (IntPoly{25, -5, 1}));
  // Quadratic twist of X^2 + 3X + 5.
  EXPECT_EQ(inflate_charpoly(IntPoly{5, 3, 1}, 2, 2), (IntPoly{5, -3, 1}));
  // Multiplicity phi(4)/phi(2) = 2.
  EXPECT_EQ(inflate_charpoly(IntPoly{-2, 1}, 4, 2), (IntPoly{4, 4, 1}));
  EXPECT_EQ(inflate_charpoly(IntPoly{5, 3, 1}, 1, 1), (IntPoly{5, 3, 1}));
}

TEST(Inflate, MultiplicativeGivesCyclotomicValue) {
  for (std::uint64_t r = 1; r <= 12; ++r)
    for (long q : {2, 3, 5, 7}) {
      const IntPoly f{-q, 1};
      EXPECT_EQ(eval_at_one_abs(inflate_charpoly(f, r, r)), abs(cyclotomic(r).evaluate(q))) << q << " " << r;
    }
}

TEST(Inflate, ProductOverDivisorsIsCharpolyOfPower) {
  // prod_{d | r} inflate(f, d, d) = char poly of Frobenius^r = prod (X - alpha^r)
  // composed with X^r; compare at X = 1 with |E(F_{q^r})| from the trace recurrence.
  const IntPoly f{5, 3, 1};  // a = -3, q = 5
  Integer t0 = 2, t1 = -3;
  for (unsigned r = 1; r <= 6; ++r) {
    if (r > 1) {
      const Integer t2 = -3 * t1 - 5 * t0;
      t0 = t1;
      t1 = t2;
    }
    Integer qr = 1;
    for (unsigned i = 0; i < r; ++i) qr *= 5;
    Integer prod = 1;
    for (auto d : divisors(r)) prod *= eval_at_one_abs(inflate_charpoly(f, d, d));
    EXPECT_EQ(prod, qr + 1 - t1) << r;
  }
}

TEST(Inflate, RejectsNonDivisor) { EXPECT_THROW(inflate_charpoly(IntPoly{-2, 1}, 6, 4), PreconditionError); }
