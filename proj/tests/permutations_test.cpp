#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "galtwist/errors.hpp"
#include "galtwist/permutations.hpp"

using namespace galtwist;
using namespace galtwist::grouprings;
using groups::FiniteGroup;

namespace {

// Direct reading of sigma(g + H) = sigma(g) + H for the order-p subgroups of Z/n.
bool star_oracle(std::size_t n, const Permutation& s) {
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p != 0 || !cyclo::is_prime(p)) continue;
    const std::size_t step = n / p;
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> a, b;
      for (std::size_t k = 0; k < p; ++k) {
        a.push_back(s[(g + k * step) % n]);
        b.push_back((s[g] + k * step) % n);
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Permutations, Unranking) {
  EXPECT_EQ(unrank_permutation(3, 0), (Permutation{0, 1, 2}));
  EXPECT_EQ(unrank_permutation(3, 5), (Permutation{2, 1, 0}));
  Permutation p(5);
  std::iota(p.begin(), p.end(), 0);
  for (std::uint64_t i = 0; i < 120; ++i) {
    EXPECT_EQ(unrank_permutation(5, i), p);
    std::next_permutation(p.begin(), p.end());
  }
}

TEST(Permutations, ConditionStarAgreesWithOracle) {
  for (std::size_t n : {4, 6}) {
    const auto g = FiniteGroup::cyclic(n);
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      EXPECT_EQ(perm_condition_star(g, p), star_oracle(n, p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Permutations, FrozenCounts) {
  // Counts from an exhaustive scan in an independent script.
  const std::vector<std::pair<std::size_t, std::uint64_t>> expected = {{2, 2}, {3, 6}, {4, 8}, {6, 12}, {8, 384}};
  for (auto [n, count] : expected) {
    const auto scan = scan_permutations(FiniteGroup::cyclic(n));
    EXPECT_EQ(scan.condition_star, count) << n;
    EXPECT_EQ(scan.stabilizing, count) << n;
    EXPECT_EQ(scan.mismatch_count, 0U) << n;
  }
}

TEST(Permutations, SquarefreeProductCount) {
  const auto scan = scan_permutations(FiniteGroup::cyclic(6));
  EXPECT_EQ(scan.total, 720U);
  ASSERT_TRUE(scan.prime_factor_product.has_value());
  EXPECT_EQ(*scan.prime_factor_product, 12U);
  EXPECT_FALSE(scan_permutations(FiniteGroup::cyclic(4)).prime_factor_product.has_value());
}

TEST(Permutations, SlowPathAgreesWithScan) {
  const auto g = FiniteGroup::cyclic(6);
  const auto il = cyclic_twist_ideal(g);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < 720; ++i) count += perm_stabilizes(il, unrank_permutation(6, i)) ? 1 : 0;
  EXPECT_EQ(count, 12U);
}

TEST(Permutations, WorkerCountDoesNotChangeResult) {
  const auto g = FiniteGroup::cyclic(8);
  const auto a = scan_permutations(g, 1);
  const auto b = scan_permutations(g, 3);
  EXPECT_EQ(a.condition_star, b.condition_star);
  EXPECT_EQ(a.stabilizing, b.stabilizing);
  EXPECT_EQ(a.mismatches, b.mismatches);
}

TEST(Permutations, Bounds) {
  EXPECT_THROW(scan_permutations(FiniteGroup::cyclic(11)), ResourceError);
  EXPECT_THROW(validate_permutation(FiniteGroup::cyclic(3), Permutation{0, 0, 1}), PreconditionError);
}
