#include <gtest/gtest.h>

#include "galtwist/errors.hpp"
#include "galtwist/grouprings.hpp"

using namespace galtwist;
using namespace galtwist::grouprings;
using groups::FiniteGroup;
using groups::Subgroup;
using linalg::Integer;
using linalg::IntVector;
using linalg::Lattice;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(GroupRingElement, MultiplicationMatchesMatrices) {
  const auto g = FiniteGroup::dihedral(3);
  const GroupRingElement a(g, vec({1, 2, 0, -1, 0, 3}));
  const GroupRingElement b(g, vec({0, 1, 1, 0, 2, 0}));
  EXPECT_EQ((a * b).coeffs(), a.coeffs() * b.right_multiplication());
  EXPECT_EQ((a * b).coeffs(), b.coeffs() * a.left_multiplication());
  EXPECT_NE(a * b, b * a);
}

TEST(GroupRingElement, FromPolynomial) {
  const auto g = FiniteGroup::cyclic(4);
  // 1 + t^5 = 1 + t in Z[C4]
  const auto e = GroupRingElement::from_polynomial(g, cyclo::IntPoly{1, 0, 0, 0, 0, 1}, 1);
  EXPECT_EQ(e.coeffs(), vec({1, 1, 0, 0}));
  EXPECT_EQ(e.to_string(), "1 + t");
}

TEST(Ideals, CyclicTwistIdealBasics) {
  for (std::size_t r = 1; r <= 12; ++r) {
    const auto g = FiniteGroup::cyclic(r);
    const auto il = cyclic_twist_ideal(g);
    EXPECT_EQ(il.rank(), cyclo::euler_phi(r)) << r;
    EXPECT_TRUE(il.is_two_sided()) << r;
    EXPECT_TRUE(il.is_saturated()) << r;
    EXPECT_TRUE(double_annihilator_check(il)) << r;
  }
}

TEST(Ideals, PrimeOrderIsAugmentationIdeal) {
  const auto g = FiniteGroup::cyclic(5);
  const auto il = cyclic_twist_ideal(g);
  // x lies in the augmentation ideal iff its coefficients sum to zero.
  EXPECT_TRUE(il.contains(GroupRingElement(g, vec({1, -1, 0, 0, 0}))));
  EXPECT_TRUE(il.contains(GroupRingElement(g, vec({2, 0, -1, 0, -1}))));
  EXPECT_FALSE(il.contains(GroupRingElement(g, vec({1, 0, 0, 0, 0}))));
  const auto perp = annihilator(il);
  EXPECT_EQ(perp.lattice(), Lattice::span({vec({1, 1, 1, 1, 1})}, 5));
}

TEST(Ideals, AnnihilatorEqualsPhiAndNorms) {
  for (std::size_t r = 1; r <= 16; ++r) {
    const auto cmp = norm_generators_equal_annihilator(FiniteGroup::cyclic(r));
    EXPECT_TRUE(cmp.equal) << r;
    EXPECT_EQ(cmp.phi_ideal.rank(), r - cyclo::euler_phi(r)) << r;
  }
}

TEST(Ideals, NonSaturatedExample) {
  const auto g = FiniteGroup::cyclic(2);
  const auto two = GroupRingIdeal::right_generated(g, {Integer(2) * GroupRingElement::one(g)});
  EXPECT_TRUE(two.is_two_sided());
  EXPECT_FALSE(two.is_saturated());
}

TEST(Ideals, LeftVersusRightInNonabelianGroup) {
  const auto g = FiniteGroup::dihedral(3);
  const std::size_t s = g->semidirect_data()->h[1];
  const auto x = GroupRingElement::one(g) + GroupRingElement::basis(g, s);
  const auto right = GroupRingIdeal::right_generated(g, {x});
  const auto left = GroupRingIdeal::left_generated(g, {x});
  EXPECT_TRUE(right.is_right_ideal());
  EXPECT_FALSE(right.is_left_ideal());
  EXPECT_TRUE(left.is_left_ideal());
  EXPECT_NE(right.lattice(), left.lattice());
}

TEST(Isotypic, CyclicSixSumIndex) {
  // Independently: the isotypic pieces of Z[C6] are ((x^6-1)/Phi_d) Z[C6];
  // the determinant of the stacked bases is 72.
  const auto g = FiniteGroup::cyclic(6);
  Lattice total(6);
  std::size_t rank = 0;
  for (const auto& k : cyclic_quotient_kernels(g)) {
    const auto ideal = isotypic_ideal(k);
    EXPECT_TRUE(ideal.is_saturated());
    rank += ideal.rank();
    total = linalg::sum(total, ideal.lattice());
  }
  EXPECT_EQ(rank, 6U);
  EXPECT_EQ(linalg::index_in(total, Lattice::full(6)), Integer(72));
}

TEST(Isotypic, FullQuotientIsTwistIdeal) {
  for (std::size_t r : {4, 6, 9, 12}) {
    const auto g = FiniteGroup::cyclic(r);
    EXPECT_EQ(isotypic_ideal(Subgroup::trivial(g)), cyclic_twist_ideal(g)) << r;
  }
}

TEST(Isotypic, KleinFourGroup) {
  const auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const auto kernels = cyclic_quotient_kernels(g);
  EXPECT_EQ(kernels.size(), 4U);  // G itself and the three subgroups of order 2
  for (const auto& k : kernels) EXPECT_EQ(isotypic_ideal(k).rank(), 1U);
  EXPECT_THROW(isotypic_ideal(Subgroup::whole(FiniteGroup::dihedral(3))), PreconditionError);
}

TEST(Semidirect, DihedralTwistIdeal) {
  for (std::size_t r : {3, 4, 5, 7}) {
    const auto sd = semidirect_twist_ideal(FiniteGroup::dihedral(r));
    EXPECT_TRUE(sd.right_ideal) << r;
    EXPECT_TRUE(sd.saturated) << r;
    EXPECT_EQ(sd.ideal.rank(), cyclo::euler_phi(r)) << r;
    EXPECT_TRUE(sd.norm_map_unimodular) << r;
    EXPECT_TRUE(sd.gamma_equivariant) << r;
  }
  EXPECT_THROW(semidirect_twist_ideal(FiniteGroup::cyclic(6)), PreconditionError);
}

TEST(Semidirect, OrderTwentyOne) {
  const auto sd = semidirect_twist_ideal(FiniteGroup::semidirect(7, 3, 2));
  EXPECT_EQ(sd.ideal.rank(), 6U);
  EXPECT_TRUE(sd.saturated);
}

TEST(Noncyclic, NormIdentity) {
  for (std::uint64_t p : {2, 3, 5, 7}) EXPECT_TRUE(noncyclic_norm_identity(p)) << p;
  EXPECT_THROW(noncyclic_norm_identity(4), PreconditionError);
}

TEST(QuotientIndex, LatticeMatchesFormula) {
  const auto six = twist_ideal_quotient_index(6);
  EXPECT_EQ(six.lattice_index, 12);
  EXPECT_EQ(six.formula, 12);
  for (std::uint64_t r = 2; r <= 20; ++r) {
    const auto q = twist_ideal_quotient_index(r);
    EXPECT_EQ(q.lattice_index, q.formula) << r;
  }
}
