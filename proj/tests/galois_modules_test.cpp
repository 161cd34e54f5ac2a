#include <gtest/gtest.h>

#include <random>

#include "galtwist/errors.hpp"
#include "galtwist/galois_modules.hpp"

using namespace galtwist;
using namespace galtwist::galmod;
using groups::FiniteGroup;
using grouprings::GroupRingIdeal;
using linalg::IntMatrix;
using linalg::Integer;
using linalg::IntVector;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Brute-force fixed points: enumerate every element of the module.
Integer count_fixed(const TorsionGaloisModule& m, std::size_t g) {
  std::vector<long> orders;
  for (const auto& n : m.orders()) orders.push_back(n.get_si());
  std::vector<long> x(orders.size(), 0);
  Integer count = 0;
  for (;;) {
    bool fixed = true;
    for (std::size_t i = 0; i < x.size() && fixed; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < x.size(); ++j) acc += m.action(g)(i, j) * x[j];
      acc -= x[i];
      fixed = acc % orders[i] == 0;
    }
    if (fixed) ++count;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == x.size()) break;
  }
  return count;
}

// Intersection of the kernels of N_H (H nontrivial) on Z[G] (x) M.
linalg::Lattice norm_kernel_intersection(const groups::GroupPtr& g, const TorsionGaloisModule& m) {
  const auto reg = GaloisLattice::regular(g);
  std::optional<linalg::Lattice> w;
  for (const auto& h : groups::all_subgroups(g)) {
    if (h.order() == 1) continue;
    const auto k = induced_map(reg, reg, grouprings::norm_element(h).left_multiplication(), m).kernel_lifted();
    w = w ? linalg::intersect(*w, k) : k;
  }
  return *w;
}

bool killed_by_two(const linalg::Lattice& w, const IntVector& orders) {
  for (std::size_t i = 0; i < w.rank(); ++i)
    for (std::size_t j = 0; j < orders.size(); ++j)
      if ((2 * w.basis()(i, j)) % orders[j] != 0) return false;
  return true;
}

}  // namespace

TEST(GaloisLattice, ValidatesHomomorphism) {
  const auto g = FiniteGroup::cyclic(2);
  EXPECT_NO_THROW(GaloisLattice(g, {IntMatrix::identity(1), IntMatrix{{-1}}}));
  EXPECT_THROW(GaloisLattice(g, {IntMatrix::identity(1), IntMatrix{{2}}}), PreconditionError);
  const auto c3 = FiniteGroup::cyclic(3);
  EXPECT_THROW(GaloisLattice(c3, {IntMatrix::identity(1), IntMatrix{{-1}}, IntMatrix{{1}}}), PreconditionError);
}

TEST(GaloisLattice, FromIdealAndDual) {
  const auto g = FiniteGroup::cyclic(6);
  const auto il = GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(g));
  EXPECT_EQ(il.rank(), 2U);
  EXPECT_EQ(cyclo::characteristic_polynomial(il.action(1)), cyclo::cyclotomic(6));
  const auto dual = hat_dual(il);
  EXPECT_EQ(cyclo::characteristic_polynomial(dual.action(1)), cyclo::cyclotomic(6));
}

TEST(GaloisLattice, Pullback) {
  const auto c2 = FiniteGroup::cyclic(2);
  const auto c4 = FiniteGroup::cyclic(4);
  const auto l = GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(c2));
  const auto p = l.pullback(c4, {0, 1, 0, 1});
  EXPECT_EQ(p.action(3), l.action(1));
  EXPECT_THROW(l.pullback(c4, {0, 1, 1, 1}), PreconditionError);
}

TEST(TorsionModule, WellDefinedness) {
  const auto g = FiniteGroup::cyclic(2);
  // Z/2 x Z/4: entry (1, 0) must satisfy a * 2 = 0 mod 4.
  EXPECT_NO_THROW(TorsionGaloisModule(g, vec({2, 4}), {IntMatrix::identity(2), IntMatrix{{1, 0}, {2, 1}}}));
  EXPECT_THROW(TorsionGaloisModule(g, vec({2, 4}), {IntMatrix::identity(2), IntMatrix{{1, 0}, {1, 1}}}),
               PreconditionError);
}

TEST(TorsionModule, FromRelations) {
  const auto g = FiniteGroup::cyclic(1);
  const auto m = TorsionGaloisModule::from_relations(g, 2, IntMatrix{{2, 0}, {0, 3}}, {IntMatrix::identity(2)});
  EXPECT_EQ(m.invariant_factors(), vec({6}));
  EXPECT_EQ(m.cardinality(), 6);
  EXPECT_THROW(TorsionGaloisModule::from_relations(g, 2, IntMatrix{{2, 0}}, {IntMatrix::identity(2)}),
               PreconditionError);
}

TEST(FixedPoints, MatchEnumeration) {
  const auto g = FiniteGroup::cyclic(6);
  const auto il = GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(g));
  const std::vector<TorsionGaloisModule> modules = {
      TorsionGaloisModule::cyclic_character(g, 7, 3),
      TorsionGaloisModule::cyclic_character(g, 9, 2),
      direct_sum(TorsionGaloisModule::cyclic_character(g, 4, 3), TorsionGaloisModule::trivial(g, vec({6}))),
  };
  for (const auto& m : modules) {
    const auto t = twist_module(il, m);
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(fixed_points(t, x), count_fixed(t, x));
  }
}

TEST(FixedPoints, TorusTorsionExample) {
  // mu_3 over F_2 twisted by I_L for r = 2: Frobenius acts by -2 = 1 mod 3.
  const auto g = FiniteGroup::cyclic(2);
  const auto il = GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(g));
  const auto t = twist_module(il, TorsionGaloisModule::cyclic_character(g, 3, 2));
  EXPECT_EQ(fixed_points(t, 1), 3);
  EXPECT_EQ(fixed_points(TorsionGaloisModule::cyclic_character(g, 3, 2), 1), 1);
}

TEST(ModuleMap, KernelAndImage) {
  const auto g = FiniteGroup::cyclic(1);
  const auto z4 = TorsionGaloisModule::trivial(g, vec({4}));
  const auto z2 = TorsionGaloisModule::trivial(g, vec({2}));
  const ModuleMap reduce(z4, z2, IntMatrix{{1}});
  EXPECT_TRUE(reduce.is_surjective());
  EXPECT_EQ(reduce.kernel_size(), 2);
  const ModuleMap embed(z2, z4, IntMatrix{{2}});
  EXPECT_TRUE(embed.is_injective());
  EXPECT_EQ(embed.image_size(), 2);
  EXPECT_THROW(ModuleMap(z2, z4, IntMatrix{{1}}), PreconditionError);
  EXPECT_EQ(compose(reduce, embed).image_size(), 1);
}

TEST(Charpoly, KroneckerRouteMatchesInflation) {
  for (std::size_t r = 1; r <= 8; ++r) {
    const auto g = FiniteGroup::cyclic(r);
    const auto il = GaloisLattice::from_ideal(grouprings::cyclic_twist_ideal(g));
    for (const auto& f : {cyclo::IntPoly{-3, 1}, cyclo::IntPoly{5, 3, 1}, cyclo::IntPoly{7, 1, 1}})
      EXPECT_EQ(twist_charpoly(il, f, *g->cyclic_generator()), cyclo::inflate_charpoly(f, r, r)) << r;
  }
}

TEST(Presentations, RandomizedAgreeWithDirectTwist) {
  std::mt19937_64 rng(12345);
  const auto g = FiniteGroup::cyclic(4);
  const auto m = TorsionGaloisModule::cyclic_character(g, 5, 2);
  for (const auto& ideal : {grouprings::cyclic_twist_ideal(g), GroupRingIdeal::whole(g)}) {
    const auto direct = twist_module(GaloisLattice::from_ideal(ideal), m);
    const auto base = compute_presentation(ideal);
    EXPECT_TRUE(isomorphic_invariants(presentation_twist(base, m), direct));
    for (int i = 0; i < 5; ++i)
      EXPECT_TRUE(isomorphic_invariants(presentation_twist(randomize_presentation(base, rng), m), direct));
  }
}

TEST(Presentations, NonabelianGroup) {
  const auto g = FiniteGroup::dihedral(3);
  const auto sd = grouprings::semidirect_twist_ideal(g);
  // Sign character on Z/5: t^a s^b (index a + 3b) acts by (-1)^b.
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < g->order(); ++x) act.push_back(IntMatrix{{x < 3 ? 1 : 4}});
  const TorsionGaloisModule m(g, vec({5}), act);
  const auto direct = twist_module(GaloisLattice::from_ideal(sd.ideal), m);
  std::mt19937_64 rng(99);
  const auto base = compute_presentation(sd.ideal);
  EXPECT_TRUE(isomorphic_invariants(presentation_twist(randomize_presentation(base, rng), m), direct));
}

TEST(Exactness, TwistIdealInGroupRing) {
  struct Case {
    std::size_t r;
    long n, m;  // mu_n with Frobenius acting by m, m^r = 1 mod n
  };
  for (const auto& c : {Case{2, 7, 6}, Case{4, 5, 2}, Case{6, 7, 3}}) {
    const std::size_t r = c.r;
    const auto g = FiniteGroup::cyclic(r);
    const auto m = direct_sum(TorsionGaloisModule::cyclic_character(g, c.n, c.m), TorsionGaloisModule::trivial(g, vec({2})));
    const auto rep = exactness_check(grouprings::cyclic_twist_ideal(g), GroupRingIdeal::whole(g), m);
    EXPECT_TRUE(rep.exact) << r;
    EXPECT_EQ(rep.sub_order * rep.quotient_order, rep.whole_order) << r;
  }
}

TEST(Exactness, TorsionQuotientRejected) {
  const auto g = FiniteGroup::cyclic(2);
  const auto two = GroupRingIdeal::right_generated(g, {Integer(2) * grouprings::GroupRingElement::one(g)});
  EXPECT_THROW(exactness_check(two, GroupRingIdeal::whole(g), TorsionGaloisModule::trivial(g, vec({3}))),
               NonFreeQuotientError);
}

TEST(Associativity, CompositeTwist) {
  const auto g = FiniteGroup::cyclic(6);
  const auto f = GaloisLattice::from_ideal(grouprings::isotypic_ideal(groups::Subgroup::generated_by(g, {2})));
  const auto mm = GaloisLattice::from_ideal(grouprings::isotypic_ideal(groups::Subgroup::generated_by(g, {3})));
  EXPECT_EQ(f.rank(), 1U);   // degree 2 subfield
  EXPECT_EQ(mm.rank(), 2U);  // degree 3 subfield
  const auto mu7 = TorsionGaloisModule::cyclic_character(g, 7, 3);
  EXPECT_TRUE(associativity_check(f, mm, mu7));
  EXPECT_EQ(twist_charpoly(tensor(f, mm), cyclo::IntPoly{-1, 1}, 1), cyclo::cyclotomic(6));
}

TEST(NormKernels, KleinGroupKilledByTwo) {
  const auto k = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  // Regular Z/8[G] as a module: the kernel intersection is nonzero mod N but killed by 2.
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < 4; ++g) {
    IntMatrix a(4, 4);
    for (std::size_t h = 0; h < 4; ++h) a(k->mul(g, h), h) = 1;
    act.push_back(a);
  }
  const TorsionGaloisModule m(k, vec({8, 8, 8, 8}), act);
  const auto w = norm_kernel_intersection(k, m);
  IntVector orders(16, Integer(8));
  EXPECT_TRUE(killed_by_two(w, orders));
  EXPECT_NE(w, linalg::hnf(IntMatrix::diagonal(orders)));
}

TEST(NormKernels, CyclicControlNotKilledByTwo) {
  // For C4 the element (1 - t^2) (x) m survives, so 2 does not kill W.
  const auto c4 = FiniteGroup::cyclic(4);
  const auto m = TorsionGaloisModule::trivial(c4, vec({8}));
  const auto w = norm_kernel_intersection(c4, m);
  EXPECT_FALSE(killed_by_two(w, IntVector(4, Integer(8))));
}
