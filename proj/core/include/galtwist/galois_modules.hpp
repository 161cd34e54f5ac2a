#pragma once

// Lattices and finite abelian groups with a G-action, and the twist I (x) M.
//
// GaloisLattice: free Z-module of rank n, G acting on the RIGHT of row
//   vectors, x -> x * B_g, with B_{gh} = B_g * B_h.
// TorsionGaloisModule: Z/n_1 x ... x Z/n_m, G acting on the LEFT of column
//   vectors, x -> A_g * x, with A_{gh} = A_g * A_h. Entry (i, j) of A_g is
//   kept reduced mod n_i and must satisfy A_g(i, j) * n_j = 0 mod n_i.
//
// In I (x) M the element g acts as (B_g^{-1})^T (x) A_g (Kronecker product,
// the I index outermost).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/finite_group.hpp"
#include "galtwist/grouprings.hpp"
#include "galtwist/linalg.hpp"

namespace galtwist::galmod {

using groups::GroupPtr;
using linalg::IntMatrix;
using linalg::Integer;
using linalg::IntVector;
using linalg::Lattice;

class GaloisLattice {
 public:
  /// action[g] for every element g; validated (unimodular, homomorphism).
  GaloisLattice(GroupPtr group, std::vector<IntMatrix> action);

  static GaloisLattice trivial(const GroupPtr& group, std::size_t rank);
  /// The lattice of a right ideal with G acting by right multiplication.
  static GaloisLattice from_ideal(const grouprings::GroupRingIdeal& ideal);
  /// Z[G] with the right regular action.
  static GaloisLattice regular(const GroupPtr& group);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }

  /// The same lattice viewed over a group mapping onto this one; hom[x] is the
  /// image of x (checked to be a homomorphism).
  GaloisLattice pullback(const GroupPtr& group, const std::vector<std::size_t>& hom) const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

/// a (x) b with g acting by B_g (x) C_g.
GaloisLattice tensor(const GaloisLattice& a, const GaloisLattice& b);

/// Hom_Z(I, Z) with the contragredient action (B_g^{-1})^T.
GaloisLattice hat_dual(const GaloisLattice& lattice);
GaloisLattice hat_dual(const grouprings::GroupRingIdeal& ideal);

class TorsionGaloisModule {
 public:
  TorsionGaloisModule(GroupPtr group, IntVector orders, std::vector<IntMatrix> action);

  static TorsionGaloisModule trivial(const GroupPtr& group, const IntVector& orders);
  /// Z/n with the generator of a cyclic group acting by multiplication by m
  /// (mu_n over F_q with Frobenius, m = q mod n).
  static TorsionGaloisModule cyclic_character(const GroupPtr& group, const Integer& n, const Integer& m);
  /// Z^k / R where R is the row span of `relations` (must have rank k, so the
  /// quotient is finite). action[g] acts on column vectors of Z^k and must
  /// preserve R. The result is put in Smith form, trivial factors dropped.
  static TorsionGaloisModule from_relations(const GroupPtr& group, std::size_t k, const IntMatrix& relations,
                                            const std::vector<IntMatrix>& action);

  const GroupPtr& group() const noexcept { return group_; }
  /// Number of cyclic factors.
  std::size_t size() const noexcept { return orders_.size(); }
  const IntVector& orders() const noexcept { return orders_; }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }
  /// Number of elements.
  Integer cardinality() const;
  /// Elementary divisors > 1.
  IntVector invariant_factors() const;

  TorsionGaloisModule pullback(const GroupPtr& group, const std::vector<std::size_t>& hom) const;

 private:
  GroupPtr group_;
  IntVector orders_;
  std::vector<IntMatrix> action_;
};

TorsionGaloisModule direct_sum(const TorsionGaloisModule& a, const TorsionGaloisModule& b);

/// I (x) M.
TorsionGaloisModule twist_module(const GaloisLattice& lattice, const TorsionGaloisModule& module);

struct FixedPoints {
  Integer count;
  /// F with N Z^m <= F <= Z^m and M^g = F / N Z^m, N = diag(orders).
  Lattice lifted;
};

/// Elements of M fixed by g.
FixedPoints fixed_submodule(const TorsionGaloisModule& module, std::size_t g);
Integer fixed_points(const TorsionGaloisModule& module, std::size_t g);

/// Homomorphism of torsion modules, x -> matrix * x on column vectors.
class ModuleMap {
 public:
  ModuleMap(TorsionGaloisModule source, TorsionGaloisModule target, IntMatrix matrix);

  const TorsionGaloisModule& source() const noexcept { return source_; }
  const TorsionGaloisModule& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  bool is_equivariant() const;
  Integer image_size() const;
  Integer kernel_size() const;
  /// K with N Z^m <= K and ker = K / N Z^m.
  Lattice kernel_lifted() const;
  /// The image lifted to Z^{m'} (contains the target's diag(orders)).
  Lattice image_lifted() const;
  bool is_injective() const { return kernel_size() == 1; }
  bool is_surjective() const { return image_size() == target_.cardinality(); }

 private:
  TorsionGaloisModule source_;
  TorsionGaloisModule target_;
  IntMatrix matrix_;
};

/// g o f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// f (x) id : I (x) M -> J (x) M for an equivariant lattice map x -> x * f.
/// Throws PreconditionError if f is not equivariant.
ModuleMap induced_map(const GaloisLattice& source, const GaloisLattice& target, const IntMatrix& f,
                      const TorsionGaloisModule& module);

/// Companion matrix of a monic polynomial.
IntMatrix companion_matrix(const cyclo::IntPoly& f);

/// Characteristic polynomial of g on I (x) T, where f is the characteristic
/// polynomial of g on T: char poly of (B_g^{-1})^T (x) companion(f).
cyclo::IntPoly twist_charpoly(const GaloisLattice& lattice, const cyclo::IntPoly& f, std::size_t g);

/// A presentation Z[G]^a -> Z[G]^b -> I -> 0 of right Z[G]-modules, the map
/// being left multiplication of column vectors by the b x a matrix psi.
struct ModulePresentation {
  GroupPtr group;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::vector<grouprings::GroupRingElement>> psi;  // psi[row < b][col < a]
};

/// Greedy presentation of a right ideal: minimal generators chosen among the
/// basis rows, relations generating the kernel likewise.
ModulePresentation compute_presentation(const grouprings::GroupRingIdeal& ideal);

/// A presentation of the same module: elementary Z[G] row operations,
/// redundant relations and an extra generator killed by its own relation.
ModulePresentation randomize_presentation(const ModulePresentation& p, std::mt19937_64& rng);

/// coker((Z[G] (x) M)^a -> (Z[G] (x) M)^b).
TorsionGaloisModule presentation_twist(const ModulePresentation& p, const TorsionGaloisModule& module);

struct ExactnessReport {
  Integer sub_order;       // |I (x) M|
  Integer whole_order;     // |J (x) M|
  Integer quotient_order;  // |(J/I) (x) M|
  bool injective = false;
  bool surjective = false;
  bool middle_exact = false;
  bool exact = false;
};

/// 0 -> I (x) M -> J (x) M -> (J/I) (x) M -> 0 for right ideals I <= J.
/// Throws NonFreeQuotientError if J/I has torsion.
ExactnessReport exactness_check(const grouprings::GroupRingIdeal& sub, const grouprings::GroupRingIdeal& whole,
                                const TorsionGaloisModule& module);

/// Same invariant factors and fixed-point counts for every g.
bool isomorphic_invariants(const TorsionGaloisModule& a, const TorsionGaloisModule& b);

/// (I (x) J) (x) M versus I (x) (J (x) M).
bool associativity_check(const GaloisLattice& i, const GaloisLattice& j, const TorsionGaloisModule& module);

}  // namespace galtwist::galmod
