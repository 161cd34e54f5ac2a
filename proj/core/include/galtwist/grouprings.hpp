#pragma once

// The group ring Z[G], its one-sided ideals as lattices in Z^|G|, and the
// cyclotomic, isotypic and semidirect twist ideals built from them.
//
// An element x of Z[G] is the row vector of its coefficients indexed by the
// group's element enumeration. G acts on Z[G] on the right: x -> x * g.

#include <optional>
#include <string>
#include <vector>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/finite_group.hpp"
#include "galtwist/linalg.hpp"

namespace galtwist::grouprings {

using groups::GroupPtr;
using groups::Subgroup;
using linalg::IntMatrix;
using linalg::Integer;
using linalg::IntVector;
using linalg::Lattice;

class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group);
  GroupRingElement(GroupPtr group, IntVector coeffs);

  static GroupRingElement basis(const GroupPtr& group, std::size_t g);
  static GroupRingElement one(const GroupPtr& group) { return basis(group, 0); }
  /// p(t) for the group element t.
  static GroupRingElement from_polynomial(const GroupPtr& group, const cyclo::IntPoly& p, std::size_t t);

  const GroupPtr& group() const noexcept { return group_; }
  const IntVector& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t g) const { return coeffs_[g]; }
  bool is_zero() const;

  /// Matrix R with x * R = coordinates of x * this.
  IntMatrix right_multiplication() const;
  /// Matrix L with x * L = coordinates of this * x.
  IntMatrix left_multiplication() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Integer& s, const GroupRingElement& a);

  /// E.g. "1 + 2*t^3 - (1,0)".
  std::string to_string() const;

 private:
  GroupPtr group_;
  IntVector coeffs_;
};

/// Right multiplication matrix of a lattice vector viewed as an element of Z[G].
IntMatrix right_multiplication(const GroupPtr& group, const IntVector& b);
IntMatrix left_multiplication(const GroupPtr& group, const IntVector& b);

/// A sublattice of Z[G] with its verified closure properties.
class GroupRingIdeal {
 public:
  GroupRingIdeal(GroupPtr group, Lattice lattice);

  static GroupRingIdeal zero(const GroupPtr& group);
  static GroupRingIdeal whole(const GroupPtr& group);
  /// Right ideal sum_i b_i Z[G].
  static GroupRingIdeal right_generated(const GroupPtr& group, const std::vector<GroupRingElement>& gens);
  /// Left ideal sum_i Z[G] b_i.
  static GroupRingIdeal left_generated(const GroupPtr& group, const std::vector<GroupRingElement>& gens);

  const GroupPtr& group() const noexcept { return group_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return lattice_.rank(); }
  bool is_right_ideal() const noexcept { return right_; }
  bool is_left_ideal() const noexcept { return left_; }
  bool is_two_sided() const noexcept { return right_ && left_; }
  /// Z[G]/I torsion-free.
  bool is_saturated() const noexcept { return saturated_; }
  bool contains(const GroupRingElement& x) const { return lattice_.contains(x.coeffs()); }

  /// Action matrices of every group element on the stored basis for the
  /// right action x -> x g (requires a right ideal).
  std::vector<IntMatrix> right_action() const;

  friend bool operator==(const GroupRingIdeal& a, const GroupRingIdeal& b) {
    return a.group_ == b.group_ && a.lattice_ == b.lattice_;
  }

 private:
  GroupPtr group_;
  Lattice lattice_;
  bool right_ = false;
  bool left_ = false;
  bool saturated_ = false;
};

/// N_H = sum of the elements of H.
GroupRingElement norm_element(const Subgroup& h);

/// p(tau) for the generator tau of a cyclic group (element 1 for cyclic(r)).
GroupRingElement cyclic_polynomial_element(const GroupPtr& group, const cyclo::IntPoly& p);

/// Psi_r(tau) Z[G] for G cyclic of order r.
GroupRingIdeal cyclic_twist_ideal(const GroupPtr& group);

/// Kernels K of the surjections from G onto cyclic groups, i.e. one entry for
/// every subextension F with F/k cyclic. Ordered as all_subgroups.
std::vector<Subgroup> cyclic_quotient_kernels(const GroupPtr& group);

/// Q[G]_F intersected with Z[G] for abelian G, F given by K = Gal(L/F).
GroupRingIdeal isotypic_ideal(const Subgroup& kernel);

/// Left annihilator {a : a I = 0}.
GroupRingIdeal annihilator(const GroupRingIdeal& ideal);
/// Right annihilator {a : I a = 0}.
GroupRingIdeal right_annihilator(const GroupRingIdeal& ideal);
/// right_annihilator(annihilator(I)) == I.
bool double_annihilator_check(const GroupRingIdeal& ideal);

struct NormGeneratorComparison {
  GroupRingIdeal phi_ideal;       // Phi_r(tau) Z[G]
  GroupRingIdeal all_norms;       // N_{L/F} over every proper subfield F
  GroupRingIdeal prime_norms;     // N_{L/F} over F with [L:F] prime
  GroupRingIdeal annihilator_il;  // annihilator(cyclic_twist_ideal)
  bool equal = false;
};

/// For cyclic G of order r. When r = 1 all four ideals are zero.
NormGeneratorComparison norm_generators_equal_annihilator(const GroupPtr& group);

struct SemidirectTwist {
  GroupRingIdeal cyclic_ideal;  // I_{L/K} embedded in Z[Gamma] inside Z[G]
  GroupRingIdeal ideal;         // J_L = N_H I_{L/K}
  IntMatrix norm_map;           // rows: N_H * (basis of I_{L/K}) in the basis of J_L
  bool right_ideal = false;
  bool saturated = false;
  bool norm_map_unimodular = false;
  bool gamma_equivariant = false;
};

/// J_L = N_H I_{L/K} for G built by FiniteGroup::semidirect. Throws
/// VerificationError if J_L is not a saturated right ideal.
SemidirectTwist semidirect_twist_ideal(const GroupPtr& group);

/// sum over the p+1 order-p subgroups of (Z/p)^2 of N_H equals p + N_G.
bool noncyclic_norm_identity(std::uint64_t p);

struct QuotientIndex {
  Integer lattice_index;  // [Z[G] : I_L + I_L^perp]
  Integer formula;        // prod over primes l | r of l^(phi(r)/(l-1))
};

/// Index of the image of I_L in Z[G]/I_L^perp, two ways.
QuotientIndex twist_ideal_quotient_index(std::uint64_t r);

}  // namespace galtwist::grouprings
