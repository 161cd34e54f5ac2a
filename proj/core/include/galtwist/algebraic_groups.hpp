#pragma once

// G_m and elliptic curves over F_q: Frobenius characteristic polynomials,
// norm maps, the brute-force primitive subgroup of V(F_{q^r}) and the orders
// predicted for it.

#include <cstdint>
#include <string>
#include <vector>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/field_tower.hpp"

namespace galtwist::algroup {

using linalg::Integer;

/// Largest field size q^r the enumeration oracles will scan.
inline constexpr std::uint64_t kEnumerationBound = 10'000'000;
/// Largest q for the exhaustive point count behind frobenius_charpoly.
inline constexpr std::uint64_t kPointCountBound = 1'000'000;

enum class ModelKind { multiplicative, elliptic };

/// V over F_q, q = p^m. For elliptic curves y^2 = x^3 + a x + b with a, b in F_p.
struct GroupModel {
  ModelKind kind = ModelKind::multiplicative;
  std::uint32_t p = 2;
  unsigned m = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::uint64_t q() const;
  /// Canonical spec string, e.g. "ec:p=5,a=1,b=1".
  std::string spec() const;
};

/// Parses `gm:p=<p>[,m=<m>]` and `ec:p=<p>,a=<a>,b=<b>[,m=<m>]`. Throws
/// ParseError on syntax, PreconditionError on invalid parameters.
GroupModel parse_group_model(const std::string& spec);
/// Throws PreconditionError unless p is prime, and for curves p >= 5 and
/// 4a^3 + 27b^2 != 0 mod p.
void validate(const GroupModel& model);

struct Point {
  bool infinity = true;
  FieldTower::Elem x{};
  FieldTower::Elem y{};
};

/// Affine short Weierstrass curve over a field tower.
class EllipticCurve {
 public:
  EllipticCurve(const FieldTower& field, std::int64_t a, std::int64_t b);

  const FieldTower& field() const noexcept { return *field_; }
  bool on_curve(const Point& pt) const;
  bool equal(const Point& u, const Point& v) const;
  Point neg(const Point& pt) const;
  Point add(const Point& u, const Point& v) const;
  Point mul(Point pt, std::uint64_t n) const;
  Point frobenius(const Point& pt, unsigned k = 1) const;
  /// 0 for infinity, otherwise 1 + x_index * |F| + y_index.
  std::uint64_t key(const Point& pt) const;
  Point from_key(std::uint64_t key) const;
  /// x^3 + a x + b
  FieldTower::Elem rhs(const FieldTower::Elem& x) const;

 private:
  const FieldTower* field_;
  FieldTower::Elem a_, b_;
};

/// root[i] = some square root of element i, or UINT32_MAX for non-squares.
/// Throws ResourceError above kEnumerationBound.
std::vector<std::uint32_t> square_root_table(const FieldTower& field);

/// All points of the curve over its field: infinity first, then by x index,
/// each x contributing its roots y by index.
std::vector<Point> enumerate_points(const EllipticCurve& curve);

/// X - q, or X^2 - aX + q with a = q + 1 - |E(F_q)| from an exhaustive count.
cyclo::IntPoly frobenius_charpoly(const GroupModel& model);

/// N_{L/F} for F = F_{q^d}: the product (resp. sum) of Frob^{dj}(x), j < r/d.
FieldTower::Elem norm_map(const FieldTower& field, const FieldTower::Elem& x, unsigned d);
Point norm_map(const EllipticCurve& curve, const Point& pt, unsigned d);

struct BruteForceResult {
  std::uint64_t count = 0;
  /// Element indices (G_m) or point keys (elliptic), ascending enumeration order.
  std::vector<std::uint64_t> elements;
  bool subgroup_verified = false;
  bool frobenius_closed = false;
};

/// Points of V(F_{q^r}) killed by N_{L/F} for every F with [L:F] prime.
/// Work is split into contiguous index ranges over `workers` threads; the
/// result does not depend on the number of workers.
BruteForceResult primitive_subgroup_bruteforce(const GroupModel& model, unsigned r, unsigned workers = 1,
                                               bool keep_elements = false);

/// |V(F_{q^r})| by enumeration.
Integer count_points(const GroupModel& model, unsigned r);

/// |inflate_charpoly(frobenius_charpoly(V), r, r)(1)|.
Integer twisted_order(const GroupModel& model, unsigned r);

struct ProductCheck {
  Integer points;   // |V(F_{q^r})|
  Integer product;  // prod over d | r of twisted_order(V, d)
  bool holds = false;
};
ProductCheck restriction_order_product_check(const GroupModel& model, unsigned r);

struct TorsionCheck {
  Integer module_count;  // fixed points of Frobenius on I_L (x) V[n]
  Integer brute_count;   // n-torsion of the brute-force primitive subgroup
  unsigned splitting_degree = 0;  // k = r*s with V[n] defined over F_{q^k}
  bool holds = false;
};
/// Throws PreconditionError when p divides n.
TorsionCheck twisted_torsion_check(const GroupModel& model, unsigned r, std::uint64_t n, unsigned workers = 1);

}  // namespace galtwist::algroup
