#pragma once

// Integer polynomials, cyclotomic polynomials and the root-of-unity inflation
// of Frobenius characteristic polynomials.

#include <cstdint>
#include <string>
#include <vector>

#include "galtwist/linalg.hpp"

namespace galtwist::cyclo {

using linalg::Integer;

/// Polynomial over Z, coefficients in ascending degree order. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(std::size_t degree, const Integer& c = 1);
  /// x^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;

  Integer evaluate(const Integer& x) const;
  /// p(x^k)
  IntPoly compose_power(std::size_t k) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);

  std::string to_string(const std::string& var = "X") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct DivResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic polynomial.
DivResult divmod_monic(const IntPoly& a, const IntPoly& monic);

/// Exact division a / b over Z. Throws PreconditionError if b does not divide a.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, std::size_t e);

// ------------------------------------------------------------ arithmetic

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// d-th cyclotomic polynomial Phi_d.
IntPoly cyclotomic(std::uint64_t d);
/// (x^d - 1) / Phi_d(x)
IntPoly psi(std::uint64_t d);

/// Characteristic polynomial det(X*I - m) of a square integer matrix
/// (Faddeev-LeVerrier, exact).
IntPoly characteristic_polynomial(const linalg::IntMatrix& m);

/// The monic polynomial prod_{i,zeta} (X - alpha_i * zeta)^(phi(r)/phi(d)),
/// alpha_i the roots of f and zeta the primitive d-th roots of unity. Computed
/// as the norm from Z[X][Y]/Phi_d(Y) of the homogenised Y^n f(X/Y) (i.e. the
/// resultant Res_Y(Phi_d(Y), Y^n f(X/Y))), then raised to phi(r)/phi(d).
IntPoly inflate_charpoly(const IntPoly& f, std::uint64_t r, std::uint64_t d);

/// |f(1)|
Integer eval_at_one_abs(const IntPoly& f);

}  // namespace galtwist::cyclo
