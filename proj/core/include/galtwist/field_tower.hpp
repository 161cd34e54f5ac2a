#pragma once

// F_p <= F_q <= F_{q^r}, q = p^m, with F_{q^r} = F_p[x]/(f) for a single
// modulus f of degree m*r.
//
// The modulus is the first monic irreducible polynomial of degree m*r when
// the monic polynomials x^D + c_{D-1} x^{D-1} + ... + c_0 are listed by the
// integer c_0 + c_1 p + ... + c_{D-1} p^{D-1}. Elements are indexed the same
// way, so element 0 is zero, element 1 is one and element p is x (D > 1).

#include <array>
#include <cstdint>
#include <vector>

namespace galtwist::algroup {

inline constexpr unsigned kMaxFieldDegree = 24;
inline constexpr std::uint32_t kMaxCharacteristic = 1U << 24;

class FieldTower {
 public:
  using Elem = std::array<std::uint32_t, kMaxFieldDegree>;

  /// F_{q^top_degree} with q = p^base_degree.
  FieldTower(std::uint32_t p, unsigned base_degree, unsigned top_degree);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned base_degree() const noexcept { return m_; }
  unsigned top_degree() const noexcept { return r_; }
  /// Degree over F_p.
  unsigned degree() const noexcept { return d_; }
  std::uint64_t base_size() const noexcept { return q_; }
  /// Number of elements of the top field.
  std::uint64_t size() const noexcept { return size_; }
  /// Coefficients c_0..c_{D-1} of the modulus (the x^D coefficient is 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem from_int(std::int64_t c) const;
  Elem from_index(std::uint64_t index) const;
  std::uint64_t to_index(const Elem& a) const;
  /// Advances to the element with the next index (wrapping to zero).
  void increment(Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem square(const Elem& a) const { return mul(a, a); }
  Elem scale(const Elem& a, std::uint64_t c) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws PreconditionError on zero.
  Elem inv(const Elem& a) const;

  /// a^(q^k), k taken mod top_degree.
  Elem frobenius(const Elem& a, unsigned k = 1) const;
  /// a lies in F_{q^d}.
  bool in_subfield(const Elem& a, unsigned d) const;

 private:
  std::uint32_t p_;
  unsigned m_, r_, d_;
  std::uint64_t q_, size_;
  std::vector<std::uint32_t> modulus_;
  // frob_[k][i] = (x^i)^(q^k), k = 0..r-1.
  std::vector<std::vector<Elem>> frob_;
};

/// Monic irreducibility over F_p (Ben-Or); coefficients ascending, leading 1 included.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace galtwist::algroup
