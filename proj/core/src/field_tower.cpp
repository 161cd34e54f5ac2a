#include "galtwist/field_tower.hpp"

#include <algorithm>

#include "galtwist/cyclopoly.hpp"
#include "galtwist/errors.hpp"

namespace galtwist::algroup {

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending, entries < p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  Poly h{0, 1};  // x^(p^i) mod f
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2));
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^(p^i) = x mod f: f has a factor of degree dividing i
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldTower::FieldTower(std::uint32_t p, unsigned base_degree, unsigned top_degree)
    : p_(p), m_(base_degree), r_(top_degree), d_(base_degree * top_degree) {
  if (!cyclo::is_prime(p)) throw PreconditionError("FieldTower: characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw PreconditionError("FieldTower: characteristic too large");
  if (m_ == 0 || r_ == 0) throw PreconditionError("FieldTower: degrees must be positive");
  if (d_ > kMaxFieldDegree)
    throw ResourceError("FieldTower: total degree " + std::to_string(d_) + " exceeds " + std::to_string(kMaxFieldDegree));
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= p;
  size_ = 1;
  for (unsigned i = 0; i < d_; ++i) {
    if (size_ > (~std::uint64_t{0}) / p) throw ResourceError("FieldTower: field size overflows 64 bits");
    size_ *= p;
  }

  // First irreducible modulus in index order.
  std::vector<std::uint32_t> cand(d_ + 1, 0);
  cand[d_] = 1;
  for (;;) {
    if (is_irreducible_mod_p(cand, p_)) break;
    std::size_t i = 0;
    while (i < d_ && ++cand[i] == p_) cand[i++] = 0;
    if (i == d_) throw VerificationError("FieldTower: no irreducible polynomial found");
  }
  modulus_.assign(cand.begin(), cand.begin() + d_);

  // Frobenius images (x^i)^q, then their iterates.
  Poly f(cand.begin(), cand.end());
  Poly xq = poly_powmod(Poly{0, 1}, q_, f, p_);
  std::vector<Elem> frob1(d_);
  Poly xi{1};
  for (unsigned i = 0; i < d_; ++i) {
    Elem e{};
    for (std::size_t j = 0; j < xi.size(); ++j) e[j] = static_cast<std::uint32_t>(xi[j]);
    frob1[i] = e;
    xi = poly_mulmod(xi, xq, f, p_);
  }
  std::vector<Elem> identity(d_);
  for (unsigned i = 0; i < d_; ++i) {
    identity[i] = Elem{};
    identity[i][i] = 1;
  }
  frob_.push_back(identity);
  frob_.push_back(frob1);
  for (unsigned k = 2; k < r_; ++k) {
    std::vector<Elem> next(d_);
    for (unsigned i = 0; i < d_; ++i) next[i] = frobenius(frob_[k - 1][i], 1);
    frob_.push_back(std::move(next));
  }
  frob_.resize(r_);

  // Frobenius has order exactly r on the top field.
  if (d_ > 1) {
    const Elem x = from_index(p_);
    Elem y = x;
    for (unsigned k = 1; k <= r_; ++k) {
      y = frobenius(y, 1);
      const bool back = equal(y, x);
      if (back != (k == r_)) throw VerificationError("FieldTower: Frobenius does not have order r");
    }
  }
}

FieldTower::Elem FieldTower::one() const {
  Elem e{};
  e[0] = 1;
  return e;
}

FieldTower::Elem FieldTower::from_int(std::int64_t c) const {
  Elem e{};
  std::int64_t v = c % static_cast<std::int64_t>(p_);
  if (v < 0) v += p_;
  e[0] = static_cast<std::uint32_t>(v);
  return e;
}

FieldTower::Elem FieldTower::from_index(std::uint64_t index) const {
  if (index >= size_) throw PreconditionError("FieldTower: element index out of range");
  Elem e{};
  for (unsigned i = 0; i < d_; ++i) {
    e[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FieldTower::to_index(const Elem& a) const {
  std::uint64_t index = 0;
  for (unsigned i = d_; i > 0; --i) index = index * p_ + a[i - 1];
  return index;
}

void FieldTower::increment(Elem& a) const {
  for (unsigned i = 0; i < d_; ++i) {
    if (++a[i] < p_) return;
    a[i] = 0;
  }
}

bool FieldTower::is_zero(const Elem& a) const {
  for (unsigned i = 0; i < d_; ++i)
    if (a[i] != 0) return false;
  return true;
}

bool FieldTower::equal(const Elem& a, const Elem& b) const {
  for (unsigned i = 0; i < d_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

FieldTower::Elem FieldTower::add(const Elem& a, const Elem& b) const {
  Elem c{};
  for (unsigned i = 0; i < d_; ++i) {
    std::uint32_t s = a[i] + b[i];
    c[i] = s >= p_ ? s - p_ : s;
  }
  return c;
}

FieldTower::Elem FieldTower::sub(const Elem& a, const Elem& b) const {
  Elem c{};
  for (unsigned i = 0; i < d_; ++i) c[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return c;
}

FieldTower::Elem FieldTower::neg(const Elem& a) const {
  Elem c{};
  for (unsigned i = 0; i < d_; ++i) c[i] = a[i] == 0 ? 0 : p_ - a[i];
  return c;
}

FieldTower::Elem FieldTower::scale(const Elem& a, std::uint64_t c) const {
  c %= p_;
  Elem out{};
  for (unsigned i = 0; i < d_; ++i) out[i] = static_cast<std::uint32_t>(a[i] * c % p_);
  return out;
}

FieldTower::Elem FieldTower::mul(const Elem& a, const Elem& b) const {
  const std::uint64_t p = p_;
  std::array<std::uint64_t, 2 * kMaxFieldDegree> t{};
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) t[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  // Products are < 2^48, so at most 2^15 of them fit before reduction.
  for (unsigned i = 0; i + 1 < 2 * d_; ++i) t[i] %= p;
  for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
    const std::uint64_t c = t[i] % p;
    if (c == 0) continue;
    const std::uint64_t nc = p - c;
    for (unsigned j = 0; j < d_; ++j) t[i - d_ + j] = (t[i - d_ + j] + nc * modulus_[j]) % p;
  }
  Elem out{};
  for (unsigned i = 0; i < d_; ++i) out[i] = static_cast<std::uint32_t>(t[i] % p);
  return out;
}

FieldTower::Elem FieldTower::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

FieldTower::Elem FieldTower::inv(const Elem& a) const {
  if (is_zero(a)) throw PreconditionError("FieldTower: inverse of zero");
  return pow(a, size_ - 2);
}

FieldTower::Elem FieldTower::frobenius(const Elem& a, unsigned k) const {
  k %= r_;
  if (k == 0) return a;
  const auto& rows = frob_[k];
  std::array<std::uint64_t, kMaxFieldDegree> acc{};
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) acc[j] += static_cast<std::uint64_t>(a[i]) * rows[i][j];
  }
  Elem out{};
  for (unsigned j = 0; j < d_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p_);
  return out;
}

bool FieldTower::in_subfield(const Elem& a, unsigned d) const {
  if (d == 0) throw PreconditionError("in_subfield: degree must be positive");
  return equal(frobenius(a, d % r_), a);
}

}  // namespace galtwist::algroup
