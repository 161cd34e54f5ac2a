#include "galtwist/cyclopoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "galtwist/errors.hpp"

namespace galtwist::cyclo {

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[n] += 1;
  v[0] -= 1;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("IntPoly::leading: zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::compose_power(std::size_t k) const {
  if (k == 0) return IntPoly::constant(evaluate(1));
  if (coeffs_.empty()) return {};
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

namespace {

// Long division where every step's leading-coefficient quotient must be exact.
DivResult divide_exact_steps(const IntPoly& a, const IntPoly& b, bool require_exact_steps) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {IntPoly{}, a};
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), bc.back().get_mpz_t())) {
      if (require_exact_steps) throw PreconditionError("exact_divide: divisor does not divide dividend");
      break;
    }
    Integer q = rem[k] / bc.back();
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

}  // namespace

DivResult divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (!monic.is_monic()) throw PreconditionError("divmod_monic: divisor is not monic");
  return divide_exact_steps(a, monic, true);
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  DivResult r = divide_exact_steps(a, b, true);
  if (!r.remainder.is_zero()) throw PreconditionError("exact_divide: nonzero remainder");
  return r.quotient;
}

IntPoly pow(const IntPoly& p, std::size_t e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------ arithmetic

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw PreconditionError("mobius: argument must be positive");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw PreconditionError("euler_phi: argument must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw PreconditionError("cyclotomic: index must be positive");
  // Phi_d = prod_{e | d} (x^{d/e} - 1)^{mu(e)}
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (std::uint64_t e : divisors(d)) {
    int mu = mobius(e);
    if (mu == 1) num = num * IntPoly::x_pow_minus_one(d / e);
    if (mu == -1) den = den * IntPoly::x_pow_minus_one(d / e);
  }
  return exact_divide(num, den);
}

IntPoly psi(std::uint64_t d) {
  return divmod_monic(IntPoly::x_pow_minus_one(d), cyclotomic(d)).quotient;
}

IntPoly characteristic_polynomial(const linalg::IntMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("characteristic_polynomial: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  linalg::IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    linalg::IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    linalg::IntMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(trace.get_mpz_t(), kk.get_mpz_t()))
      throw VerificationError("characteristic_polynomial: non-integral Faddeev-LeVerrier step");
    c[n - k] = -(trace / kk);
  }
  return IntPoly(std::move(c));
}

namespace {

// Determinant of a square matrix over Z[X] by fraction-free elimination.
IntPoly poly_determinant(std::vector<std::vector<IntPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPoly::constant(1);
  IntPoly prev = IntPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a[s][k].is_zero()) ++s;
      if (s == n) return {};
      std::swap(a[k], a[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly{};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

IntPoly inflate_charpoly(const IntPoly& f, std::uint64_t r, std::uint64_t d) {
  if (r == 0 || d == 0) throw PreconditionError("inflate_charpoly: r and d must be positive");
  if (r % d != 0) throw PreconditionError("inflate_charpoly: d must divide r");
  if (!f.is_monic()) throw PreconditionError("inflate_charpoly: f must be monic");

  const std::size_t n = static_cast<std::size_t>(f.degree());
  const IntPoly phi_d = cyclotomic(d);
  const std::size_t m = static_cast<std::size_t>(phi_d.degree());

  // F(X, Y) = sum_k c_k X^k Y^(n-k), stored as a polynomial in Y with
  // coefficients in Z[X].
  std::vector<IntPoly> hom(n + 1);
  for (std::size_t k = 0; k <= n; ++k) hom[n - k] = IntPoly::monomial(k, f[k]);

  // Multiplication-by-F matrix on the Z[X]-basis 1, Y, ..., Y^(m-1) of
  // Z[X][Y] / Phi_d(Y).
  std::vector<std::vector<IntPoly>> mat(m, std::vector<IntPoly>(m));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<IntPoly> prod(n + j + 1);
    for (std::size_t i = 0; i <= n; ++i) prod[i + j] = hom[i];
    for (std::size_t k = prod.size(); k-- > m;) {
      if (prod[k].is_zero()) continue;
      IntPoly lead = prod[k];
      for (std::size_t t = 0; t <= m; ++t)
        prod[k - m + t] = prod[k - m + t] - IntPoly::constant(phi_d[t]) * lead;
    }
    for (std::size_t i = 0; i < m; ++i) mat[i][j] = i < prod.size() ? prod[i] : IntPoly{};
  }
  IntPoly norm = poly_determinant(std::move(mat));
  IntPoly result = pow(norm, euler_phi(r) / euler_phi(d));
  if (!result.is_monic() || static_cast<std::uint64_t>(result.degree()) != n * euler_phi(r))
    throw VerificationError("inflate_charpoly: result is not monic of degree deg(f)*phi(r)");
  return result;
}

Integer eval_at_one_abs(const IntPoly& f) { return abs(f.evaluate(1)); }

}  // namespace galtwist::cyclo
