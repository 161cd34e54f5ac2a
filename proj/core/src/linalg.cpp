#include "galtwist/linalg.hpp"

#include <algorithm>
#include <utility>

#include "galtwist/errors.hpp"

namespace galtwist::linalg {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  if (v.size() != cols_) throw PreconditionError("IntMatrix::set_row: length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::append_row(const IntVector& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw PreconditionError("IntMatrix::append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  IntMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("IntMatrix sum: dimension mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("IntMatrix difference: dimension mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

IntVector operator*(const IntVector& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw PreconditionError("vector-matrix product: dimension mismatch");
  IntVector y(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw PreconditionError("vstack: column count mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) c.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) c.set_row(a.rows() + i, b.row(i));
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("unimodular_inverse: matrix not square");
  const std::size_t n = m.rows();
  Lattice h = hnf(hstack(m, IntMatrix::identity(n)));
  if (h.rank() != n || !h.basis().block(0, n, 0, n).is_identity())
    throw PreconditionError("unimodular_inverse: matrix is not invertible over Z");
  return h.basis().block(0, n, n, 2 * n);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------- echelon

namespace {

void axpy_row(IntVector& target, const Integer& s, const IntVector& src) {
  for (std::size_t j = 0; j < target.size(); ++j)
    if (src[j] != 0) target[j] += s * src[j];
}

// In-place row echelon reduction to canonical Hermite normal form. Returns
// pivot columns; rows beyond pivots.size() are removed.
std::vector<std::size_t> echelonize(std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t k = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0 && (k == rows.size() || abs(rows[i][c]) < abs(rows[k][c]))) k = i;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[r][c].get_mpz_t(),
                 rows[i][c].get_mpz_t());
      Integer u = rows[r][c] / g;
      Integer v = rows[i][c] / g;
      IntVector new_r(cols), new_i(cols);
      for (std::size_t j = c; j < cols; ++j) {
        new_r[j] = s * rows[r][j] + t * rows[i][j];
        new_i[j] = u * rows[i][j] - v * rows[r][j];
      }
      rows[r] = std::move(new_r);
      rows[i] = std::move(new_i);
    }
    if (rows[r][c] < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0) axpy_row(rows[i], -q, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<IntVector> to_rows(const IntMatrix& m) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Lattice::Lattice(std::size_t ambient, IntMatrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Lattice Lattice::full(std::size_t ambient) { return hnf(IntMatrix::identity(ambient)); }

Lattice Lattice::span(const std::vector<IntVector>& generators, std::size_t ambient) {
  return hnf(IntMatrix::from_rows(generators, ambient));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw PreconditionError("Lattice::coordinates: ambient mismatch");
  IntVector rest = v;
  IntVector coeffs(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t p = pivots_[i];
    for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < p; ++j)
      if (rest[j] != 0) return std::nullopt;
    if (rest[p] == 0) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return std::nullopt;
    coeffs[i] = rest[p] / basis_(i, p);
    for (std::size_t j = p; j < ambient_; ++j) rest[j] -= coeffs[i] * basis_(i, j);
  }
  for (const auto& e : rest)
    if (e != 0) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& sub) const {
  if (sub.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis_.row(i))) return false;
  return true;
}

Lattice hnf(const IntMatrix& m) {
  auto rows = to_rows(m);
  auto pivots = echelonize(rows, m.cols());
  return Lattice(m.cols(), IntMatrix::from_rows(rows, m.cols()), std::move(pivots));
}

// ---------------------------------------------------------------- Smith

SmithForm smith(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < nc; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < nr; ++k) std::swap(u(i, k), u(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < nr; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < nc; ++k) std::swap(v(k, i), v(k, j));
  };
  // row_i += s * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& s) {
    for (std::size_t k = 0; k < nc; ++k) a(i, k) += s * a(j, k);
    for (std::size_t k = 0; k < nr; ++k) u(i, k) += s * u(j, k);
  };
  // col_i += s * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& s) {
    for (std::size_t k = 0; k < nr; ++k) a(k, i) += s * a(k, j);
    for (std::size_t k = 0; k < nc; ++k) v(k, i) += s * v(k, j);
  };

  const std::size_t n = std::min(nr, nc);
  for (std::size_t t = 0; t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = nr, bj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a(i, j) != 0 && (bi == nr || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == nr) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        if (q != 0) add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        if (q != 0) add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t mi = t, mj = t;
        for (std::size_t i = t + 1; i < nr; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(mi, mj))) { mi = i; mj = t; }
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(mi, mj))) { mi = t; mj = j; }
        swap_rows(t, mi);
        swap_cols(t, mj);
        continue;
      }
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      add_row(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t k = 0; k < nc; ++k) a(t, k) = -a(t, k);
      for (std::size_t k = 0; k < nr; ++k) u(t, k) = -u(t, k);
    }
  }
  return SmithForm{std::move(u), std::move(v), std::move(a)};
}

IntVector snf_diagonal(const IntMatrix& m) {
  SmithForm s = smith(m);
  IntVector d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.diagonal(i, i) != 0) d.push_back(s.diagonal(i, i));
  return d;
}

// ---------------------------------------------------------------- kernels

Lattice kernel(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  if (n == 0) return Lattice(0);
  auto rows = to_rows(hstack(m, IntMatrix::identity(n)));
  auto pivots = echelonize(rows, k + n);
  std::vector<IntVector> ker;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] < k) continue;
    ker.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(k), rows[i].end());
  }
  return Lattice::span(ker, n);
}

Lattice saturate(const Lattice& l) {
  const std::size_t n = l.ambient_rank();
  if (l.is_zero()) return l;
  Lattice orth = kernel(l.basis().transpose());
  if (orth.is_zero()) return Lattice::full(n);
  return kernel(orth.basis().transpose());
}

bool is_saturated(const Lattice& l) { return saturate(l) == l; }

Lattice sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw PreconditionError("sum: ambient rank mismatch");
  return hnf(vstack(a.basis(), b.basis()));
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw PreconditionError("intersect: ambient rank mismatch");
  const std::size_t n = a.ambient_rank();
  if (a.is_zero() || b.is_zero()) return Lattice(n);
  Lattice rel = kernel(vstack(a.basis(), b.basis()));
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < rel.rank(); ++i) {
    IntVector x = rel.basis().row(i);
    x.resize(a.rank());
    gens.push_back(x * a.basis());
  }
  return Lattice::span(gens, n);
}

std::optional<Integer> index_in(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw PreconditionError("index_in: ambient rank mismatch");
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto c = b.coordinates(a.basis().row(i));
    if (!c) throw PreconditionError("index_in: first lattice is not contained in the second");
    coords.push_back(std::move(*c));
  }
  if (a.rank() < b.rank()) return std::nullopt;
  return abs(determinant(IntMatrix::from_rows(coords, b.rank())));
}

}  // namespace galtwist::linalg
