#pragma once

// Exact integer linear algebra: matrices over Z, lattices in Hermite normal
// form, Smith normal form, kernels, saturation, intersection and index.
//
// Conventions used everywhere in galtwist:
//   * vectors are rows; a matrix M acts on a row vector x as x * M;
//   * a Lattice stores its basis in row-style Hermite normal form: rows are
//     in echelon form with strictly increasing pivot columns, every pivot is
//     positive, and every entry above a pivot lies in [0, pivot). Two
//     lattices are equal iff their stored bases are identical;
//   * the zero lattice has a basis with 0 rows.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace galtwist::linalg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a rows.size() x cols matrix; every row must have length cols.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix diagonal(const IntVector& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  void set_row(std::size_t i, const IntVector& v);
  void append_row(const IntVector& v);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// x * M for a row vector x.
IntVector operator*(const IntVector& x, const IntMatrix& m);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1. Throws PreconditionError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

class Lattice {
 public:
  /// The zero lattice in Z^ambient.
  explicit Lattice(std::size_t ambient = 0);
  static Lattice full(std::size_t ambient);
  /// Row span of the given vectors.
  static Lattice span(const std::vector<IntVector>& generators, std::size_t ambient);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& sub) const;
  /// Coefficients c with c * basis() == v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend Lattice hnf(const IntMatrix& m);
  Lattice(std::size_t ambient, IntMatrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Row lattice of m in canonical Hermite normal form.
Lattice hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // unimodular U
  IntMatrix right;     // unimodular V
  IntMatrix diagonal;  // D = U * m * V, diagonal with d_1 | d_2 | ... then zeros
};

/// Smith normal form with transforms.
SmithForm smith(const IntMatrix& m);

/// Nonzero elementary divisors d_1 | d_2 | ... of m (length = rank of m).
IntVector snf_diagonal(const IntMatrix& m);

/// Saturated left kernel {x : x * m = 0}; ambient rank = m.rows().
Lattice kernel(const IntMatrix& m);

/// (l tensor Q) intersected with Z^ambient.
Lattice saturate(const Lattice& l);
bool is_saturated(const Lattice& l);

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice sum(const Lattice& a, const Lattice& b);

/// [b : a]; nullopt when rank(a) < rank(b). Throws PreconditionError if a is
/// not contained in b.
std::optional<Integer> index_in(const Lattice& a, const Lattice& b);

}  // namespace galtwist::linalg
