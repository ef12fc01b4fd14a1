#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bhh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rational vector; every entry is kept canonical (lowest terms,
/// positive denominator).
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal size).
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;

  /// Concatenates columns: [*this | other].
  IntMatrix hconcat(const IntMatrix& other) const;
  /// Submatrix picking the given rows and columns, in the given order.
  IntMatrix select(const std::vector<std::size_t>& rowIdx,
                   const std::vector<std::size_t>& colIdx) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  RationalVector operator*(const RationalVector& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Smith normal form with transforms: u * m * v == d.
struct SnfDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  /// Nonzero diagonal entries, in order (each divides the next).
  IntVector diagonal() const;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Classical adjugate: adjugate(m) * m == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `generators`. The result is square, lower triangular, with positive
/// diagonal, and every entry left of the diagonal lies in [0, diagonal).
/// Throws InputError when the columns do not span a full-rank lattice.
IntMatrix hnf(const IntMatrix& generators);

SnfDecomposition snf(const IntMatrix& m);

/// Exact solution of m * x == b for square nonsingular m.
RationalVector solve_exact(const IntMatrix& m, const RationalVector& b);

/// Integer basis (as columns) of {x in Z^cols : m * x == 0}.
/// Returns a matrix with zero columns when the kernel is trivial.
IntMatrix integer_kernel(const IntMatrix& m);

/// HNF basis of {x in Z^n : c * x == 0 (mod modulus)} where n == c.cols().
IntMatrix congruence_lattice(const IntMatrix& c, const Integer& modulus);

/// True when v lies in the lattice spanned by the columns of a lower
/// triangular nonsingular basis (for instance an hnf() result).
bool lattice_contains(const IntMatrix& triangularBasis, const IntVector& v);

/// Intersection of two full-rank lattices given by bases, returned in HNF.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

/// Floor-mod into [0, 1).
Rational frac(const Rational& x);

/// Number of divisions checked by exact_divide since process start.
std::uint64_t exact_division_count();

/// a / b, throwing InvariantViolation unless b divides a. `what` names the
/// quantity for the error message.
Integer exact_divide(const Integer& a, const Integer& b, std::string_view what);

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

} // namespace bhh
