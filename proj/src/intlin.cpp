#include "bhh/intlin.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace bhh {

namespace {

std::atomic<std::uint64_t> g_divisions{0};

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

// col[dst] -= q * col[src]
void axpy_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw InputError("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& rowIdx,
                            const std::vector<std::size_t>& colIdx) const {
  IntMatrix m(rowIdx.size(), colIdx.size());
  for (std::size_t r = 0; r < rowIdx.size(); ++r)
    for (std::size_t c = 0; c < colIdx.size(); ++c)
      m(r, c) = (*this)(rowIdx[r], colIdx[c]);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: shape mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalVector IntMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: shape mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += Rational((*this)(i, k)) * v[k];
  for (auto& x : out) x.canonicalize();
  return out;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    int c = cmp(a.data_[i], b.data_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

IntVector SnfDecomposition::diagonal() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact by Sylvester's identity.
        Integer num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw InputError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      Integer minor = determinant(m.select(rs, cs));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
    }
  }
  return adj;
}

IntMatrix hnf(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  const std::size_t k = generators.cols();
  if (n == 0) throw InputError("hnf: empty matrix");
  if (k < n) throw InputError("hnf: generators are rank deficient");
  IntMatrix a = generators;
  Integer g, s, t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, i) == 0) {
        swap_cols(a, i, j);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(i, i).get_mpz_t(),
                 a(i, j).get_mpz_t());
      Integer ci = a(i, i) / g;
      Integer cj = a(i, j) / g;
      for (std::size_t r = 0; r < n; ++r) {
        Integer x = a(r, i);
        Integer y = a(r, j);
        a(r, i) = s * x + t * y;
        a(r, j) = ci * y - cj * x;
      }
    }
    if (a(i, i) == 0) throw InputError("hnf: generators are rank deficient");
    if (a(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) a(r, i) = -a(r, i);
    for (std::size_t j = 0; j < i; ++j) {
      Integer q = floor_div(a(i, j), a(i, i));
      if (q != 0) axpy_col(a, j, i, q);
    }
  }
  std::vector<std::size_t> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return a.select(rows, cols);
}

SnfDecomposition snf(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SnfDecomposition out{m, IntMatrix::identity(r), IntMatrix::identity(c)};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  auto bring_to_pivot = [&](std::size_t t, std::size_t pi, std::size_t pj) {
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(v, t, pj);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (bi == r || cmpabs(d(i, j), d(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    bring_to_pivot(t, bi, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = trunc_div(d(i, t), d(t, t));
        axpy_row(d, i, t, q);
        axpy_row(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = trunc_div(d(t, j), d(t, t));
        axpy_col(d, j, t, q);
        axpy_col(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (d(i, t) != 0 && cmpabs(d(i, t), d(pi, pj)) < 0) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(t, j) != 0 && cmpabs(d(t, j), d(pi, pj)) < 0) {
            pi = t;
            pj = j;
          }
        bring_to_pivot(t, pi, pj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r) break;
      axpy_row(d, t, bad, Integer(-1));
      axpy_row(u, t, bad, Integer(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }
  return out;
}

RationalVector solve_exact(const IntMatrix& m, const RationalVector& b) {
  if (!m.square()) throw InputError("solve_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (b.size() != n) throw InputError("solve_exact: right-hand side size mismatch");
  std::vector<RationalVector> a(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw InputError("solve_exact: singular matrix");
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a[i][n] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfDecomposition s = snf(m);
  const std::size_t rank = s.diagonal().size();
  std::vector<std::size_t> rows(m.cols()), cols;
  std::iota(rows.begin(), rows.end(), 0);
  for (std::size_t j = rank; j < m.cols(); ++j) cols.push_back(j);
  return s.v.select(rows, cols);
}

IntMatrix congruence_lattice(const IntMatrix& c, const Integer& modulus) {
  const std::size_t n = c.cols();
  const std::size_t r = c.rows();
  if (r == 0) return IntMatrix::identity(n);
  IntMatrix scaled = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) scaled(i, i) = modulus;
  IntMatrix ker = integer_kernel(c.hconcat(scaled));
  std::vector<std::size_t> top(n), all(ker.cols());
  std::iota(top.begin(), top.end(), 0);
  std::iota(all.begin(), all.end(), 0);
  return hnf(ker.select(top, all));
}

bool lattice_contains(const IntMatrix& basis, const IntVector& v) {
  const std::size_t n = basis.rows();
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer rest = v[i];
    for (std::size_t j = 0; j < i; ++j) rest -= basis(i, j) * x[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis(i, i).get_mpz_t())) return false;
    x[i] = rest / basis(i, i);
  }
  return true;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  IntMatrix negb = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) negb(i, j) = -b(i, j);
  IntMatrix ker = integer_kernel(a.hconcat(negb));
  std::vector<std::size_t> top(a.cols()), all(ker.cols());
  std::iota(top.begin(), top.end(), 0);
  std::iota(all.begin(), all.end(), 0);
  return hnf(a * ker.select(top, all));
}

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational out = x - Rational(fl);
  out.canonicalize();
  return out;
}

std::uint64_t exact_division_count() { return g_divisions.load(); }

Integer exact_divide(const Integer& a, const Integer& b, std::string_view what) {
  g_divisions.fetch_add(1, std::memory_order_relaxed);
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    std::ostringstream os;
    os << "inexact division computing " << what << ": " << a << " / " << b;
    throw InvariantViolation(os.str());
  }
  return a / b;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

} // namespace bhh
