#pragma once

#include "bhh/intlin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bhh {

/// A subset of the variable indices {0, ..., n-1}, stored as a bitmask.
/// Printed 1-based, e.g. "{1,3}".
class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static IndexSet all(std::size_t n);
  static IndexSet of(std::initializer_list<std::size_t> members);

  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::uint64_t bits() const { return bits_; }
  std::vector<std::size_t> members() const;
  IndexSet complement(std::size_t n) const;
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

  std::string str() const;

private:
  std::uint64_t bits_ = 0;
};

/// Every nonempty subset of {0..n-1}, in increasing bitmask order. This is
/// the canonical iteration order used by every per-torus computation.
std::vector<IndexSet> nonempty_subsets(std::size_t n);

/// Quasihomogeneous weights q with E q = (1, ..., 1).
struct Weights {
  RationalVector q;
};

/// An invertible polynomial sum_i prod_j x_j^{E_ij} with unit coefficients.
///
/// Rows are normalized so that every diagonal entry is positive and
/// det E > 0: the rows are permuted by the lexicographically first
/// permutation with both properties (the identity whenever it qualifies).
/// Aligning monomial i with variable i is what makes the transpose's
/// coordinate tori line up with complements of index sets.
class InvertiblePolynomial {
public:
  /// Validates and normalizes. Throws InputError on a non-square or negative
  /// matrix, det E == 0, or a non-positive weight.
  static InvertiblePolynomial from_matrix(IntMatrix e,
                                          std::vector<std::string> names = {});

  std::size_t n() const { return e_.rows(); }
  const IntMatrix& exponents() const { return e_; }
  const std::vector<std::string>& names() const { return names_; }
  const Integer& det() const { return det_; }
  const Weights& weights() const { return weights_; }

  /// Canonical text form, e.g. "x^2*y + y^3".
  std::string format() const;

  friend bool operator==(const InvertiblePolynomial& a, const InvertiblePolynomial& b) {
    return a.e_ == b.e_ && a.names_ == b.names_;
  }

private:
  IntMatrix e_;
  std::vector<std::string> names_;
  Integer det_;
  Weights weights_;
};

struct ParsedPolynomial {
  InvertiblePolynomial poly;
  std::vector<std::string> warnings;
};

/// Parses either polynomial text ("x^2*y + y^3", coefficients allowed and
/// dropped with a warning) or a matrix literal ("2,1;0,3").
ParsedPolynomial parse(std::string_view text);

/// Berglund-Huebsch transpose: exponent matrix E^T, same variable names.
InvertiblePolynomial transpose(const InvertiblePolynomial& p);

const Weights& weights(const InvertiblePolynomial& p);

struct SupportRestriction {
  std::size_t count = 0;
  /// The |I| x |I| block E_I when count == |I|.
  std::optional<IntMatrix> block;
};

/// Monomials of p involving only variables in `i`.
SupportRestriction support_restriction(const InvertiblePolynomial& p, IndexSet i);

/// prod_i (1/q_i - 1); the Milnor number of a non-degenerate member.
Rational milnor_number_oracle(const Weights& w);

std::vector<std::string> default_variable_names(std::size_t n);

} // namespace bhh
