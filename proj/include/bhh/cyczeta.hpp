#pragma once

#include "bhh/intlin.hpp"
#include "bhh/symgroup.hpp"

#include <map>
#include <string>
#include <utility>

namespace bhh {

/// A rational function prod_theta (1 - e(theta) t)^{r_theta}, e(x) = exp(2 pi i x),
/// theta in [0, 1). Zero exponents are never stored, so two products are equal
/// as rational functions exactly when their factor maps are equal.
class CyclotomicProduct {
public:
  using FactorMap = std::map<Rational, Integer>;

  CyclotomicProduct() = default;
  explicit CyclotomicProduct(FactorMap factors);

  const FactorMap& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Multiplies in (1 - e(theta) t)^r.
  void add_factor(const Rational& theta, const Integer& r);

  friend bool operator==(const CyclotomicProduct&, const CyclotomicProduct&) = default;

private:
  FactorMap factors_;
};

CyclotomicProduct one();

/// (1 - t^m)^s. Throws InputError if m < 1.
CyclotomicProduct binomial(const Integer& m, const Integer& s);

/// (1 - e(c) t^m)^s: the m roots theta = (c + j)/m, j = 0..m-1.
CyclotomicProduct shifted_binomial(const Integer& m, const Rational& c, const Integer& s);

CyclotomicProduct multiply(const CyclotomicProduct& a, const CyclotomicProduct& b);
CyclotomicProduct invert(const CyclotomicProduct& a);
/// a^k for any integer k (negative k inverts).
CyclotomicProduct power(const CyclotomicProduct& a, long k);

/// Degree of numerator minus degree of denominator.
Integer degree(const CyclotomicProduct& a);

/// Multiplies every root and pole by e(shift): theta -> theta - shift (mod 1).
CyclotomicProduct age_shift(const CyclotomicProduct& a, const Rational& shift);
CyclotomicProduct age_shift(const CyclotomicProduct& a, const GroupElement& g);

/// prod over g in gI of (1 - t^m)_g in closed form
/// (1 - t^{lcm(m,k)})^{m |gI| / lcm(m,k)} with k = |gI / gI cap SL|.
CyclotomicProduct aggregate_shifted_binomial(const Integer& m, const Subgroup& gI);

/// Display grouping into terms (1 - e(c) t^m)^s keyed by (m, c).
struct BinomialTerm {
  Integer m;
  Rational c;
  Integer s;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

struct BinomialForm {
  /// Ordered for display: positive exponents first, then larger m, then
  /// smaller c.
  std::vector<BinomialTerm> terms;
};

BinomialForm to_binomial_form(const CyclotomicProduct& a);
CyclotomicProduct expand(const BinomialForm& b);

/// "(1-t^3)^1 * (1-t)^-1"; shifted terms as "(1-e(1/3)*t^2)^1"; "1" when empty.
std::string render(const BinomialForm& b);
std::string render(const CyclotomicProduct& a);

} // namespace bhh
