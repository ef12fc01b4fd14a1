#pragma once

#include "bhh/intlin.hpp"
#include "bhh/invpoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bhh {

/// Which of the two symmetry groups of a polynomial p is meant: G_p itself
/// (exponent matrix E) or G of the transpose (exponent matrix E^T).
enum class AmbientTag { source, transpose };

/// Shared, immutable description of a diagonal symmetry group G_A = {alpha :
/// A alpha in Z^n} / Z^n. Elements are identified with the integer vectors
/// v = A alpha taken modulo A Z^n.
struct AmbientGroup {
  IntMatrix exponents;  // A
  IntMatrix adjugate;   // adj(A), so alpha = adj(A) v / det(A)
  Integer det;          // |G_A|

  static std::shared_ptr<const AmbientGroup> make(const IntMatrix& a);
  std::size_t n() const { return exponents.rows(); }
};

using AmbientPtr = std::shared_ptr<const AmbientGroup>;

AmbientPtr ambient_of(const InvertiblePolynomial& p, AmbientTag tag);

/// Default bound on the number of elements any enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Bound from the BHH_ENUM_BOUND environment variable, or the default.
std::uint64_t enumeration_bound_from_env();

/// A diagonal symmetry diag(exp(2 pi i alpha_1), ..., exp(2 pi i alpha_n)),
/// stored with every alpha_j in [0, 1).
class GroupElement {
public:
  /// Reduces alpha mod 1; throws InputError("not a symmetry") unless
  /// A alpha is integral.
  GroupElement(AmbientPtr ambient, RationalVector alpha);

  const AmbientPtr& ambient() const { return ambient_; }
  const RationalVector& alpha() const { return alpha_; }
  /// v = A alpha, the lattice coordinates of this element.
  IntVector coordinates() const;
  bool is_identity() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::string str() const;

private:
  AmbientPtr ambient_;
  RationalVector alpha_;
};

/// A subgroup H of G_A, represented by the lattice L with A Z^n <= L <= Z^n
/// in canonical column HNF. |H| = det(A) / det(L).
class Subgroup {
public:
  Subgroup(AmbientPtr ambient, const IntMatrix& generators);

  const AmbientPtr& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  const Integer& order() const { return order_; }

  bool contains(const GroupElement& g) const;
  /// this <= other
  bool subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);
  friend bool operator<(const Subgroup& a, const Subgroup& b);

private:
  AmbientPtr ambient_;
  IntMatrix basis_;
  Integer order_;
};

GroupElement element(const InvertiblePolynomial& p, RationalVector alpha, AmbientTag tag);

Subgroup full_group(const AmbientPtr& a);
Subgroup trivial_subgroup(const AmbientPtr& a);
Subgroup full_group(const InvertiblePolynomial& p, AmbientTag tag);
Subgroup trivial_subgroup(const InvertiblePolynomial& p, AmbientTag tag);

/// Smallest subgroup containing every element; all must share `a`.
Subgroup subgroup_generated(const AmbientPtr& a, const std::vector<GroupElement>& gens);

Subgroup sum(const Subgroup& h1, const Subgroup& h2);
Subgroup intersect(const Subgroup& h1, const Subgroup& h2);

const Integer& order(const Subgroup& h);

/// All elements; throws BoundExceeded when |h| > bound.
std::vector<GroupElement> enumerate(const Subgroup& h,
                                    std::uint64_t bound = kDefaultEnumerationBound);

/// Invariant factors d_1 | d_2 | ... (all > 1) with h = Z/d_1 + Z/d_2 + ...
IntVector invariant_factors(const Subgroup& h);

/// Generators matching invariant_factors(h), one per factor.
std::vector<GroupElement> generators(const Subgroup& h);

/// G^I: the elements with alpha_j integral (zero) for every j in i.
Subgroup isotropy(const AmbientPtr& a, IndexSet i);
Subgroup isotropy(const InvertiblePolynomial& p, IndexSet i, AmbientTag tag);

/// h intersected with SL(n, C): elements with integral age.
Subgroup sl_intersection(const Subgroup& h);

/// sum of alpha_j over the canonical representatives in [0, 1).
Rational age(const GroupElement& g);

/// (alpha, beta)_E mod 1 for lambda in G of the transpose of mu's ambient.
Rational pairing(const GroupElement& lambda, const GroupElement& mu);

/// Annihilator of h in the group of the transposed ambient.
Subgroup dual_subgroup(const Subgroup& h);

/// The exponential grading operator g0 = exp(2 pi i q).
GroupElement grading_element(const InvertiblePolynomial& p, AmbientTag tag = AmbientTag::source);

/// <g0> of p (source) or of its transpose.
Subgroup monodromy_subgroup(const InvertiblePolynomial& p, AmbientTag tag);

/// Every subgroup of the ambient group exactly once, ordered by (order,
/// basis). Throws BoundExceeded when det A > bound.
std::vector<Subgroup> all_subgroups(const AmbientPtr& a, std::uint64_t bound);
std::vector<Subgroup> all_subgroups(const InvertiblePolynomial& p, AmbientTag tag,
                                    std::uint64_t bound);

/// Parses "a/b,c/d" into a rational vector.
RationalVector parse_rational_vector(std::string_view text);

/// Group specification: "full", "trivial", "monodromy", "sl", or explicit
/// generators "a/b,c/d;e/f,g/h". "" and "trivial" are the trivial group.
Subgroup parse_group(const InvertiblePolynomial& p, std::string_view spec,
                     AmbientTag tag = AmbientTag::source);

} // namespace bhh
