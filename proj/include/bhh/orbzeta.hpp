#pragma once

#include "bhh/cyczeta.hpp"
#include "bhh/invpoly.hpp"
#include "bhh/symgroup.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bhh {

/// (f, G) with G a subgroup of G_f.
struct OrbifoldPair {
  InvertiblePolynomial p;
  Subgroup g;

  /// Throws InputError unless g is a subgroup of G_p (source ambient).
  OrbifoldPair(InvertiblePolynomial poly, Subgroup group);
};

/// Invariants of the coordinate torus (C*)^I for a pair (f, G).
///
/// With G^I the isotropy subgroup of G_f and G_0 = <g0>:
///   m_I  = |G + G^I + G_0| / |G + G^I|       (order of the monodromy on V^I/G)
///   k_I  = |G cap G^I| / |G cap G^I cap SL|  (order of the age character)
///   l_I  = lcm(m_I, k_I)
///   s_I  = chi / (m_I |G / G cap G^I|)       (zeta of the quotient is (1-t^m_I)^s_I)
///   s'_I = s_I m_I |G cap G^I| / l_I         (orbifold torus factor (1-t^l_I)^s'_I)
struct TorusFactorData {
  IndexSet i;
  Integer chi;
  Integer mI;
  Integer kI;
  Integer ellI;
  Integer sI;
  Integer sPrimeI;
};

/// Euler characteristic of V_f cap (C*)^I: zero with fewer than |I| monomials
/// supported on I, otherwise (-1)^{|I|-1} |det E_I|.
Integer chi_torus(const InvertiblePolynomial& p, IndexSet i);

TorusFactorData torus_data(const OrbifoldPair& pair, IndexSet i);

/// Torus data for every nonempty I, in canonical (bitmask) order.
std::vector<TorusFactorData> all_torus_data(const OrbifoldPair& pair);

/// Product of the per-torus factors (1 - t^l_I)^s'_I.
CyclotomicProduct orbifold_zeta_formula(const OrbifoldPair& pair);

/// Sector product over g in G of age-shifted zetas of V^g / G. Requires
/// |G| <= bound.
CyclotomicProduct orbifold_zeta_definition(const OrbifoldPair& pair,
                                           std::uint64_t bound = kDefaultEnumerationBound);

enum class ZetaRoute { formula, definition };

CyclotomicProduct orbifold_zeta(const OrbifoldPair& pair, ZetaRoute route,
                                std::uint64_t bound = kDefaultEnumerationBound);

/// Orbifold zeta divided by prod over g in G of (1 - t)_g.
CyclotomicProduct reduced_orbifold_zeta(const OrbifoldPair& pair, ZetaRoute route,
                                        std::uint64_t bound = kDefaultEnumerationBound);

Integer orbifold_euler_characteristic(const OrbifoldPair& pair);

/// (f~, G~): the transpose with the dual subgroup.
OrbifoldPair dual_pair(const OrbifoldPair& pair);

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct DualityReport {
  OrbifoldPair pair;
  OrbifoldPair dual;
  std::vector<TorusFactorData> tori;      // for (f, G)
  std::vector<TorusFactorData> dualTori;  // for (f~, G~)
  CyclotomicProduct zeta;
  CyclotomicProduct dualZeta;
  CyclotomicProduct reduced;
  CyclotomicProduct dualReduced;

  /// Keyed by name: mainTheorem, routeEquivalence, lemmaSL, orderProduct,
  /// blmsIsotropy, ellSwap, signIdentity, mI0equalsKtilde, degreeCorollary.
  std::map<std::string, Verdict> verdicts;
  /// Human-readable explanations of failures and skips.
  std::vector<std::string> notes;

  bool all_passed() const;
};

/// Computes both sides independently and checks every duality identity
/// exactly. Failures are recorded in the report, never thrown; integrality
/// violations inside the computation propagate as InvariantViolation.
DualityReport verify_duality(const OrbifoldPair& pair,
                             std::uint64_t bound = kDefaultEnumerationBound);

} // namespace bhh
