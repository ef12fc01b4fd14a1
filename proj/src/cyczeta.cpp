#include "bhh/cyczeta.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace bhh {

namespace {

unsigned long small_positive(const Integer& m, const char* what) {
  if (m < 1) throw InputError(std::string(what) + " must be a positive integer");
  if (!m.fits_ulong_p() || m > 100'000'000)
    throw BoundExceeded(std::string(what) + " too large to expand: " + m.get_str());
  return m.get_ui();
}

int mobius(unsigned long n) {
  int result = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational ratio(unsigned long a, unsigned long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

using TermKey = std::pair<Integer, Rational>;  // (m, c)

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

using TermMap = std::map<TermKey, Integer, TermKeyLess>;

void add_term(TermMap& terms, const Integer& m, const Rational& c, const Integer& s) {
  if (s == 0) return;
  auto& slot = terms[{m, c}];
  slot += s;
  if (slot == 0) terms.erase({m, c});
}

// Roots of unity whose exponent is constant on each full class of primitive
// k-th roots become unshifted binomials via Moebius inversion; the classes
// are removed from `w`.
void extract_unshifted(CyclotomicProduct::FactorMap& w, TermMap& terms) {
  std::map<unsigned long, std::vector<Rational>> byDenominator;
  for (const auto& [theta, r] : w) {
    if (!theta.get_den().fits_ulong_p()) continue;
    byDenominator[theta.get_den().get_ui()].push_back(theta);
  }
  std::map<unsigned long, Integer> classExponent;
  for (const auto& [k, thetas] : byDenominator) {
    if (thetas.size() != euler_phi(k)) continue;
    const Integer& r0 = w.at(thetas.front());
    bool uniform = std::all_of(thetas.begin(), thetas.end(),
                               [&](const Rational& t) { return w.at(t) == r0; });
    if (!uniform) continue;
    classExponent[k] = r0;
    for (const auto& t : thetas) w.erase(t);
  }
  std::set<unsigned long> candidates;
  for (const auto& [k, r] : classExponent)
    for (unsigned long m = 1; m * m <= k; ++m)
      if (k % m == 0) {
        candidates.insert(m);
        candidates.insert(k / m);
      }
  for (unsigned long m : candidates) {
    Integer s = 0;
    for (const auto& [k, r] : classExponent)
      if (k % m == 0) s += mobius(k / m) * r;
    add_term(terms, Integer(m), Rational(0), s);
  }
}

// Greedy: largest m first, smallest c on ties; each step removes a full coset
// of m equally spaced roots whose exponents share a sign.
void extract_greedy(CyclotomicProduct::FactorMap& w, TermMap& terms) {
  while (!w.empty()) {
    bool done = false;
    for (unsigned long m = w.size(); m >= 1 && !done; --m) {
      std::optional<Rational> bestC;
      Rational bestTheta;
      for (const auto& [theta, r] : w) {
        const int sign = sgn(r);
        bool ok = true;
        for (unsigned long j = 1; j < m && ok; ++j) {
          auto it = w.find(frac(theta + ratio(j, m)));
          ok = it != w.end() && sgn(it->second) == sign;
        }
        if (!ok) continue;
        Rational c = frac(theta * m);
        if (!bestC || c < *bestC) {
          bestC = c;
          bestTheta = theta;
        }
      }
      if (!bestC) continue;
      const int sign = sgn(w.at(bestTheta));
      Integer e = abs(w.at(bestTheta));
      for (unsigned long j = 1; j < m; ++j) {
        const Integer& r = w.at(frac(bestTheta + ratio(j, m)));
        if (abs(r) < e) e = abs(r);
      }
      if (sign < 0) e = -e;
      for (unsigned long j = 0; j < m; ++j) {
        Rational t = frac(bestTheta + ratio(j, m));
        auto it = w.find(t);
        it->second -= e;
        if (it->second == 0) w.erase(it);
      }
      add_term(terms, Integer(m), *bestC, e);
      done = true;
    }
    if (!done) throw InvariantViolation("binomial regrouping made no progress");
  }
}

} // namespace

CyclotomicProduct::CyclotomicProduct(FactorMap factors) {
  for (auto& [theta, r] : factors) add_factor(theta, r);
}

void CyclotomicProduct::add_factor(const Rational& theta, const Integer& r) {
  if (r == 0) return;
  Rational t = frac(theta);
  auto& slot = factors_[t];
  slot += r;
  if (slot == 0) factors_.erase(t);
}

CyclotomicProduct one() { return {}; }

CyclotomicProduct binomial(const Integer& m, const Integer& s) {
  return shifted_binomial(m, Rational(0), s);
}

CyclotomicProduct shifted_binomial(const Integer& m, const Rational& c, const Integer& s) {
  const unsigned long mm = small_positive(m, "binomial degree m");
  CyclotomicProduct out;
  for (unsigned long j = 0; j < mm; ++j) {
    Rational theta = (c + j) / Rational(mm);
    theta.canonicalize();
    out.add_factor(theta, s);
  }
  return out;
}

CyclotomicProduct multiply(const CyclotomicProduct& a, const CyclotomicProduct& b) {
  CyclotomicProduct out = a;
  for (const auto& [theta, r] : b.factors()) out.add_factor(theta, r);
  return out;
}

CyclotomicProduct invert(const CyclotomicProduct& a) { return power(a, -1); }

CyclotomicProduct power(const CyclotomicProduct& a, long k) {
  CyclotomicProduct out;
  for (const auto& [theta, r] : a.factors()) out.add_factor(theta, r * k);
  return out;
}

Integer degree(const CyclotomicProduct& a) {
  Integer d = 0;
  for (const auto& [theta, r] : a.factors()) d += r;
  return d;
}

CyclotomicProduct age_shift(const CyclotomicProduct& a, const Rational& shift) {
  CyclotomicProduct out;
  for (const auto& [theta, r] : a.factors()) out.add_factor(theta - shift, r);
  return out;
}

CyclotomicProduct age_shift(const CyclotomicProduct& a, const GroupElement& g) {
  return age_shift(a, age(g));
}

CyclotomicProduct aggregate_shifted_binomial(const Integer& m, const Subgroup& gI) {
  if (m < 1) throw InputError("aggregate_shifted_binomial: m must be positive");
  const Integer k = exact_divide(gI.order(), sl_intersection(gI).order(), "k = |G^I / G^I cap SL|");
  Integer l;
  mpz_lcm(l.get_mpz_t(), m.get_mpz_t(), k.get_mpz_t());
  const Integer s = exact_divide(m * gI.order(), l, "exponent m |G^I| / lcm(m, k)");
  return binomial(l, s);
}

BinomialForm to_binomial_form(const CyclotomicProduct& a) {
  CyclotomicProduct::FactorMap w = a.factors();
  TermMap terms;
  extract_unshifted(w, terms);
  extract_greedy(w, terms);
  BinomialForm out;
  for (const auto& [key, s] : terms) out.terms.push_back({key.first, key.second, s});
  std::sort(out.terms.begin(), out.terms.end(), [](const BinomialTerm& x, const BinomialTerm& y) {
    const bool px = x.s > 0, py = y.s > 0;
    if (px != py) return px;
    if (x.m != y.m) return x.m > y.m;
    return x.c < y.c;
  });
  return out;
}

CyclotomicProduct expand(const BinomialForm& b) {
  CyclotomicProduct out;
  for (const auto& t : b.terms) out = multiply(out, shifted_binomial(t.m, t.c, t.s));
  return out;
}

std::string render(const BinomialForm& b) {
  if (b.terms.empty()) return "1";
  std::string out;
  for (const auto& t : b.terms) {
    if (!out.empty()) out += " * ";
    out += "(1-";
    if (t.c != 0) out += "e(" + to_string(t.c) + ")*";
    out += "t";
    if (t.m != 1) out += "^" + t.m.get_str();
    out += ")^" + t.s.get_str();
  }
  return out;
}

std::string render(const CyclotomicProduct& a) { return render(to_binomial_form(a)); }

} // namespace bhh
