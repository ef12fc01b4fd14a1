#include "bhh/symgroup.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace bhh {

namespace {

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  return a == b || a->exponents == b->exponents;
}

void require_same_ambient(const AmbientPtr& a, const AmbientPtr& b, const char* op) {
  if (!same_ambient(a, b))
    throw InputError(std::string(op) + ": subgroups of different symmetry groups");
}

// Integer x with basis * x == v for a lower triangular basis.
IntVector triangular_coordinates(const IntMatrix& basis, const IntVector& v) {
  const std::size_t n = basis.rows();
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer rest = v[i];
    for (std::size_t j = 0; j < i; ++j) rest -= basis(i, j) * x[j];
    x[i] = exact_divide(rest, basis(i, i), "lattice coordinates");
  }
  return x;
}

RationalVector alpha_from_coordinates(const AmbientGroup& a, const IntVector& v) {
  IntVector w = a.adjugate * v;
  RationalVector alpha(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    alpha[i] = Rational(w[i], a.det);
    alpha[i].canonicalize();
    alpha[i] = frac(alpha[i]);
  }
  return alpha;
}

// L = sublattice of `basis` on which every row of `conditions` (applied to
// the lattice vector) vanishes modulo `modulus`.
IntMatrix restrict_lattice(const IntMatrix& basis, const IntMatrix& conditions,
                           const Integer& modulus) {
  IntMatrix y = congruence_lattice(conditions * basis, modulus);
  return hnf(basis * y);
}

struct GroupStructure {
  IntVector factors;             // all SNF diagonal entries, including 1s
  std::vector<IntVector> gens;   // lattice vectors, one per factor
};

// L / A Z^n as a product of cyclic groups.
GroupStructure structure(const Subgroup& h) {
  const AmbientGroup& a = *h.ambient();
  const std::size_t n = a.n();
  IntMatrix rel(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVector x = triangular_coordinates(h.basis(), a.exponents.column(c));
    for (std::size_t r = 0; r < n; ++r) rel(r, c) = x[r];
  }
  SnfDecomposition s = snf(rel);
  // rel = u^{-1} D v^{-1}, so A Z^n = (L u^{-1}) D Z^n.
  Integer du = determinant(s.u);
  IntMatrix uinv = adjugate(s.u);
  if (du < 0)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) uinv(r, c) = -uinv(r, c);
  IntMatrix b = h.basis() * uinv;
  GroupStructure out;
  for (std::size_t i = 0; i < n; ++i) {
    out.factors.push_back(s.d(i, i));
    out.gens.push_back(b.column(i));
  }
  return out;
}

} // namespace

std::shared_ptr<const AmbientGroup> AmbientGroup::make(const IntMatrix& a) {
  auto g = std::make_shared<AmbientGroup>();
  g->exponents = a;
  g->adjugate = bhh::adjugate(a);
  g->det = bhh::determinant(a);
  if (g->det <= 0) throw InputError("ambient exponent matrix must have positive determinant");
  return g;
}

AmbientPtr ambient_of(const InvertiblePolynomial& p, AmbientTag tag) {
  return AmbientGroup::make(tag == AmbientTag::source ? p.exponents()
                                                      : p.exponents().transpose());
}

std::uint64_t enumeration_bound_from_env() {
  const char* env = std::getenv("BHH_ENUM_BOUND");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBound;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw InputError("BHH_ENUM_BOUND must be a positive integer");
  return v;
}

GroupElement::GroupElement(AmbientPtr ambient, RationalVector alpha)
    : ambient_(std::move(ambient)), alpha_(std::move(alpha)) {
  if (alpha_.size() != ambient_->n())
    throw InputError("element has " + std::to_string(alpha_.size()) + " entries, expected " +
                     std::to_string(ambient_->n()));
  for (auto& x : alpha_) x = frac(x);
  for (const auto& y : ambient_->exponents * alpha_)
    if (y.get_den() != 1) throw InputError("not a symmetry: " + to_string(alpha_));
}

IntVector GroupElement::coordinates() const {
  RationalVector y = ambient_->exponents * alpha_;
  IntVector v(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) v[i] = y[i].get_num();
  return v;
}

bool GroupElement::is_identity() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](const Rational& x) { return x == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  require_same_ambient(ambient_, other.ambient_, "element sum");
  RationalVector s(alpha_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = alpha_[i] + other.alpha_[i];
  return GroupElement(ambient_, std::move(s));
}

GroupElement GroupElement::operator-() const {
  RationalVector s(alpha_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = -alpha_[i];
  return GroupElement(ambient_, std::move(s));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.alpha_ == b.alpha_;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.alpha_.begin(), a.alpha_.end(), b.alpha_.begin(),
                                      b.alpha_.end());
}

std::string GroupElement::str() const {
  std::string out;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (i) out += ",";
    out += to_string(alpha_[i]);
  }
  return out;
}

Subgroup::Subgroup(AmbientPtr ambient, const IntMatrix& generators)
    : ambient_(std::move(ambient)) {
  basis_ = hnf(ambient_->exponents.hconcat(generators));
  Integer latticeDet = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) latticeDet *= basis_(i, i);
  order_ = exact_divide(ambient_->det, latticeDet, "subgroup order");
}

bool Subgroup::contains(const GroupElement& g) const {
  return same_ambient(ambient_, g.ambient()) && lattice_contains(basis_, g.coordinates());
}

bool Subgroup::subgroup_of(const Subgroup& other) const {
  if (!same_ambient(ambient_, other.ambient_)) return false;
  for (std::size_t c = 0; c < basis_.cols(); ++c)
    if (!lattice_contains(other.basis_, basis_.column(c))) return false;
  return true;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.basis_ == b.basis_;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return a.basis_ < b.basis_;
}

GroupElement element(const InvertiblePolynomial& p, RationalVector alpha, AmbientTag tag) {
  return GroupElement(ambient_of(p, tag), std::move(alpha));
}

Subgroup full_group(const AmbientPtr& a) { return Subgroup(a, IntMatrix::identity(a->n())); }

Subgroup trivial_subgroup(const AmbientPtr& a) { return Subgroup(a, IntMatrix(a->n(), 0)); }

Subgroup full_group(const InvertiblePolynomial& p, AmbientTag tag) {
  return full_group(ambient_of(p, tag));
}

Subgroup trivial_subgroup(const InvertiblePolynomial& p, AmbientTag tag) {
  return trivial_subgroup(ambient_of(p, tag));
}

Subgroup subgroup_generated(const AmbientPtr& a, const std::vector<GroupElement>& gens) {
  std::vector<IntVector> cols;
  for (const auto& g : gens) {
    require_same_ambient(a, g.ambient(), "subgroup_generated");
    cols.push_back(g.coordinates());
  }
  return Subgroup(a, IntMatrix::from_columns(cols, a->n()));
}

Subgroup sum(const Subgroup& h1, const Subgroup& h2) {
  require_same_ambient(h1.ambient(), h2.ambient(), "sum");
  return Subgroup(h1.ambient(), h1.basis().hconcat(h2.basis()));
}

Subgroup intersect(const Subgroup& h1, const Subgroup& h2) {
  require_same_ambient(h1.ambient(), h2.ambient(), "intersect");
  return Subgroup(h1.ambient(), lattice_intersection(h1.basis(), h2.basis()));
}

const Integer& order(const Subgroup& h) { return h.order(); }

std::vector<GroupElement> enumerate(const Subgroup& h, std::uint64_t bound) {
  if (h.order() > Integer(std::to_string(bound)))
    throw BoundExceeded("subgroup of order " + h.order().get_str() +
                        " exceeds the enumeration bound " + std::to_string(bound));
  GroupStructure s = structure(h);
  const std::size_t n = h.ambient()->n();
  std::vector<IntVector> points{IntVector(n, Integer(0))};
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const unsigned long f = s.factors[i].get_ui();
    if (f <= 1) continue;
    std::vector<IntVector> next;
    next.reserve(points.size() * f);
    for (const auto& base : points) {
      IntVector v = base;
      for (unsigned long c = 0; c < f; ++c) {
        next.push_back(v);
        for (std::size_t r = 0; r < n; ++r) v[r] += s.gens[i][r];
      }
    }
    points = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(points.size());
  for (const auto& v : points)
    out.emplace_back(h.ambient(), alpha_from_coordinates(*h.ambient(), v));
  std::sort(out.begin(), out.end());
  return out;
}

IntVector invariant_factors(const Subgroup& h) {
  IntVector out;
  for (const auto& f : structure(h).factors)
    if (f > 1) out.push_back(f);
  return out;
}

std::vector<GroupElement> generators(const Subgroup& h) {
  GroupStructure s = structure(h);
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < s.factors.size(); ++i)
    if (s.factors[i] > 1)
      out.emplace_back(h.ambient(), alpha_from_coordinates(*h.ambient(), s.gens[i]));
  return out;
}

Subgroup isotropy(const AmbientPtr& a, IndexSet i) {
  std::vector<std::size_t> rows = i.members();
  std::vector<std::size_t> cols(a->n());
  std::iota(cols.begin(), cols.end(), 0);
  IntMatrix lattice = congruence_lattice(a->adjugate.select(rows, cols), a->det);
  return Subgroup(a, lattice);
}

Subgroup isotropy(const InvertiblePolynomial& p, IndexSet i, AmbientTag tag) {
  return isotropy(ambient_of(p, tag), i);
}

Subgroup sl_intersection(const Subgroup& h) {
  const AmbientGroup& a = *h.ambient();
  IntMatrix ageRow(1, a.n());
  for (std::size_t c = 0; c < a.n(); ++c)
    for (std::size_t r = 0; r < a.n(); ++r) ageRow(0, c) += a.adjugate(r, c);
  return Subgroup(h.ambient(), restrict_lattice(h.basis(), ageRow, a.det));
}

Rational age(const GroupElement& g) {
  Rational s = 0;
  for (const auto& x : g.alpha()) s += x;
  s.canonicalize();
  return s;
}

Rational pairing(const GroupElement& lambda, const GroupElement& mu) {
  if (lambda.ambient()->exponents != mu.ambient()->exponents.transpose())
    throw InputError("pairing: lambda must lie in the symmetry group of the transpose of mu's");
  RationalVector eb = mu.ambient()->exponents * mu.alpha();
  Rational s = 0;
  for (std::size_t i = 0; i < eb.size(); ++i) s += lambda.alpha()[i] * eb[i];
  s.canonicalize();
  return frac(s);
}

Subgroup dual_subgroup(const Subgroup& h) {
  const AmbientGroup& a = *h.ambient();
  // w pairs trivially with every basis vector v: w^T adj(A) v == 0 (mod det A).
  IntMatrix conditions = (a.adjugate * h.basis()).transpose();
  auto dualAmbient = AmbientGroup::make(a.exponents.transpose());
  return Subgroup(dualAmbient, congruence_lattice(conditions, a.det));
}

GroupElement grading_element(const InvertiblePolynomial& p, AmbientTag tag) {
  if (tag == AmbientTag::source) return GroupElement(ambient_of(p, tag), p.weights().q);
  return GroupElement(ambient_of(p, tag), transpose(p).weights().q);
}

Subgroup monodromy_subgroup(const InvertiblePolynomial& p, AmbientTag tag) {
  GroupElement g0 = grading_element(p, tag);
  return subgroup_generated(g0.ambient(), {g0});
}

std::vector<Subgroup> all_subgroups(const AmbientPtr& a, std::uint64_t bound) {
  if (a->det > Integer(std::to_string(bound)))
    throw BoundExceeded("group of order " + a->det.get_str() +
                        " exceeds the subgroup enumeration bound " + std::to_string(bound));
  std::vector<GroupElement> elems = enumerate(full_group(a), bound);
  std::map<IntMatrix, Subgroup> seen;
  std::deque<Subgroup> queue;
  Subgroup triv = trivial_subgroup(a);
  seen.emplace(triv.basis(), triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    for (const auto& g : elems) {
      if (h.contains(g)) continue;
      Subgroup k(a, h.basis().hconcat(IntMatrix::from_columns({g.coordinates()}, a->n())));
      if (seen.emplace(k.basis(), k).second) queue.push_back(k);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& [key, h] : seen) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const InvertiblePolynomial& p, AmbientTag tag,
                                    std::uint64_t bound) {
  return all_subgroups(ambient_of(p, tag), bound);
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string tok;
    for (char c : text.substr(start, end - start))
      if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
    if (tok.empty()) throw InputError("empty entry in group element '" + std::string(text) + "'");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
        throw InputError("invalid rational '" + tok + "'");
    Rational q;
    if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
      throw InputError("invalid rational '" + tok + "'");
    q.canonicalize();
    out.push_back(q);
    start = end + 1;
  }
  return out;
}

Subgroup parse_group(const InvertiblePolynomial& p, std::string_view spec, AmbientTag tag) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "trivial") return trivial_subgroup(p, tag);
  if (s == "full") return full_group(p, tag);
  if (s == "monodromy") return monodromy_subgroup(p, tag);
  if (s == "sl") return sl_intersection(full_group(p, tag));
  AmbientPtr a = ambient_of(p, tag);
  std::vector<GroupElement> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    gens.emplace_back(a, parse_rational_vector(std::string_view(s).substr(start, end - start)));
    start = end + 1;
  }
  return subgroup_generated(a, gens);
}

} // namespace bhh
