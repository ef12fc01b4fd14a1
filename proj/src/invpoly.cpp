#include "bhh/invpoly.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace bhh {

std::size_t IndexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

IndexSet IndexSet::all(std::size_t n) {
  return IndexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

IndexSet IndexSet::of(std::initializer_list<std::size_t> members) {
  std::uint64_t b = 0;
  for (auto i : members) b |= std::uint64_t{1} << i;
  return IndexSet(b);
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

IndexSet IndexSet::complement(std::size_t n) const {
  return IndexSet(all(n).bits() & ~bits_);
}

std::string IndexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (auto i : members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::vector<IndexSet> nonempty_subsets(std::size_t n) {
  std::vector<IndexSet> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < end; ++b) out.emplace_back(b);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 3) {
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, "xyz"[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Depth-first search in lexicographic order for a row order whose diagonal is
// positive and whose sign makes the determinant positive.
bool find_row_order(const IntMatrix& e, int detSign, std::vector<std::size_t>& perm,
                    std::vector<bool>& used, std::size_t col) {
  const std::size_t n = e.rows();
  if (col == n) return permutation_sign(perm) * detSign > 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (used[r] || e(r, col) == 0) continue;
    used[r] = true;
    perm[col] = r;
    if (find_row_order(e, detSign, perm, used, col + 1)) return true;
    used[r] = false;
  }
  return false;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable name");
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at offset " << pos_ << ": " << msg;
    throw InputError(os.str());
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ParsedPolynomial parse_matrix_literal(std::string_view text) {
  std::vector<std::vector<Integer>> rows(1);
  Lexer lx(text);
  for (;;) {
    bool negative = lx.accept('-');
    Integer x = lx.integer();
    rows.back().push_back(negative ? Integer(-x) : x);
    if (lx.at_end()) break;
    if (lx.accept(';')) {
      rows.emplace_back();
      continue;
    }
    lx.expect(',');
  }
  const std::size_t n = rows.size();
  IntMatrix e(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw InputError("matrix literal must be square with " + std::to_string(n) +
                       " entries per row");
    for (std::size_t c = 0; c < n; ++c) e(r, c) = rows[r][c];
  }
  return {InvertiblePolynomial::from_matrix(std::move(e)), {}};
}

} // namespace

InvertiblePolynomial InvertiblePolynomial::from_matrix(IntMatrix e,
                                                       std::vector<std::string> names) {
  if (e.empty() || !e.square()) throw InputError("exponent matrix must be square and nonempty");
  const std::size_t n = e.rows();
  if (n > 62) throw InputError("too many variables");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (e(r, c) < 0) throw InputError("exponents must be nonnegative");
  if (names.empty()) names = default_variable_names(n);
  if (names.size() != n) throw InputError("variable name count does not match matrix size");
  for (const auto& s : names)
    if (!valid_identifier(s)) throw InputError("invalid variable name '" + s + "'");

  Integer det = determinant(e);
  if (det == 0) throw InputError("exponent matrix is singular (det E = 0)");

  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  if (!find_row_order(e, sgn(det), perm, used, 0))
    throw InputError("no row order with positive diagonal and det E > 0");
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  e = e.select(perm, cols);

  InvertiblePolynomial p;
  p.det_ = determinant(e);
  p.weights_.q = solve_exact(e, RationalVector(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i)
    if (p.weights_.q[i] <= 0)
      throw InputError("weight q_" + std::to_string(i + 1) + " = " +
                       to_string(p.weights_.q[i]) + " is not positive");
  p.e_ = std::move(e);
  p.names_ = std::move(names);
  return p;
}

std::string InvertiblePolynomial::format() const {
  std::string out;
  for (std::size_t r = 0; r < n(); ++r) {
    if (r) out += " + ";
    bool first = true;
    for (std::size_t c = 0; c < n(); ++c) {
      const Integer& k = e_(r, c);
      if (k == 0) continue;
      if (!first) out += "*";
      out += names_[c];
      if (k != 1) out += "^" + k.get_str();
      first = false;
    }
  }
  return out;
}

ParsedPolynomial parse(std::string_view text) {
  bool hasLetter = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c));
  });
  if (!hasLetter) return parse_matrix_literal(text);

  Lexer lx(text);
  std::vector<std::string> names;
  std::map<std::string, std::size_t> column;
  std::vector<std::map<std::size_t, Integer>> monomials;
  std::vector<std::string> warnings;

  do {
    std::map<std::size_t, Integer> mono;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Integer coeff = lx.integer();
      lx.expect('*');
      if (coeff == 0) lx.fail("zero coefficient");
      if (coeff != 1)
        warnings.push_back("coefficient " + coeff.get_str() + " of monomial " +
                           std::to_string(monomials.size() + 1) + " dropped");
    }
    do {
      std::string v = lx.identifier();
      Integer k = 1;
      if (lx.accept('^')) {
        k = lx.integer();
        if (k == 0) lx.fail("exponent must be positive");
      }
      auto [it, inserted] = column.emplace(v, names.size());
      if (inserted) names.push_back(v);
      mono[it->second] += k;
    } while (lx.accept('*'));
    monomials.push_back(std::move(mono));
  } while (lx.accept('+'));
  if (!lx.at_end()) lx.fail("unexpected trailing input");

  if (monomials.size() != names.size())
    throw InputError("an invertible polynomial needs as many monomials as variables (got " +
                     std::to_string(monomials.size()) + " monomials in " +
                     std::to_string(names.size()) + " variables)");
  const std::size_t n = names.size();
  IntMatrix e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, k] : monomials[r]) e(r, c) = k;
  return {InvertiblePolynomial::from_matrix(std::move(e), std::move(names)),
          std::move(warnings)};
}

InvertiblePolynomial transpose(const InvertiblePolynomial& p) {
  return InvertiblePolynomial::from_matrix(p.exponents().transpose(), p.names());
}

const Weights& weights(const InvertiblePolynomial& p) { return p.weights(); }

SupportRestriction support_restriction(const InvertiblePolynomial& p, IndexSet i) {
  const IntMatrix& e = p.exponents();
  const std::size_t n = p.n();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < n; ++r) {
    bool inside = true;
    for (std::size_t c = 0; c < n && inside; ++c)
      if (e(r, c) != 0 && !i.contains(c)) inside = false;
    if (inside) rows.push_back(r);
  }
  SupportRestriction out;
  out.count = rows.size();
  if (out.count > i.size())
    throw InvariantViolation("more than |I| monomials supported in " + i.str() +
                             " contradicts det E != 0");
  if (out.count == i.size() && !i.empty()) out.block = e.select(rows, i.members());
  return out;
}

Rational milnor_number_oracle(const Weights& w) {
  Rational mu = 1;
  for (const auto& q : w.q) mu *= (1 / q - 1);
  mu.canonicalize();
  return mu;
}

} // namespace bhh
