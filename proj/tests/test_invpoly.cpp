#include "bhh/errors.hpp"
#include "bhh/invpoly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bhh;

TEST_CASE("index sets") {
  CHECK(IndexSet::of({0, 1}).str() == "{1,2}");
  CHECK(IndexSet().str() == "{}");
  CHECK(IndexSet::all(3).bits() == 7);
  CHECK(IndexSet::of({1}).complement(3) == IndexSet::of({0, 2}));
  CHECK(IndexSet::of({0, 2}).size() == 2);
  CHECK(IndexSet::of({0}).subset_of(IndexSet::of({0, 2})));
  const auto subsets = nonempty_subsets(3);
  REQUIRE(subsets.size() == 7);
  for (std::size_t k = 0; k < subsets.size(); ++k) CHECK(subsets[k].bits() == k + 1);
}

TEST_CASE("parse: weights, det and format") {
  SUBCASE("fermat") {
    const auto p = parse("x^3").poly;
    CHECK(p.det() == 3);
    CHECK(p.weights().q == RationalVector{Rational(1, 3)});
    CHECK(p.format() == "x^3");
  }
  SUBCASE("chain") {
    const auto p = parse("x^2*y + y^3").poly;
    CHECK(p.det() == 6);
    CHECK(p.weights().q == RationalVector{Rational(1, 3), Rational(1, 3)});
    CHECK(p.exponents() == IntMatrix{{2, 1}, {0, 3}});
  }
  SUBCASE("transpose of the chain") {
    const auto p = parse("x^2 + x*y^3").poly;
    CHECK(p.det() == 6);
    CHECK(p.weights().q == RationalVector{Rational(1, 2), Rational(1, 6)});
    CHECK(transpose(parse("x^2*y + y^3").poly) == p);
  }
  SUBCASE("matrix literal") {
    CHECK(parse("2,1;0,3").poly == parse("x^2*y + y^3").poly);
  }
  SUBCASE("variables follow first appearance") {
    const auto p = parse("y^3 + x^2*y").poly;
    CHECK(p.names() == std::vector<std::string>{"y", "x"});
    CHECK(p.exponents() == IntMatrix{{3, 0}, {1, 2}});
  }
  SUBCASE("monomials are realigned with their variables") {
    const auto p = parse("x*y^2 + x^3").poly;
    CHECK(p.exponents() == IntMatrix{{3, 0}, {1, 2}});
  }
}

TEST_CASE("parse drops coefficients with a warning") {
  const auto parsed = parse("5*x^2*y + y^3");
  CHECK(parsed.poly == parse("x^2*y + y^3").poly);
  CHECK(parsed.warnings.size() == 1);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(parse("x^2*y"), InputError);               // too few monomials
  CHECK_THROWS_AS(parse("x*y + x*y"), InputError);           // singular
  CHECK_THROWS_AS(parse("x*y + x^2*y^3"), InputError);       // negative weight
  CHECK_THROWS_AS(parse("x^^2"), InputError);
  CHECK_THROWS_AS(parse(""), InputError);
  CHECK_THROWS_AS(parse("1,2;3"), InputError);
  CHECK_THROWS_AS(InvertiblePolynomial::from_matrix(IntMatrix{{-1}}), InputError);
}

TEST_CASE("support restriction and the Milnor oracle") {
  const auto p = parse("x^2*y + y^3").poly;
  CHECK(support_restriction(p, IndexSet::of({0})).count == 0);
  const auto y = support_restriction(p, IndexSet::of({1}));
  CHECK(y.count == 1);
  REQUIRE(y.block);
  CHECK(*y.block == IntMatrix{{3}});
  CHECK(support_restriction(p, IndexSet::all(2)).count == 2);

  CHECK(milnor_number_oracle(parse("x^3").poly.weights()) == 2);
  CHECK(milnor_number_oracle(p.weights()) == 4);
  CHECK(milnor_number_oracle(parse("x^2*y + x*y^2").poly.weights()) == 4);
}

TEST_CASE("corpus entries: weights solve E q = 1 and format round-trips") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    const auto& p = entry.poly;
    CHECK(p.det() == entry.expectedDet);
    CHECK(p.det() > 0);
    CHECK(p.exponents() * p.weights().q == RationalVector(p.n(), Rational(1)));
    CHECK(parse(p.format()).poly == p);
    CHECK(transpose(transpose(p)) == p);
    CHECK(transpose(p).det() == p.det());
    for (std::size_t i = 0; i < p.n(); ++i) CHECK(p.exponents()(i, i) > 0);
  }
}

TEST_CASE("default variable names") {
  CHECK(default_variable_names(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(default_variable_names(4).front() == "x1");
}
