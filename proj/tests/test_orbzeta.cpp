#include "bhh/errors.hpp"
#include "bhh/orbzeta.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bhh;

namespace {

OrbifoldPair pair_of(const std::string& f, const std::string& g) {
  const auto p = parse(f).poly;
  return OrbifoldPair(p, parse_group(p, g));
}

CyclotomicProduct from(std::initializer_list<std::pair<long, long>> ms) {
  CyclotomicProduct z;
  for (auto [m, s] : ms) z = multiply(z, binomial(m, s));
  return z;
}

} // namespace

TEST_CASE("chi of coordinate tori") {
  const auto p = parse("x^2*y + y^3").poly;
  CHECK(chi_torus(p, IndexSet::of({0})) == 0);
  CHECK(chi_torus(p, IndexSet::of({1})) == 3);
  CHECK(chi_torus(p, IndexSet::all(2)) == -6);
  CHECK(chi_torus(parse("x^3").poly, IndexSet::all(1)) == 3);
  CHECK_THROWS_AS(chi_torus(p, IndexSet()), InputError);
}

TEST_CASE("torus data: x^3") {
  const auto trivial = torus_data(pair_of("x^3", "trivial"), IndexSet::all(1));
  CHECK(trivial.mI == 3);
  CHECK(trivial.kI == 1);
  CHECK(trivial.ellI == 3);
  CHECK(trivial.sI == 1);
  CHECK(trivial.sPrimeI == 1);

  const auto full = torus_data(pair_of("x^3", "full"), IndexSet::all(1));
  CHECK(full.mI == 1);
  CHECK(full.kI == 1);
  CHECK(full.sI == 1);
  CHECK(full.sPrimeI == 1);
}

TEST_CASE("torus data: x^2*y + y^3 with trivial group") {
  const auto pair = pair_of("x^2*y + y^3", "trivial");
  const auto y = torus_data(pair, IndexSet::of({1}));
  CHECK(y.chi == 3);
  CHECK(y.mI == 3);
  CHECK(y.sPrimeI == 1);
  const auto xy = torus_data(pair, IndexSet::all(2));
  CHECK(xy.chi == -6);
  CHECK(xy.mI == 3);
  CHECK(xy.sI == -2);
  CHECK(xy.ellI == 3);
  CHECK(xy.sPrimeI == -2);
  CHECK(torus_data(pair, IndexSet::of({0})).sPrimeI == 0);
}

TEST_CASE("zeta functions of the small examples") {
  const auto x3 = pair_of("x^3", "trivial");
  CHECK(orbifold_zeta_formula(x3) == from({{3, 1}}));
  CHECK(reduced_orbifold_zeta(x3, ZetaRoute::formula) == from({{3, 1}, {1, -1}}));
  const auto x3full = pair_of("x^3", "full");
  CHECK(reduced_orbifold_zeta(x3full, ZetaRoute::definition) == from({{1, 1}, {3, -1}}));

  const auto chain = pair_of("x^2*y + y^3", "trivial");
  CHECK(orbifold_zeta_formula(chain) == from({{3, -1}}));
  CHECK(orbifold_euler_characteristic(chain) == -3);
  CHECK(reduced_orbifold_zeta(chain, ZetaRoute::formula) == from({{3, -1}, {1, -1}}));

  const auto transposeFull = pair_of("x^2 + x*y^3", "full");
  CHECK(reduced_orbifold_zeta(transposeFull, ZetaRoute::definition) ==
        from({{3, -1}, {1, -1}}));
}

TEST_CASE("dual pairs") {
  const auto d = dual_pair(pair_of("x^3", "trivial"));
  CHECK(d.p == parse("x^3").poly);
  CHECK(d.g.order() == 3);
  const auto e = dual_pair(pair_of("x^2*y + y^3", "trivial"));
  CHECK(e.p == parse("x^2 + x*y^3").poly);
  CHECK(e.g.order() == 6);
  CHECK(dual_pair(e).g == pair_of("x^2*y + y^3", "trivial").g);
}

TEST_CASE("pair construction checks the ambient group") {
  const auto p = parse("x^2*y + y^3").poly;
  CHECK_THROWS_AS(OrbifoldPair(p, full_group(transpose(p), AmbientTag::source)), InputError);
}

TEST_CASE("Milnor fibre Euler characteristic for the trivial group") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    const auto& p = entry.poly;
    const Rational mu = milnor_number_oracle(p.weights());
    const Rational expected = 1 + (p.n() % 2 == 1 ? mu : -mu);
    CHECK(Rational(orbifold_euler_characteristic(OrbifoldPair(
              p, trivial_subgroup(p, AmbientTag::source)))) == expected);
  }
}

TEST_CASE("both routes and all identities on every subgroup of the small corpus") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    for (const Subgroup& g : all_subgroups(entry.poly, AmbientTag::source, 1000)) {
      const OrbifoldPair pair(entry.poly, g);
      CHECK(orbifold_zeta_definition(pair) == orbifold_zeta_formula(pair));
      const DualityReport r = verify_duality(pair);
      CAPTURE(r.notes);
      CHECK(r.all_passed());
      CHECK(r.verdicts.size() == 9);
      CHECK(r.verdicts.at("routeEquivalence") == Verdict::pass);
    }
  }
}

TEST_CASE("routeEquivalence is skipped above the enumeration bound") {
  const DualityReport r = verify_duality(pair_of("x^3", "full"), 2);
  CHECK(r.verdicts.at("routeEquivalence") == Verdict::skipped);
  CHECK(r.all_passed());
  CHECK_THROWS_AS(orbifold_zeta_definition(pair_of("x^3", "full"), 2), BoundExceeded);
}
