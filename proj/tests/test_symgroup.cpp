#include "bhh/errors.hpp"
#include "bhh/symgroup.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace bhh;

namespace {

using Alpha = RationalVector;

Alpha add_mod1(const Alpha& a, const Alpha& b) {
  Alpha c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = frac(a[i] + b[i]);
  return c;
}

// Closure of the generators under addition mod 1, computed on raw vectors.
std::set<Alpha> closure(const std::vector<GroupElement>& gens, std::size_t n) {
  std::set<Alpha> seen{Alpha(n, Rational(0))};
  std::vector<Alpha> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Alpha> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Alpha b = add_mod1(a, g.alpha());
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::set<Alpha> as_set(const Subgroup& h) {
  std::set<Alpha> s;
  for (const auto& g : enumerate(h)) s.insert(g.alpha());
  return s;
}

} // namespace

TEST_CASE("full groups and invariant factors") {
  const auto chain = parse("x^2*y + y^3").poly;
  CHECK(full_group(chain, AmbientTag::source).order() == 6);
  CHECK(invariant_factors(full_group(chain, AmbientTag::source)) == IntVector{6});
  const auto fermat = parse("x^2 + y^2").poly;
  CHECK(invariant_factors(full_group(fermat, AmbientTag::source)) == IntVector{2, 2});
  CHECK(invariant_factors(trivial_subgroup(fermat, AmbientTag::source)).empty());
  CHECK(full_group(parse("x^3").poly, AmbientTag::source).order() == 3);
}

TEST_CASE("elements") {
  const auto p = parse("x^2*y + y^3").poly;
  const GroupElement g = element(p, {Rational(1, 3), Rational(1, 3)}, AmbientTag::source);
  CHECK(g.str() == "1/3,1/3");
  CHECK((g + g + g).is_identity());
  CHECK((g + -g).is_identity());
  CHECK(element(p, {Rational(-2, 3), Rational(4, 3)}, AmbientTag::source) == g);
  CHECK_THROWS_WITH_AS(element(p, {Rational(1, 3), Rational(0)}, AmbientTag::source),
                       doctest::Contains("not a symmetry"), InputError);
  CHECK(age(g) == Rational(2, 3));
  CHECK(grading_element(p) == g);
}

TEST_CASE("subgroup_generated agrees with the closure oracle") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    const auto& p = entry.poly;
    const auto all = enumerate(full_group(p, AmbientTag::source));
    CHECK(all.size() == p.det().get_ui());
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<GroupElement> gens;
      const long k = bhh::test::uniform(0, 2);
      for (long j = 0; j < k; ++j)
        gens.push_back(all[static_cast<std::size_t>(
            bhh::test::uniform(0, static_cast<long>(all.size()) - 1))]);
      const Subgroup h = subgroup_generated(ambient_of(p, AmbientTag::source), gens);
      const auto oracle = closure(gens, p.n());
      CHECK(h.order() == oracle.size());
      CHECK(as_set(h) == oracle);
      for (const auto& g : all) CHECK(h.contains(g) == (oracle.count(g.alpha()) == 1));
      // Generators of the canonical form regenerate the subgroup.
      CHECK(subgroup_generated(ambient_of(p, AmbientTag::source), generators(h)) == h);
      Integer product = 1;
      for (const auto& f : invariant_factors(h)) product *= f;
      CHECK(product == h.order());
    }
  }
}

TEST_CASE("isotropy and SL parts agree with enumeration") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    const auto& p = entry.poly;
    const Subgroup full = full_group(p, AmbientTag::source);
    const auto elements = enumerate(full);
    for (IndexSet i : nonempty_subsets(p.n())) {
      const Subgroup iso = isotropy(p, i, AmbientTag::source);
      std::size_t count = 0;
      for (const auto& g : elements) {
        bool fixes = true;
        for (std::size_t k : i.members())
          if (g.alpha()[k] != 0) fixes = false;
        count += fixes;
        CHECK(iso.contains(g) == fixes);
      }
      CHECK(iso.order() == count);
    }
    for (const Subgroup& h : all_subgroups(p, AmbientTag::source, 1000)) {
      const Subgroup sl = sl_intersection(h);
      std::size_t count = 0;
      for (const auto& g : enumerate(h)) {
        const bool special = age(g).get_den() == 1;
        count += special;
        CHECK(sl.contains(g) == special);
      }
      CHECK(sl.order() == count);
    }
  }
}

TEST_CASE("dual subgroup agrees with the pairing oracle") {
  for (const auto& entry : bhh::test::small_corpus()) {
    CAPTURE(entry.name);
    const auto& p = entry.poly;
    const auto subgroups = all_subgroups(p, AmbientTag::source, 1000);
    const auto dualElements = enumerate(full_group(p, AmbientTag::transpose));
    for (const Subgroup& h : subgroups) {
      const Subgroup d = dual_subgroup(h);
      CHECK(d.ambient()->exponents == p.exponents().transpose());
      CHECK(h.order() * d.order() == p.det());
      const auto hs = enumerate(h);
      std::size_t count = 0;
      for (const auto& mu : dualElements) {
        bool annihilates = true;
        for (const auto& lambda : hs)
          if (pairing(lambda, mu) != 0) annihilates = false;
        count += annihilates;
        CHECK(d.contains(mu) == annihilates);
      }
      CHECK(d.order() == count);
      CHECK(dual_subgroup(d) == h);
    }
    // Antitone.
    for (const Subgroup& a : subgroups)
      for (const Subgroup& b : subgroups)
        if (a.subgroup_of(b)) CHECK(dual_subgroup(b).subgroup_of(dual_subgroup(a)));
  }
}

TEST_CASE("all_subgroups: counts, distinctness, closure") {
  CHECK(all_subgroups(parse("x^3").poly, AmbientTag::source, 100).size() == 2);
  CHECK(all_subgroups(parse("x^2*y + y^3").poly, AmbientTag::source, 100).size() == 4);
  CHECK(all_subgroups(parse("x^2 + y^2").poly, AmbientTag::source, 100).size() == 5);
  CHECK(all_subgroups(parse("x^4 + y^4 + z^4").poly, AmbientTag::source, 100).size() == 129);
  CHECK_THROWS_AS(all_subgroups(parse("x^4 + y^4 + z^4").poly, AmbientTag::source, 10),
                  BoundExceeded);
  const auto subs = all_subgroups(parse("x^2 + y^4").poly, AmbientTag::source, 100);
  CHECK(std::set<Subgroup>(subs.begin(), subs.end()).size() == subs.size());
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (const auto& a : subs)
    for (const auto& b : subs) {
      CHECK(std::find(subs.begin(), subs.end(), sum(a, b)) != subs.end());
      CHECK(std::find(subs.begin(), subs.end(), intersect(a, b)) != subs.end());
      CHECK(intersect(a, b).subgroup_of(a));
      CHECK(a.subgroup_of(sum(a, b)));
    }
}

TEST_CASE("enumeration bound") {
  const Subgroup full = full_group(parse("x^4 + y^4").poly, AmbientTag::source);
  CHECK(enumerate(full, 16).size() == 16);
  CHECK_THROWS_AS(enumerate(full, 15), BoundExceeded);
}

TEST_CASE("parse_group keywords and generator lists") {
  const auto p = parse("x^2*y + y^3").poly;
  CHECK(parse_group(p, "full").order() == 6);
  CHECK(parse_group(p, "trivial").order() == 1);
  CHECK(parse_group(p, "").order() == 1);
  CHECK(parse_group(p, "monodromy").order() == 3);
  CHECK(parse_group(p, "sl").order() == 1);
  CHECK(parse_group(p, "1/2,0").order() == 2);
  CHECK(parse_group(p, "1/3,1/3") == monodromy_subgroup(p, AmbientTag::source));
  CHECK(parse_group(p, "1/3,1/3;1/2,0").order() == 6);
  CHECK_THROWS_AS(parse_group(p, "1/3,0"), InputError);
  CHECK_THROWS_AS(parse_group(p, "1/3"), InputError);
  CHECK_THROWS_AS(parse_group(p, "bogus"), InputError);
}
