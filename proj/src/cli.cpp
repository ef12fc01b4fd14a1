#include "bhh/cli.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace bhh::cli {

using json = nlohmann::ordered_json;

namespace {

json jint(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InputError("expected an integer in JSON");
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InputError("expected a rational string \"p/q\" in JSON");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw InputError("invalid rational in JSON");
  q.canonicalize();
  return q;
}

json jrationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json jmatrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jint(m(r, c)));
    a.push_back(row);
  }
  return a;
}

json jintegers(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

std::string group_structure(const IntVector& factors) {
  if (factors.empty()) return "trivial";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + f.get_str();
  }
  return s;
}

/// Generator list in the "a/b,c/d;e/f,g/h" syntax accepted by --group.
std::string group_spec(const Subgroup& h) {
  std::vector<GroupElement> gens = generators(h);
  if (gens.empty()) return "trivial";
  std::string s;
  for (const auto& g : gens) {
    if (!s.empty()) s += ";";
    s += g.str();
  }
  return s;
}

json jgroup(const Subgroup& h) {
  json g;
  g["order"] = jint(h.order());
  g["invariantFactors"] = jintegers(invariant_factors(h));
  g["generators"] = group_spec(h);
  return g;
}

json jtorus(const TorusFactorData& t) {
  json j;
  j["I"] = t.i.str();
  j["chi"] = jint(t.chi);
  j["mI"] = jint(t.mI);
  j["kI"] = jint(t.kI);
  j["ellI"] = jint(t.ellI);
  j["sI"] = jint(t.sI);
  j["sPrimeI"] = jint(t.sPrimeI);
  return j;
}

json jinput(const InvertiblePolynomial& p, const std::string& group) {
  json in;
  in["polynomial"] = p.format();
  in["matrix"] = jmatrix(p.exponents());
  in["group"] = group;
  return in;
}

// Runs a command body, mapping exceptions onto the exit-code contract.
Report guarded(const std::string& command, const std::function<void(Report&)>& body) {
  Report r;
  r.command = command;
  try {
    body(r);
  } catch (const InputError& e) {
    r.exitStatus = kExitInput;
    r.result["error"] = e.what();
    r.text += std::string("error: ") + e.what() + "\n";
  } catch (const BoundExceeded& e) {
    r.exitStatus = kExitInput;
    r.result["error"] = e.what();
    r.text += std::string("error: ") + e.what() + "\n";
  } catch (const InvariantViolation& e) {
    r.exitStatus = kExitVerification;
    r.result["error"] = e.what();
    r.text += std::string("verification failure: ") + e.what() + "\n";
  }
  return r;
}

ParsedPolynomial parse_into(Report& r, const std::string& input) {
  ParsedPolynomial parsed = parse(input);
  for (const auto& w : parsed.warnings) r.warnings.push_back(w);
  return parsed;
}

std::string verdict_line(const std::map<std::string, Verdict>& verdicts) {
  std::string s;
  for (const auto& [name, v] : verdicts) {
    if (!s.empty()) s += " ";
    s += name + "=" + to_string(v);
  }
  return s;
}

} // namespace

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["result"] = result;
  j["warnings"] = warnings;
  j["exitStatus"] = exitStatus;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input");
  r.result = j.at("result");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.exitStatus = j.at("exitStatus").get<int>();
  return r;
}

json zeta_terms_json(const CyclotomicProduct& z) {
  json a = json::array();
  for (const auto& t : to_binomial_form(z).terms) {
    json term;
    term["m"] = jint(t.m);
    term["c"] = to_string(t.c);
    term["s"] = jint(t.s);
    a.push_back(term);
  }
  return a;
}

json zeta_factors_json(const CyclotomicProduct& z) {
  json a = json::array();
  for (const auto& [theta, r] : z.factors()) {
    json f;
    f["theta"] = to_string(theta);
    f["r"] = jint(r);
    a.push_back(f);
  }
  return a;
}

CyclotomicProduct zeta_from_terms_json(const json& terms) {
  BinomialForm b;
  for (const auto& t : terms)
    b.terms.push_back({int_from_json(t.at("m")), rational_from_json(t.at("c")),
                       int_from_json(t.at("s"))});
  return expand(b);
}

CyclotomicProduct zeta_from_factors_json(const json& factors) {
  CyclotomicProduct z;
  for (const auto& f : factors) z.add_factor(rational_from_json(f.at("theta")), int_from_json(f.at("r")));
  return z;
}

Report cmd_analyze(const std::string& input) {
  return guarded("analyze", [&](Report& r) {
    r.input["polynomial"] = input;
    const InvertiblePolynomial p = parse_into(r, input).poly;
    r.input = jinput(p, "");
    r.input.erase("group");
    const Subgroup full = full_group(p, AmbientTag::source);
    const IntVector factors = invariant_factors(full);
    const GroupElement g0 = grading_element(p);
    const InvertiblePolynomial t = transpose(p);

    r.result["det"] = jint(p.det());
    r.result["weights"] = jrationals(p.weights().q);
    r.result["g0"] = jrationals(g0.alpha());
    r.result["monodromyOrder"] = jint(monodromy_subgroup(p, AmbientTag::source).order());
    r.result["invariantFactors"] = jintegers(factors);
    r.result["transpose"] = t.format();
    r.result["transposeMatrix"] = jmatrix(t.exponents());
    r.result["transposeWeights"] = jrationals(t.weights().q);

    std::ostringstream os;
    os << "polynomial: " << p.format() << "\n"
       << "exponent matrix E: " << p.exponents() << "\n"
       << "d = det E = " << p.det() << "\n"
       << "weights q = " << to_string(p.weights().q) << "\n"
       << "g0 = " << to_string(g0.alpha()) << " (order "
       << monodromy_subgroup(p, AmbientTag::source).order() << ")\n"
       << "G_f = " << group_structure(factors) << "\n"
       << "transpose: " << t.format() << "  E^T = " << t.exponents() << "\n"
       << "transpose weights = " << to_string(t.weights().q) << "\n";
    r.text += os.str();
  });
}

Report cmd_zeta(const std::string& input, const std::string& group, bool reduced, Method method,
                std::uint64_t bound) {
  return guarded("zeta", [&](Report& r) {
    r.input["polynomial"] = input;
    r.input["group"] = group;
    const InvertiblePolynomial p = parse_into(r, input).poly;
    r.input = jinput(p, group);
    const OrbifoldPair pair(p, parse_group(p, group));
    r.input["method"] = method == Method::formula      ? "formula"
                        : method == Method::definition ? "definition"
                                                       : "both";
    r.input["reduced"] = reduced;

    CyclotomicProduct z;
    if (method == Method::formula) {
      z = orbifold_zeta_formula(pair);
    } else if (method == Method::definition) {
      z = orbifold_zeta_definition(pair, bound);
    } else {
      z = orbifold_zeta_formula(pair);
      const CyclotomicProduct viaDefinition = orbifold_zeta_definition(pair, bound);
      if (viaDefinition != z)
        throw InvariantViolation("formula route " + render(z) + " and definition route " +
                                 render(viaDefinition) + " disagree");
    }

    r.result["groupOrder"] = jint(pair.g.order());
    r.result["zeta"] = zeta_terms_json(z);
    r.result["zetaFactors"] = zeta_factors_json(z);
    r.result["eulerCharacteristic"] = jint(degree(z));
    std::ostringstream os;
    os << "polynomial: " << p.format() << "\n"
       << "group: order " << pair.g.order() << " (" << group_structure(invariant_factors(pair.g))
       << ")\n"
       << "orbifold zeta: " << render(z) << "\n"
       << "orbifold Euler characteristic: " << degree(z) << "\n";
    if (reduced) {
      const CyclotomicProduct rz =
          multiply(z, invert(aggregate_shifted_binomial(Integer(1), pair.g)));
      r.result["reducedZeta"] = zeta_terms_json(rz);
      r.result["reducedZetaFactors"] = zeta_factors_json(rz);
      os << "reduced orbifold zeta: " << render(rz) << "\n";
    }
    r.text += os.str();
  });
}

Report cmd_dual(const std::string& input, const std::string& group, std::uint64_t bound) {
  return guarded("dual", [&](Report& r) {
    r.input["polynomial"] = input;
    r.input["group"] = group;
    const InvertiblePolynomial p = parse_into(r, input).poly;
    r.input = jinput(p, group);
    const DualityReport d = verify_duality(OrbifoldPair(p, parse_group(p, group)), bound);
    const bool even = p.n() % 2 == 0;

    r.result["group"] = jgroup(d.pair.g);
    r.result["dualPolynomial"] = d.dual.p.format();
    r.result["dualMatrix"] = jmatrix(d.dual.p.exponents());
    r.result["dualGroup"] = jgroup(d.dual.g);
    r.result["zeta"] = zeta_terms_json(d.zeta);
    r.result["reducedZeta"] = zeta_terms_json(d.reduced);
    r.result["dualZeta"] = zeta_terms_json(d.dualZeta);
    r.result["dualReducedZeta"] = zeta_terms_json(d.dualReduced);
    r.result["relation"] = even ? "equal" : "inverse";
    json tori = json::array(), dualTori = json::array();
    for (const auto& t : d.tori) tori.push_back(jtorus(t));
    for (const auto& t : d.dualTori) dualTori.push_back(jtorus(t));
    r.result["tori"] = tori;
    r.result["dualTori"] = dualTori;
    json verdicts = json::object();
    for (const auto& [name, v] : d.verdicts) verdicts[name] = to_string(v);
    r.result["verdicts"] = verdicts;
    r.result["notes"] = d.notes;

    std::ostringstream os;
    os << "pair: (" << p.format() << ", G of order " << d.pair.g.order() << ")\n"
       << "dual polynomial: " << d.dual.p.format() << "\n"
       << "dual group: order " << d.dual.g.order() << ", "
       << group_structure(invariant_factors(d.dual.g)) << ", generators " << group_spec(d.dual.g)
       << "\n"
       << "reduced orbifold zeta (f, G):   " << render(d.reduced) << "\n"
       << "reduced orbifold zeta (f~, G~): " << render(d.dualReduced) << "\n"
       << "expected relation (n = " << p.n() << "): " << (even ? "equal" : "inverse") << "\n";
    for (const auto& [name, v] : d.verdicts) os << "  " << std::left << std::setw(18) << name
                                                << to_string(v) << "\n";
    for (const auto& note : d.notes) os << "  note: " << note << "\n";
    r.text += os.str();
    if (!d.all_passed()) r.exitStatus = kExitVerification;
  });
}

namespace {

struct EntryOutcome {
  std::string name;
  std::string polynomial;
  Integer det;
  std::size_t n = 0;
  std::size_t subgroups = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string status;  // "pass", "fail", "skipped"
  std::vector<std::string> failures;
};

EntryOutcome verify_entry(const std::string& name, const InvertiblePolynomial& p,
                          const VerifyOptions& opt) {
  EntryOutcome o{name, p.format(), p.det(), p.n(), 0, 0, 0, 0, "pass", {}};
  std::vector<Subgroup> groups;
  try {
    if (opt.allSubgroups) {
      groups = all_subgroups(p, AmbientTag::source, opt.bound);
    } else {
      for (const char* spec : {"trivial", "monodromy", "sl", "full"}) {
        Subgroup h = parse_group(p, spec);
        if (std::find(groups.begin(), groups.end(), h) == groups.end()) groups.push_back(h);
      }
    }
  } catch (const BoundExceeded& e) {
    o.status = "skipped";
    o.failures.push_back(e.what());
    return o;
  }
  o.subgroups = groups.size();
  for (const auto& g : groups) {
    try {
      const DualityReport d = verify_duality(OrbifoldPair(p, g), opt.bound);
      if (d.all_passed()) {
        ++o.passed;
      } else {
        ++o.failed;
        std::string msg = "G = " + group_spec(g) + ": " + verdict_line(d.verdicts);
        for (const auto& note : d.notes) msg += "; " + note;
        o.failures.push_back(msg);
      }
      if (d.verdicts.at("routeEquivalence") == Verdict::skipped) ++o.skipped;
    } catch (const InvariantViolation& e) {
      ++o.failed;
      o.failures.push_back("G = " + group_spec(g) + ": " + e.what());
    }
  }
  if (o.failed > 0) o.status = "fail";
  return o;
}

} // namespace

Report cmd_verify(const VerifyOptions& opt) {
  return guarded("verify", [&](Report& r) {
    std::vector<std::pair<std::string, InvertiblePolynomial>> entries;
    if (!opt.inputs.empty()) {
      for (const auto& in : opt.inputs) {
        ParsedPolynomial parsed = parse_into(r, in);
        entries.emplace_back(parsed.poly.format(), parsed.poly);
      }
      r.input["polynomials"] = opt.inputs;
    } else {
      for (auto& e : build_corpus(opt.corpus))
        if (opt.filter.empty() || e.name.find(opt.filter) != std::string::npos)
          entries.emplace_back(e.name, e.poly);
      r.input["corpus"] = {{"maxVars", opt.corpus.maxVars},
                           {"maxExponent", opt.corpus.maxExponent},
                           {"maxDet", jint(opt.corpus.maxDet)},
                           {"filter", opt.filter}};
    }
    r.input["allSubgroups"] = opt.allSubgroups;
    r.input["bound"] = opt.bound;
    if (entries.empty()) throw InputError("empty corpus selection");

    std::vector<EntryOutcome> outcomes(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < entries.size(); i = next++)
        outcomes[i] = verify_entry(entries[i].first, entries[i].second, opt);
    };
    const unsigned jobs = std::max(1U, opt.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t subgroups = 0, passed = 0, failed = 0, skippedEntries = 0;
    json list = json::array();
    std::ostringstream os;
    os << std::left << std::setw(28) << "entry" << std::setw(4) << "n" << std::setw(7) << "d"
       << std::setw(11) << "subgroups" << std::setw(8) << "passed" << std::setw(8) << "failed"
       << "status\n";
    for (const auto& o : outcomes) {
      subgroups += o.subgroups;
      passed += o.passed;
      failed += o.failed;
      if (o.status == "skipped") ++skippedEntries;
      os << std::left << std::setw(28) << o.name << std::setw(4) << o.n << std::setw(7)
         << o.det.get_str() << std::setw(11) << o.subgroups << std::setw(8) << o.passed
         << std::setw(8) << o.failed << o.status << "\n";
      for (const auto& f : o.failures) os << "    " << f << "\n";
      list.push_back({{"name", o.name},
                      {"polynomial", o.polynomial},
                      {"n", o.n},
                      {"det", jint(o.det)},
                      {"subgroups", o.subgroups},
                      {"passed", o.passed},
                      {"failed", o.failed},
                      {"routeSkipped", o.skipped},
                      {"status", o.status},
                      {"failures", o.failures}});
    }
    os << "total: " << outcomes.size() << " entries, " << subgroups << " pairs, " << passed
       << " passed, " << failed << " failed, " << skippedEntries << " entries skipped\n";
    r.text += os.str();
    r.result["entries"] = list;
    r.result["totals"] = {{"entries", outcomes.size()},
                          {"pairs", subgroups},
                          {"passed", passed},
                          {"failed", failed},
                          {"skippedEntries", skippedEntries}};
    if (failed > 0) r.exitStatus = kExitVerification;
  });
}

Report cmd_corpus(const CorpusParams& params) {
  return guarded("corpus", [&](Report& r) {
    r.input = {{"maxVars", params.maxVars},
               {"maxExponent", params.maxExponent},
               {"maxDet", jint(params.maxDet)}};
    json list = json::array();
    std::ostringstream os;
    for (const auto& e : build_corpus(params)) {
      list.push_back({{"name", e.name},
                      {"polynomial", e.poly.format()},
                      {"matrix", jmatrix(e.poly.exponents())},
                      {"det", jint(e.expectedDet)}});
      os << std::left << std::setw(28) << e.name << std::setw(7) << e.expectedDet.get_str()
         << e.poly.format() << "\n";
    }
    r.result["entries"] = list;
    r.text += os.str();
  });
}

} // namespace bhh::cli
