#include "bhh/cli.hpp"
#include "bhh/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int emit(const bhh::cli::Report& r, bool asJson) {
  if (asJson) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    (r.exitStatus == bhh::cli::kExitInput ? std::cerr : std::cout) << r.text;
  }
  return r.exitStatus;
}

} // namespace

int main(int argc, char** argv) {
  using namespace bhh::cli;
  CLI::App app{"Orbifold zeta functions of invertible polynomials and their dual pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool asJson = false;
  std::uint64_t bound = bhh::kDefaultEnumerationBound;
  try {
    bound = bhh::enumeration_bound_from_env();
  } catch (const bhh::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  app.add_flag("--json", asJson, "print a JSON report");
  app.add_option("--bound", bound, "enumeration bound on group orders (env BHH_ENUM_BOUND)");

  std::string input, group = "full", method = "formula";
  bool reduced = false;

  auto* analyze = app.add_subcommand("analyze", "weights, det E, G_f and the transpose");
  analyze->add_option("polynomial", input, "e.g. \"x^2*y + y^3\" or \"2,1;0,3\"")->required();

  auto* zeta = app.add_subcommand("zeta", "orbifold zeta function of (f, G)");
  zeta->add_option("polynomial", input)->required();
  zeta->add_option("--group", group, "full | trivial | monodromy | sl | a/b,c/d;...");
  zeta->add_flag("--reduced", reduced, "also print the reduced orbifold zeta");
  zeta->add_option("--method", method, "formula | definition | both")
      ->check(CLI::IsMember({"formula", "definition", "both"}));

  auto* dual = app.add_subcommand("dual", "dual pair and duality verdicts");
  dual->add_option("polynomial", input)->required();
  dual->add_option("--group", group);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check the duality over a corpus");
  verify->add_option("polynomials", vopt.inputs, "explicit polynomials instead of the corpus");
  verify->add_flag("--all-subgroups", vopt.allSubgroups, "every subgroup of G_f");
  verify->add_option("--filter", vopt.filter, "substring of corpus entry names");
  verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);

  bhh::CorpusParams params;
  std::string maxDet = "200";
  for (auto* sub : {verify, app.add_subcommand("corpus", "list the builtin corpus")}) {
    sub->add_option("--max-vars", params.maxVars)->check(CLI::Range(1, 12));
    sub->add_option("--max-exponent", params.maxExponent)->check(CLI::PositiveNumber);
    sub->add_option("--max-det", maxDet);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  vopt.bound = bound;
  if (maxDet.empty() || maxDet.find_first_not_of("0123456789") != std::string::npos) {
    std::cerr << "error: --max-det must be a positive integer\n";
    return kExitInput;
  }
  params.maxDet = bhh::Integer(maxDet);
  vopt.corpus = params;

  const auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Report r;
  if (name == "analyze") {
    r = cmd_analyze(input);
  } else if (name == "zeta") {
    const Method m = method == "definition" ? Method::definition
                     : method == "both"     ? Method::both
                                            : Method::formula;
    r = cmd_zeta(input, group, reduced, m, bound);
  } else if (name == "dual") {
    r = cmd_dual(input, group, bound);
  } else if (name == "verify") {
    r = cmd_verify(vopt);
  } else {
    r = cmd_corpus(params);
  }
  return emit(r, asJson);
}
