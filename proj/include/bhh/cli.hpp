#pragma once

#include "bhh/corpus.hpp"
#include "bhh/cyczeta.hpp"
#include "bhh/orbzeta.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bhh::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

/// Output of one subcommand, in both human and machine form.
///
/// JSON layout:
///   { "command": ..., "input": {"polynomial", "matrix", "group", ...},
///     "result": {...}, "warnings": [...], "exitStatus": n }
/// Every rational is a "p/q" string; integers of any size are decimal strings
/// when they do not fit in 64 bits.
struct Report {
  std::string command;
  nlohmann::ordered_json input = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  int exitStatus = kExitOk;
  std::string text;

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
};

enum class Method { formula, definition, both };

struct VerifyOptions {
  std::vector<std::string> inputs;  // explicit polynomials; empty = builtin corpus
  CorpusParams corpus;
  std::string filter;               // substring of corpus entry names
  bool allSubgroups = false;
  std::uint64_t bound = kDefaultEnumerationBound;
  unsigned jobs = 1;
};

Report cmd_analyze(const std::string& input);
Report cmd_zeta(const std::string& input, const std::string& group, bool reduced, Method method,
                std::uint64_t bound = kDefaultEnumerationBound);
Report cmd_dual(const std::string& input, const std::string& group,
                std::uint64_t bound = kDefaultEnumerationBound);
Report cmd_verify(const VerifyOptions& options);
Report cmd_corpus(const CorpusParams& params);

/// [{"m", "c", "s"}, ...] in display order.
nlohmann::ordered_json zeta_terms_json(const CyclotomicProduct& z);
/// [{"theta", "r"}, ...] in increasing theta.
nlohmann::ordered_json zeta_factors_json(const CyclotomicProduct& z);
/// Inverse of zeta_terms_json (expands the terms).
CyclotomicProduct zeta_from_terms_json(const nlohmann::ordered_json& terms);
/// Inverse of zeta_factors_json.
CyclotomicProduct zeta_from_factors_json(const nlohmann::ordered_json& factors);

} // namespace bhh::cli
