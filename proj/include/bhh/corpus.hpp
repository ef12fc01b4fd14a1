#pragma once

#include "bhh/invpoly.hpp"

#include <string>
#include <vector>

namespace bhh {

struct CorpusParams {
  std::size_t maxVars = 3;
  unsigned maxExponent = 4;
  Integer maxDet = 200;
};

/// A polynomial assembled from atomic blocks on disjoint variables:
///   fermat<a>            x^a
///   chain<a1>_..._<ak>   x1^a1*x2 + x2^a2*x3 + ... + xk^ak
///   loop<a1>_..._<ak>    x1^a1*x2 + ... + xk^ak*x1
/// Sums are written "loop2_2+fermat3". Every exponent a_i >= 2, so every
/// entry has an isolated singularity at the origin.
struct CorpusEntry {
  std::string name;
  InvertiblePolynomial poly;
  Integer expectedDet;
  bool nondegenerate = true;
};

/// Deterministic enumeration: block multisets ordered by (size descending,
/// fermat < chain < loop, exponents lexicographic), keeping det E <= maxDet.
std::vector<CorpusEntry> build_corpus(const CorpusParams& params);

} // namespace bhh
