#include "bhh/corpus.hpp"

#include "bhh/errors.hpp"

#include <algorithm>
#include <functional>

namespace bhh {

namespace {

struct Block {
  std::string name;
  std::size_t vars;
  IntMatrix e;  // local exponent matrix
};

void exponent_tuples(std::size_t k, unsigned maxExponent,
                     const std::function<void(const std::vector<unsigned>&)>& emit) {
  std::vector<unsigned> a(k, 2);
  for (;;) {
    emit(a);
    std::size_t pos = k;
    while (pos > 0 && a[pos - 1] == maxExponent) a[--pos] = 2;
    if (pos == 0) return;
    ++a[pos - 1];
  }
}

std::string tuple_name(const std::string& kind, const std::vector<unsigned>& a) {
  std::string s = kind;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(a[i]);
  }
  return s;
}

std::vector<Block> atomic_blocks(const CorpusParams& params) {
  std::vector<Block> blocks;
  if (params.maxExponent < 2) return blocks;
  for (std::size_t k = params.maxVars; k >= 1; --k) {
    if (k == 1) {
      for (unsigned a = 2; a <= params.maxExponent; ++a) {
        IntMatrix e(1, 1);
        e(0, 0) = a;
        blocks.push_back({"fermat" + std::to_string(a), 1, e});
      }
      continue;
    }
    exponent_tuples(k, params.maxExponent, [&](const std::vector<unsigned>& a) {
      IntMatrix e(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        e(i, i) = a[i];
        if (i + 1 < k) e(i, i + 1) = 1;
      }
      blocks.push_back({tuple_name("chain", a), k, e});
    });
    exponent_tuples(k, params.maxExponent, [&](const std::vector<unsigned>& a) {
      IntMatrix e(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        e(i, i) = a[i];
        e(i, (i + 1) % k) = 1;
      }
      blocks.push_back({tuple_name("loop", a), k, e});
    });
  }
  return blocks;
}

} // namespace

std::vector<CorpusEntry> build_corpus(const CorpusParams& params) {
  if (params.maxVars == 0 || params.maxExponent == 0 || params.maxDet <= 0)
    throw InputError("corpus parameters must be positive");
  if (params.maxVars > 12) throw InputError("corpus maxVars is limited to 12");
  const std::vector<Block> blocks = atomic_blocks(params);
  std::vector<CorpusEntry> out;
  std::vector<std::size_t> chosen;

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t vars) {
    if (!chosen.empty()) {
      IntMatrix e(vars, vars);
      std::string name;
      std::size_t offset = 0;
      for (std::size_t idx : chosen) {
        const Block& b = blocks[idx];
        for (std::size_t r = 0; r < b.vars; ++r)
          for (std::size_t c = 0; c < b.vars; ++c) e(offset + r, offset + c) = b.e(r, c);
        offset += b.vars;
        if (!name.empty()) name += "+";
        name += b.name;
      }
      Integer det = determinant(e);
      if (det <= params.maxDet) {
        InvertiblePolynomial p = InvertiblePolynomial::from_matrix(e);
        out.push_back({name, p, det, true});
      }
    }
    for (std::size_t idx = from; idx < blocks.size(); ++idx) {
      if (vars + blocks[idx].vars > params.maxVars) continue;
      chosen.push_back(idx);
      extend(idx, vars + blocks[idx].vars);
      chosen.pop_back();
    }
  };
  extend(0, 0);
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.poly.n() < b.poly.n();
  });
  return out;
}

} // namespace bhh
