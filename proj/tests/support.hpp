#pragma once

#include "bhh/corpus.hpp"
#include "bhh/intlin.hpp"

#include <random>

namespace bhh::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed2024);
  return g;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
  return m;
}

// Small corpus shared by the property tests.
inline const std::vector<CorpusEntry>& small_corpus() {
  static const std::vector<CorpusEntry> c = build_corpus({3, 3, 60});
  return c;
}

} // namespace bhh::test
