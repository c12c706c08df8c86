#ifndef ARTIN_TEST_UTIL_HPP_
#define ARTIN_TEST_UTIL_HPP_

#include <random>

#include "artin/word.hpp"

namespace artin::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

// Uniform word of the given length over generators 1..rank, signed when
// allow_inverses.
inline Word random_word(int rank, std::size_t length, bool allow_inverses = true) {
  std::uniform_int_distribution<int> gen(1, rank), sign(0, 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    int g = gen(rng());
    w.push_back(allow_inverses && sign(rng()) ? -g : g);
  }
  return w;
}

inline std::size_t random_length(std::size_t max) {
  return std::uniform_int_distribution<std::size_t>(0, max)(rng());
}

}  // namespace artin::testing

#endif  // ARTIN_TEST_UTIL_HPP_
