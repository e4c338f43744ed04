#pragma once

#include <random>

#include "fpg/words.hpp"

namespace fpg::testing {

// Random word of exactly `length` letters with subscripts in [0, max_index].
inline Word random_word(std::mt19937_64& rng, std::size_t length,
                        std::uint32_t max_index, bool positive_only = false) {
  std::uniform_int_distribution<std::uint32_t> index(0, max_index);
  std::bernoulli_distribution negative(positive_only ? 0.0 : 0.5);
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({index(rng), negative(rng) ? -1 : 1});
  }
  return w;
}

inline Word random_word_upto(std::mt19937_64& rng, std::size_t max_length,
                             std::uint32_t max_index,
                             bool positive_only = false) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word(rng, len(rng), max_index, positive_only);
}

}  // namespace fpg::testing
