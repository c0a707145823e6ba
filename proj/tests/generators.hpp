#pragma once

// Seeded generators shared by the property tests.

#include "pegboard/error.hpp"
#include "pegboard/lattice.hpp"
#include "pegboard/word.hpp"

#include <cstdint>
#include <random>

namespace pegboard::testing {

using Rng = std::mt19937_64;

inline Letter random_letter(Rng& rng) {
  return static_cast<Letter>(std::uniform_int_distribution<int>(0, 3)(rng));
}

inline Word random_word(Rng& rng, std::size_t max_len) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(random_letter(rng));
  return w;
}

// Inserts k cancelling pairs at random positions.
inline Word insert_noise(Rng& rng, Word w, int k) {
  for (int i = 0; i < k; ++i) {
    std::size_t pos = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
    Letter l = random_letter(rng);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), {l, inverse(l)});
  }
  return w;
}

// Conjugates by a random word.
inline Word conjugate_noise(Rng& rng, const Word& w, std::size_t len) {
  Word c = random_word(rng, len);
  Word out = c;
  out.insert(out.end(), w.begin(), w.end());
  Word ci = inverse(c);
  out.insert(out.end(), ci.begin(), ci.end());
  return out;
}

inline MCGMatrix random_unimodular(Rng& rng, int steps = 6) {
  MCGMatrix m = MCGMatrix::identity();
  std::uniform_int_distribution<int> pick(0, 4);
  for (int i = 0; i < steps; ++i) {
    switch (pick(rng)) {
      case 0: m = MCGMatrix(1, 1, 0, 1) * m; break;
      case 1: m = MCGMatrix(1, 0, 1, 1) * m; break;
      case 2: m = MCGMatrix(1, -1, 0, 1) * m; break;
      case 3: m = MCGMatrix(0, -1, 1, 0) * m; break;
      default: m = MCGMatrix(1, 0, 0, -1) * m; break;
    }
  }
  return m;
}

// Code of the pegboard::Error thrown by f; Internal when nothing is thrown.
ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace pegboard::testing
