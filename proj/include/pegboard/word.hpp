#pragma once

#include "pegboard/lattice.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pegboard {

// Generators of pi_1 of the marked torus. x crosses the vertical arc
// {0} x (0,1) rightwards, y crosses the horizontal arc (0,1) x {0} upwards.
// Enumerator order is the canonical letter order x < X < y < Y.
enum class Letter : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::x: return Letter::X;
    case Letter::X: return Letter::x;
    case Letter::y: return Letter::Y;
    case Letter::Y: return Letter::y;
  }
  return l;
}
constexpr bool is_horizontal(Letter l) { return l == Letter::x || l == Letter::X; }
constexpr bool is_positive(Letter l) { return l == Letter::x || l == Letter::y; }
constexpr LatticeVector step_of(Letter l) {
  switch (l) {
    case Letter::x: return {1, 0};
    case Letter::X: return {-1, 0};
    case Letter::y: return {0, 1};
    case Letter::Y: return {0, -1};
  }
  return {};
}
char to_char(Letter l);
// Accepts x X y Y.
Letter letter_from_char(char c);

using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string to_string(std::span<const Letter> w);

Word inverse(std::span<const Letter> w);
Word free_reduce(std::span<const Letter> w);
// Free and cyclic reduction; the result is some rotation-class member.
Word cyclic_reduce(std::span<const Letter> w);
Word rotate(std::span<const Letter> w, std::size_t k);
Word least_rotation(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w);
LatticeVector abelianize(std::span<const Letter> w);
// Letterwise x -> X, y -> Y: the elliptic involution of the marked torus.
Word involution_image(std::span<const Letter> w);
// Shortest u with w = u^k; returns (u, k). Empty word gives ({}, 1).
std::pair<Word, std::int64_t> primitive_root(std::span<const Letter> w);

// Free homotopy class of an unoriented closed curve in the marked torus:
// freely and cyclically reduced, stored as the least rotation of the word or
// of its inverse, whichever is smaller.
class CyclicWord {
 public:
  CyclicWord() = default;
  static CyclicWord from(std::span<const Letter> raw);
  static CyclicWord parse(std::string_view text) { return from(parse_word(text)); }

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  LatticeVector homology() const { return abelianize(letters_); }
  // Representative oriented so that the homology class is (dx > 0) or
  // (dx == 0, dy >= 0); least rotation among such.
  Word oriented() const;
  std::string str() const { return to_string(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word letters_;
};

// Canonical conjugacy-class name of a raw letter sequence.
inline CyclicWord reduce_word(std::span<const Letter> raw) { return CyclicWord::from(raw); }

// Endomorphism of the free group given by the images of x and y.
class Automorphism {
 public:
  Automorphism(Word image_x, Word image_y);
  static Automorphism identity();
  // Some automorphism whose abelianization is m; unique up to inner
  // automorphisms, so its action on conjugacy classes is well defined.
  static Automorphism realizing(const MCGMatrix& m);

  Word apply(std::span<const Letter> w) const;
  // (*this o other)(w) = this->apply(other.apply(w)).
  Automorphism compose(const Automorphism& other) const;
  const Word& image(Letter l) const;

 private:
  std::array<Word, 4> images_;
};

}  // namespace pegboard
