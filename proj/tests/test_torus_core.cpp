#include "doctest.h"
#include "generators.hpp"

#include "pegboard/error.hpp"
#include "pegboard/rational.hpp"
#include "pegboard/word.hpp"

using namespace pegboard;
using pegboard::testing::Rng;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(6, -8);
  CHECK(a.str() == "-3/4");
  CHECK((a + Rational(1, 4)).str() == "-1/2");
  CHECK(a.floor() == -1);
  CHECK(a.frac() == Rational(1, 4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
}

TEST_CASE("slopes are canonicalized up to sign") {
  CHECK(Slope::from({-1, -1}).direction() == LatticeVector{1, 1});
  CHECK(Slope::from({-1, 0}).direction() == LatticeVector{1, 0});
  CHECK(Slope::from({2, -3}).direction() == LatticeVector{-2, 3});
  CHECK_THROWS_AS(Slope::from({2, 4}), Error);
  auto [s, k] = Slope::primitive_part({-4, 0});
  CHECK(s.direction() == LatticeVector{1, 0});
  CHECK(k == 4);
}

TEST_CASE("non-unimodular matrices are rejected") {
  CHECK_THROWS_AS(MCGMatrix(2, 0, 0, 1), Error);
  try {
    MCGMatrix(1, 1, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }
}

TEST_CASE("reduce_word examples") {
  CHECK(reduce_word(parse_word("xyYx")).str() == "xx");
  CHECK(reduce_word(parse_word("xyXY")).str() == "xyXY");
  CHECK(reduce_word(parse_word("yxY")).str() == "x");
  CHECK(reduce_word(parse_word("xX")).empty());
  CHECK(reduce_word(parse_word("")).empty());
  // A word and its inverse name the same unoriented class.
  CHECK(reduce_word(parse_word("YX")) == reduce_word(parse_word("xy")));
}

TEST_CASE("least rotation agrees with brute force") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Word w = pegboard::testing::random_word(rng, 12);
    Word best = w;
    for (std::size_t k = 0; k < w.size(); ++k) best = std::min(best, rotate(w, k));
    CHECK(least_rotation(w) == best);
  }
}

TEST_CASE("reduce_word is idempotent and constant on conjugacy classes") {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    Word w = pegboard::testing::random_word(rng, 10);
    CyclicWord c = reduce_word(w);
    CHECK(reduce_word(c.letters()) == c);
    CHECK(is_cyclically_reduced(c.letters()));
    Word noisy = pegboard::testing::insert_noise(rng, pegboard::testing::conjugate_noise(rng, w, 4), 3);
    CHECK(reduce_word(noisy) == c);
    CHECK(reduce_word(inverse(noisy)) == c);
  }
}

TEST_CASE("primitive roots") {
  auto [r, k] = primitive_root(parse_word("xyxyxy"));
  CHECK(to_string(r) == "xy");
  CHECK(k == 3);
  auto [r2, k2] = primitive_root(parse_word("xyxY"));
  CHECK(to_string(r2) == "xyxY");
  CHECK(k2 == 1);
}

TEST_CASE("automorphisms realize their matrices") {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    MCGMatrix m = pegboard::testing::random_unimodular(rng, 8);
    Automorphism a = Automorphism::realizing(m);
    CHECK(abelianize(a.image(Letter::x)) == m * LatticeVector{1, 0});
    CHECK(abelianize(a.image(Letter::y)) == m * LatticeVector{0, 1});
    // Bijective on the free group: the commutator maps to a conjugate of the
    // commutator or its inverse (the puncture class is preserved).
    CyclicWord puncture = CyclicWord::parse("xyXY");
    CHECK(reduce_word(a.apply(puncture.letters())) == puncture);
  }
}

TEST_CASE("matrix action composes on conjugacy classes") {
  Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    MCGMatrix m1 = pegboard::testing::random_unimodular(rng);
    MCGMatrix m2 = pegboard::testing::random_unimodular(rng);
    Word w = pegboard::testing::random_word(rng, 8);
    Automorphism a1 = Automorphism::realizing(m1);
    Automorphism a2 = Automorphism::realizing(m2);
    Automorphism a12 = Automorphism::realizing(m2 * m1);
    CHECK(reduce_word(a2.apply(a1.apply(w))) == reduce_word(a12.apply(w)));
    LatticeVector h = reduce_word(a1.apply(w)).homology();
    LatticeVector expected = m1 * abelianize(w);
    CHECK((h == expected || h == -expected));
  }
}

TEST_CASE("involution is the action of minus identity") {
  Rng rng(15);
  Automorphism minus = Automorphism::realizing(MCGMatrix(-1, 0, 0, -1));
  for (int t = 0; t < 200; ++t) {
    Word w = pegboard::testing::random_word(rng, 10);
    CHECK(reduce_word(minus.apply(w)) == reduce_word(involution_image(w)));
    CHECK(reduce_word(involution_image(involution_image(w))) == reduce_word(w));
  }
}
