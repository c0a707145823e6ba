#include "generators.hpp"
#include "pegboard/error.hpp"
#include "pegboard/pegword.hpp"

#include "doctest.h"

using namespace pegboard;
using pegboard::testing::Rng;

namespace {

// Random reduced class that is neither trivial, a puncture loop nor a line.
CyclicWord random_peg_class(Rng& rng, std::size_t max_len) {
  for (;;) {
    CyclicWord w = CyclicWord::from(pegboard::testing::random_word(rng, max_len));
    if (w.empty() || is_line_class(w)) continue;
    auto [root, k] = primitive_root(w.letters());
    (void)k;
    if (CyclicWord::from(root) == CyclicWord::parse("xyXY")) continue;
    return w;
  }
}

}  // namespace

TEST_CASE("slope words") {
  CHECK(CyclicWord::from(slope_word({1, 0})).str() == "x");
  CHECK(CyclicWord::from(slope_word({0, 1})).str() == "y");
  CHECK(CyclicWord::from(slope_word({1, 1})).str() == "xy");
  CHECK(abelianize(slope_word({3, -5})) == LatticeVector{3, -5});
  CHECK(slope_word({3, -5}).size() == 8);
  CHECK(is_line_class(CyclicWord::parse("xyxy")));
  CHECK_FALSE(is_line_class(CyclicWord::parse("xxyy")));
  CHECK_FALSE(is_line_class(CyclicWord::parse("xyxY")));
}

TEST_CASE("crossing word of explicit polylines") {
  // Square around the peg (1,1): the puncture class.
  Polyline sq{{{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)},
               {Rational(3, 2), Rational(3, 2)}, {Rational(1, 2), Rational(3, 2)}},
              {0, 0}};
  CHECK(CyclicWord::from(crossing_word(sq)) == CyclicWord::parse("xyXY"));
  Polyline through{{{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(3, 2)}}, {0, 0}};
  CHECK_THROWS_AS(crossing_word(through), Error);
}

TEST_CASE("beta(2) peg word") {
  PegWord p = PegWord::from_word(CyclicWord::parse("xyxY"));
  REQUIRE(p.size() == 2);
  CHECK(p.homology() == LatticeVector{-2, 0});
  CHECK(p.steps()[0].wrap != p.steps()[1].wrap);
  CHECK(p.to_word() == CyclicWord::parse("xyxY"));
}

TEST_CASE("puncture loops") {
  CHECK(PegWord::from_word(CyclicWord::parse("xyXY")) == PegWord::puncture_loop(1));
  CHECK(PegWord::from_word(CyclicWord::parse("xyXYxyXYxyXY")) == PegWord::puncture_loop(3));
  CHECK(PegWord::puncture_loop(2).to_word() == CyclicWord::parse("xyXYxyXY"));
  CHECK_THROWS_AS(PegWord::from_word(CyclicWord::parse("xy")), Error);
  CHECK_THROWS_AS(PegWord::from_word(CyclicWord{}), Error);
}

TEST_CASE("canonical form drops same-side grazing pegs") {
  PegWord a = PegWord::from_steps({{{1, 0}, Wrap::Left}, {{1, 0}, Wrap::Left}, {{0, 1}, Wrap::Left},
                                   {{-2, 0}, Wrap::Left}, {{0, -1}, Wrap::Left}});
  PegWord b = PegWord::from_steps(
      {{{2, 0}, Wrap::Left}, {{0, 1}, Wrap::Left}, {{-2, 0}, Wrap::Left}, {{0, -1}, Wrap::Left}});
  CHECK(a == b);
  CHECK(a.size() == 4);
  // A side change at a grazing peg is kept.
  PegWord c = PegWord::from_steps({{{1, 0}, Wrap::Left}, {{1, 0}, Wrap::Right}});
  CHECK(c.size() == 2);
  CHECK_THROWS_AS(PegWord::from_steps({{{2, 0}, Wrap::Left}, {{2, 0}, Wrap::Right}}), Error);
}

TEST_CASE("canonical form ignores rotation and orientation") {
  std::vector<PegStep> s{{{1, 0}, Wrap::Left}, {{1, 1}, Wrap::Right}, {{0, -1}, Wrap::Right}};
  PegWord p = PegWord::from_steps(s);
  std::rotate(s.begin(), s.begin() + 1, s.end());
  CHECK(PegWord::from_steps(s) == p);
  CHECK(PegWord::from_steps(p.reversed().steps()) == p);
}

TEST_CASE("string pulling round-trips through the crossing word") {
  Rng rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    CyclicWord w = random_peg_class(rng, 14);
    CAPTURE(w.str());
    PegWord p = PegWord::from_word(w);
    CHECK(p.to_word() == w);
    CHECK(PegWord::from_steps(p.steps()) == p);
  }
}

TEST_CASE("peg words are equivariant under the mapping class group") {
  Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    CyclicWord w = random_peg_class(rng, 10);
    MCGMatrix m = pegboard::testing::random_unimodular(rng, 4);
    CAPTURE(w.str());
    CyclicWord image = CyclicWord::from(Automorphism::realizing(m).apply(w.letters()));
    CHECK(PegWord::from_word(image) == PegWord::from_word(w).transformed(m));
  }
}

TEST_CASE("involution negates pegs and keeps wrap sides") {
  PegWord p = PegWord::from_steps({{{1, 0}, Wrap::Left}, {{1, 1}, Wrap::Right}, {{0, -1}, Wrap::Right}});
  PegWord q = p.transformed(MCGMatrix(-1, 0, 0, -1));
  // Unoriented: the class is only defined up to sign.
  CHECK((q.homology() == p.homology() || q.homology() == -p.homology()));
  CHECK(q.to_word() == CyclicWord::from(involution_image(p.to_word().letters())));
  CHECK(q.transformed(MCGMatrix(-1, 0, 0, -1)) == p);
}
