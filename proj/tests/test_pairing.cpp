#include "doctest.h"
#include "generators.hpp"

#include "pegboard/error.hpp"
#include "pegboard/pairing.hpp"

#include <numeric>

using namespace pegboard;
using pegboard::testing::code_of;
using pegboard::testing::Rng;

namespace {

Component beta2() { return Component::from_word(CyclicWord::parse("xyxY")); }
Component horizontal(Rational off = Rational(1, 2), std::int64_t m = 1) { return Component::line({1, 0}, off, m); }
Component vertical(Rational off = Rational(1, 2)) { return Component::line({0, 1}, off); }
Multicurve mc(std::initializer_list<Component> c) { return Multicurve(std::vector<Component>(c)); }

std::vector<LatticeVector> slopes(std::int64_t bound) {
  std::vector<LatticeVector> out;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    for (std::int64_t q = 0; q <= bound; ++q) {
      if (gcd_abs(p, q) != 1) continue;
      if (q == 0 && p != 1) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

Component random_peg_component(Rng& rng, std::size_t max_pegs) {
  for (;;) {
    CyclicWord w = CyclicWord::from(pegboard::testing::random_word(rng, 10));
    if (w.empty() || is_line_class(w)) continue;
    auto [root, k] = primitive_root(w.letters());
    if (k != 1 || CyclicWord::from(root) == CyclicWord::parse("xyXY")) continue;
    if (abelianize(root).is_zero()) continue;
    Component c = Component::from_word(w);
    if (c.as_pegs().pegs.size() > max_pegs) continue;
    return c;
  }
}

Component random_line(Rng& rng, std::int64_t bound) {
  auto s = slopes(bound);
  LatticeVector d = s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, 7)(rng);
  return Component::line(d, Rational(std::uniform_int_distribution<std::int64_t>(1, den - 1)(rng), den));
}

}  // namespace

TEST_CASE("determinant law for lines") {
  auto s = slopes(5);
  for (auto a : s) {
    for (auto b : s) {
      if (a == b) continue;
      CAPTURE(a);
      CAPTURE(b);
      std::int64_t expect = std::abs(det(a, b));
      CHECK(intersection_number(Component::line(a, Rational(1, 3)), Component::line(b, Rational(1, 5))) == expect);
      // The word engine on its own agrees with the determinant.
      CHECK(word_intersection(CyclicWord::from(slope_word(a)), CyclicWord::from(slope_word(b))) == expect);
    }
  }
  CHECK(intersection_number(Component::line({2, 1}, Rational(1, 2)), Component::line({1, 2}, Rational(1, 2))) == 3);
}

TEST_CASE("minimal position examples") {
  Scene s = minimal_position(mc({horizontal()}), mc({vertical()}));
  CHECK(s.crossings.size() == 1);
  CHECK_FALSE(certify_bigon_free(s).has_value());

  Scene b = minimal_position(mc({beta2()}), mc({vertical()}));
  CHECK(b.crossings.size() == 2);
  CHECK(intersection_number(mc({beta2()}), mc({vertical()})) == 2);
  CHECK(intersection_number(mc({beta2()}), mc({Component::line({1, 1}, Rational(1, 2))})) == 2);
  CHECK(intersection_number(mc({beta2()}), mc({horizontal()})) == 0);

  CHECK(code_of([] { minimal_position(mc({horizontal()}), mc({horizontal()})); }) == ErrorCode::ParallelComponents);
  // Equal slopes with distinct offsets are disjoint.
  CHECK(intersection_number(mc({horizontal(Rational(1, 4))}), mc({horizontal(Rational(3, 4))})) == 0);
  for (LatticeVector d : {LatticeVector{2, 3}, LatticeVector{3, -1}, LatticeVector{1, -4}}) {
    Scene p = minimal_position(mc({Component::line(d, Rational(1, 5))}),
                               mc({Component::line(d, Rational(2, 3)), Component::line({1, 0}, Rational(1, 2))}));
    CHECK(static_cast<std::int64_t>(p.crossings.size()) == std::abs(d.dy));
  }
}

TEST_CASE("bigon certificate on a wiggled fixture") {
  using R = Rational;
  Polyline line{{{R(0), R(1, 2)}}, {1, 0}};
  Polyline wiggle{{{R(1, 2), R(1, 10)},
                   {R(1, 2), R(3, 5)},
                   {R(7, 10), R(3, 5)},
                   {R(7, 10), R(2, 5)},
                   {R(4, 5), R(2, 5)},
                   {R(4, 5), R(21, 20)}},
                  {0, 1}};
  Multicurve a = mc({horizontal()});
  Multicurve b = mc({vertical()});
  Scene s = realize_scene(a, b, {line}, {wiggle});
  CHECK(s.crossings.size() == 3);
  auto bigon = certify_bigon_free(s);
  REQUIRE(bigon.has_value());
  CHECK(bigon->first != bigon->second);
  CHECK(oracle_intersection(s) == 1);
}

TEST_CASE("oracle agrees with the word engine on random scenes") {
  Rng rng(424242);
  int scenes = 0;
  while (scenes < 120) {
    Component a = random_peg_component(rng, 6);
    Component b = (scenes % 3 == 0) ? random_peg_component(rng, 6) : random_line(rng, 7);
    if (a.word() == b.word()) continue;
    CAPTURE(a.str());
    CAPTURE(b.str());
    Multicurve ma = mc({a});
    Multicurve mb = mc({b});
    std::int64_t fast = intersection_number(ma, mb);
    Scene s = realize_scene(ma, mb);
    CHECK(oracle_intersection(s) == fast);
    Scene m = cell_chord_scene(ma, mb);
    CHECK(oracle_intersection(m) == fast);
    CHECK_FALSE(certify_bigon_free(m).has_value());
    CHECK(static_cast<std::int64_t>(m.crossings.size()) == fast);
    ++scenes;
  }
}

TEST_CASE("intersection number properties") {
  Rng rng(8080);
  for (int trial = 0; trial < 120; ++trial) {
    Component a = random_peg_component(rng, 8);
    Component b = (trial % 2) ? random_peg_component(rng, 8) : random_line(rng, 6);
    if (a.word() == b.word()) continue;
    CAPTURE(a.str());
    CAPTURE(b.str());
    std::int64_t i = intersection_number(a, b);
    CHECK(i == intersection_number(b, a));
    CHECK(i >= std::abs(det(a.primitive_homology(), b.primitive_homology())));
    MCGMatrix m = pegboard::testing::random_unimodular(rng, 4);
    CHECK(intersection_number(a.transformed(m), b.transformed(m)) == i);
    CHECK(intersection_number(a.with_multiplicity(2), b.with_multiplicity(3)) == 6 * i);
  }
}

TEST_CASE("hf_rank") {
  for (std::int64_t p = 2; p <= 12; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd_abs(p, q) != 1) continue;
      // Send the horizontal line to slope (q, p).
      auto [u, v] = [&] {
        for (std::int64_t b = -p; b <= p; ++b) {
          for (std::int64_t d = -p; d <= p; ++d) {
            if (q * d - b * p == 1) return std::pair{b, d};
          }
        }
        return std::pair<std::int64_t, std::int64_t>{0, 0};
      }();
      MCGMatrix psi(q, u, p, v);
      CHECK(hf_rank(mc({horizontal()}), psi, mc({horizontal()})) == p);
    }
  }
  Multicurve e2 = mc({horizontal(Rational(1, 2), 2), beta2()});
  CHECK(hf_rank(e2, MCGMatrix::identity(), mc({vertical()})) == 4);
  CHECK(code_of([] { hf_rank(mc({beta2()}), MCGMatrix::identity(), mc({beta2()})); }) ==
        ErrorCode::ParallelComponents);
  CHECK(code_of([] { hf_rank(mc({horizontal()}), MCGMatrix::identity(), mc({horizontal(Rational(1, 4))})); }) ==
        ErrorCode::ParallelComponents);
}

TEST_CASE("rank_by_spinc") {
  auto total = [](const RankTable& t) {
    std::int64_t s = 0;
    for (const auto& [k, v] : t) s += v;
    return s;
  };
  Multicurve h({horizontal()}, {"s0"});
  Multicurve line({Component::line({3, 5}, Rational(1, 2))}, {"t"});
  RankTable t = rank_by_spinc(h, MCGMatrix::identity(), line);
  CHECK(total(t) == 5);
  CHECK(t.size() == 5);
  for (const auto& [k, v] : t) CHECK(v == 1);

  Multicurve e2({horizontal(Rational(1, 2), 2), beta2()}, {"s0", "s1"});
  Multicurve l13({Component::line({1, 3}, Rational(1, 2))}, {"t"});
  CHECK(total(rank_by_spinc(e2, MCGMatrix::identity(), l13)) == hf_rank(e2, MCGMatrix::identity(), l13));
  CHECK(rank_by_spinc(e2, MCGMatrix::identity(), Multicurve{}).empty());
}
