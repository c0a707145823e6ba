#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "generators.hpp"

#include "pegboard/error.hpp"
#include "pegboard/loopcalc.hpp"
#include "pegboard/pairing.hpp"
#include "pegboard/pinch.hpp"

using namespace pegboard;
using pegboard::testing::code_of;

namespace {

Component from(const char* w) { return Component::from_word(CyclicWord::parse(w)); }

Multicurve mc(std::vector<Component> cs) { return Multicurve(std::move(cs)); }

Multicurve slope(std::int64_t p, std::int64_t q) { return mc({Component::line({p, q}, Rational(1, 2))}); }

const char* kRaised = "xyyyxYYY";

}  // namespace

TEST_CASE("delete_nullhomotopic") {
  Multicurve base = mc({beta(2)});
  Component loop = Component::pegs(PegWord::puncture_loop(1));
  CHECK(delete_nullhomotopic(base.merged(mc({loop}))) == base);
  CHECK(delete_nullhomotopic(base) == base);
  // A figure-eight and its conjugate image.
  Component eight = from("xyXYXyxY");
  CHECK(delete_nullhomotopic(mc({eight, involute(eight)})).empty());
}

TEST_CASE("resolve_crossing on a spiral") {
  Component spiral = Component::pegs(PegWord::from_steps({{{1, 0}, Wrap::Left, 1}}));
  auto xs = self_crossings(spiral);
  REQUIRE(xs.size() == 1);
  Resolution r = resolve_crossing(spiral, 0);
  // The extra lap comes off as a loop around the peg.
  CHECK(r.discarded == 1);
  REQUIRE(r.curves.size() == 1);
  CHECK(r.curves.components()[0].is_line());
  CHECK(r.curves.components()[0].as_line().slope.direction() == LatticeVector{1, 0});
  CHECK(code_of([&] { resolve_crossing(spiral, 3); }) == ErrorCode::NotACrossing);
}

TEST_CASE("resolve_crossing on a symmetric figure-eight") {
  // beta(2) is a figure-eight whose one crossing sits at the fixed point (1/2, 0).
  Component eight = beta(2);
  auto xs = self_crossings(eight);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0].at == Point{Rational(1, 2), Rational(0)});
  Resolution r = resolve_crossing(eight, 0, 0);
  CHECK(r.discarded == 0);
  REQUIRE(r.curves.size() == 2);
  const Component& u = r.curves.components()[0];
  const Component& v = r.curves.components()[1];
  CHECK(u.is_line());
  CHECK(v.is_line());
  CHECK(u.as_line().slope.direction() == LatticeVector{1, 0});
  CHECK(involute(u) == v);

  // Smoothing a conjugate pair of crossings can lower the wrapping.
  Component raised = from(kRaised);
  auto rx = self_crossings(raised);
  bool lowered = false;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    for (std::size_t j = 0; j < rx.size(); ++j) {
      if (i == j) continue;
      if (code_of([&] { resolve_crossing(raised, i, j); }) == ErrorCode::AsymmetricPair) continue;
      Resolution rr = resolve_crossing(raised, i, j);
      lowered = lowered || (rr.curves.size() == 1 && rr.curves.components()[0] == beta(2));
    }
  }
  CHECK(lowered);
  CHECK(code_of([&] { resolve_crossing(raised, 0, 1); }) == ErrorCode::AsymmetricPair);
}

TEST_CASE("resolve_crossing keeps the class") {
  pegboard::testing::Rng rng(99);
  int tried = 0;
  for (int i = 0; i < 200 && tried < 40; ++i) {
    CyclicWord w = CyclicWord::from(pegboard::testing::random_word(rng, 10));
    if (w.empty() || is_line_class(w) || primitive_root(w.letters()).second != 1) continue;
    if (w == CyclicWord::parse("xyXY")) continue;
    Component c = Component::from_word(w);
    auto xs = self_crossings(c);
    if (xs.empty()) continue;
    ++tried;
    CAPTURE(c.str());
    Resolution r = resolve_crossing(c, 0);
    // Smoothing splits the class; puncture loops and disks carry nothing.
    // Components are unoriented, so each piece counts with either sign.
    const auto& ps = r.curves.components();
    bool splits = false;
    for (unsigned signs = 0; signs < (1u << ps.size()); ++signs) {
      LatticeVector total{0, 0};
      for (std::size_t k = 0; k < ps.size(); ++k) total += homology_class(ps[k]) * ((signs >> k & 1u) ? -1 : 1);
      splits = splits || total == homology_class(c) || total == homology_class(c) * -1;
    }
    CHECK(splits);
    CHECK(r.curves.size() + static_cast<std::size_t>(r.discarded) == 2);
  }
  CHECK(tried >= 20);
}

TEST_CASE("extremal corners and peg_pass") {
  Component raised = from(kRaised);
  REQUIRE(is_self_conjugate(raised));
  REQUIRE(f_value(raised, 2) == 1);
  auto corners = extremal_corners(raised);
  REQUIRE_FALSE(corners.empty());
  bool reached = false;
  for (const ExtremalCorner& e : corners) {
    Multicurve m;
    try {
      m = peg_pass(raised, e.pos);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::AsymmetricPair);
      continue;
    }
    REQUIRE(m.size() == 1);
    CHECK(is_self_conjugate(m.components()[0]));
    reached = reached || m.components()[0] == beta(2);
  }
  CHECK(reached);

  Word w = raised.word().oriented();
  std::size_t low = 0;
  while (low < w.size() && std::any_of(corners.begin(), corners.end(), [&](const ExtremalCorner& e) { return e.pos == low; })) ++low;
  CHECK(code_of([&] { peg_pass(raised, low); }) == ErrorCode::NotExtremal);
  CHECK(code_of([&] { peg_pass(from("xxyxY"), 0); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("corner types swap under the involution") {
  std::mt19937_64 gen(31);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    Component c = random_symmetric_component(gen, 2, 16);
    Component ic = involute(c);
    Word w = c.word().oriented();
    Word v = ic.word().oriented();
    REQUIRE(w == v);
    // The involution reverses the oriented word, so the corner at pos lands
    // at n-2-pos+r read backwards.
    const std::size_t n = w.size();
    std::size_t r = 0;
    while (r < n) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = w[(j + r) % n] == w[n - 1 - j];
      if (ok) break;
      ++r;
    }
    REQUIRE(r < n);
    for (const ExtremalCorner& e : extremal_corners(c)) {
      std::size_t j = (2 * n - 2 - e.pos + r) % n;
      CornerType a = corner_type(c, e.pos);
      CornerType b = corner_type(c, j);
      CHECK(((a == CornerType::a && b == CornerType::d) || (a == CornerType::d && b == CornerType::a) ||
             (a == CornerType::b && b == CornerType::c) || (a == CornerType::c && b == CornerType::b)));
      ++checked;
    }
  }
  CHECK(checked > 0);
  CHECK(code_of([] { corner_type(from("xxyxY"), 0); }) == ErrorCode::NotWrapped);
  CHECK(code_of([] { corner_type(Component::line({1, 0}, Rational(1, 2)), 0); }) == ErrorCode::NotWrapped);
}

TEST_CASE("sign_sequence") {
  CHECK(sign_sequence(lift(beta(2), Symmetric{})) == std::vector<int>{1, -1});
  CHECK(sign_sequence(lift(beta(4), Symmetric{})) == std::vector<int>{1, 1, -1, -1});
  CHECK(code_of([] { sign_sequence(lift(from(kRaised), Symmetric{})); }) == ErrorCode::NotFlattened);
}

TEST_CASE("pinch_simplify fixtures") {
  std::vector<Multicurve> alphas{slope(0, 1), slope(1, 1)};
  PinchTrace fixed = pinch_simplify(mc({beta(2)}), 2, alphas);
  CHECK(fixed.steps.size() == 1);
  CHECK_FALSE(fixed.stuck);

  PinchTrace t = pinch_simplify(mc({from(kRaised)}), 2, alphas);
  CHECK_FALSE(t.stuck);
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps.back().snapshot == mc({beta(2)}));
  CHECK(t.audit_monotone());
  CHECK(t.steps[0].n == 3);
  CHECK(t.steps[1].n == 1);

  // Multiplicity rides along.
  PinchTrace twice = pinch_simplify(mc({from(kRaised).with_multiplicity(2)}), 2, alphas);
  CHECK(twice.steps.back().snapshot == mc({beta(2).with_multiplicity(2)}));

  CHECK(code_of([&] { pinch_simplify(mc({from("xxyxY")}), 2, alphas); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([&] { pinch_simplify(mc({beta(2)}), 3, alphas); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("pinch terminates on random symmetric curves") {
  auto alphas = default_audit_family();
  CHECK(alphas.size() == 22);
  for (std::int64_t two_k : {2, 4, 6}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(700 + two_k));
    for (int i = 0; i < 25; ++i) {
      Component c = random_symmetric_component(rng, two_k, 16);
      CAPTURE(c.str());
      PinchTrace t = pinch_simplify(mc({c}), two_k, alphas);
      CHECK_FALSE(t.stuck);
      CHECK(t.steps.back().snapshot == mc({beta(two_k)}));
      CHECK(t.audit_monotone());
      for (std::size_t s = 0; s < t.steps.size(); ++s) {
        CHECK(t.steps[s].n % 2 == 1);
        CHECK(is_self_conjugate(t.steps[s].snapshot.components()[0]));
        if (s > 0) {
          CHECK(t.steps[s].measure < t.steps[s - 1].measure);
          CHECK((t.steps[s - 1].n - t.steps[s].n) % 2 == 0);
        }
      }
      // The standard curve meets every audit curve at most as often.
      const auto& first = t.steps.front().audit;
      const auto& last = t.steps.back().audit;
      for (std::size_t a = 0; a < first.size(); ++a) {
        if (first[a] && last[a]) CHECK(*last[a] <= *first[a]);
      }
    }
  }
}

TEST_CASE("verify_rank_inequality") {
  Multicurve e2({Component::line({1, 0}, Rational(1, 2), 2), beta(2)}, {"s0", "s1"});
  Multicurve m1({Component::line({1, 3}, Rational(1, 2))});
  RankReport same = verify_rank_inequality(m1, e2, MCGMatrix::identity(), 2);
  REQUIRE_FALSE(same.rows.empty());
  for (const RankComparison& r : same.rows) {
    REQUIRE(r.evaluated());
    CHECK(*r.original == *r.pinched);
  }

  std::mt19937_64 rng(4242);
  Component g = random_symmetric_component(rng, 2, 16);
  Multicurve m2({Component::line({1, 0}, Rational(1, 2), 2), g}, {"s0", "s1"});
  for (std::int64_t p = -7; p <= 7; ++p) {
    for (std::int64_t q = 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      RankReport rep = verify_rank_inequality(Multicurve({Component::line({p, q}, Rational(1, 2))}), m2,
                                              MCGMatrix::identity(), 2);
      CHECK(rep.all_pass());
    }
  }

  Multicurve missing({Component::line({1, 0}, Rational(1, 2), 2)});
  CHECK(code_of([&] { verify_rank_inequality(m1, missing, MCGMatrix::identity(), 2); }) == ErrorCode::MissingSector);
}
