#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "doctest.h"
#include "generators.hpp"

#include "pegboard/error.hpp"
#include "pegboard/loopcalc.hpp"
#include "pegboard/pairing.hpp"

using namespace pegboard;
using pegboard::testing::code_of;

namespace {

TypeDGraph rho12_cycle(int n) {
  TypeDGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), Idempotent::I0);
  for (int i = 0; i < n; ++i) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n), AlgebraLabel::R12);
  return g;
}

// Disjoint union, with the second graph's names prefixed.
TypeDGraph disjoint(const TypeDGraph& a, const TypeDGraph& b) {
  TypeDGraph g = a;
  std::size_t base = g.vertices().size();
  for (const auto& v : b.vertices()) g.add_vertex("u" + v.name, v.idem);
  for (const auto& e : b.edges()) g.add_edge(base + e.from, base + e.to, e.label);
  return g;
}

// Same graph with vertices renamed and both lists shuffled.
TypeDGraph relabeled(const TypeDGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(g.vertices().size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> where(perm.size());
  TypeDGraph out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[perm[i]] = out.add_vertex("g" + std::to_string(perm.size() - i), g.vertices()[perm[i]].idem);
  }
  std::vector<TypeDEdge> edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& e : edges) out.add_edge(where[e.from], where[e.to], e.label);
  return out;
}

CyclicWord beta_word(int k) {
  std::string s(static_cast<std::size_t>(k), 'x');
  return CyclicWord::parse(s + "y" + s + "Y");
}

}  // namespace

TEST_CASE("label table and arc dictionary") {
  CHECK(kArcDictionaryVersion == 1);
  CHECK(std::size(kArcDictionary) == 6);
  // Arcs start on the arc of the source idempotent and end on the target's.
  for (const ArcEntry& e : kArcDictionary) {
    auto on_vertical = [](CellSide s) { return s == CellSide::L || s == CellSide::R; };
    LabelIdempotents id = idempotents_of(e.label);
    CHECK(on_vertical(e.from) == (id.source == Idempotent::I0));
    CHECK(on_vertical(e.to) == (id.target == Idempotent::I0));
  }
  CHECK(parse_label("rho123") == AlgebraLabel::R123);
  CHECK_FALSE(parse_label("rho13").has_value());
}

TEST_CASE("validate_typed") {
  CHECK(validate_typed(rho12_cycle(2)).empty());
  auto fig3 = en_typed(4).back();
  CHECK(fig3.vertices().size() == 6);
  CHECK(validate_typed(fig3).empty());

  TypeDGraph bad;
  bad.add_vertex("p", Idempotent::I1);
  bad.add_vertex("q", Idempotent::I1);
  bad.add_edge("p", "q", AlgebraLabel::R1);
  bad.add_edge("q", "p", AlgebraLabel::R23);
  auto errs = validate_typed(bad);
  REQUIRE(errs.size() == 1);
  CHECK(errs.front().find("leaves p") != std::string::npos);

  TypeDGraph fork = rho12_cycle(3);
  fork.add_vertex("w", Idempotent::I0);
  fork.add_edge("v0", "w", AlgebraLabel::R12);
  auto valence = validate_typed(fork);
  CHECK(valence.size() == 2);
  CHECK(code_of([&] { decompose_loops(fork); }) == ErrorCode::NotLoopType);
}

TEST_CASE("decompose_loops") {
  auto loops = decompose_loops(rho12_cycle(4));
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].steps.size() == 4);
  for (const LoopStep& s : loops[0].steps) {
    CHECK(s.forward);
    CHECK(rho12_cycle(4).edges()[s.edge].label == AlgebraLabel::R12);
  }

  TypeDGraph both = disjoint(rho12_cycle(4), en_typed(4).back());
  auto two = decompose_loops(both);
  CHECK(two.size() == 2);
  std::size_t steps = 0;
  for (const Loop& l : two) steps += l.steps.size();
  CHECK(steps == both.edges().size());

  CHECK(decompose_loops(TypeDGraph{}).empty());

  // Figure 3 has arrows in both directions around its single cycle.
  auto fig = decompose_loops(en_typed(4).back());
  REQUIRE(fig.size() == 1);
  CHECK(std::count_if(fig[0].steps.begin(), fig[0].steps.end(), [](const LoopStep& s) { return !s.forward; }) >= 1);
}

TEST_CASE("en_typed") {
  auto four = en_typed(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].edges().size() == 4);
  CHECK(four[1].edges().size() == 6);
  auto two = en_typed(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].edges().size() == 2);
  CHECK(two[1].vertices().size() == 4);
  CHECK(en_typed(1).size() == 1);
  CHECK(en_typed(1)[0].edges().size() == 1);
  CHECK(code_of([] { en_typed(0); }) == ErrorCode::InvalidOrder);
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (const TypeDGraph& g : en_typed(n)) CHECK(validate_typed(g).empty());
  }
}

TEST_CASE("typed_to_curves examples") {
  Multicurve e2 = typed_to_curves(rho12_cycle(2));
  REQUIRE(e2.size() == 1);
  REQUIRE(e2.components()[0].is_line());
  CHECK(e2.components()[0].as_line().slope.direction() == LatticeVector{1, 0});
  CHECK(e2.components()[0].multiplicity() == 2);

  Multicurve e4 = typed_to_curves(en_typed(4).back());
  REQUIRE(e4.size() == 1);
  const Component& b4 = e4.components()[0];
  CHECK_FALSE(b4.is_line());
  CHECK(homology_class(b4) == LatticeVector{4, 0});
  CHECK(is_self_conjugate(b4));

  // One generator alone is the solid torus: it meets the slope (q, p) |p| times.
  TypeDGraph solid;
  solid.add_vertex("s", Idempotent::I0);
  Multicurve st = typed_to_curves(solid);
  REQUIRE(st.size() == 1);
  CHECK(st.components()[0].is_line());
  CHECK(st.components()[0].multiplicity() == 1);
  for (std::int64_t p = 1; p <= 7; ++p) {
    for (std::int64_t q = -7; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Multicurve slope({Component::line({q, p}, Rational(1, 3))});
      CHECK(intersection_number(st, slope) == p);
    }
  }

  TypeDGraph bad;
  bad.add_vertex("p", Idempotent::I1);
  bad.add_vertex("q", Idempotent::I0);
  bad.add_edge("p", "q", AlgebraLabel::R1);
  bad.add_edge("q", "p", AlgebraLabel::R1);
  CHECK(code_of([&] { typed_to_curves(bad); }) == ErrorCode::NotLoopType);
}

TEST_CASE("typed_to_curves on en_typed") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto graphs = en_typed(n);
    // Each graph carries total class (n, 0), multiplicity included.
    for (const TypeDGraph& g : graphs) {
      LatticeVector total{0, 0};
      Multicurve mc = typed_to_curves(g);
      for (const Component& c : mc.components()) total += homology_class(c);
      CHECK(total == LatticeVector{n, 0});
    }
    Multicurve line = typed_to_curves(graphs[0]);
    REQUIRE(line.size() == 1);
    CHECK(line.components()[0].is_line());
    CHECK(line.components()[0].multiplicity() == n);
    if (n % 2 == 0) {
      Multicurve b = typed_to_curves(graphs[1]);
      REQUIRE(b.size() == 1);
      const Component& peg = b.components()[0];
      CHECK_FALSE(peg.is_line());
      CHECK(is_self_conjugate(peg));
      CHECK(f_value(peg, n) == n / 2);
    }
  }
}

TEST_CASE("beta agrees with the closed-form word") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    Component b = beta(2 * k);
    CHECK(b == Component::from_word(beta_word(k)));
    CHECK(homology_class(b) == LatticeVector{2 * k, 0});
    CHECK(f_value(b, 2 * k) == k);
    CHECK(involute(b) == b);
    std::int64_t span = peg_span(lift(b, Symmetric{}));
    CHECK(span % 2 == 1);
    if (k == 1) CHECK(span == 1);
  }
  CHECK(code_of([] { beta(3); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { beta(0); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("beta cache is safe to share") {
  std::vector<Component> seen(8, Component::from_word(CyclicWord::parse("x")));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    pool.emplace_back([&seen, t] { seen[t] = beta(8); });
  }
  for (auto& th : pool) th.join();
  for (const Component& c : seen) CHECK(c == Component::from_word(beta_word(4)));
}

TEST_CASE("conversion ignores vertex names and order") {
  std::mt19937_64 rng(5150);
  for (std::int64_t n = 2; n <= 8; n += 2) {
    TypeDGraph g = disjoint(en_typed(n)[0], en_typed(n)[1]);
    Multicurve want = typed_to_curves(g);
    for (int trial = 0; trial < 10; ++trial) CHECK(typed_to_curves(relabeled(g, rng)) == want);
  }
}
