// Explicit polyline realizations and the lift-pair oracle for intersection
// numbers.
#include "pegboard/error.hpp"
#include "pegboard/pairing.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <tuple>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

namespace pegboard {

namespace {

struct Box {
  Rational x0, y0, x1, y1;
};

Box bounds(const Polyline& p, LatticeVector shift = {0, 0}) {
  Point s = to_point(shift);
  Box b{p.vertices[0].x + s.x, p.vertices[0].y + s.y, p.vertices[0].x + s.x, p.vertices[0].y + s.y};
  auto take = [&](const Point& q) {
    b.x0 = std::min(b.x0, q.x + s.x);
    b.y0 = std::min(b.y0, q.y + s.y);
    b.x1 = std::max(b.x1, q.x + s.x);
    b.y1 = std::max(b.y1, q.y + s.y);
  };
  for (const auto& v : p.vertices) take(v);
  take(p.vertices[0] + to_point(p.period));
  return b;
}

// prefix[i] = letters crossed from the first vertex to the start of segment i.
std::vector<Word> segment_prefixes(const Polyline& p, LatticeVector shift) {
  std::vector<Word> out;
  Point s = to_point(shift);
  Word acc;
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    out.push_back(acc);
    Word w = segment_word(p.segment_start(i) + s, p.segment_end(i) + s);
    acc.insert(acc.end(), w.begin(), w.end());
  }
  out.push_back(acc);
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word power(const Word& w, std::int64_t k) {
  Word base = k >= 0 ? w : inverse(w);
  Word out;
  for (std::int64_t i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

bool same_double_coset(const Word& k1, const Word& k2, const Word& wa, const Word& wb) {
  std::size_t ca = std::max<std::size_t>(1, cyclic_reduce(wa).size());
  std::size_t cb = std::max<std::size_t>(1, cyclic_reduce(wb).size());
  auto bound = static_cast<std::int64_t>((k1.size() + k2.size() + wa.size() + wb.size()) / std::min(ca, cb) + 2);
  for (std::int64_t i = -bound; i <= bound; ++i) {
    Word left = free_reduce(concat(power(wa, i), k1));
    for (std::int64_t j = -bound; j <= bound; ++j) {
      if (free_reduce(concat(left, power(wb, j))) == k2) return true;
      if (wb.empty()) break;
    }
    if (wa.empty()) break;
  }
  return false;
}

std::int64_t max_displacement(const Multicurve& m) {
  std::int64_t d = 1;
  for (const auto& c : m.components()) {
    if (c.is_line()) continue;
    for (const auto& s : c.as_pegs().pegs.steps()) {
      d = std::max(d, std::abs(s.displacement.dx) + std::abs(s.displacement.dy));
    }
  }
  return d;
}

std::vector<SceneCrossing> enumerate(const std::vector<Polyline>& la, const std::vector<Polyline>& lb) {
  std::vector<SceneCrossing> out;
  for (std::size_t ia = 0; ia < la.size(); ++ia) {
    const Polyline& A = la[ia];
    Box ba = bounds(A);
    auto pa = segment_prefixes(A, {0, 0});
    for (std::size_t ib = 0; ib < lb.size(); ++ib) {
      const Polyline& B = lb[ib];
      Box bb = bounds(B);
      auto lo_x = static_cast<std::int64_t>((ba.x0 - bb.x1).floor()) - 1;
      auto hi_x = static_cast<std::int64_t>((ba.x1 - bb.x0).floor()) + 1;
      auto lo_y = static_cast<std::int64_t>((ba.y0 - bb.y1).floor()) - 1;
      auto hi_y = static_cast<std::int64_t>((ba.y1 - bb.y0).floor()) + 1;
      for (std::int64_t sx = lo_x; sx <= hi_x; ++sx) {
        for (std::int64_t sy = lo_y; sy <= hi_y; ++sy) {
          LatticeVector shift{sx, sy};
          Point sp = to_point(shift);
          std::vector<Word> pb;
          for (std::size_t i = 0; i < A.segment_count(); ++i) {
            Point a0 = A.segment_start(i), a1 = A.segment_end(i);
            for (std::size_t j = 0; j < B.segment_count(); ++j) {
              Point b0 = B.segment_start(j) + sp, b1 = B.segment_end(j) + sp;
              bool degenerate = false;
              auto hit = intersect_segments(a0, a1, b0, b1, degenerate);
              if (degenerate) throw Error(ErrorCode::DegenerateInput, "overlapping segments in scene");
              if (!hit) continue;
              if (hit->s.sign() == 0 || hit->t.sign() == 0) {
                throw Error(ErrorCode::DegenerateInput, "crossing at a vertex");
              }
              if (pb.empty()) pb = segment_prefixes(B, shift);
              Point at = a0 + (a1 - a0) * hit->s;
              // Paths from each lift's first vertex; the stabilizers of the
              // two lifts are then generated by their period words.
              Word path_a = concat(pa[i], segment_word(a0, at));
              Word path_b = concat(pb[j], segment_word(b0, at));
              Word loop = free_reduce(concat(path_a, inverse(path_b)));
              out.push_back({ia, ib, i, j, shift, at, std::move(loop)});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

Scene realize_scene(const Multicurve& a, const Multicurve& b, std::vector<Polyline> lifts_a,
                    std::vector<Polyline> lifts_b) {
  Scene s;
  s.a = a;
  s.b = b;
  s.lifts_a = std::move(lifts_a);
  s.lifts_b = std::move(lifts_b);
  s.crossings = enumerate(s.lifts_a, s.lifts_b);
  return s;
}

Scene realize_scene(const Multicurve& a, const Multicurve& b) {
  const std::int64_t d = std::max(max_displacement(a), max_displacement(b));
  // Every wrap corner at the puncture gets its own radius; corners that turn
  // further sit closer to the peg, so a corner nested inside a wider one
  // never sends both legs across it.
  struct Corner {
    double turn;
    std::size_t side, comp, visit;
  };
  std::vector<Corner> corners;
  const Multicurve* sides[2] = {&a, &b};
  for (std::size_t sd = 0; sd < 2; ++sd) {
    for (std::size_t c = 0; c < sides[sd]->size(); ++c) {
      const Component& comp = sides[sd]->components()[c];
      if (comp.is_line()) continue;
      auto t = comp.as_pegs().pegs.turning();
      for (std::size_t v = 0; v < t.size(); ++v) corners.push_back({t[v], sd, c, v});
    }
  }
  std::stable_sort(corners.begin(), corners.end(), [](const Corner& x, const Corner& y) { return x.turn < y.turn; });
  const auto m = static_cast<std::int64_t>(corners.size());
  for (std::int64_t attempt = 0; attempt < 6; ++attempt) {
    Rational eps = Rational(1, 16 * d) * Rational(17 + attempt, 17 + 2 * attempt);
    // Stay well inside the gap between any line and the nearest peg.
    for (const Multicurve* side : sides) {
      for (const auto& comp : side->components()) {
        if (!comp.is_line()) continue;
        const auto& l = comp.as_line();
        LatticeVector dir = l.slope.direction();
        Rational gap = std::min(l.offset, Rational(1) - l.offset) / Rational(4 * (std::abs(dir.dx) + std::abs(dir.dy)));
        eps = std::min(eps, gap);
      }
    }
    Rational step = Rational(1, 4096 * (m + 1) * d * d);
    std::vector<std::vector<Rational>> radii[2];
    for (std::size_t sd = 0; sd < 2; ++sd) {
      for (const auto& comp : sides[sd]->components()) {
        radii[sd].emplace_back(comp.is_line() ? 0 : comp.as_pegs().pegs.size(), eps);
      }
    }
    for (std::int64_t k = 0; k < m; ++k) {
      const Corner& c = corners[static_cast<std::size_t>(k)];
      radii[c.side][c.comp][c.visit] = eps * (Rational(1) - step * Rational(k + attempt % 2));
    }
    std::vector<Polyline> la, lb;
    for (std::size_t c = 0; c < a.size(); ++c) la.push_back(a.components()[c].realize(radii[0][c]));
    for (std::size_t c = 0; c < b.size(); ++c) lb.push_back(b.components()[c].realize(radii[1][c]));
    try {
      return realize_scene(a, b, std::move(la), std::move(lb));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput) throw;
    }
  }
  throw Error(ErrorCode::DegenerateInput, "no generic realization found");
}

std::vector<std::vector<std::size_t>> lift_pair_classes(const Scene& s, std::size_t comp_a, std::size_t comp_b) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.crossings.size(); ++k) {
    if (s.crossings[k].comp_a == comp_a && s.crossings[k].comp_b == comp_b) idx.push_back(k);
  }
  const Word wa = free_reduce(crossing_word(s.lifts_a[comp_a]));
  const Word wb = free_reduce(crossing_word(s.lifts_b[comp_b]));
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k : idx) {
    bool placed = false;
    for (auto& cls : classes) {
      if (same_double_coset(s.crossings[cls.front()].loop, s.crossings[k].loop, wa, wb)) {
        cls.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({k});
  }
  return classes;
}

std::optional<Bigon> certify_bigon_free(const Scene& s) {
  for (std::size_t ia = 0; ia < s.lifts_a.size(); ++ia) {
    for (std::size_t ib = 0; ib < s.lifts_b.size(); ++ib) {
      for (const auto& cls : lift_pair_classes(s, ia, ib)) {
        if (cls.size() >= 2) return Bigon{cls[0], cls[1]};
      }
    }
  }
  return std::nullopt;
}

std::int64_t oracle_intersection(const Scene& s) {
  std::int64_t total = 0;
  for (std::size_t ia = 0; ia < s.lifts_a.size(); ++ia) {
    for (std::size_t ib = 0; ib < s.lifts_b.size(); ++ib) {
      std::int64_t odd = 0;
      for (const auto& cls : lift_pair_classes(s, ia, ib)) odd += static_cast<std::int64_t>(cls.size() % 2);
      total += odd * s.a.components()[ia].multiplicity() * s.b.components()[ib].multiplicity();
    }
  }
  return total;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_100;

struct Mat {
  BigInt a, b, c, d;
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

// The unit cell as the ideal quadrilateral -1, 0, 1, inf of the modular
// torus: bottom, right, top and left sides in that order, corners (0,0) at -1.
const Mat kA{1, 1, 1, 2};
const Mat kAinv{2, -1, -1, 1};
const Mat kB{1, -1, -1, 2};
const Mat kBinv{2, 1, 1, 1};

const Mat& generator(Letter l) {
  switch (l) {
    case Letter::x: return kA;
    case Letter::X: return kAinv;
    case Letter::y: return kBinv;
    case Letter::Y: return kB;
  }
  return kA;
}

// Where the axis of the strand, started at letter i, meets its arc. Values
// grow upwards along the x arc and rightwards along the y arc.
Real arc_position(const Word& w, std::size_t i) {
  Mat m{1, 0, 0, 1};
  for (std::size_t k = 0; k < w.size(); ++k) m = m * generator(w[(i + k) % w.size()]);
  Letter first = w[i];
  if (first == Letter::X) m = kA * m * kAinv;
  if (first == Letter::y) m = kB * m * kBinv;
  BigInt tr = m.a + m.d;
  Real root = sqrt(Real(tr * tr - 4));
  Real p = (Real(m.a - m.d) + root) / Real(2 * m.c);
  Real q = (Real(m.a - m.d) - root) / Real(2 * m.c);
  Real mid = (p + q) / 2;
  Real rad = abs(p - q) / 2;
  Real centre = is_horizontal(first) ? Real(0.5) : Real(-0.5);
  Real r = Real(0.5);
  return (mid + centre) / 2 + (rad * rad - r * r) / (2 * (centre - mid));
}

struct Passage {
  Real at;
  Rational tie;  // parallel lines share a geodesic; keep their straight order
  std::size_t side, comp, pos;
  auto operator<=>(const Passage& o) const {
    if (at != o.at) return at < o.at ? std::strong_ordering::less : std::strong_ordering::greater;
    if (tie != o.tie) return tie < o.tie ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::tie(side, comp, pos) <=> std::tie(o.side, o.comp, o.pos);
  }
  bool operator==(const Passage&) const = default;
};

}  // namespace

Scene cell_chord_scene(const Multicurve& a, const Multicurve& b) {
  const Multicurve* sides[2] = {&a, &b};
  std::vector<Word> words[2];
  std::vector<Passage> vertical, horizontal;
  for (std::size_t sd = 0; sd < 2; ++sd) {
    for (std::size_t c = 0; c < sides[sd]->size(); ++c) {
      const Component& comp = sides[sd]->components()[c];
      const Word& w = words[sd].emplace_back(comp.word().letters());
      Rational up, right;
      if (comp.is_line()) {
        const LineComponent& l = comp.as_line();
        up = l.slope.direction().dx > 0 ? l.offset : -l.offset;
        right = l.slope.direction().dy < 0 ? l.offset : -l.offset;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_horizontal(w[i])) {
          vertical.push_back({arc_position(w, i), up, sd, c, i});
        } else {
          horizontal.push_back({arc_position(w, i), right, sd, c, i});
        }
      }
    }
  }
  std::sort(vertical.begin(), vertical.end());
  std::sort(horizontal.begin(), horizontal.end());

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> where;
  for (const auto* arc : {&vertical, &horizontal}) {
    const auto n = static_cast<std::int64_t>(arc->size());
    for (std::int64_t k = 0; k < n; ++k) {
      const Passage& p = (*arc)[static_cast<std::size_t>(k)];
      where[{p.side, p.comp, p.pos}] = Rational(k + 1, n + 1);
    }
  }

  std::vector<Polyline> lifts[2];
  for (std::size_t sd = 0; sd < 2; ++sd) {
    for (std::size_t c = 0; c < words[sd].size(); ++c) {
      const Word& w = words[sd][c];
      Polyline p;
      p.period = abelianize(w);
      std::int64_t cx = 0, cy = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Rational& h = where[{sd, c, i}];
        switch (w[i]) {
          case Letter::x: p.vertices.push_back({Rational(cx + 1), Rational(cy) + h}); ++cx; break;
          case Letter::X: p.vertices.push_back({Rational(cx), Rational(cy) + h}); --cx; break;
          case Letter::y: p.vertices.push_back({Rational(cx) + h, Rational(cy + 1)}); ++cy; break;
          case Letter::Y: p.vertices.push_back({Rational(cx) + h, Rational(cy)}); --cy; break;
        }
      }
      lifts[sd].push_back(std::move(p));
    }
  }
  return realize_scene(a, b, std::move(lifts[0]), std::move(lifts[1]));
}

Scene minimal_position(const Multicurve& a, const Multicurve& b) {
  intersection_number(a, b);  // hypothesis check
  Scene s = cell_chord_scene(a, b);
  if (certify_bigon_free(s)) throw Error(ErrorCode::Internal, "cell-chord realization is not minimal");
  return s;
}

}  // namespace pegboard
