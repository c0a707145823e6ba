#include "pegboard/pinch.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pegboard/error.hpp"
#include "pegboard/loopcalc.hpp"
#include "pegboard/pairing.hpp"

namespace pegboard {

namespace {

Rational frac(const Rational& r) { return r - Rational(r.floor(), 1); }

Point reduce(const Point& p) { return {frac(p.x), frac(p.y)}; }

Rational realization_radius(const PegWord& p) {
  std::int64_t d = 1;
  for (const auto& s : p.steps()) d = std::max(d, std::abs(s.displacement.dx) + std::abs(s.displacement.dy));
  return Rational(1, 16 * d);
}

// Visits of the puncture get distinct radii so parallel strands separate.
// A visit and its conjugate share a radius, which keeps the realization
// symmetric when the word is.
Polyline realize_generic(const PegWord& pw) {
  const auto& st = pw.steps();
  const std::size_t n = st.size();
  const Rational r = realization_radius(pw);
  std::vector<std::size_t> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  for (std::size_t rot = 0; rot < n && n > 1; ++rot) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const PegStep& a = st[i];
      const PegStep& b = st[(rot + n - i) % n];
      ok = b.displacement == st[(i + 1) % n].displacement && st[(rot + n - i + 1) % n].displacement == a.displacement &&
           b.wrap != a.wrap && b.extra_turns == a.extra_turns;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < n; ++i) orbit[i] = std::min(i, (rot + n - i) % n);
    break;
  }
  std::vector<Rational> radii(n);
  for (std::size_t i = 0; i < n; ++i) radii[i] = r * (Rational(1) + Rational(static_cast<std::int64_t>(orbit[i]), static_cast<std::int64_t>(2 * n)));
  return pw.realize(radii);
}

std::int64_t floor_int(const Rational& r) { return static_cast<std::int64_t>(r.floor()); }
std::int64_t ceil_int(const Rational& r) { return -floor_int(-r); }

}  // namespace

std::vector<SelfCrossing> self_crossings(const Component& c) {
  if (c.is_line()) return {};
  const PegWord& pw = c.as_pegs().pegs;
  Polyline p = realize_generic(pw);
  const std::size_t n = p.segment_count();
  std::vector<SelfCrossing> out;
  for (std::size_t i = 0; i < n; ++i) {
    Point a0 = p.segment_start(i), a1 = p.segment_end(i);
    for (std::size_t j = i; j < n; ++j) {
      Point b0 = p.segment_start(j), b1 = p.segment_end(j);
      std::int64_t x_lo = floor_int(std::min(a0.x, a1.x) - std::max(b0.x, b1.x));
      std::int64_t x_hi = ceil_int(std::max(a0.x, a1.x) - std::min(b0.x, b1.x));
      std::int64_t y_lo = floor_int(std::min(a0.y, a1.y) - std::max(b0.y, b1.y));
      std::int64_t y_hi = ceil_int(std::max(a0.y, a1.y) - std::min(b0.y, b1.y));
      for (std::int64_t dx = x_lo; dx <= x_hi; ++dx) {
        for (std::int64_t dy = y_lo; dy <= y_hi; ++dy) {
          LatticeVector t{dx, dy};
          if (i == j && (dx < 0 || (dx == 0 && dy <= 0))) continue;
          Point shift = to_point(t);
          bool degenerate = false;
          auto hit = intersect_segments(a0, a1, b0 + shift, b1 + shift, degenerate);
          if (degenerate) throw Error(ErrorCode::DegenerateInput, "realization overlaps itself");
          if (!hit) continue;
          if (hit->s == 0 || hit->t == 0) throw Error(ErrorCode::DegenerateInput, "self-crossing at a vertex");
          Point at = a0 + (a1 - a0) * hit->s;
          out.push_back({i, j, t, reduce(at), hit->s, hit->t});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SelfCrossing& u, const SelfCrossing& v) {
    return std::tie(u.seg_a, u.s, u.seg_b, u.t) < std::tie(v.seg_a, v.s, v.seg_b, v.t);
  });
  return out;
}

namespace {

struct Cut {
  std::size_t seg;
  Rational s;
  std::size_t crossing;  // index into the resolved list
  bool first;            // the base-lift side of the crossing
};

Point point_at(const Polyline& p, std::size_t seg, const Rational& s) {
  return p.segment_start(seg) + (p.segment_end(seg) - p.segment_start(seg)) * s;
}

}  // namespace

Resolution resolve_crossing(const Component& c, std::size_t id, std::optional<std::size_t> partner) {
  auto crossings = self_crossings(c);
  if (id >= crossings.size()) throw Error(ErrorCode::NotACrossing, "no self-crossing " + std::to_string(id));
  std::vector<SelfCrossing> chosen{crossings[id]};
  if (partner) {
    if (*partner >= crossings.size()) throw Error(ErrorCode::NotACrossing, "no self-crossing " + std::to_string(*partner));
    Point mirror = reduce(Point{-crossings[id].at.x, -crossings[id].at.y});
    if (!(crossings[*partner].at == mirror)) {
      throw Error(ErrorCode::AsymmetricPair, "crossing " + std::to_string(*partner) + " is not the conjugate of " +
                                                 std::to_string(id));
    }
    if (*partner != id) chosen.push_back(crossings[*partner]);
  }

  const PegWord& pw = c.as_pegs().pegs;
  Polyline p = realize_generic(pw);
  const std::size_t n = p.segment_count();
  const Point h = to_point(p.period);

  std::vector<Cut> cuts;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    cuts.push_back({chosen[k].seg_a, chosen[k].s, k, true});
    cuts.push_back({chosen[k].seg_b, chosen[k].t, k, false});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& u, const Cut& v) { return std::tie(u.seg, u.s) < std::tie(v.seg, v.s); });
  const std::size_t m = cuts.size();

  // Arc k runs from cut k to cut k+1 along the base lift.
  struct Arc {
    std::vector<Point> points;
    Point end_offset;
  };
  std::vector<Arc> arcs(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Cut& from = cuts[k];
    const Cut& to = cuts[(k + 1) % m];
    Arc& arc = arcs[k];
    arc.points.push_back(point_at(p, from.seg, from.s));
    bool wraps = k + 1 == m;
    std::size_t last = wraps ? to.seg + n : to.seg;
    for (std::size_t v = from.seg + 1; v <= last; ++v) {
      Point q = p.vertices[v % n];
      if (v >= n) q = q + h;
      arc.points.push_back(q);
    }
    arc.end_offset = wraps ? h : Point{0, 0};
  }
  std::vector<std::size_t> partner_cut(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      if (l != k && cuts[l].crossing == cuts[k].crossing) partner_cut[k] = l;
    }
  }

  Resolution out;
  std::vector<bool> done(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (done[start]) continue;
    Polyline piece;
    Point frame{0, 0};
    std::size_t k = start;
    do {
      done[k] = true;
      for (const Point& q : arcs[k].points) piece.vertices.push_back(q + frame);
      frame = frame + arcs[k].end_offset;
      // Arrive at cut k+1 and leave along the other strand of its crossing.
      std::size_t arrive = (k + 1) % m;
      Point shift = to_point(chosen[cuts[arrive].crossing].shift);
      frame = cuts[arrive].first ? frame + shift : frame - shift;
      k = partner_cut[arrive];
    } while (k != start);
    piece.period = {floor_int(frame.x), floor_int(frame.y)};
    TautResult t = tautify(piece);
    if (std::holds_alternative<NullHomotopic>(t)) {
      ++out.discarded;
    } else {
      const Component& comp = std::get<Component>(t);
      out.curves.add(comp.with_multiplicity(comp.multiplicity() * c.multiplicity()));
    }
  }
  return out;
}

Multicurve delete_nullhomotopic(const Multicurve& mc) {
  Multicurve out;
  for (std::size_t i = 0; i < mc.size(); ++i) {
    const Component& c = mc.components()[i];
    if (homology_class(c).is_zero()) continue;
    out.add(c, mc.labels()[i]);
  }
  return out;
}

namespace {

// Levels before each letter of an oriented word of class (*, 0).
std::vector<std::int64_t> levels_before(const Word& w) {
  std::vector<std::int64_t> lev;
  std::int64_t g = 0;
  for (Letter l : w) {
    lev.push_back(g);
    if (l == Letter::y) ++g;
    if (l == Letter::Y) --g;
  }
  return lev;
}

// Rotation r with w[(j + r) % n] == w[n - 1 - j] for all j, if any.
std::optional<std::size_t> reversal_rotation(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = w[(j + r) % n] == w[n - 1 - j];
    if (ok) return r;
  }
  return std::nullopt;
}

Word oriented_word(const Component& c) {
  if (c.is_line()) throw Error(ErrorCode::NotWrapped, "a line wraps no pegs");
  return c.word().oriented();
}

}  // namespace

std::vector<ExtremalCorner> extremal_corners(const Component& c) {
  Word w = oriented_word(c);
  if (abelianize(w).dy != 0) throw Error(ErrorCode::NotSymmetric, "class is not horizontal");
  auto lev = levels_before(w);
  const std::size_t n = w.size();
  std::optional<std::int64_t> top;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_horizontal(w[i])) top = top ? std::max(*top, lev[i]) : lev[i];
  }
  std::vector<ExtremalCorner> out;
  if (!top) return out;
  for (std::size_t i = 0; i < n; ++i) {
    Letter a = w[i], b = w[(i + 1) % n];
    if (a == Letter::y && is_horizontal(b) && lev[i] + 1 == *top) out.push_back({i, true});
    if (is_horizontal(a) && b == Letter::Y && lev[i] == *top) out.push_back({i, false});
  }
  return out;
}

Multicurve peg_pass(const Component& c, std::size_t pos) {
  Word w = oriented_word(c);
  auto r = reversal_rotation(w);
  if (!r) throw Error(ErrorCode::NotSymmetric, "component is not self-conjugate");
  auto corners = extremal_corners(c);
  if (std::none_of(corners.begin(), corners.end(), [&](const ExtremalCorner& e) { return e.pos == pos; })) {
    throw Error(ErrorCode::NotExtremal, "no top-row corner at position " + std::to_string(pos));
  }
  const std::size_t n = w.size();
  const std::size_t j = (2 * n - 2 - pos + *r) % n;
  std::vector<std::size_t> touched{pos, (pos + 1) % n, j, (j + 1) % n};
  std::sort(touched.begin(), touched.end());
  if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) {
    throw Error(ErrorCode::AsymmetricPair, "corner at position " + std::to_string(pos) + " meets its own conjugate");
  }
  std::swap(w[pos], w[(pos + 1) % n]);
  std::swap(w[j], w[(j + 1) % n]);
  CyclicWord moved = CyclicWord::from(w);
  Multicurve out;
  if (moved.empty()) return out;
  Component next = Component::from_word(moved);
  out.add(next.with_multiplicity(next.multiplicity() * c.multiplicity()));
  return out;
}

char to_char(CornerType t) { return "abcd"[static_cast<int>(t)]; }

CornerType corner_type(const Component& c, std::size_t pos) {
  Word w = oriented_word(c);
  if (pos >= w.size()) throw Error(ErrorCode::NotWrapped, "position outside the word");
  Letter a = w[pos], b = w[(pos + 1) % w.size()];
  if (is_horizontal(a) == is_horizontal(b)) throw Error(ErrorCode::NotWrapped, "no corner at this position");
  // Normalize to vertical-then-horizontal by reading the corner backwards.
  if (is_horizontal(a)) {
    Letter v = inverse(b), hz = inverse(a);
    a = v;
    b = hz;
  }
  if (a == Letter::y) return b == Letter::x ? CornerType::a : CornerType::b;
  return b == Letter::x ? CornerType::c : CornerType::d;
}

std::vector<int> sign_sequence(const LiftedComponent& l) {
  std::vector<int> s;
  for (const HalfInt& h : l.crossings) {
    if (h.twice() != 1 && h.twice() != -1) throw Error(ErrorCode::NotFlattened, "crossing outside the flat band");
    s.push_back(h.twice() > 0 ? 1 : -1);
  }
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 1 && s[(i + n - 1) % n] == -1) {
      std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), s.end());
      break;
    }
  }
  return s;
}

Measure pinch_measure(const Component& c) {
  LiftedComponent l = lift(c, Symmetric{});
  Measure m;
  m.n = peg_span(l);
  for (const HalfInt& h : l.crossings) m.height_total += std::abs(h.twice());
  m.length = static_cast<std::int64_t>(c.word().size());
  return m;
}

bool PinchTrace::audit_monotone() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    for (std::size_t a = 0; a < steps[i].audit.size(); ++a) {
      const auto& before = steps[i - 1].audit[a];
      const auto& after = steps[i].audit[a];
      if (before && after && *after > *before) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::optional<std::int64_t>> audit_row(const std::vector<Multicurve>& alphas, const Multicurve& g) {
  std::vector<std::optional<std::int64_t>> row;
  for (const Multicurve& a : alphas) {
    try {
      row.push_back(intersection_number(a, g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParallelComponents) throw;
      row.push_back(std::nullopt);
    }
  }
  return row;
}

bool dominated(const std::vector<std::optional<std::int64_t>>& after,
               const std::vector<std::optional<std::int64_t>>& before) {
  for (std::size_t i = 0; i < after.size(); ++i) {
    if (after[i] && before[i] && *after[i] > *before[i]) return false;
  }
  return true;
}

}  // namespace

PinchTrace pinch_simplify(const Multicurve& c, std::int64_t two_k, const std::vector<Multicurve>& alphas) {
  if (two_k < 2 || two_k % 2 != 0) throw Error(ErrorCode::InvalidOrder, "pinch order must be even and positive");
  Multicurve prepared = delete_nullhomotopic(trivialize_local_systems(c));
  if (prepared.size() != 1 || prepared.components()[0].is_line()) {
    throw Error(ErrorCode::NotSymmetric, "expected a single peg component");
  }
  const Component& input = prepared.components()[0];
  const std::int64_t mult = input.multiplicity();
  Component g = input.with_multiplicity(1);
  if (homology_class(g) != LatticeVector{two_k, 0}) throw Error(ErrorCode::NotSymmetric, "class is not (2k, 0)");
  if (!is_self_conjugate(g)) throw Error(ErrorCode::NotSymmetric, "component is not self-conjugate");
  if (f_value(g, two_k) != two_k / 2) throw Error(ErrorCode::NotSymmetric, "f-value is not k");

  const Component target = beta(two_k);
  auto snapshot = [&](const Component& x) { return Multicurve({x.with_multiplicity(mult)}); };

  PinchTrace trace;
  auto record = [&](const Component& x, std::string move) {
    Multicurve snap = snapshot(x);
    Measure m = pinch_measure(x);
    trace.steps.push_back({snap, std::move(move), m.n, m, audit_row(alphas, snap)});
  };
  record(g, "start");

  while (!(g == target)) {
    const PinchStep& last = trace.steps.back();
    std::optional<Component> next;
    std::string move;
    for (const ExtremalCorner& e : extremal_corners(g)) {
      Multicurve moved;
      try {
        moved = peg_pass(g, e.pos);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::AsymmetricPair) continue;
        throw;
      }
      if (moved.size() != 1 || moved.components()[0].is_line()) continue;
      const Component& cand = moved.components()[0];
      if (!(pinch_measure(cand) < last.measure)) continue;
      if (!dominated(audit_row(alphas, snapshot(cand)), last.audit)) continue;
      next = cand;
      move = "peg pass at " + std::to_string(e.pos) + " (corner " + to_char(corner_type(g, e.pos)) + ")";
      break;
    }
    if (!next) {
      trace.stuck = true;
      trace.diagnostic = "no paired pass lowers the measure from " + g.str();
      return trace;
    }
    g = *next;
    record(g, move);
  }
  return trace;
}

Component random_symmetric_component(std::mt19937_64& rng, std::int64_t two_k, std::size_t max_len) {
  static const Letter letters[4] = {Letter::x, Letter::X, Letter::y, Letter::Y};
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  auto palindrome = [&](std::size_t n) {
    Word half;
    for (std::size_t i = 0; i < n / 2; ++i) half.push_back(letters[pick(rng)]);
    Word w = half;
    if (n % 2) w.push_back(letters[pick(rng)]);
    w.insert(w.end(), half.rbegin(), half.rend());
    return w;
  };
  // A product of two palindromes is conjugate to its reverse, which is the
  // involution on horizontal classes.
  for (;;) {
    Word w = palindrome(len(rng));
    Word b = palindrome(len(rng));
    w.insert(w.end(), b.begin(), b.end());
    CyclicWord cw = CyclicWord::from(w);
    if (cw.empty() || cw.homology() != LatticeVector{two_k, 0}) continue;
    if (primitive_root(cw.letters()).second != 1 || is_line_class(cw)) continue;
    Component c = Component::from_word(cw);
    if (!is_self_conjugate(c) || f_value(c, two_k) != two_k / 2) continue;
    return c;
  }
}

std::vector<Multicurve> default_audit_family() {
  std::vector<LatticeVector> slopes;
  for (std::int64_t size = 1; slopes.size() < 20; ++size) {
    for (std::int64_t p = -size; p <= size && slopes.size() < 20; ++p) {
      for (std::int64_t q = 0; q <= size && slopes.size() < 20; ++q) {
        if (std::max(std::abs(p), q) != size || std::gcd(p, q) != 1) continue;
        if (q == 0 && p != 1) continue;
        slopes.push_back({p, q});
      }
    }
  }
  std::vector<Multicurve> out;
  for (LatticeVector s : slopes) out.push_back(Multicurve({Component::line(s, Rational(1, 2))}));
  out.push_back(Multicurve({Component::line({1, 0}, Rational(1, 2), 2)}));
  out.push_back(Multicurve({beta(2)}));
  return out;
}

bool RankReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const RankComparison& r) { return r.pass(); });
}

namespace {

std::optional<std::int64_t> try_rank(const Multicurve& m1, const MCGMatrix& psi, const Multicurve& m2, std::string& note) {
  try {
    return hf_rank(m1, psi, m2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParallelComponents) throw;
    if (!note.empty()) note += "; ";
    note += e.what();
    return std::nullopt;
  }
}

}  // namespace

RankReport verify_rank_inequality(const Multicurve& m1, const Multicurve& m2, const MCGMatrix& psi, std::int64_t two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw Error(ErrorCode::InvalidOrder, "pinch order must be even and positive");
  const std::int64_t k = two_k / 2;
  std::optional<std::size_t> top, zero;
  for (std::size_t i = 0; i < m2.size(); ++i) {
    const Component& c = m2.components()[i];
    if (!is_self_conjugate(c)) continue;
    std::int64_t f = f_value(c, two_k);
    if (f == k && !top && !c.is_line()) top = i;
    if (f == 0 && !zero) zero = i;
  }
  if (!top) throw Error(ErrorCode::MissingSector, "no self-conjugate component with f = " + std::to_string(k));

  const Component& gk = m2.components()[*top];
  Component bk = beta(two_k).with_multiplicity(gk.multiplicity());
  std::optional<Component> line0;
  if (zero) {
    const Component& g0 = m2.components()[*zero];
    line0 = Component::line({1, 0}, Rational(1, 2), homology_class(g0).dx);
  }
  Multicurve pinched;
  for (std::size_t i = 0; i < m2.size(); ++i) {
    const Component& c = m2.components()[i];
    if (i == *top) {
      pinched.add(bk, m2.labels()[i]);
    } else if (zero && i == *zero) {
      pinched.add(*line0, m2.labels()[i]);
    } else {
      pinched.add(c, m2.labels()[i]);
    }
  }

  std::map<std::string, Multicurve> sectors;
  for (std::size_t i = 0; i < m1.size(); ++i) sectors[m1.labels()[i]].add(m1.components()[i], m1.labels()[i]);

  RankReport report;
  for (const auto& [name, sector] : sectors) {
    auto row = [&](std::string check, const Multicurve& orig, const Multicurve& pin) {
      RankComparison r{name, std::move(check), std::nullopt, std::nullopt, ""};
      r.original = try_rank(sector, psi, orig, r.note);
      r.pinched = try_rank(sector, psi, pin, r.note);
      report.rows.push_back(std::move(r));
    };
    row("f=" + std::to_string(k), Multicurve({gk}), Multicurve({bk}));
    if (zero) row("f=0", Multicurve({m2.components()[*zero]}), Multicurve({*line0}));
    row("total", m2, pinched);
  }
  return report;
}

}  // namespace pegboard
