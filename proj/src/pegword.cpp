#include "pegboard/pegword.hpp"

#include "pegboard/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pegboard {

std::strong_ordering operator<=>(const PegStep& a, const PegStep& b) {
  if (auto c = a.displacement <=> b.displacement; c != 0) return c;
  if (auto c = a.wrap <=> b.wrap; c != 0) return c;
  return a.extra_turns <=> b.extra_turns;
}

namespace {

bool is_grazing(const PegStep& in, const PegStep& out) {
  return in.extra_turns == 0 && det(in.displacement, out.displacement) == 0 &&
         dot(in.displacement, out.displacement) > 0;
}

std::vector<PegStep> drop_redundant_grazing(std::vector<PegStep> s) {
  bool changed = true;
  while (changed && s.size() > 1) {
    changed = false;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PegStep& prev = s[(i + n - 1) % n];
      const PegStep& next = s[(i + 1) % n];
      if (!is_grazing(s[i], next)) continue;
      if (prev.wrap != s[i].wrap || next.wrap != s[i].wrap) continue;
      s[(i + 1) % n].displacement += s[i].displacement;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  return s;
}

std::vector<PegStep> least_step_rotation(const std::vector<PegStep>& s) {
  std::vector<PegStep> best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::vector<PegStep> cand(s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
    cand.insert(cand.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<PegStep> reverse_steps(const std::vector<PegStep>& s) {
  const std::size_t n = s.size();
  std::vector<PegStep> r;
  r.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t j = n - 1 - k;
    r.push_back({-s[(j + 1) % n].displacement, flip(s[j].wrap), s[j].extra_turns});
  }
  return r;
}

std::int64_t l1(LatticeVector v) { return std::abs(v.dx) + std::abs(v.dy); }

// Unit normal (L1) pointing from the peg to the path when travelling along u.
Point normal_position(LatticeVector u, Wrap w) {
  LatticeVector n = w == Wrap::Left ? LatticeVector{u.dy, -u.dx} : LatticeVector{-u.dy, u.dx};
  Rational len(l1(n));
  return {Rational(n.dx) / len, Rational(n.dy) / len};
}

double angle_of(const Point& p) { return std::atan2(p.y.to_double(), p.x.to_double()); }

double sweep(double from, double to, Wrap w) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double d = w == Wrap::Left ? to - from : from - to;
  d = std::fmod(d, two_pi);
  if (d < 0) d += two_pi;
  if (d > two_pi - 1e-9) d = 0;
  return d;
}

}  // namespace

PegWord PegWord::puncture_loop(std::int64_t turns) {
  if (turns < 1) throw Error(ErrorCode::DegenerateInput, "puncture loop needs at least one turn");
  PegWord p;
  p.steps_ = {{{0, 0}, Wrap::Left, turns - 1}};
  return p;
}

PegWord PegWord::from_steps(std::vector<PegStep> steps) {
  if (steps.empty()) throw Error(ErrorCode::DegenerateInput, "peg word without pegs");
  if (steps.size() == 1 && steps[0].displacement.is_zero()) {
    return puncture_loop(steps[0].extra_turns + 1);
  }
  for (const auto& s : steps) {
    if (s.displacement.is_zero()) throw Error(ErrorCode::DegenerateInput, "repeated peg in peg word");
    if (s.extra_turns < 0) throw Error(ErrorCode::DegenerateInput, "negative turn count");
  }
  const std::size_t n = steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PegStep& prev = steps[(i + n - 1) % n];
    LatticeVector d = steps[i].displacement;
    if (prev.wrap != steps[i].wrap && gcd_abs(d.dx, d.dy) != 1) {
      throw Error(ErrorCode::DegenerateInput, "side change across a lattice point");
    }
  }
  steps = drop_redundant_grazing(std::move(steps));
  auto a = least_step_rotation(steps);
  auto b = least_step_rotation(reverse_steps(steps));
  PegWord p;
  p.steps_ = std::min(a, b);
  return p;
}

LatticeVector PegWord::homology() const {
  LatticeVector h;
  for (const auto& s : steps_) h += s.displacement;
  return h;
}

std::vector<LatticeVector> PegWord::pegs(LatticeVector origin) const {
  std::vector<LatticeVector> out;
  LatticeVector q = origin;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) q += steps_[i].displacement;
    out.push_back(q);
  }
  return out;
}

PegWord PegWord::transformed(const MCGMatrix& m) const {
  const bool flips = m.determinant() < 0;
  std::vector<PegStep> s;
  s.reserve(steps_.size());
  for (const auto& st : steps_) {
    s.push_back({m * st.displacement, flips ? flip(st.wrap) : st.wrap, st.extra_turns});
  }
  return from_steps(std::move(s));
}

PegWord PegWord::reversed() const {
  PegWord p;
  p.steps_ = reverse_steps(steps_);
  return p;
}

std::vector<double> PegWord::turning() const {
  std::vector<double> out;
  const std::size_t n = steps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PegStep& in = steps_[i];
    if (in.displacement.is_zero()) {
      out.push_back(2 * std::numbers::pi * double(in.extra_turns + 1));
      continue;
    }
    const PegStep& out_step = steps_[(i + 1) % n];
    double a = angle_of(normal_position(in.displacement, in.wrap));
    double b = angle_of(normal_position(out_step.displacement, in.wrap));
    out.push_back(sweep(a, b, in.wrap) + 2 * std::numbers::pi * double(in.extra_turns));
  }
  return out;
}

Polyline PegWord::realize(const Rational& r, LatticeVector origin) const {
  return realize(std::vector<Rational>(steps_.size(), r), origin);
}

Polyline PegWord::realize(const std::vector<Rational>& radii, LatticeVector origin) const {
  static const Point axes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Polyline poly;
  poly.period = homology();
  const std::size_t n = steps_.size();
  auto peg_list = pegs(origin);
  if (n == 1 && steps_[0].displacement.is_zero()) {
    Point q = to_point(peg_list[0]);
    const Rational& r = radii[0];
    const std::int64_t m = 4 * (steps_[0].extra_turns + 1);
    for (std::int64_t k = 0; k < m; ++k) poly.vertices.push_back(q + axes[k % 4] * (r * (Rational(1) + Rational(k, m))));
    return poly;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PegStep& in = steps_[i];
    const PegStep& out = steps_[(i + 1) % n];
    Point q = to_point(peg_list[i]);
    const Rational& r = radii[i];
    Point a = normal_position(in.displacement, in.wrap);
    Point b = normal_position(out.displacement, in.wrap);
    double from = angle_of(a);
    double total = sweep(from, angle_of(b), in.wrap) + 2 * std::numbers::pi * double(in.extra_turns);
    poly.vertices.push_back(q + a * r);
    // Extra laps spiral outwards so they stay disjoint; the radius doubles
    // over the sweep, in steps of 1/8 per quarter turn.
    const std::int64_t quarters = 4 * (in.extra_turns + 1);
    auto radius_at = [&](double s) {
      if (in.extra_turns == 0) return r;
      auto k = static_cast<std::int64_t>(std::floor(s / (std::numbers::pi / 2)));
      return r * (Rational(1) + Rational(std::min(k + 1, quarters), quarters));
    };
    // Axis points strictly inside the sweep, in order.
    std::vector<std::pair<double, Point>> inner;
    for (std::int64_t t = 0; t <= in.extra_turns; ++t) {
      for (const auto& ax : axes) {
        double s = sweep(from, angle_of(ax), in.wrap) + 2 * std::numbers::pi * double(t);
        if (s > 1e-9 && s < total - 1e-9) inner.emplace_back(s, ax);
      }
    }
    std::sort(inner.begin(), inner.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [s, ax] : inner) poly.vertices.push_back(q + ax * radius_at(s));
    if (!(a == b) || in.extra_turns > 0) poly.vertices.push_back(q + b * radius_at(total));
  }
  return poly;
}

CyclicWord PegWord::to_word() const {
  std::int64_t d = 1;
  for (const auto& s : steps_) d = std::max(d, l1(s.displacement));
  return CyclicWord::from(crossing_word(realize(Rational(1, 16 * d))));
}

std::string PegWord::str() const {
  std::ostringstream os;
  for (const auto& s : steps_) {
    os << '(' << s.displacement.dx << ',' << s.displacement.dy << ','
       << (s.wrap == Wrap::Left ? 'L' : 'R');
    if (s.extra_turns > 0) os << s.extra_turns;
    os << ')';
  }
  return os.str();
}

Word segment_word(const Point& a, const Point& b) {
  if (segment_hits_lattice(a, b)) {
    throw Error(ErrorCode::DegenerateInput, "polyline passes through a peg");
  }
  struct Event {
    Rational t;
    Letter letter;
  };
  std::vector<Event> ev;
  auto collect = [&](const Rational& from, const Rational& to, Letter up, Letter down) {
    BigInt f0 = from.floor();
    BigInt f1 = to.floor();
    Rational span = to - from;
    if (f1 > f0) {
      for (BigInt k = f0 + 1; k <= f1; ++k) ev.push_back({(Rational(k, 1) - from) / span, up});
    } else if (f1 < f0) {
      for (BigInt k = f0; k > f1; --k) ev.push_back({(Rational(k, 1) - from) / span, down});
    }
  };
  collect(a.x, b.x, Letter::x, Letter::X);
  collect(a.y, b.y, Letter::y, Letter::Y);
  std::stable_sort(ev.begin(), ev.end(), [](const Event& u, const Event& v) { return u.t < v.t; });
  for (std::size_t k = 0; k + 1 < ev.size(); ++k) {
    if (ev[k].t == ev[k + 1].t) throw Error(ErrorCode::DegenerateInput, "polyline passes through a peg");
  }
  Word out;
  for (const auto& e : ev) out.push_back(e.letter);
  return out;
}

Word crossing_word(const Polyline& p) {
  Word out;
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    Word w = segment_word(p.segment_start(i), p.segment_end(i));
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

Word slope_word(LatticeVector d) {
  if (d.is_zero()) return {};
  Polyline p;
  p.period = d;
  // A point on the line det(d, P) = 1/2, which avoids every lattice point.
  Rational c(1, 2);
  if (d.dy != 0) {
    p.vertices.push_back({-c / Rational(d.dy), Rational(0)});
  } else {
    p.vertices.push_back({Rational(0), c / Rational(d.dx)});
  }
  return crossing_word(p);
}

bool is_line_class(const CyclicWord& w) {
  if (w.empty()) return false;
  auto [root, k] = primitive_root(w.letters());
  (void)k;
  LatticeVector h = abelianize(root);
  if (h.is_zero() || gcd_abs(h.dx, h.dy) != 1) return false;
  return CyclicWord::from(root) == CyclicWord::from(slope_word(h));
}

}  // namespace pegboard
