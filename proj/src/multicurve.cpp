#include "pegboard/multicurve.hpp"

#include "pegboard/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pegboard {

namespace {

Rational unit_offset(const Rational& c) {
  Rational f = c.frac();
  if (f.sign() == 0) throw Error(ErrorCode::DegenerateInput, "line through a peg");
  return f;
}

LatticeVector orient_positive(LatticeVector v) {
  if (v.dx < 0 || (v.dx == 0 && v.dy < 0)) return -v;
  return v;
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

Component::Component(LineComponent l) : v_(std::move(l)) {
  auto& line = std::get<LineComponent>(v_);
  if (line.multiplicity < 1) throw Error(ErrorCode::DegenerateInput, "multiplicity must be positive");
  line.offset = unit_offset(line.offset);
}

Component::Component(PegComponent p) : v_(std::move(p)) {
  auto& pc = std::get<PegComponent>(v_);
  if (pc.multiplicity < 1) throw Error(ErrorCode::DegenerateInput, "multiplicity must be positive");
  pc.pegs = PegWord::from_steps(pc.pegs.steps());
  pc.word = pc.pegs.to_word();
  auto [root, k] = primitive_root(pc.word.letters());
  if (k != 1) {
    // A peg word that is itself a power: fold it into the multiplicity.
    pc.word = CyclicWord::from(root);
    pc.pegs = PegWord::from_word(pc.word);
    pc.multiplicity *= k;
  }
}

Component Component::line(LatticeVector direction, Rational offset, std::int64_t mult) {
  Slope s = Slope::from(direction);
  if (s.direction() != direction) offset = -offset;
  return Component(LineComponent{s, offset, mult});
}

Component Component::pegs(const PegWord& p, std::int64_t mult) {
  return Component(PegComponent{p, CyclicWord{}, mult});
}

Component Component::from_word(const CyclicWord& w, Rational line_offset) {
  if (w.empty()) throw Error(ErrorCode::NotLoopType, "trivial class");
  auto [root, k] = primitive_root(w.letters());
  CyclicWord r = CyclicWord::from(root);
  if (is_line_class(r)) {
    return line(orient_positive(abelianize(root)), line_offset, k);
  }
  return pegs(PegWord::from_word(r), k);
}

std::int64_t Component::multiplicity() const {
  return std::visit([](const auto& c) { return c.multiplicity; }, v_);
}

Component Component::with_multiplicity(std::int64_t m) const {
  return std::visit(
      [m](auto c) {
        c.multiplicity = m;
        return Component(c);
      },
      v_);
}

CyclicWord Component::word() const {
  return std::visit(Overloaded{[](const LineComponent& l) { return CyclicWord::from(slope_word(l.slope.direction())); },
                               [](const PegComponent& p) { return p.word; }},
                    v_);
}

LatticeVector Component::primitive_homology() const {
  return std::visit(Overloaded{[](const LineComponent& l) { return orient_positive(l.slope.direction()); },
                               [](const PegComponent& p) { return orient_positive(p.pegs.homology()); }},
                    v_);
}

Component Component::transformed(const MCGMatrix& m) const {
  return std::visit(
      Overloaded{[&](const LineComponent& l) {
                   LatticeVector d = m * l.slope.direction();
                   Rational c = m.determinant() < 0 ? -l.offset : l.offset;
                   return line(d, c, l.multiplicity);
                 },
                 [&](const PegComponent& p) { return pegs(p.pegs.transformed(m), p.multiplicity); }},
      v_);
}

Polyline Component::realize(const std::vector<Rational>& radii) const {
  if (is_line()) return realize(Rational(1, 2));
  return as_pegs().pegs.realize(radii);
}

Polyline Component::realize(const Rational& radius) const {
  return std::visit(Overloaded{[](const LineComponent& l) {
                                 LatticeVector d = l.slope.direction();
                                 Polyline p;
                                 p.period = d;
                                 if (d.dy != 0) {
                                   p.vertices.push_back({-l.offset / Rational(d.dy), Rational(0)});
                                 } else {
                                   p.vertices.push_back({Rational(0), l.offset / Rational(d.dx)});
                                 }
                                 return p;
                               },
                               [&](const PegComponent& p) { return p.pegs.realize(radius); }},
                    v_);
}

std::string Component::str() const {
  std::ostringstream os;
  std::visit(Overloaded{[&](const LineComponent& l) {
                          os << "line " << l.slope.direction().dx << ' ' << l.slope.direction().dy << ' '
                             << l.offset.numerator() << '/' << l.offset.denominator() << ' ' << l.multiplicity;
                        },
                        [&](const PegComponent& p) { os << "pegs " << p.multiplicity << ' ' << p.pegs.str(); }},
             v_);
  return os.str();
}

bool operator<(const Component& a, const Component& b) {
  if (a.is_line() != b.is_line()) return a.is_line();
  if (a.is_line()) {
    const auto& x = a.as_line();
    const auto& y = b.as_line();
    return std::tie(x.slope, x.offset, x.multiplicity) < std::tie(y.slope, y.offset, y.multiplicity);
  }
  const auto& x = a.as_pegs();
  const auto& y = b.as_pegs();
  if (x.pegs != y.pegs) return x.pegs < y.pegs;
  return x.multiplicity < y.multiplicity;
}

Multicurve::Multicurve(std::vector<Component> comps, std::vector<std::string> labels)
    : comps_(std::move(comps)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.assign(comps_.size(), "");
  if (labels_.size() != comps_.size()) throw Error(ErrorCode::DegenerateInput, "label count mismatch");
  canonicalize();
}

bool Multicurve::labeled() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
}

void Multicurve::add(Component c, std::string label) {
  comps_.push_back(std::move(c));
  labels_.push_back(std::move(label));
  canonicalize();
}

Multicurve Multicurve::merged(const Multicurve& o) const {
  auto c = comps_;
  auto l = labels_;
  c.insert(c.end(), o.comps_.begin(), o.comps_.end());
  l.insert(l.end(), o.labels_.begin(), o.labels_.end());
  return Multicurve(std::move(c), std::move(l));
}

void Multicurve::canonicalize() {
  std::vector<std::size_t> idx(comps_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    if (labels_[i] != labels_[j]) return labels_[i] < labels_[j];
    return comps_[i] < comps_[j];
  });
  std::vector<Component> c;
  std::vector<std::string> l;
  for (std::size_t i : idx) {
    const Component& x = comps_[i];
    if (!c.empty() && l.back() == labels_[i] &&
        c.back().with_multiplicity(1) == x.with_multiplicity(1)) {
      c.back() = c.back().with_multiplicity(c.back().multiplicity() + x.multiplicity());
      continue;
    }
    c.push_back(x);
    l.push_back(labels_[i]);
  }
  comps_ = std::move(c);
  labels_ = std::move(l);
}

std::vector<std::int64_t> crossing_gaps(const CyclicWord& w) {
  std::vector<std::int64_t> gaps;
  std::int64_t level = 0;
  for (Letter l : w.oriented()) {
    switch (l) {
      case Letter::y: ++level; break;
      case Letter::Y: --level; break;
      default: gaps.push_back(level); break;
    }
  }
  return gaps;
}

TautResult tautify(const Polyline& raw) {
  CyclicWord w = CyclicWord::from(crossing_word(raw));
  if (w.empty()) return NullHomotopic{};
  auto [root, k] = primitive_root(w.letters());
  CyclicWord r = CyclicWord::from(root);
  if (r == CyclicWord::parse("xyXY")) return NullHomotopic{};
  if (!is_line_class(r)) return Component::pegs(PegWord::from_word(r), k);
  LatticeVector d = abelianize(root);
  Rational lo = cross(to_point(d), raw.vertices.front());
  Rational hi = lo;
  for (const auto& v : raw.vertices) {
    Rational c = cross(to_point(d), v);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  Rational c = ((lo + hi) / Rational(2)).frac();
  if (c.sign() == 0) c = Rational(1, 2);
  return Component::line(d, c, k);
}

CyclicWord f2_word(const Component& c) { return c.word(); }

LatticeVector homology_class(const Component& c) { return c.primitive_homology() * c.multiplicity(); }

LiftedComponent lift(const Component& c, Normalization norm) {
  if (c.primitive_homology().dy != 0) throw Error(ErrorCode::VerticalClass, "class " + c.str());
  auto gaps = crossing_gaps(c.word());
  if (gaps.empty()) throw Error(ErrorCode::NoCrossings, "component misses the vertical line");
  auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
  LiftedComponent out;
  // Index of gap g is g + 1/2 + h, stored doubled.
  std::int64_t twice_shift = 0;
  if (std::holds_alternative<Symmetric>(norm)) {
    // Lines of any offset admit the symmetric lift, so the test is on the class.
    if (CyclicWord::from(involution_image(c.word().letters())) != c.word()) {
      throw Error(ErrorCode::NotSymmetric, c.str());
    }
    twice_shift = -(*lo + *hi);
    out.symmetric = true;
    out.height_offset = 0;
  } else {
    out.height_offset = std::get<Offset>(norm).h;
    twice_shift = 1 + 2 * out.height_offset;
  }
  for (auto g : gaps) out.crossings.push_back(HalfInt::from_twice(2 * g + twice_shift));
  return out;
}

HalfInt alexander(HalfInt l, std::int64_t n) { return HalfInt::from_twice(l.twice() * n); }

std::int64_t f_value(const LiftedComponent& l, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "order must be positive");
  if (l.crossings.empty()) throw Error(ErrorCode::NoCrossings, "no crossings");
  HalfInt a = alexander(l.crossings.front(), n);
  if (!a.is_integer()) throw Error(ErrorCode::NonIntegralGrading, "n * l is not an integer");
  std::int64_t v = a.twice() / 2;
  return ((v % n) + n) % n;
}

std::int64_t f_value(const Component& c, std::int64_t n) {
  if (c.primitive_homology().dy != 0) throw Error(ErrorCode::VerticalClass, "class " + c.str());
  auto gaps = crossing_gaps(c.word());
  if (gaps.empty()) throw Error(ErrorCode::NoCrossings, "component misses the vertical line");
  auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
  LiftedComponent l;
  for (auto g : gaps) l.crossings.push_back(HalfInt::from_twice(2 * g - (*lo + *hi)));
  return f_value(l, n);
}

bool is_self_conjugate(const Component& c) { return involute(c) == c; }

std::int64_t peg_span(const LiftedComponent& l) {
  if (!l.symmetric) throw Error(ErrorCode::NotSymmetric, "peg_span needs the symmetric lift");
  if (l.crossings.empty()) throw Error(ErrorCode::NoCrossings, "no crossings");
  auto [lo, hi] = std::minmax_element(l.crossings.begin(), l.crossings.end());
  std::int64_t width = (hi->twice() - lo->twice()) / 2;
  if (lo->is_integer()) return width > 0 ? width - 1 : 0;
  return width;
}

Component involute(const Component& c) { return c.transformed(MCGMatrix(-1, 0, 0, -1)); }

Multicurve involute(const Multicurve& mc) { return apply_mcg(MCGMatrix(-1, 0, 0, -1), mc); }

Multicurve apply_mcg(const MCGMatrix& m, const Multicurve& mc) {
  std::vector<Component> out;
  out.reserve(mc.size());
  for (const auto& c : mc.components()) out.push_back(c.transformed(m));
  return Multicurve(std::move(out), mc.labels());
}

Multicurve trivialize_local_systems(const Multicurve& mc) { return mc; }

}  // namespace pegboard
