#include "pegboard/geometry.hpp"

#include <algorithm>

namespace pegboard {

int orientation(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a).sign();
}

std::optional<SegmentHit> intersect_segments(const Point& p0, const Point& p1, const Point& q0,
                                             const Point& q1, bool& degenerate) {
  degenerate = false;
  Point r = p1 - p0;
  Point s = q1 - q0;
  Rational denom = cross(r, s);
  Point qp = q0 - p0;
  if (denom.sign() == 0) {
    if (cross(qp, r).sign() != 0) return std::nullopt;  // parallel, disjoint
    // Collinear: overlapping interiors are degenerate.
    Rational rr = r.x * r.x + r.y * r.y;
    Rational t0 = (qp.x * r.x + qp.y * r.y) / rr;
    Rational t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
    if (t1 < t0) std::swap(t0, t1);
    if (t1 < Rational(0) || t0 > Rational(1)) return std::nullopt;
    degenerate = true;
    return std::nullopt;
  }
  Rational sp = cross(qp, s) / denom;
  Rational tq = cross(qp, r) / denom;
  if (sp < Rational(0) || sp >= Rational(1) || tq < Rational(0) || tq >= Rational(1)) {
    return std::nullopt;
  }
  return SegmentHit{sp, tq};
}

bool segment_hits_lattice(const Point& a, const Point& b) {
  // Lattice points a + t (b - a), t in [0, 1].
  Point d = b - a;
  auto lo_hi = [](const Rational& u, const Rational& v) { return std::pair{std::min(u, v), std::max(u, v)}; };
  auto [xlo, xhi] = lo_hi(a.x, b.x);
  auto [ylo, yhi] = lo_hi(a.y, b.y);
  if (d.x.sign() == 0 && d.y.sign() == 0) return a.x.is_integer() && a.y.is_integer();
  if (d.x.sign() == 0) {
    if (!a.x.is_integer()) return false;
    return Rational(ylo.floor() + (ylo.is_integer() ? 0 : 1), 1) <= yhi;
  }
  // Iterate integer x in range and test y.
  BigInt start = xlo.floor();
  if (!xlo.is_integer()) start += 1;
  for (BigInt i = start; Rational(i, 1) <= xhi; ++i) {
    Rational t = (Rational(i, 1) - a.x) / d.x;
    Rational y = a.y + t * d.y;
    if (y.is_integer()) return true;
  }
  return false;
}

}  // namespace pegboard
