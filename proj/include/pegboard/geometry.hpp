#pragma once

#include "pegboard/lattice.hpp"
#include "pegboard/rational.hpp"

#include <optional>
#include <vector>

namespace pegboard {

struct Point {
  Rational x;
  Rational y;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const Rational& k) const { return {x * k, y * k}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point to_point(LatticeVector v) { return {Rational(v.dx), Rational(v.dy)}; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
// Sign of cross(b - a, c - a): +1 when c lies left of the directed line a->b.
int orientation(const Point& a, const Point& b, const Point& c);

// Transverse intersection of the half-open segments [p0, p1) and [q0, q1).
// Returns parameters (s, t) along each segment. Collinear overlaps are
// reported through the `degenerate` flag instead.
struct SegmentHit {
  Rational s;
  Rational t;
};
std::optional<SegmentHit> intersect_segments(const Point& p0, const Point& p1, const Point& q0,
                                             const Point& q1, bool& degenerate);

// True when the closed segment [a, b] contains a lattice point.
bool segment_hits_lattice(const Point& a, const Point& b);

// A closed curve in the torus given by a lift: vertices v_0..v_{k-1} in the
// plane, followed by the closing segment to v_0 + period.
struct Polyline {
  std::vector<Point> vertices;
  LatticeVector period;

  std::size_t segment_count() const { return vertices.size(); }
  Point segment_start(std::size_t i) const { return vertices[i]; }
  Point segment_end(std::size_t i) const {
    return i + 1 < vertices.size() ? vertices[i + 1] : vertices[0] + to_point(period);
  }
};

}  // namespace pegboard
