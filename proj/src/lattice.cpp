#include "pegboard/lattice.hpp"

#include "pegboard/error.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

namespace pegboard {

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(std::llabs(a), std::llabs(b)); }

std::ostream& operator<<(std::ostream& os, LatticeVector v) {
  return os << '(' << v.dx << ',' << v.dy << ')';
}

Slope Slope::from(LatticeVector v) {
  if (v.is_zero() || gcd_abs(v.dx, v.dy) != 1) {
    throw Error(ErrorCode::DegenerateInput, "slope direction must be primitive");
  }
  if (v.dy < 0 || (v.dy == 0 && v.dx < 0)) v = -v;
  return Slope(v);
}

std::pair<Slope, std::int64_t> Slope::primitive_part(LatticeVector v) {
  if (v.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero vector has no slope");
  std::int64_t g = gcd_abs(v.dx, v.dy);
  return {from({v.dx / g, v.dy / g}), g};
}

MCGMatrix::MCGMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  std::int64_t det = a * d - b * c;
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "determinant is " + std::to_string(det));
  }
}

MCGMatrix MCGMatrix::operator*(const MCGMatrix& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
          c_ * o.b_ + d_ * o.d_};
}

MCGMatrix MCGMatrix::inverse() const {
  std::int64_t det = determinant();
  return {d_ * det, -b_ * det, -c_ * det, a_ * det};
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace pegboard
