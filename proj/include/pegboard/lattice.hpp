#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pegboard {

struct LatticeVector {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  constexpr LatticeVector operator+(LatticeVector o) const { return {dx + o.dx, dy + o.dy}; }
  constexpr LatticeVector operator-(LatticeVector o) const { return {dx - o.dx, dy - o.dy}; }
  constexpr LatticeVector operator-() const { return {-dx, -dy}; }
  constexpr LatticeVector operator*(std::int64_t k) const { return {dx * k, dy * k}; }
  constexpr LatticeVector& operator+=(LatticeVector o) { dx += o.dx; dy += o.dy; return *this; }
  constexpr bool is_zero() const { return dx == 0 && dy == 0; }

  friend constexpr bool operator==(LatticeVector, LatticeVector) = default;
  friend constexpr auto operator<=>(LatticeVector, LatticeVector) = default;
};

constexpr std::int64_t det(LatticeVector a, LatticeVector b) { return a.dx * b.dy - a.dy * b.dx; }
constexpr std::int64_t dot(LatticeVector a, LatticeVector b) { return a.dx * b.dx + a.dy * b.dy; }

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, LatticeVector v);

// Unoriented primitive direction. Canonical representative has dy > 0, or
// dy == 0 and dx == 1.
class Slope {
 public:
  // Throws DegenerateInput unless the vector is primitive.
  static Slope from(LatticeVector v);
  // Primitive part of a nonzero vector together with the multiple.
  static std::pair<Slope, std::int64_t> primitive_part(LatticeVector v);

  LatticeVector direction() const { return dir_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  explicit Slope(LatticeVector d) : dir_(d) {}
  LatticeVector dir_{1, 0};
};

// Integer 2x2 matrix [[a, b], [c, d]] with determinant +-1, acting on column
// vectors.
class MCGMatrix {
 public:
  // Throws NotUnimodular.
  MCGMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static MCGMatrix identity() { return {1, 0, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t determinant() const { return a_ * d_ - b_ * c_; }

  LatticeVector operator*(LatticeVector v) const {
    return {a_ * v.dx + b_ * v.dy, c_ * v.dx + d_ * v.dy};
  }
  MCGMatrix operator*(const MCGMatrix& o) const;
  MCGMatrix inverse() const;

  friend bool operator==(const MCGMatrix&, const MCGMatrix&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

// Element of (1/2)Z stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t t) { HalfInt h; h.twice_ = t; return h; }
  static constexpr HalfInt from_int(std::int64_t v) { return from_twice(2 * v); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const;

 private:
  std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace pegboard
