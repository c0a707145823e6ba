#pragma once

#include "pegboard/geometry.hpp"
#include "pegboard/lattice.hpp"
#include "pegboard/word.hpp"

#include <string>
#include <vector>

namespace pegboard {

// Which side of the path the peg lies on.
enum class Wrap : std::uint8_t { Left = 0, Right = 1 };

constexpr Wrap flip(Wrap w) { return w == Wrap::Left ? Wrap::Right : Wrap::Left; }

// Arrival at a peg: `displacement` from the previous visited peg, the side
// the peg is wrapped on, and the number of extra full turns made around it
// (non-zero only for curves that spiral).
struct PegStep {
  LatticeVector displacement;
  Wrap wrap = Wrap::Left;
  std::int64_t extra_turns = 0;

  friend bool operator==(const PegStep&, const PegStep&) = default;
};
std::strong_ordering operator<=>(const PegStep& a, const PegStep& b);

// Taut closed curve in the plane minus Z^2, up to deck translation and
// orientation. Steps are stored in canonical rotation.
class PegWord {
 public:
  PegWord() = default;
  // Canonicalizes: drops redundant grazing visits, picks the least rotation
  // over both orientations. Throws DegenerateInput on a zero displacement
  // (except for the single-step puncture loop, see puncture_loop()).
  static PegWord from_steps(std::vector<PegStep> steps);
  // The curve wrapping one peg `turns` times.
  static PegWord puncture_loop(std::int64_t turns);

  // Taut representative of a conjugacy class; the empty class has no peg
  // word and line classes (powers of a slope word) are rejected with
  // NotLoopType.
  static PegWord from_word(const CyclicWord& w);

  const std::vector<PegStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  LatticeVector homology() const;
  // Pegs visited by the lift starting at `origin`.
  std::vector<LatticeVector> pegs(LatticeVector origin = {0, 0}) const;

  PegWord transformed(const MCGMatrix& m) const;
  PegWord reversed() const;

  // Closed lift realized with pegs wrapped at L1-radius r.
  Polyline realize(const Rational& r, LatticeVector origin = {0, 0}) const;
  // One radius per visit.
  Polyline realize(const std::vector<Rational>& radii, LatticeVector origin = {0, 0}) const;
  // Total turning angle at each visit, in radians (always >= 0).
  std::vector<double> turning() const;
  // Crossing word with the cut arcs.
  CyclicWord to_word() const;

  std::string str() const;

  friend bool operator==(const PegWord&, const PegWord&) = default;
  friend auto operator<=>(const PegWord& a, const PegWord& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<PegStep> steps_;
};

// True when the reduced cyclic word is a power of a straight slope word.
bool is_line_class(const CyclicWord& w);
// Crossing word of a straight line with primitive direction d (one period).
Word slope_word(LatticeVector d);

// Letters crossed walking from a to b; a point on a grid line counts as lying
// in the cell above / to the right of it.
Word segment_word(const Point& a, const Point& b);
// Letters crossed by a closed polyline, in order. Throws DegenerateInput when
// a segment meets a lattice point.
Word crossing_word(const Polyline& p);

}  // namespace pegboard
