#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pegboard/geometry.hpp"
#include "pegboard/multicurve.hpp"

namespace pegboard {

// A transverse self-crossing of the realized component: segment seg_a of the
// base lift meets segment seg_b of the lift translated by shift.
struct SelfCrossing {
  std::size_t seg_a;
  std::size_t seg_b;
  LatticeVector shift;
  Point at;     // reduced into the unit cell
  Rational s;   // parameters along the two segments
  Rational t;
};

std::vector<SelfCrossing> self_crossings(const Component& c);

struct Resolution {
  Multicurve curves;
  // Pieces that bound a disk or only encircle the puncture.
  std::int64_t discarded = 0;
};

// Oriented smoothing at crossing id and, when given, at its conjugate partner.
Resolution resolve_crossing(const Component& c, std::size_t id, std::optional<std::size_t> partner = std::nullopt);
// Drops components that are null-homotopic in the closed torus.
Multicurve delete_nullhomotopic(const Multicurve& mc);

// A corner of the oriented class word at a top-row peg: positions pos and
// pos+1 are a vertical letter meeting a horizontal one at maximal height.
struct ExtremalCorner {
  std::size_t pos;
  bool entering;  // y then x/X; otherwise x/X then Y
};

std::vector<ExtremalCorner> extremal_corners(const Component& c);
// Pushes the strand at corner pos across its peg, together with the mirror
// push at the conjugate corner, and re-tautens.
Multicurve peg_pass(const Component& c, std::size_t pos);

enum class CornerType { a, b, c, d };
char to_char(CornerType t);
// Shape of the corner made by letters pos, pos+1 of the oriented word: a is
// up-right (or left-down), b up-left, c down-right, d down-left.
CornerType corner_type(const Component& c, std::size_t pos);

// Signs of the crossing heights in traversal order, from the start of a run
// of positive heights.
std::vector<int> sign_sequence(const LiftedComponent& l);

struct Measure {
  std::int64_t n = 0;
  std::int64_t height_total = 0;
  std::int64_t length = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};
Measure pinch_measure(const Component& c);

struct PinchStep {
  Multicurve snapshot;
  std::string move;
  std::int64_t n = 0;
  Measure measure;
  std::vector<std::optional<std::int64_t>> audit;
};

struct PinchTrace {
  std::vector<PinchStep> steps;
  bool stuck = false;
  std::string diagnostic;
  bool audit_monotone() const;
};

PinchTrace pinch_simplify(const Multicurve& c, std::int64_t two_k, const std::vector<Multicurve>& alphas);

// Self-conjugate primitive component of class (two_k, 0) with f = k.
Component random_symmetric_component(std::mt19937_64& rng, std::int64_t two_k, std::size_t max_len = 20);

// Twenty slope lines plus the order-2 standard components.
std::vector<Multicurve> default_audit_family();

struct RankComparison {
  std::string sector;
  std::string check;
  std::optional<std::int64_t> original;
  std::optional<std::int64_t> pinched;
  std::string note;
  bool pass() const { return !original || !pinched || *original >= *pinched; }
  bool evaluated() const { return original && pinched; }
};

struct RankReport {
  std::vector<RankComparison> rows;
  bool all_pass() const;
};

RankReport verify_rank_inequality(const Multicurve& m1, const Multicurve& m2, const MCGMatrix& psi, std::int64_t two_k);

}  // namespace pegboard
