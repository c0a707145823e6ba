#pragma once

#include "pegboard/geometry.hpp"
#include "pegboard/lattice.hpp"
#include "pegboard/pegword.hpp"
#include "pegboard/rational.hpp"
#include "pegboard/word.hpp"

#include <string>
#include <variant>
#include <vector>

namespace pegboard {

// Straight closed curve {P : det(slope, P) = offset mod 1}. For the
// horizontal slope the offset is the height of the line.
struct LineComponent {
  Slope slope;
  Rational offset{1, 2};
  std::int64_t multiplicity = 1;

  friend bool operator==(const LineComponent&, const LineComponent&) = default;
};

struct PegComponent {
  PegWord pegs;
  CyclicWord word;  // primitive class, cached
  std::int64_t multiplicity = 1;

  friend bool operator==(const PegComponent& a, const PegComponent& b) {
    return a.pegs == b.pegs && a.multiplicity == b.multiplicity;
  }
};

class Component {
 public:
  Component(LineComponent l);  // NOLINT(google-explicit-constructor)
  Component(PegComponent p);   // NOLINT(google-explicit-constructor)

  // Builds the component of a (possibly non-primitive) class. Throws
  // NotLoopType for the trivial class.
  static Component from_word(const CyclicWord& w, Rational line_offset = Rational(1, 2));
  static Component line(LatticeVector direction, Rational offset, std::int64_t mult = 1);
  static Component pegs(const PegWord& p, std::int64_t mult = 1);

  bool is_line() const { return std::holds_alternative<LineComponent>(v_); }
  const LineComponent& as_line() const { return std::get<LineComponent>(v_); }
  const PegComponent& as_pegs() const { return std::get<PegComponent>(v_); }
  std::int64_t multiplicity() const;
  Component with_multiplicity(std::int64_t m) const;

  // Primitive class word.
  CyclicWord word() const;
  // Class of one copy, oriented with dx > 0 or (dx == 0, dy >= 0).
  LatticeVector primitive_homology() const;

  Component transformed(const MCGMatrix& m) const;
  Polyline realize(const Rational& radius) const;
  // Peg components: one radius per visit. Lines ignore the radii.
  Polyline realize(const std::vector<Rational>& radii) const;
  std::string str() const;

  friend bool operator==(const Component&, const Component&) = default;
  friend bool operator<(const Component& a, const Component& b);

 private:
  std::variant<LineComponent, PegComponent> v_;
};

struct NullHomotopic {
  friend bool operator==(NullHomotopic, NullHomotopic) { return true; }
};
using TautResult = std::variant<Component, NullHomotopic>;

// Components with optional spin^c labels ("" when unlabeled).
class Multicurve {
 public:
  Multicurve() = default;
  explicit Multicurve(std::vector<Component> comps, std::vector<std::string> labels = {});

  const std::vector<Component>& components() const { return comps_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return comps_.size(); }
  bool empty() const { return comps_.empty(); }
  bool labeled() const;

  void add(Component c, std::string label = "");
  Multicurve merged(const Multicurve& o) const;

  friend bool operator==(const Multicurve&, const Multicurve&) = default;

 private:
  void canonicalize();
  std::vector<Component> comps_;
  std::vector<std::string> labels_;
};

struct LiftedComponent {
  std::int64_t height_offset = 0;
  bool symmetric = false;
  // Height index of each crossing with {0} x R, in traversal order along the
  // oriented representative (positive horizontal class).
  std::vector<HalfInt> crossings;
};

struct Symmetric {};
struct Offset {
  std::int64_t h = 0;
};
using Normalization = std::variant<Symmetric, Offset>;

// Crossing gaps of the oriented class word: a crossing between pegs at
// heights g and g+1 is reported as g.
std::vector<std::int64_t> crossing_gaps(const CyclicWord& w);

TautResult tautify(const Polyline& raw);
CyclicWord f2_word(const Component& c);
LatticeVector homology_class(const Component& c);
LiftedComponent lift(const Component& c, Normalization norm);
HalfInt alexander(HalfInt l, std::int64_t n);
// Residue in [0, n), read from the centred lift.
std::int64_t f_value(const Component& c, std::int64_t n);
std::int64_t f_value(const LiftedComponent& l, std::int64_t n);
bool is_self_conjugate(const Component& c);
std::int64_t peg_span(const LiftedComponent& l);

Component involute(const Component& c);
Multicurve involute(const Multicurve& mc);
Multicurve apply_mcg(const MCGMatrix& m, const Multicurve& mc);
Multicurve trivialize_local_systems(const Multicurve& mc);

}  // namespace pegboard
