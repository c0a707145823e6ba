#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pegboard/multicurve.hpp"

namespace pegboard {

enum class Idempotent { I0, I1 };

enum class AlgebraLabel { R1, R2, R3, R12, R23, R123 };

std::string_view to_string(AlgebraLabel l);
std::optional<AlgebraLabel> parse_label(std::string_view s);

struct LabelIdempotents {
  Idempotent source;
  Idempotent target;
};
LabelIdempotents idempotents_of(AlgebraLabel l);

// Sides of the unit cell: Left and Right lie on the vertical arc through the
// puncture, Bottom and Top on the horizontal one.
enum class CellSide { L, R, B, T };

struct ArcEntry {
  AlgebraLabel label;
  CellSide from;
  CellSide to;
};

inline constexpr int kArcDictionaryVersion = 1;
inline constexpr ArcEntry kArcDictionary[] = {
    {AlgebraLabel::R1, CellSide::L, CellSide::T},    {AlgebraLabel::R2, CellSide::T, CellSide::R},
    {AlgebraLabel::R3, CellSide::R, CellSide::B},    {AlgebraLabel::R12, CellSide::L, CellSide::R},
    {AlgebraLabel::R23, CellSide::T, CellSide::B},   {AlgebraLabel::R123, CellSide::L, CellSide::B},
};

const ArcEntry& arc_of(AlgebraLabel l);

struct TypeDVertex {
  std::string name;
  Idempotent idem;
};

struct TypeDEdge {
  std::size_t from;
  std::size_t to;
  AlgebraLabel label;
};

class TypeDGraph {
 public:
  std::size_t add_vertex(std::string name, Idempotent idem);
  void add_edge(std::size_t from, std::size_t to, AlgebraLabel label);
  // By name; throws Parse when a name is unknown.
  void add_edge(std::string_view from, std::string_view to, AlgebraLabel label);
  std::optional<std::size_t> find(std::string_view name) const;

  const std::vector<TypeDVertex>& vertices() const { return vertices_; }
  const std::vector<TypeDEdge>& edges() const { return edges_; }

 private:
  std::vector<TypeDVertex> vertices_;
  std::vector<TypeDEdge> edges_;
};

// Every violation, in a stable order; empty means the graph is fine.
std::vector<std::string> validate_typed(const TypeDGraph& g);

struct LoopStep {
  std::size_t edge;
  bool forward;  // traversed along the arrow
};

// A closed walk: vertices[i] --steps[i]--> vertices[i+1 mod size]. An
// isolated generator is a loop with one vertex and no steps.
struct Loop {
  std::vector<std::size_t> vertices;
  std::vector<LoopStep> steps;
};

std::vector<Loop> decompose_loops(const TypeDGraph& g);
// Letter crossed on arriving at each vertex of the loop, as a cyclic word.
CyclicWord loop_word(const TypeDGraph& g, const Loop& loop);
Multicurve typed_to_curves(const TypeDGraph& g);

std::vector<TypeDGraph> en_typed(std::int64_t n);
// The symmetric peg component of the order two_k invariant. Cached.
Component beta(std::int64_t two_k);

}  // namespace pegboard
