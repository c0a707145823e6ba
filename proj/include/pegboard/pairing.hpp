#pragma once

#include "pegboard/geometry.hpp"
#include "pegboard/multicurve.hpp"
#include "pegboard/word.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace pegboard {

// A crossing counted by the word engine: positions i in u and j in the word
// (v or its inverse) at which the two strands enter the shared vertex.
struct LinkedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  bool inverted = false;
};

// Essential crossings of two primitive cyclically reduced words in distinct
// unoriented classes. Throws ParallelComponents for equal classes.
std::vector<LinkedPair> linked_pairs(const Word& u, const Word& v);
std::int64_t word_intersection(const CyclicWord& a, const CyclicWord& b);

// Same slope lines with distinct offsets contribute 0; a shared class
// otherwise throws ParallelComponents.
std::int64_t intersection_number(const Component& a, const Component& b);
std::int64_t intersection_number(const Multicurve& a, const Multicurve& b);

struct SceneCrossing {
  std::size_t comp_a = 0;
  std::size_t comp_b = 0;
  std::size_t seg_a = 0;
  std::size_t seg_b = 0;
  LatticeVector shift;  // translate applied to the lift of b
  Point at;
  Word loop;  // path along a to the crossing, back along b
};

struct Scene {
  Multicurve a;
  Multicurve b;
  std::vector<Polyline> lifts_a;
  std::vector<Polyline> lifts_b;
  std::vector<SceneCrossing> crossings;
};

struct Bigon {
  std::size_t first = 0;
  std::size_t second = 0;
};

// Realizes both multicurves with nested radii and lists every transverse
// crossing in the torus (one lift of each a-component against all translates
// of each b-component).
Scene realize_scene(const Multicurve& a, const Multicurve& b);
Scene realize_scene(const Multicurve& a, const Multicurve& b, std::vector<Polyline> lifts_a,
                    std::vector<Polyline> lifts_b);

// Crossings of one component pair grouped by the pair of lifts to the
// universal cover they lie on. Each inner vector lists crossing indices.
std::vector<std::vector<std::size_t>> lift_pair_classes(const Scene& s, std::size_t comp_a, std::size_t comp_b);

// Two crossings on the same pair of lifts bound an (immersed) bigon.
std::optional<Bigon> certify_bigon_free(const Scene& s);
// Intersection number from the scene: classes with an odd number of
// crossings, weighted by multiplicities.
std::int64_t oracle_intersection(const Scene& s);

// Both multicurves drawn as chords of the unit cell. Crossings on each cut
// arc are placed in the order the hyperbolic geodesics of the modular torus
// meet that arc, which puts every pair in minimal position.
Scene cell_chord_scene(const Multicurve& a, const Multicurve& b);
Scene minimal_position(const Multicurve& a, const Multicurve& b);

std::int64_t hf_rank(const Multicurve& gm, const MCGMatrix& psi, const Multicurve& gn);

// (label of gm component, label of gn component, relative height) -> count.
using RankKey = std::tuple<std::string, std::string, HalfInt>;
using RankTable = std::map<RankKey, std::int64_t>;
RankTable rank_by_spinc(const Multicurve& gm, const MCGMatrix& psi, const Multicurve& gn);

}  // namespace pegboard
