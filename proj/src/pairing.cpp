#include "pegboard/pairing.hpp"

#include "pegboard/error.hpp"

#include <numeric>

namespace pegboard {

namespace {

// Position of each half-edge in the cyclic order around the single vertex
// of the cut-arc graph: x, y, X, Y counterclockwise.
constexpr int half_edge_order(Letter l) {
  switch (l) {
    case Letter::x: return 0;
    case Letter::y: return 1;
    case Letter::X: return 2;
    case Letter::Y: return 3;
  }
  return 0;
}

// +1 when h lies strictly counterclockwise between s and t.
int side(Letter s, Letter t, Letter h) {
  int a = (half_edge_order(h) - half_edge_order(s) + 4) % 4;
  int b = (half_edge_order(t) - half_edge_order(s) + 4) % 4;
  return (0 < a && a < b) ? 1 : -1;
}

bool same_class(const Component& a, const Component& b) {
  if (a.is_line() && b.is_line()) return a.as_line().slope == b.as_line().slope;
  if (a.is_line() != b.is_line()) return false;
  return a.word() == b.word();
}

void check_pairable(const Component& a, const Component& b) {
  if (a.is_line() && b.is_line() && a.as_line().slope == b.as_line().slope) {
    if (a.as_line().offset == b.as_line().offset) {
      throw Error(ErrorCode::ParallelComponents, "coincident lines " + a.str());
    }
    return;
  }
  if (same_class(a, b)) throw Error(ErrorCode::ParallelComponents, "shared class " + a.word().str());
}

}  // namespace

std::vector<LinkedPair> linked_pairs(const Word& u, const Word& v) {
  std::vector<LinkedPair> out;
  const std::size_t m = u.size();
  const std::size_t n = v.size();
  if (m == 0 || n == 0) return out;
  for (int eps = 0; eps < 2; ++eps) {
    const Word vv = eps == 0 ? v : inverse(v);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // Strands enter the vertex through the half-edges opposite to the
        // letters just read.
        Letter p_in = inverse(u[(i + m - 1) % m]);
        Letter q_in = inverse(vv[(j + n - 1) % n]);
        if (p_in == q_in) continue;
        std::size_t len = 0;
        while (u[(i + len) % m] == vv[(j + len) % n]) {
          ++len;
          if (len > m + n + 2) throw Error(ErrorCode::ParallelComponents, "words share a class");
        }
        if (len == 0) {
          if (eps == 1) continue;
          Letter p_out = u[i];
          Letter q_out = vv[j];
          if (q_in == p_out || q_out == p_in) continue;
          if (side(p_in, p_out, q_in) != side(p_in, p_out, q_out)) out.push_back({i, j, false});
        } else {
          Letter p_out = u[(i + len) % m];
          Letter q_out = vv[(j + len) % n];
          Letter e = inverse(u[(i + len - 1) % m]);
          if (side(p_in, u[i], q_in) != side(e, p_out, q_out)) out.push_back({i, j, eps == 1});
        }
      }
    }
  }
  return out;
}

std::int64_t word_intersection(const CyclicWord& a, const CyclicWord& b) {
  if (a == b) throw Error(ErrorCode::ParallelComponents, "shared class " + a.str());
  return static_cast<std::int64_t>(linked_pairs(a.letters(), b.letters()).size());
}

std::int64_t intersection_number(const Component& a, const Component& b) {
  check_pairable(a, b);
  const std::int64_t mult = a.multiplicity() * b.multiplicity();
  if (a.is_line() && b.is_line()) {
    return mult * std::abs(det(a.as_line().slope.direction(), b.as_line().slope.direction()));
  }
  return mult * word_intersection(a.word(), b.word());
}

std::int64_t intersection_number(const Multicurve& a, const Multicurve& b) {
  std::int64_t total = 0;
  for (const auto& ca : a.components()) {
    for (const auto& cb : b.components()) total += intersection_number(ca, cb);
  }
  return total;
}

std::int64_t hf_rank(const Multicurve& gm, const MCGMatrix& psi, const Multicurve& gn) {
  Multicurve moved = apply_mcg(psi, gn);
  for (const auto& a : gm.components()) {
    for (const auto& b : moved.components()) {
      if (same_class(a, b)) {
        throw Error(ErrorCode::ParallelComponents,
                    "class " + a.word().str() + " appears on both sides; the glued manifold is not a rational homology sphere");
      }
    }
  }
  return intersection_number(gm, moved);
}

namespace {

struct Levels {
  std::vector<std::int64_t> at;  // level before each letter
  std::int64_t twice_centre = 0;
  bool horizontal = false;
  std::int64_t dy = 0;
};

Levels levels_of(const Word& w, bool centred) {
  Levels l;
  std::int64_t g = 0, lo = 0, hi = 0;
  bool seen = false;
  for (Letter c : w) {
    l.at.push_back(g);
    if (c == Letter::y) {
      ++g;
    } else if (c == Letter::Y) {
      --g;
    } else {
      lo = seen ? std::min(lo, g) : g;
      hi = seen ? std::max(hi, g) : g;
      seen = true;
    }
  }
  l.dy = g;
  l.horizontal = g == 0;
  if (centred && l.horizontal && seen) l.twice_centre = lo + hi;
  return l;
}

bool has_symmetric_lift(const Component& c) {
  return c.primitive_homology().dy == 0 && CyclicWord::from(involution_image(c.word().letters())) == c.word();
}

}  // namespace

RankTable rank_by_spinc(const Multicurve& gm, const MCGMatrix& psi, const Multicurve& gn) {
  hf_rank(gm, psi, gn);  // hypothesis check
  Multicurve moved = apply_mcg(psi, gn);
  RankTable table;
  for (std::size_t ia = 0; ia < gm.size(); ++ia) {
    const Component& a = gm.components()[ia];
    const Word u = a.word().letters();
    Levels la = levels_of(u, has_symmetric_lift(a));
    for (std::size_t ib = 0; ib < moved.size(); ++ib) {
      const Component& b = moved.components()[ib];
      const Word v = b.word().letters();
      const Word vi = inverse(v);
      Levels lb = levels_of(v, has_symmetric_lift(b));
      Levels lbi = levels_of(vi, has_symmetric_lift(b));
      std::int64_t modulus = std::gcd(std::abs(la.dy), std::abs(lb.dy));
      const std::int64_t mult = a.multiplicity() * b.multiplicity();
      for (const auto& p : linked_pairs(u, v)) {
        const Levels& lv = p.inverted ? lbi : lb;
        std::int64_t twice = 2 * (la.at[p.i] - lv.at[p.j]) - la.twice_centre + lv.twice_centre;
        if (modulus != 0) twice = ((twice % (2 * modulus)) + 2 * modulus) % (2 * modulus);
        table[{gm.labels()[ia], moved.labels()[ib], HalfInt::from_twice(twice)}] += mult;
      }
    }
  }
  return table;
}

}  // namespace pegboard
