// Taut representatives by string pulling through the channel of unit cells a
// word passes through. Portal endpoints are pegs pulled inward by a symbolic
// infinitesimal; orientation tests are exact polynomials in it.
#include "pegboard/error.hpp"
#include "pegboard/pegword.hpp"

#include <cmath>
#include <numbers>

namespace pegboard {
namespace {

// (x + d*dx, y + d*dy) in doubled coordinates, d infinitesimal.
struct SPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  int dx = 0;
  int dy = 0;
  friend bool operator==(const SPoint&, const SPoint&) = default;
};

int orient(const SPoint& a, const SPoint& b, const SPoint& c) {
  std::int64_t ux0 = b.x - a.x, uy0 = b.y - a.y, ux1 = b.dx - a.dx, uy1 = b.dy - a.dy;
  std::int64_t vx0 = c.x - a.x, vy0 = c.y - a.y, vx1 = c.dx - a.dx, vy1 = c.dy - a.dy;
  std::int64_t k0 = ux0 * vy0 - uy0 * vx0;
  if (k0 != 0) return k0 > 0 ? 1 : -1;
  std::int64_t k1 = ux0 * vy1 + ux1 * vy0 - uy0 * vx1 - uy1 * vx0;
  if (k1 != 0) return k1 > 0 ? 1 : -1;
  std::int64_t k2 = ux1 * vy1 - uy1 * vx1;
  return k2 > 0 ? 1 : (k2 < 0 ? -1 : 0);
}

SPoint peg_point(std::int64_t px, std::int64_t py, int dx, int dy) { return {2 * px, 2 * py, dx, dy}; }

struct Portal {
  SPoint left;
  SPoint right;
};

std::vector<Portal> build_portals(const Word& w, std::size_t periods) {
  std::vector<Portal> out;
  out.reserve(w.size() * periods);
  std::int64_t cx = 0, cy = 0;
  for (std::size_t p = 0; p < periods; ++p) {
    for (Letter l : w) {
      switch (l) {
        case Letter::x:
          out.push_back({peg_point(cx + 1, cy + 1, 0, -1), peg_point(cx + 1, cy, 0, 1)});
          ++cx;
          break;
        case Letter::X:
          out.push_back({peg_point(cx, cy, 0, 1), peg_point(cx, cy + 1, 0, -1)});
          --cx;
          break;
        case Letter::y:
          out.push_back({peg_point(cx, cy + 1, 1, 0), peg_point(cx + 1, cy + 1, -1, 0)});
          ++cy;
          break;
        case Letter::Y:
          out.push_back({peg_point(cx + 1, cy, -1, 0), peg_point(cx, cy, 1, 0)});
          --cy;
          break;
      }
    }
  }
  return out;
}

struct Vertex {
  SPoint at;
  Wrap wrap;
  std::int64_t portal;
};

std::vector<Vertex> pull_string(const std::vector<Portal>& portals, SPoint start, SPoint end) {
  std::vector<Vertex> path;
  std::vector<Portal> ps = portals;
  ps.push_back({end, end});
  SPoint apex = start, left = start, right = start;
  std::int64_t apex_i = -1, left_i = -1, right_i = -1;
  const auto n = static_cast<std::int64_t>(ps.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const SPoint& l = ps[static_cast<std::size_t>(i)].left;
    const SPoint& r = ps[static_cast<std::size_t>(i)].right;
    if (orient(apex, right, r) >= 0) {
      if (apex == right || orient(apex, left, r) <= 0) {
        right = r;
        right_i = i;
      } else {
        path.push_back({left, Wrap::Left, left_i});
        apex = left;
        apex_i = left_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (orient(apex, left, l) <= 0) {
      if (apex == left || orient(apex, right, l) >= 0) {
        left = l;
        left_i = i;
      } else {
        path.push_back({right, Wrap::Right, right_i});
        apex = right;
        apex_i = right_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  return path;
}

struct Visit {
  LatticeVector peg;
  Wrap wrap;
  std::vector<std::pair<int, int>> dirs;
};

double sweep(double from, double to, Wrap w) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double d = w == Wrap::Left ? to - from : from - to;
  d = std::fmod(d, two_pi);
  if (d < 0) d += two_pi;
  if (d > two_pi - 1e-9) d = 0;
  return d;
}

double position_angle(LatticeVector u, Wrap w) {
  double a = std::atan2(double(u.dy), double(u.dx));
  return w == Wrap::Left ? a - std::numbers::pi / 2 : a + std::numbers::pi / 2;
}

bool is_puncture_class(const CyclicWord& w, std::int64_t& turns) {
  auto [root, k] = primitive_root(w.letters());
  static const CyclicWord comm = CyclicWord::parse("xyXY");
  if (CyclicWord::from(root) != comm) return false;
  turns = k;
  return true;
}

}  // namespace

PegWord PegWord::from_word(const CyclicWord& cw) {
  if (cw.empty()) throw Error(ErrorCode::NotLoopType, "null-homotopic class has no peg word");
  if (std::int64_t turns = 0; is_puncture_class(cw, turns)) return puncture_loop(turns);
  if (is_line_class(cw)) throw Error(ErrorCode::NotLoopType, "line class has no peg word: " + cw.str());

  const Word w = cw.oriented();
  const auto m = static_cast<std::int64_t>(w.size());
  const LatticeVector h = abelianize(w);

  for (std::size_t periods = 9; periods <= 65; periods += 8) {
    auto portals = build_portals(w, periods);
    const auto P = static_cast<std::int64_t>(periods);
    SPoint start{1, 1, 0, 0};
    SPoint end{1 + 2 * P * h.dx, 1 + 2 * P * h.dy, 0, 0};
    auto path = pull_string(portals, start, end);

    const std::int64_t mid = P / 2;
    std::vector<Vertex> cur, nxt;
    for (const auto& v : path) {
      if (v.portal / m == mid) cur.push_back(v);
      if (v.portal / m == mid + 1) nxt.push_back(v);
    }
    bool periodic = !cur.empty() && cur.size() == nxt.size();
    for (std::size_t i = 0; periodic && i < cur.size(); ++i) {
      const auto& a = cur[i];
      const auto& b = nxt[i];
      periodic = b.portal == a.portal + m && b.wrap == a.wrap && b.at.x == a.at.x + 2 * h.dx &&
                 b.at.y == a.at.y + 2 * h.dy && b.at.dx == a.at.dx && b.at.dy == a.at.dy;
    }
    if (!periodic) continue;

    // Merge consecutive vertices at the same peg, cyclically.
    std::vector<Visit> visits;
    for (const auto& v : cur) {
      LatticeVector peg{v.at.x / 2, v.at.y / 2};
      if (!visits.empty() && visits.back().peg == peg) {
        if (visits.back().wrap != v.wrap) throw Error(ErrorCode::Internal, "inconsistent wrap side");
        visits.back().dirs.emplace_back(v.at.dx, v.at.dy);
      } else {
        visits.push_back({peg, v.wrap, {{v.at.dx, v.at.dy}}});
      }
    }
    if (visits.size() > 1 && visits.back().peg == visits.front().peg + h) {
      auto& f = visits.front();
      auto& b = visits.back();
      b.dirs.insert(b.dirs.end(), f.dirs.begin(), f.dirs.end());
      f.dirs = b.dirs;
      visits.pop_back();
    }
    const std::size_t s = visits.size();
    std::vector<PegStep> steps(s);
    for (std::size_t i = 0; i < s; ++i) {
      LatticeVector prev = i == 0 ? visits[s - 1].peg - h : visits[i - 1].peg;
      steps[i].displacement = visits[i].peg - prev;
      steps[i].wrap = visits[i].wrap;
    }
    for (std::size_t i = 0; i < s; ++i) {
      const Visit& v = visits[i];
      LatticeVector u = steps[i].displacement;
      LatticeVector out = steps[(i + 1) % s].displacement;
      // Total turning along the polygon through the shrunk points.
      std::vector<std::pair<double, double>> dirs{{double(u.dx), double(u.dy)}};
      for (std::size_t k = 0; k + 1 < v.dirs.size(); ++k) {
        dirs.emplace_back(double(v.dirs[k + 1].first - v.dirs[k].first),
                          double(v.dirs[k + 1].second - v.dirs[k].second));
      }
      dirs.emplace_back(double(out.dx), double(out.dy));
      double total = 0;
      for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
        auto [ax, ay] = dirs[k];
        auto [bx, by] = dirs[k + 1];
        double t = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
        if (v.wrap == Wrap::Left && t < -std::numbers::pi + 1e-9) t = std::numbers::pi;
        if (v.wrap == Wrap::Right && t > std::numbers::pi - 1e-9) t = -std::numbers::pi;
        total += t;
      }
      if (v.wrap == Wrap::Right) total = -total;
      double base = sweep(position_angle(u, v.wrap), position_angle(out, v.wrap), v.wrap);
      steps[i].extra_turns = std::llround((total - base) / (2 * std::numbers::pi));
    }
    return from_steps(std::move(steps));
  }
  throw Error(ErrorCode::Internal, "string pulling did not stabilize for " + cw.str());
}

}  // namespace pegboard
