#include "pegboard/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

namespace pegboard {

namespace {

constexpr double kScale = 200.0;
constexpr double kMargin = 20.0;

const char* kColors[] = {"#1f5fa8", "#b8321f", "#2e7d32", "#7b3fa0", "#c77700", "#00838f"};

// Visible radii: corners that turn further sit closer to the peg.
std::vector<Polyline> lifts_for_drawing(const Multicurve& mc) {
  std::int64_t d = 1;
  struct Corner {
    double turn;
    std::size_t comp, visit;
  };
  std::vector<Corner> corners;
  for (std::size_t c = 0; c < mc.size(); ++c) {
    const Component& comp = mc.components()[c];
    if (comp.is_line()) continue;
    for (const auto& s : comp.as_pegs().pegs.steps()) d = std::max(d, std::abs(s.displacement.dx) + std::abs(s.displacement.dy));
    auto t = comp.as_pegs().pegs.turning();
    for (std::size_t v = 0; v < t.size(); ++v) corners.push_back({t[v], c, v});
  }
  std::stable_sort(corners.begin(), corners.end(), [](const Corner& x, const Corner& y) { return x.turn > y.turn; });
  const Rational eps(1, 8 * d);
  std::vector<std::vector<Rational>> radii(mc.size());
  for (std::size_t c = 0; c < mc.size(); ++c) {
    const Component& comp = mc.components()[c];
    radii[c].assign(comp.is_line() ? 0 : comp.as_pegs().pegs.size(), eps);
  }
  const auto m = static_cast<std::int64_t>(corners.size());
  for (std::int64_t k = 0; k < m; ++k) {
    radii[corners[k].comp][corners[k].visit] = eps * Rational(m + k + 1, 2 * m);
  }
  std::vector<Polyline> out;
  for (std::size_t c = 0; c < mc.size(); ++c) out.push_back(mc.components()[c].realize(radii[c]));
  return out;
}

std::int64_t floor_of(const Rational& r) { return static_cast<std::int64_t>(r.floor()); }

struct Piece {
  std::size_t comp;
  std::vector<Point> points;  // already translated into the drawn window
};

// Splits the closed lift at integer x (and integer y for the torus) and
// translates every piece back into the fundamental window.
std::vector<Piece> cut_into_cells(const Polyline& p, std::size_t comp, Cover cover) {
  std::vector<Point> ring = p.vertices;
  ring.push_back(p.vertices.front() + to_point(p.period));
  std::vector<Piece> pieces;
  std::optional<std::pair<std::int64_t, std::int64_t>> open_cell;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    const Point a = ring[i], b = ring[i + 1];
    std::vector<Rational> ts{Rational(0), Rational(1)};
    auto add_crossings = [&](const Rational& u0, const Rational& u1) {
      if (u0 == u1) return;
      for (std::int64_t k = std::min(floor_of(u0), floor_of(u1)); k <= std::max(floor_of(u0), floor_of(u1)) + 1; ++k) {
        Rational t = (Rational(k) - u0) / (u1 - u0);
        if (Rational(0) < t && t < Rational(1)) ts.push_back(t);
      }
    };
    add_crossings(a.x, b.x);
    if (cover == Cover::None) add_crossings(a.y, b.y);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
      Point u = a + (b - a) * ts[j];
      Point v = a + (b - a) * ts[j + 1];
      Point mid = (u + v) * Rational(1, 2);
      std::int64_t cx = floor_of(mid.x);
      std::int64_t cy = cover == Cover::None ? floor_of(mid.y) : 0;
      Point shift{Rational(-cx), Rational(-cy)};
      if (!open_cell || *open_cell != std::pair{cx, cy}) {
        pieces.push_back({comp, {u + shift}});
        open_cell = std::pair{cx, cy};
      }
      pieces.back().points.push_back(v + shift);
    }
  }
  // The last piece continues into the first when the lift closes up inside
  // one cell.
  if (pieces.size() > 1 && pieces.back().points.back() == pieces.front().points.front()) {
    auto& last = pieces.back().points;
    last.insert(last.end(), pieces.front().points.begin() + 1, pieces.front().points.end());
    pieces.front() = std::move(pieces.back());
    pieces.pop_back();
  }
  return pieces;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const Multicurve& mc, Cover cover) {
  std::vector<Piece> pieces;
  auto lifts = lifts_for_drawing(mc);
  for (std::size_t c = 0; c < lifts.size(); ++c) {
    auto ps = cut_into_cells(lifts[c], c, cover);
    pieces.insert(pieces.end(), ps.begin(), ps.end());
  }
  std::int64_t y_lo = 0, y_hi = 1;
  if (cover == Cover::Vertical && !pieces.empty()) {
    y_lo = y_hi = floor_of(pieces.front().points.front().y);
    for (const auto& pc : pieces) {
      for (const auto& q : pc.points) {
        y_lo = std::min(y_lo, floor_of(q.y));
        y_hi = std::max(y_hi, floor_of(q.y) + 1);
      }
    }
  }
  const double width = kScale + 2 * kMargin;
  const double height = kScale * static_cast<double>(y_hi - y_lo) + 2 * kMargin;
  auto sx = [&](const Rational& x) { return kMargin + kScale * x.to_double(); };
  auto sy = [&](const Rational& y) { return height - kMargin - kScale * (y - Rational(y_lo)).to_double(); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  os << "<rect class=\"cell\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kScale)
     << "\" height=\"" << num(height - 2 * kMargin) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (std::int64_t y = y_lo; y <= y_hi; ++y) {
    for (std::int64_t x = 0; x <= 1; ++x) {
      os << "<circle class=\"peg\" cx=\"" << num(sx(Rational(x))) << "\" cy=\"" << num(sy(Rational(y)))
         << "\" r=\"4\" fill=\"#000\"/>\n";
    }
  }
  for (const Piece& pc : pieces) {
    os << "<path class=\"curve\" data-component=\"" << pc.comp << "\" fill=\"none\" stroke=\""
       << kColors[pc.comp % std::size(kColors)] << "\" stroke-width=\"2\" d=\"";
    for (std::size_t i = 0; i < pc.points.size(); ++i) {
      os << (i == 0 ? "M" : " L") << num(sx(pc.points[i].x)) << ' ' << num(sy(pc.points[i].y));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pegboard
