#include "pegboard/loopcalc.hpp"

#include <map>
#include <mutex>

#include "pegboard/error.hpp"
#include "pegboard/geometry.hpp"

namespace pegboard {

std::string_view to_string(AlgebraLabel l) {
  switch (l) {
    case AlgebraLabel::R1: return "rho1";
    case AlgebraLabel::R2: return "rho2";
    case AlgebraLabel::R3: return "rho3";
    case AlgebraLabel::R12: return "rho12";
    case AlgebraLabel::R23: return "rho23";
    case AlgebraLabel::R123: return "rho123";
  }
  return "?";
}

std::optional<AlgebraLabel> parse_label(std::string_view s) {
  for (AlgebraLabel l : {AlgebraLabel::R1, AlgebraLabel::R2, AlgebraLabel::R3, AlgebraLabel::R12,
                         AlgebraLabel::R23, AlgebraLabel::R123}) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

LabelIdempotents idempotents_of(AlgebraLabel l) {
  using I = Idempotent;
  switch (l) {
    case AlgebraLabel::R1: return {I::I0, I::I1};
    case AlgebraLabel::R2: return {I::I1, I::I0};
    case AlgebraLabel::R3: return {I::I0, I::I1};
    case AlgebraLabel::R12: return {I::I0, I::I0};
    case AlgebraLabel::R23: return {I::I1, I::I1};
    case AlgebraLabel::R123: return {I::I0, I::I1};
  }
  return {I::I0, I::I0};
}

const ArcEntry& arc_of(AlgebraLabel l) {
  for (const ArcEntry& e : kArcDictionary) {
    if (e.label == l) return e;
  }
  throw Error(ErrorCode::Internal, "label missing from arc dictionary");
}

std::size_t TypeDGraph::add_vertex(std::string name, Idempotent idem) {
  vertices_.push_back({std::move(name), idem});
  return vertices_.size() - 1;
}

void TypeDGraph::add_edge(std::size_t from, std::size_t to, AlgebraLabel label) {
  if (from >= vertices_.size() || to >= vertices_.size()) throw Error(ErrorCode::Parse, "edge endpoint out of range");
  edges_.push_back({from, to, label});
}

void TypeDGraph::add_edge(std::string_view from, std::string_view to, AlgebraLabel label) {
  auto f = find(from);
  auto t = find(to);
  if (!f) throw Error(ErrorCode::Parse, "unknown vertex " + std::string(from));
  if (!t) throw Error(ErrorCode::Parse, "unknown vertex " + std::string(to));
  add_edge(*f, *t, label);
}

std::optional<std::size_t> TypeDGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

namespace {

std::string_view idem_name(Idempotent i) { return i == Idempotent::I0 ? "i0" : "i1"; }

std::vector<int> degrees(const TypeDGraph& g) {
  std::vector<int> deg(g.vertices().size(), 0);
  for (const TypeDEdge& e : g.edges()) {
    ++deg[e.from];
    ++deg[e.to];
  }
  return deg;
}

Letter arrival_letter(CellSide s) {
  switch (s) {
    case CellSide::R: return Letter::x;
    case CellSide::L: return Letter::X;
    case CellSide::T: return Letter::y;
    case CellSide::B: return Letter::Y;
  }
  return Letter::x;
}

// An isolated generator is a single crossing of its arc.
Word arrival_letters(const TypeDGraph& g, const Loop& loop) {
  Word w;
  if (loop.steps.empty()) {
    w.push_back(g.vertices()[loop.vertices.front()].idem == Idempotent::I0 ? Letter::x : Letter::y);
  }
  for (const LoopStep& s : loop.steps) {
    const ArcEntry& arc = arc_of(g.edges()[s.edge].label);
    w.push_back(arrival_letter(s.forward ? arc.to : arc.from));
  }
  return w;
}

}  // namespace

std::vector<std::string> validate_typed(const TypeDGraph& g) {
  std::vector<std::string> out;
  const auto& vs = g.vertices();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const TypeDEdge& e = g.edges()[k];
    LabelIdempotents want = idempotents_of(e.label);
    if (vs[e.from].idem != want.source) {
      out.push_back("edge " + std::to_string(k) + " (" + std::string(to_string(e.label)) + ") leaves " +
                    vs[e.from].name + " with idempotent " + std::string(idem_name(vs[e.from].idem)));
    }
    if (vs[e.to].idem != want.target) {
      out.push_back("edge " + std::to_string(k) + " (" + std::string(to_string(e.label)) + ") enters " +
                    vs[e.to].name + " with idempotent " + std::string(idem_name(vs[e.to].idem)));
    }
  }
  std::vector<int> deg = degrees(g);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) {
      out.push_back("vertex " + vs[v].name + " has degree " + std::to_string(deg[v]) + ", expected 2");
    }
  }
  return out;
}

std::vector<Loop> decompose_loops(const TypeDGraph& g) {
  std::vector<int> deg = degrees(g);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) {
      throw Error(ErrorCode::NotLoopType, "vertex " + g.vertices()[v].name + " has degree " + std::to_string(deg[v]));
    }
  }
  std::vector<std::vector<std::size_t>> incident(deg.size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    incident[g.edges()[k].from].push_back(k);
    if (g.edges()[k].to != g.edges()[k].from) incident[g.edges()[k].to].push_back(k);
  }
  std::vector<bool> used(g.edges().size(), false);
  std::vector<Loop> loops;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) {
      loops.push_back({{v}, {}});
      continue;
    }
    // Start along an arrow leaving v when there is one.
    std::optional<std::size_t> first;
    for (std::size_t k : incident[v]) {
      if (used[k]) continue;
      if (!first || (g.edges()[k].from == v && g.edges()[*first].from != v)) first = k;
    }
    if (!first) continue;
    Loop loop;
    std::size_t at = v;
    std::size_t k = *first;
    while (true) {
      used[k] = true;
      const TypeDEdge& e = g.edges()[k];
      bool forward = e.from == at;
      loop.vertices.push_back(at);
      loop.steps.push_back({k, forward});
      at = forward ? e.to : e.from;
      if (at == v) {
        bool open = false;
        for (std::size_t j : incident[v]) open = open || !used[j];
        if (!open) break;
      }
      std::optional<std::size_t> next;
      for (std::size_t j : incident[at]) {
        if (!used[j]) {
          next = j;
          break;
        }
      }
      if (!next) throw Error(ErrorCode::Internal, "loop walk got stuck");
      k = *next;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

CyclicWord loop_word(const TypeDGraph& g, const Loop& loop) { return CyclicWord::from(arrival_letters(g, loop)); }

namespace {

// The loop drawn through the centres of the cells it visits; each arrival
// letter is one crossing of a cut arc.
Polyline loop_polyline(const TypeDGraph& g, const Loop& loop) {
  Word w = arrival_letters(g, loop);
  Polyline p;
  p.period = abelianize(w);
  const Rational half(1, 2);
  std::int64_t cx = 0, cy = 0;
  for (Letter l : w) {
    p.vertices.push_back({Rational(cx) + half, Rational(cy) + half});
    LatticeVector d = abelianize(std::span<const Letter>(&l, 1));
    cx += d.dx;
    cy += d.dy;
  }
  return p;
}

}  // namespace

Multicurve typed_to_curves(const TypeDGraph& g) {
  if (auto errs = validate_typed(g); !errs.empty()) throw Error(ErrorCode::NotLoopType, errs.front());
  Multicurve out;
  for (const Loop& loop : decompose_loops(g)) {
    TautResult t = tautify(loop_polyline(g, loop));
    if (std::holds_alternative<NullHomotopic>(t)) {
      throw Error(ErrorCode::UnsupportedPattern, "loop through " + g.vertices()[loop.vertices.front()].name +
                                                     " bounds a disk or the puncture");
    }
    out.add(std::get<Component>(t));
  }
  return out;
}

std::vector<TypeDGraph> en_typed(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "order must be positive");
  std::vector<TypeDGraph> out;

  TypeDGraph line;
  for (std::int64_t i = 0; i < n; ++i) line.add_vertex("d" + std::to_string(i), Idempotent::I0);
  for (std::int64_t i = 0; i < n; ++i) {
    line.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n), AlgebraLabel::R12);
  }
  out.push_back(std::move(line));

  if (n % 2 == 0) {
    const std::int64_t k = n / 2;
    TypeDGraph b;
    std::size_t a = b.add_vertex("a", Idempotent::I1);
    std::vector<std::size_t> top, bottom;
    for (std::int64_t i = 1; i <= k; ++i) top.push_back(b.add_vertex("b" + std::to_string(i), Idempotent::I0));
    std::size_t d = b.add_vertex("d", Idempotent::I1);
    for (std::int64_t i = 1; i <= k; ++i) bottom.push_back(b.add_vertex("e" + std::to_string(i), Idempotent::I0));
    b.add_edge(a, top.front(), AlgebraLabel::R2);
    for (std::size_t i = 0; i + 1 < top.size(); ++i) b.add_edge(top[i], top[i + 1], AlgebraLabel::R12);
    b.add_edge(top.back(), d, AlgebraLabel::R1);
    b.add_edge(bottom.back(), d, AlgebraLabel::R3);
    for (std::size_t i = bottom.size() - 1; i > 0; --i) b.add_edge(bottom[i], bottom[i - 1], AlgebraLabel::R12);
    b.add_edge(bottom.front(), a, AlgebraLabel::R123);
    out.push_back(std::move(b));
  }
  return out;
}

Component beta(std::int64_t two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw Error(ErrorCode::InvalidOrder, "beta needs an even order of at least 2");
  static std::mutex mu;
  static std::map<std::int64_t, Component> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(two_k); it != cache.end()) return it->second;
  }
  Multicurve mc = typed_to_curves(en_typed(two_k).back());
  if (mc.size() != 1 || mc.components().front().is_line()) {
    throw Error(ErrorCode::Internal, "order " + std::to_string(two_k) + " pattern has no single peg component");
  }
  std::lock_guard lock(mu);
  return cache.emplace(two_k, mc.components().front()).first->second;
}

}  // namespace pegboard
