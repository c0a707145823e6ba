#include "pegboard/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "pegboard/error.hpp"

namespace pegboard {

namespace {

struct SourceLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines with comments stripped, split on whitespace. The first
// one must be the header.
std::vector<SourceLine> tokenize(std::string_view text, std::string_view header) {
  std::vector<SourceLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (!seen_header) {
      std::string joined;
      for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
      if (joined != header) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(number) + ": expected header '" + std::string(header) + "'");
      }
      seen_header = true;
      continue;
    }
    out.push_back({number, std::move(tokens)});
  }
  if (!seen_header) throw Error(ErrorCode::Parse, "line 1: missing header '" + std::string(header) + "'");
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const std::string& s, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + s + "'");
  }
}

Rational frac(const Rational& r) { return r - Rational(r.floor(), 1); }

Component parse_line_record(const std::vector<std::string>& t, std::size_t line) {
  if (t.size() != 5) fail(line, "line record needs: line <dx> <dy> <num>/<den> <mult>");
  LatticeVector d{to_int(t[1], line, "dx"), to_int(t[2], line, "dy")};
  if (d.is_zero() || gcd_abs(d.dx, d.dy) != 1) fail(line, "line direction must be primitive");
  Rational off;
  try {
    off = Rational::parse(t[3]);
  } catch (const Error&) {
    fail(line, "bad offset '" + t[3] + "'");
  }
  off = frac(off);
  if (off.sign() == 0) fail(line, "line passes through the pegs (integral offset)");
  std::int64_t mult = to_int(t[4], line, "multiplicity");
  if (mult < 1) fail(line, "multiplicity must be positive");
  return Component::line(d, off, mult);
}

Component parse_pegs_record(const std::vector<std::string>& t, std::size_t line) {
  if (t.size() < 3) fail(line, "pegs record needs: pegs <mult> (<dx>,<dy>,<L|R>)...");
  std::int64_t mult = to_int(t[1], line, "multiplicity");
  if (mult < 1) fail(line, "multiplicity must be positive");
  std::string body;
  for (std::size_t i = 2; i < t.size(); ++i) body += t[i];
  static const std::regex step(R"(\((-?\d+),(-?\d+),([LR])(\d*)\))");
  std::vector<PegStep> steps;
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), step); it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != pos) fail(line, "unreadable peg step near '" + body.substr(pos) + "'");
    const auto& m = *it;
    steps.push_back({{std::stoll(m[1]), std::stoll(m[2])},
                     m[3] == "L" ? Wrap::Left : Wrap::Right,
                     m[4].length() ? std::stoll(m[4]) : 0});
    pos += static_cast<std::size_t>(m.length());
  }
  if (pos != body.size() || steps.empty()) fail(line, "unreadable peg steps '" + body + "'");
  PegWord pw = PegWord::from_steps(steps);
  Component c = Component::pegs(pw, 1);
  std::int64_t d = 1;
  for (const auto& s : pw.steps()) d = std::max(d, std::abs(s.displacement.dx) + std::abs(s.displacement.dy));
  TautResult taut = tautify(c.realize(Rational(1, 16 * d)));
  if (std::holds_alternative<NullHomotopic>(taut)) fail(line, "curve bounds a disk or the puncture");
  const Component& want = std::get<Component>(taut);
  if (!(want == c)) fail(line, "curve is not taut; its taut form is '" + want.str() + "'");
  return c.with_multiplicity(mult);
}

}  // namespace

Multicurve parse_curves(std::string_view text) {
  std::vector<Component> comps;
  std::vector<std::string> labels;
  for (auto& [line, tokens] : tokenize(text, kCurvesHeader)) {
    std::string label;
    if (tokens.size() > 1 && tokens.back().rfind("spinc=", 0) == 0) {
      label = tokens.back().substr(6);
      if (label.empty()) fail(line, "empty spinc tag");
      tokens.pop_back();
    }
    if (tokens[0] != "line" && tokens[0] != "pegs") fail(line, "unknown record '" + tokens[0] + "'");
    try {
      comps.push_back(tokens[0] == "line" ? parse_line_record(tokens, line) : parse_pegs_record(tokens, line));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      fail(line, e.what());
    }
    labels.push_back(std::move(label));
  }
  return Multicurve(std::move(comps), std::move(labels));
}

std::string curve_record(const Component& c, const std::string& label) {
  std::string s = c.str();
  if (!label.empty()) s += " spinc=" + label;
  return s;
}

std::string print_curves(const Multicurve& mc) {
  std::string out(kCurvesHeader);
  out += '\n';
  for (std::size_t i = 0; i < mc.size(); ++i) out += curve_record(mc.components()[i], mc.labels()[i]) + '\n';
  return out;
}

TypeDGraph parse_typed(std::string_view text) {
  TypeDGraph g;
  std::vector<std::size_t> gen_line;
  std::vector<std::size_t> arrow_line;
  for (const auto& [line, t] : tokenize(text, kTypedHeader)) {
    if (t[0] == "gen") {
      if (t.size() != 3) fail(line, "gen record needs: gen <name> <0|1>");
      if (g.find(t[1])) fail(line, "generator '" + t[1] + "' defined twice");
      if (t[2] != "0" && t[2] != "1") fail(line, "idempotent must be 0 or 1");
      g.add_vertex(t[1], t[2] == "0" ? Idempotent::I0 : Idempotent::I1);
      gen_line.push_back(line);
    } else if (t[0] == "arrow") {
      if (t.size() != 4) fail(line, "arrow record needs: arrow <src> <dst> <label>");
      auto label = parse_label(t[3]);
      if (!label) fail(line, "unknown algebra label '" + t[3] + "'");
      auto from = g.find(t[1]);
      auto to = g.find(t[2]);
      if (!from) fail(line, "unknown generator '" + t[1] + "'");
      if (!to) fail(line, "unknown generator '" + t[2] + "'");
      g.add_edge(*from, *to, *label);
      arrow_line.push_back(line);
    } else {
      fail(line, "unknown record '" + t[0] + "'");
    }
  }

  std::vector<std::string> problems;
  std::vector<int> degree(g.vertices().size(), 0);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const TypeDEdge& e = g.edges()[k];
    ++degree[e.from];
    ++degree[e.to];
    LabelIdempotents want = idempotents_of(e.label);
    if (g.vertices()[e.from].idem != want.source || g.vertices()[e.to].idem != want.target) {
      problems.push_back("line " + std::to_string(arrow_line[k]) + ": " + std::string(to_string(e.label)) +
                         " does not go from idempotent " + (want.source == Idempotent::I0 ? "0" : "1") + " to " +
                         (want.target == Idempotent::I0 ? "0" : "1"));
    }
  }
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] != 0 && degree[v] != 2) {
      problems.push_back("line " + std::to_string(gen_line[v]) + ": generator '" + g.vertices()[v].name + "' has " +
                         std::to_string(degree[v]) + " arrows, loop type needs 2");
    }
  }
  if (!problems.empty()) {
    std::string all;
    for (const auto& p : problems) all += (all.empty() ? "" : "\n") + p;
    throw Error(ErrorCode::NotLoopType, all);
  }
  return g;
}

std::string print_typed(const TypeDGraph& g) {
  std::string out(kTypedHeader);
  out += '\n';
  for (const auto& v : g.vertices()) out += "gen " + v.name + (v.idem == Idempotent::I0 ? " 0\n" : " 1\n");
  for (const auto& e : g.edges()) {
    out += "arrow " + g.vertices()[e.from].name + ' ' + g.vertices()[e.to].name + ' ' + std::string(to_string(e.label)) + '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& p, std::string_view content) {
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw Error(ErrorCode::Parse, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace pegboard
