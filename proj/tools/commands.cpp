#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pegboard/error.hpp"
#include "pegboard/io.hpp"
#include "pegboard/loopcalc.hpp"
#include "pegboard/pairing.hpp"
#include "pegboard/pinch.hpp"

namespace pegboard::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PEGBOARD_SEED")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return 20240601;
}

namespace {

json report_header(const std::string& command, std::optional<std::uint64_t> seed) {
  json j;
  j["schema"] = kReportSchema;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

void write_json(const fs::path& p, const json& j) { write_file_atomic(p, j.dump(2) + "\n"); }

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

MCGMatrix parse_psi(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "--psi expects four integers a,b,c,d; got '" + text + "'");
    }
  }
  if (v.size() != 4) throw Error(ErrorCode::Parse, "--psi expects four integers a,b,c,d; got '" + text + "'");
  return MCGMatrix(v[0], v[1], v[2], v[3]);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParallelComponents: return kPairingError;
    case ErrorCode::Stuck: return kViolation;
    default: return kInputError;
  }
}

std::string lattice_str(LatticeVector v) { return "(" + std::to_string(v.dx) + "," + std::to_string(v.dy) + ")"; }

}  // namespace

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  try {
    TypeDGraph g = parse_typed(read_file(args.in));
    Multicurve mc = typed_to_curves(g);
    write_file_atomic(args.out, print_curves(mc));
    std::int64_t n = 0;
    for (const Component& c : mc.components()) n += homology_class(c).dx;
    out << mc.size() << " component" << (mc.size() == 1 ? "" : "s") << ", total class (" << n << ",0)\n";
    for (const Component& c : mc.components()) {
      out << "  " << c.str() << "  class " << lattice_str(homology_class(c));
      if (!c.is_line()) {
        bool sym = is_self_conjugate(c);
        out << (sym ? "  self-conjugate" : "  not self-conjugate");
        if (n > 0) out << "  f=" << f_value(c, n) << " (mod " << n << ")";
        out << "  peg_span=" << peg_span(lift(c, sym ? Normalization{Symmetric{}} : Normalization{Offset{}}));
      }
      out << '\n';
    }
    return kOk;
  } catch (const Error& e) {
    err << args.in.string() << ": " << e.what() << '\n';
    return exit_for(e);
  }
}

int cmd_rank(const RankArgs& args, std::ostream& out, std::ostream& err) {
  try {
    MCGMatrix psi = parse_psi(args.psi);
    Multicurve a = parse_curves(read_file(args.a));
    Multicurve b = parse_curves(read_file(args.b));
    std::int64_t total = hf_rank(a, psi, b);
    out << "rank " << total << '\n';
    json rep = report_header("rank", std::nullopt);
    rep["inputs"] = {{"a", args.a.string()}, {"b", args.b.string()}, {"psi", args.psi}};
    rep["rank"] = total;
    json rows = json::array();
    if (args.by_spinc) {
      for (const auto& [key, count] : rank_by_spinc(a, psi, b)) {
        const auto& [la, lb, h] = key;
        out << "  " << (la.empty() ? "-" : la) << ' ' << (lb.empty() ? "-" : lb) << ' ' << h.str() << ' ' << count << '\n';
        rows.push_back({{"a", la}, {"b", lb}, {"height", h.str()}, {"rank", count}});
      }
    }
    rep["rows"] = rows;
    rep["pass"] = true;
    if (args.report) write_json(*args.report, rep);
    return kOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.code() == ErrorCode::ParallelComponents) {
      err << "the two multicurves share a component class, so the pairing has no well-defined rank\n";
    }
    return exit_for(e);
  }
}

namespace {

std::vector<Multicurve> load_alphas(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".curves") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Multicurve> out;
  for (const auto& f : files) {
    try {
      out.push_back(parse_curves(read_file(f)));
    } catch (const Error& e) {
      throw Error(e.code(), f.string() + ": " + e.what());
    }
  }
  return out;
}

json trace_json(const PinchTrace& t, std::int64_t order, const Multicurve& input) {
  json j = report_header("pinch", std::nullopt);
  j["order"] = order;
  j["input"] = print_curves(input);
  json steps = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const PinchStep& s = t.steps[i];
    json audit = json::array();
    for (const auto& a : s.audit) audit.push_back(optional_int(a));
    steps.push_back({{"index", i},
                     {"move", s.move},
                     {"n", s.n},
                     {"measure", {s.measure.n, s.measure.height_total, s.measure.length}},
                     {"audit", audit},
                     {"curves", print_curves(s.snapshot)}});
  }
  j["steps"] = steps;
  j["stuck"] = t.stuck;
  j["diagnostic"] = t.diagnostic;
  j["audit_monotone"] = t.audit_monotone();
  return j;
}

}  // namespace

int cmd_pinch(const PinchArgs& args, std::ostream& out, std::ostream& err) {
  Multicurve input;
  PinchTrace trace;
  try {
    input = parse_curves(read_file(args.curves));
    std::vector<Multicurve> alphas = args.alphas ? load_alphas(*args.alphas) : default_audit_family();
    trace = pinch_simplify(input, args.order, alphas);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }

  const Multicurve& last = trace.steps.back().snapshot;
  std::int64_t mult = input.empty() ? 1 : input.components()[0].multiplicity();
  bool reached = last == Multicurve({beta(args.order).with_multiplicity(mult)});
  bool ok = !trace.stuck && trace.audit_monotone() && reached;

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const PinchStep& s = trace.steps[i];
    out << "step " << i << ": " << s.move << "  n=" << s.n << "  " << curve_record(s.snapshot.components()[0]) << '\n';
  }
  if (trace.stuck) out << "stuck: " << trace.diagnostic << '\n';
  out << (ok ? "reached beta(" + std::to_string(args.order) + ")\n" : "FAILED\n");

  json j = trace_json(trace, args.order, input);
  j["reached_beta"] = reached;
  j["pass"] = ok;
  try {
    if (args.trace) write_json(*args.trace, j);
    if (args.svg_dir) {
      fs::create_directories(*args.svg_dir);
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "step_%03zu.svg", i);
        write_file_atomic(*args.svg_dir / name, render_svg(trace.steps[i].snapshot, Cover::Vertical));
      }
    }
    if (!ok) {
      // Everything needed to replay the failure sits next to the trace.
      fs::path bundle = args.trace ? fs::path(*args.trace).replace_extension(".counterexample.json")
                                   : fs::path("pinch.counterexample.json");
      write_json(bundle, j);
      err << "counterexample written to " << bundle.string() << '\n';
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return ok ? kOk : kViolation;
}

namespace {

std::vector<LatticeVector> slope_grid(std::int64_t bound) {
  std::vector<LatticeVector> out;
  for (std::int64_t q = 0; q <= bound; ++q) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (q == 0 && p != 1) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

json verify_sample(std::uint64_t seed, std::int64_t index, std::int64_t order, std::int64_t grid) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  Component g = random_symmetric_component(rng, order, 16);
  Multicurve m2({Component::line({1, 0}, Rational(1, 2), order), g}, {"s0", "s1"});

  std::int64_t checks = 0, skipped = 0;
  json failures = json::array();
  for (LatticeVector s : slope_grid(grid)) {
    Multicurve m1({Component::line(s, Rational(1, 2))});
    RankReport rep = verify_rank_inequality(m1, m2, MCGMatrix::identity(), order);
    for (const RankComparison& r : rep.rows) {
      ++checks;
      if (!r.evaluated()) ++skipped;
      if (!r.pass()) {
        failures.push_back({{"slope", {s.dx, s.dy}},
                            {"sector", r.sector},
                            {"check", r.check},
                            {"original", optional_int(r.original)},
                            {"pinched", optional_int(r.pinched)}});
      }
    }
  }
  return {{"sample", index},     {"curve", curve_record(g, "s1")}, {"checks", checks},
          {"not_evaluated", skipped}, {"failures", failures},       {"pass", failures.empty()}};
}

}  // namespace

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.samples < 0 || args.alpha_grid < 1) {
    err << "--samples must be non-negative and --alpha-grid positive\n";
    return kInputError;
  }
  if (args.order < 2 || args.order % 2 != 0) {
    err << "InvalidOrder: --order must be even and at least 2\n";
    return kInputError;
  }
  json rep = report_header("verify", args.seed);
  rep["order"] = args.order;
  rep["alpha_grid"] = args.alpha_grid;
  rep["samples"] = args.samples;
  json rows = json::array();
  std::optional<json> first_failure;
  std::vector<std::int64_t> which;
  if (args.only_sample) {
    which.push_back(*args.only_sample);
  } else {
    which.resize(static_cast<std::size_t>(args.samples));
    std::iota(which.begin(), which.end(), 0);
  }
  try {
    for (std::int64_t i : which) {
      json row = verify_sample(args.seed, i, args.order, args.alpha_grid);
      if (!row["pass"].get<bool>() && !first_failure) first_failure = row;
      rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
  bool pass = !first_failure;
  rep["rows"] = rows;
  rep["pass"] = pass;
  if (first_failure) {
    rep["replay"] = {{"seed", args.seed}, {"sample", (*first_failure)["sample"]}, {"order", args.order},
                     {"alpha_grid", args.alpha_grid}};
  }
  std::int64_t checks = 0;
  for (const auto& r : rows) checks += r["checks"].get<std::int64_t>();
  out << rows.size() << " samples, " << checks << " comparisons, " << (pass ? "all pass" : "FAILED") << '\n';
  if (first_failure) out << "first failure: sample " << (*first_failure)["sample"] << " " << (*first_failure)["curve"].get<std::string>() << '\n';
  try {
    if (args.out) write_json(*args.out, rep);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return pass ? kOk : kViolation;
}

int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::string text = read_file(args.in);
    bool blank = std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); });
    Multicurve mc = blank ? Multicurve{} : parse_curves(text);
    write_file_atomic(args.out, render_svg(mc, args.cover));
    out << "wrote " << args.out.string() << " (" << mc.size() << " component" << (mc.size() == 1 ? "" : "s") << ")\n";
    return kOk;
  } catch (const Error& e) {
    err << args.in.string() << ": " << e.what() << '\n';
    return exit_for(e);
  }
}

}  // namespace pegboard::cli
