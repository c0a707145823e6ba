#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace pegboard::cli;

int main(int argc, char** argv) {
  CLI::App app{"pegboard: immersed curves in the marked torus"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Convert a loop-type type-D file into curves");
  c->add_option("in", convert.in, "pegboard-typed v1 file")->required();
  c->add_option("out", convert.out, "pegboard-curves v1 file to write")->required();

  RankArgs rank;
  auto* r = app.add_subcommand("rank", "Rank of the pairing of two curve files");
  r->add_option("a", rank.a, "first curve file")->required();
  r->add_option("b", rank.b, "second curve file")->required();
  r->add_option("--psi", rank.psi, "gluing matrix a,b,c,d applied to the second file")->capture_default_str();
  r->add_flag("--by-spinc", rank.by_spinc, "split the rank by spin^c labels and relative height");
  r->add_option("--report", rank.report, "write a JSON report");

  PinchArgs pinch;
  auto* p = app.add_subcommand("pinch", "Simplify a symmetric curve to the standard one");
  p->add_option("curves", pinch.curves, "curve file with one symmetric component")->required();
  p->add_option("--order", pinch.order, "even order 2k")->required();
  p->add_option("--alphas", pinch.alphas, "directory of .curves files to audit against");
  p->add_option("--trace", pinch.trace, "write the trace as JSON");
  p->add_option("--svg", pinch.svg_dir, "directory for one SVG frame per step");

  VerifyArgs verify;
  verify.seed = default_seed();
  auto* v = app.add_subcommand("verify", "Random-corpus rank comparison against the pinched invariant");
  v->add_option("--order", verify.order, "even order 2k")->capture_default_str();
  v->add_option("--samples", verify.samples, "number of random curves")->capture_default_str();
  v->add_option("--seed", verify.seed, "seed (default: PEGBOARD_SEED)")->capture_default_str();
  v->add_option("--alpha-grid", verify.alpha_grid, "slope bound for the test lines")->capture_default_str();
  v->add_option("--sample", verify.only_sample, "replay a single sample of the run");
  v->add_option("--out", verify.out, "write the JSON report");

  RenderArgs render;
  std::string cover = "none";
  auto* d = app.add_subcommand("render", "Draw a curve file as SVG");
  d->add_option("in", render.in, "curve file")->required();
  d->add_option("--cover", cover, "none or vertical")->check(CLI::IsMember({"none", "vertical"}))->capture_default_str();
  d->add_option("--out", render.out, "SVG file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*c) return cmd_convert(convert, std::cout, std::cerr);
  if (*r) return cmd_rank(rank, std::cout, std::cerr);
  if (*p) return cmd_pinch(pinch, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  render.cover = cover == "vertical" ? pegboard::Cover::Vertical : pegboard::Cover::None;
  return cmd_render(render, std::cout, std::cerr);
}
