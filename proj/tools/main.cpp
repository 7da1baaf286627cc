#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flipmatch/commands.hpp"
#include "flipmatch/matching.hpp"

namespace {

flipmatch::FlipRule parse_rule_or_exit(const std::string& name) {
  const auto rule = flipmatch::parse_flip_rule(name);
  if (!rule) {
    std::cerr << "error: unknown rule '" << name << "' (expected flip or rotation)\n";
    std::exit(flipmatch::kExitUsage);
  }
  return *rule;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane almost-perfect matchings: generators, flip routing, flip-graph analysis"};
  app.require_subcommand(1);

  flipmatch::GenOptions gen;
  CLI::App* cgen = app.add_subcommand("gen", "generate a point set (and matching, where applicable)");
  cgen->add_option("kind", gen.kind, "convex | random | nested | windmill")->required();
  cgen->add_option("-n,--count", gen.n, "point count (convex, random)");
  cgen->add_option("--layers", gen.layers, "wall layers (nested)");
  cgen->add_option("--scale", gen.scale, "stretch factor (windmill)");
  cgen->add_option("--seed", gen.seed, "generator seed");
  cgen->add_option("-o,--out", gen.out_points, "points output file (default stdout)");
  cgen->add_option("--matching-out", gen.out_matching, "matching output file");

  flipmatch::AnalyzeOptions an;
  std::string an_rule = "flip";
  CLI::App* can = app.add_subcommand("analyze", "build the move graph and report its shape");
  can->add_option("points", an.points_path, "points file")->required();
  can->add_option("--rule", an_rule, "flip | rotation");
  can->add_option("--format", an.format, "text | json");
  can->add_option("--cap-n", an.cap, "largest point count to enumerate");
  can->add_option("--threads", an.threads, "worker threads for the diameter scan");
  can->add_flag("--timing", an.timing, "measure runtime_ms (report is no longer byte-stable)");

  flipmatch::RouteOptions rt;
  CLI::App* crt = app.add_subcommand("route", "find a flip sequence between two matchings");
  crt->add_option("points", rt.points_path, "points file")->required();
  crt->add_option("from", rt.from_path, "start matching file")->required();
  crt->add_option("to", rt.to_path, "target matching file")->required();
  crt->add_option("--mode", rt.mode, "canonical | bfs | convex");
  crt->add_option("-o,--out", rt.out_path, "sequence output file (default stdout)");
  crt->add_option("--cap-n", rt.cap, "largest point count to enumerate (bfs mode)");

  flipmatch::RenderOptions rd;
  CLI::App* crd = app.add_subcommand("render", "render a matching or sequence to SVG");
  crd->add_option("points", rd.points_path, "points file")->required();
  crd->add_option("input", rd.input_path, "matching or sequence file")->required();
  crd->add_option("--out-prefix", rd.out_prefix, "write frames to <prefix><k>.svg");

  flipmatch::VerifyOptions vf;
  CLI::App* cvf = app.add_subcommand("verify", "replay a sequence and check every step");
  cvf->add_option("points", vf.points_path, "points file")->required();
  cvf->add_option("sequence", vf.sequence_path, "sequence file")->required();

  flipmatch::PolygonOptions pg;
  CLI::App* cpg = app.add_subcommand("polygon", "print the spanning polygon used for routing");
  cpg->add_option("points", pg.points_path, "points file")->required();
  cpg->add_option("matching", pg.matching_path, "matching file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return flipmatch::kExitUsage;
  }

  if (cgen->parsed()) return flipmatch::cmd_gen(gen, std::cout, std::cerr);
  if (can->parsed()) {
    an.rule = parse_rule_or_exit(an_rule);
    return flipmatch::cmd_analyze(an, std::cout, std::cerr);
  }
  if (crt->parsed()) return flipmatch::cmd_route(rt, std::cout, std::cerr);
  if (crd->parsed()) return flipmatch::cmd_render(rd, std::cout, std::cerr);
  if (cvf->parsed()) return flipmatch::cmd_verify(vf, std::cout, std::cerr);
  if (cpg->parsed()) return flipmatch::cmd_polygon(pg, std::cout, std::cerr);
  return flipmatch::kExitUsage;
}
