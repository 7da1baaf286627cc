#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "flipmatch/matching.hpp"

namespace flipmatch {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

struct GenOptions {
  std::string kind;         // convex | random | nested | windmill
  int n = 7;                // convex/random point count
  int layers = 2;           // nested
  int scale = 1;            // windmill
  std::uint64_t seed = 1;
  std::string out_points;   // empty: stdout
  std::string out_matching; // nested/windmill wall matching, empty: skip
};

struct AnalyzeOptions {
  std::string points_path;
  FlipRule rule = FlipRule::EdgeFlip;
  std::string format = "text";  // text | json
  int cap = 11;
  int threads = 1;
  bool timing = false;  // keep runtime_ms at 0 unless asked, so reports are byte-stable
};

struct RouteOptions {
  std::string points_path;
  std::string from_path;
  std::string to_path;
  std::string mode = "canonical";  // canonical | bfs | convex
  std::string out_path;            // empty: stdout
  int cap = 11;                    // bfs mode only
};

struct RenderOptions {
  std::string points_path;
  std::string input_path;  // matching or sequence file, detected by header
  std::string out_prefix;  // frames written to <prefix><k>.svg; empty: stdout
};

struct VerifyOptions {
  std::string points_path;
  std::string sequence_path;
};

struct PolygonOptions {
  std::string points_path;
  std::string matching_path;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_route(const RouteOptions& opt, std::ostream& out, std::ostream& err);
int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_polygon(const PolygonOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace flipmatch
