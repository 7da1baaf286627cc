#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flipmatch/flipseq.hpp"
#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// Parse failure with the 1-based line it happened on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Point file: one "x y" pair per line; blank lines and lines starting with
/// '#' are skipped. Indices are assigned in file order.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& ps);

/// Matching file: a line "unmatched <i>" followed by one "<i> <j>" line per
/// edge. Validated against the point set.
Matching read_matching(std::istream& in, const PointSet& ps);
void write_matching(std::ostream& out, const Matching& m);

/// Sequence file: a line "start", the start matching block, then one
/// "flip <p> <q> <r>" line per step. Structure is parsed here; step legality
/// is the caller's concern (validate_sequence / end_matching).
FlipSequence read_sequence(std::istream& in, const PointSet& ps);
void write_sequence(std::ostream& out, const FlipSequence& seq);

/// Flip-graph analysis summary. Serialized deterministically: two runs over
/// the same input produce identical bytes (runtime_ms stays 0 unless timing
/// was explicitly requested).
struct AnalysisReport {
  int n = 0;
  FlipRule rule = FlipRule::EdgeFlip;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  int components = 0;
  std::optional<int> diameter;                      // absent when disconnected
  std::optional<std::pair<int, int>> witness_pair;  // matching indices realizing the diameter
  std::int64_t runtime_ms = 0;
};

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace flipmatch
