#pragma once

#include <string>
#include <vector>

#include "flipmatch/flipseq.hpp"
#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// One SVG document showing the points (labeled by index, unmatched point
/// ringed) and the matching edges. Output is deterministic: fixed viewport,
/// fixed formatting, no timestamps.
std::string render_matching_svg(const PointSet& ps, const Matching& m);

/// One SVG per step: frame 0 is the start matching; frame k shows the
/// matching after flip k with the added edge emphasized and the removed edge
/// dashed. A sequence with f flips yields f+1 frames.
std::vector<std::string> render_sequence_svg(const PointSet& ps, const FlipSequence& seq);

}  // namespace flipmatch
