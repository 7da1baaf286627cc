#pragma once

#include <cstdint>
#include <vector>

#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// splitmix64: tiny, seedable, identical output on every platform. The
/// standard distributions are implementation-defined, so sampling helpers
/// are provided here instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);           // uniform in [0, bound), unbiased
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // uniform in [lo, hi]

 private:
  std::uint64_t state_;
};

/// n points in strictly convex position: distinct abscissas on the parabola
/// y = x^2 (no three points of a parabola are collinear, so general position
/// is automatic). Requires 1 <= n <= 2001 (odd not required).
PointSet gen_convex(int n, std::uint64_t seed);

/// n points uniform in [-bound, bound]^2, rejection-sampled into general
/// position. Throws std::runtime_error if the retry budget is exhausted
/// (only plausible for bounds far too small for n).
PointSet gen_random(int n, std::uint64_t seed, Coord bound = 1000);

/// Nested-walls instance: a center point surrounded by `layers` concentric
/// rings of three wall segments each (n = 6*layers + 1). Consecutive rings
/// are rotated against each other so every gap is covered by the next wall;
/// freeing a hull point takes at least one flip per ring. Ring radii grow
/// geometrically and integer rounding is de-collinearized by a small
/// seed-driven jitter with retries.
struct NestedInstance {
  PointSet points;
  Matching walls;  // wall segments; the center is unmatched
  int layers = 0;
};

NestedInstance gen_nested(int layers, std::uint64_t seed);

/// Pinwheel instance with 9 points: a center, four inner vane tips and four
/// outer vane tips related by exact 90-degree rotation, matched tip-to-tip.
/// The four vanes screen the center so tightly that no move of the rotation
/// rule applies to the vane matching, while plain edge flips remain
/// available. scale stretches the construction without changing any
/// orientation sign.
struct WindmillInstance {
  PointSet points;
  Matching vanes;  // center point unmatched
};

WindmillInstance gen_windmill(int scale = 1);

/// Point sets scanned by the rotation-disconnectedness search: pinwheels at
/// several scales plus small control instances.
std::vector<PointSet> rotation_search_family();

}  // namespace flipmatch
