#pragma once

#include <vector>

#include "sweepmap/path.hpp"

namespace sweepmap {

/// The sweep map's output: letters sorted by level, with the aligned levels.
struct SweepImage {
  PathParams params;
  Word sigma;
  std::vector<Level> tau;

  friend bool operator==(const SweepImage&, const SweepImage&) = default;
};

/// Sorts the path's ranked endpoints by (level ascending, origin index
/// descending), i.e. a right-to-left sweep that visits lower levels first.
SweepImage sweep_map(const DyckPath& path);

/// Reference version: builds the endpoint list and sorts it with the
/// explicit comparison key. O(L log L).
SweepImage sweep_map_sorted(const DyckPath& path);

}  // namespace sweepmap
