#pragma once

#include <span>
#include <vector>

#include "sweepmap/path.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

// Level recovery walks sigma left to right. Position 1 gets level 0. At each
// still-empty position i an S copies the previous level; a W looks at the
// previous level m and computes
//
//   x = #{assigned levels equal to m} - #{assigned S levels equal to m - kn}
//
// x > 0 assigns m + n to the next x W's of sigma starting at i, x < 0 assigns
// m to the next |x| W's, and x = 0 is rejected as ZeroBranch. Batches can jump
// over S positions; those are filled when the loop reaches them.
//
// Errors: SigmaMalformed (length, letter counts, or sigma_1 != S),
// ZeroBranch and BatchOverflow (sigma is not a sweep image).

/// Counter-table version: O(L) total.
std::vector<Level> recover_levels(std::span<const Step> sigma, const PathParams& params);

/// Literal version that rescans every assigned entry at each W it processes.
/// O(L) per W, kept as the reference for differential tests.
std::vector<Level> recover_levels_naive(std::span<const Step> sigma, const PathParams& params);

/// Walks back from rank 0, each time consuming the right-most unconsumed
/// entry of tau at the current rank and emitting its sigma letter.
/// Throws NoEndpointAtRank(step index) or LeftoverEntries.
DyckPath reconstruct_path(const SweepImage& image);

/// reconstruct_path(sigma, recover_levels(sigma)).
DyckPath invert_sweep(std::span<const Step> sigma, const PathParams& params);

}  // namespace sweepmap
