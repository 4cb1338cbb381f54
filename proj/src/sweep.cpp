#include "sweepmap/sweep.hpp"

#include <algorithm>

namespace sweepmap {

SweepImage sweep_map(const DyckPath& path) {
  const PathParams& params = path.params();
  const auto endpoints = rank_sequence(path);

  // Levels are multiples of n in [0, k*n*n], so level / n is a bucket index
  // in [0, k*n]. Counting sort over the endpoints taken right to left keeps
  // larger origin indices first inside each bucket.
  const auto buckets = static_cast<std::size_t>(params.k() * params.n()) + 1;
  std::vector<std::size_t> start(buckets + 1, 0);
  for (const auto& e : endpoints) ++start[static_cast<std::size_t>(e.level / params.n()) + 1];
  for (std::size_t b = 0; b < buckets; ++b) start[b + 1] += start[b];

  SweepImage image{params, Word(endpoints.size()), std::vector<Level>(endpoints.size())};
  for (auto it = endpoints.rbegin(); it != endpoints.rend(); ++it) {
    const std::size_t slot = start[static_cast<std::size_t>(it->level / params.n())]++;
    image.sigma[slot] = it->letter;
    image.tau[slot] = it->level;
  }
  return image;
}

SweepImage sweep_map_sorted(const DyckPath& path) {
  auto endpoints = rank_sequence(path);
  std::sort(endpoints.begin(), endpoints.end(), [](const RankedEndpoint& a, const RankedEndpoint& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.origin_index > b.origin_index;
  });
  SweepImage image{path.params(), {}, {}};
  image.sigma.reserve(endpoints.size());
  image.tau.reserve(endpoints.size());
  for (const auto& e : endpoints) {
    image.sigma.push_back(e.letter);
    image.tau.push_back(e.level);
  }
  return image;
}

}  // namespace sweepmap
