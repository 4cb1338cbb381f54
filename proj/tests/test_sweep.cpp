#include <doctest.h>

#include "oracles.hpp"
#include "sweepmap/sweep.hpp"

using namespace sweepmap;

namespace {

std::vector<PathParams> grid() {
  std::vector<PathParams> out;
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 5; ++n) out.emplace_back(k, n);
  out.emplace_back(1, 6);
  out.emplace_back(1, 7);
  return out;
}

void check_against_oracle(const DyckPath& path) {
  const SweepImage image = sweep_map(path);
  const auto expected = oracle::sweep_by_scanning(path.str(), path.params().k(), path.params().n());
  CHECK(to_string(image.sigma) == expected.sigma);
  CHECK(image.tau == expected.tau);
  CHECK(image == sweep_map_sorted(path));
}

}  // namespace

TEST_CASE("sweep_map worked example") {
  const SweepImage image = sweep_map(DyckPath::validate("SWWSWWSWWWWWWWW", PathParams(4, 3)));
  CHECK(to_string(image.sigma) == "SWWSWWWSWWWWWWW");
  CHECK(image.tau == std::vector<Level>{0, 3, 6, 6, 9, 9, 12, 12, 12, 15, 15, 18, 18, 21, 24});

  // The level-12 endpoints come from path positions 12 (W), 7 (S), 2 (W) and
  // must appear right-to-left at sigma positions 7..9.
  CHECK(image.sigma[6] == Step::W);
  CHECK(image.sigma[7] == Step::S);
  CHECK(image.sigma[8] == Step::W);
}

TEST_CASE("sweep_map small cases") {
  const SweepImage one = sweep_map(DyckPath::validate("SW", PathParams(1, 1)));
  CHECK(to_string(one.sigma) == "SW");
  CHECK(one.tau == std::vector<Level>{0, 1});

  const SweepImage two = sweep_map(DyckPath::validate("SWWSWW", PathParams(2, 2)));
  CHECK(to_string(two.sigma) == "SSWWWW");
  CHECK(two.tau == std::vector<Level>{0, 0, 2, 2, 4, 4});
}

TEST_CASE("sweep_map matches the scanning oracle on the grid") {
  for (const auto& params : grid()) {
    for (const auto& path : enumerate_paths(params)) check_against_oracle(path);
  }
}

TEST_CASE("sweep_map matches the oracle on larger random paths") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PathParams params(1 + static_cast<std::int64_t>(seed % 5), 20 + static_cast<std::int64_t>(seed));
    check_against_oracle(random_path(params, seed));
  }
}

TEST_CASE("sweep image properties on the grid") {
  for (const auto& params : grid()) {
    for (const auto& path : enumerate_paths(params)) {
      const SweepImage image = sweep_map(path);
      const auto endpoints = rank_sequence(path);

      std::vector<Level> levels;
      for (const auto& e : endpoints) levels.push_back(e.level);
      std::sort(levels.begin(), levels.end());
      CHECK(image.tau == levels);

      // Within one level, origin indices decrease along sigma: rebuild the
      // origins by taking equal levels right to left.
      std::vector<std::size_t> origins;
      for (Level level = 0; level <= params.max_level(); level += params.n()) {
        for (auto it = endpoints.rbegin(); it != endpoints.rend(); ++it) {
          if (it->level == level) origins.push_back(it->origin_index);
        }
      }
      for (std::size_t i = 0; i + 1 < origins.size(); ++i) {
        if (image.tau[i] == image.tau[i + 1]) CHECK(origins[i] > origins[i + 1]);
      }

      CHECK(image.sigma.front() == Step::S);
      CHECK(oracle::is_dyck(to_string(image.sigma), params.k(), params.n()));
    }
  }
}
