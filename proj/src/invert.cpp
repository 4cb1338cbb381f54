#include "sweepmap/invert.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sweepmap {

namespace {

void check_sigma(std::span<const Step> sigma, const PathParams& params) {
  if (sigma.size() != params.length()) {
    throw SweepError(ErrorKind::SigmaMalformed, "sigma has length " + std::to_string(sigma.size()) +
                                                    ", expected " + std::to_string(params.length()));
  }
  const auto norths = static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), Step::S));
  if (norths != params.north_count()) {
    throw SweepError(ErrorKind::SigmaMalformed, "sigma has " + std::to_string(norths) + " S, expected " +
                                                    std::to_string(params.north_count()));
  }
  if (sigma.front() != Step::S) {
    throw SweepError(ErrorKind::SigmaMalformed, "sigma must start with S", 1);
  }
}

[[noreturn]] void zero_branch(std::size_t pos, Level m) {
  throw SweepError(ErrorKind::ZeroBranch,
                   "not a sweep image: x = 0 at position " + std::to_string(pos) + " (level " + std::to_string(m) + ")",
                   pos);
}

[[noreturn]] void batch_overflow(std::size_t pos, Level x) {
  throw SweepError(ErrorKind::BatchOverflow,
                   "not a sweep image: batch of " + std::to_string(x) + " W's at position " + std::to_string(pos) +
                       " runs past the end of sigma",
                   pos);
}

}  // namespace

std::vector<Level> recover_levels(std::span<const Step> sigma, const PathParams& params) {
  check_sigma(sigma, params);
  const std::size_t len = sigma.size();
  const Level n = params.n();
  const Level kn = params.north_delta();

  // w_positions lists W indices in order; w_rank[i] is i's slot in it.
  std::vector<std::size_t> w_positions;
  std::vector<std::size_t> w_rank(len, 0);
  w_positions.reserve(params.east_count());
  for (std::size_t i = 0; i < len; ++i) {
    if (sigma[i] == Step::W) {
      w_rank[i] = w_positions.size();
      w_positions.push_back(i);
    }
  }

  // Counters cover exactly the prefix 1..i-1 when position i is examined. An
  // empty W is never preceded by a batch that reached past it, so at that
  // point the prefix is the whole assigned set.
  const auto buckets = static_cast<std::size_t>(kn) + 1;
  std::vector<std::int64_t> total(buckets, 0), souths(buckets, 0);
  std::vector<Level> tau(len, 0);
  std::vector<char> assigned(len, 0);

  auto tally = [&](std::size_t i) {
    const auto b = static_cast<std::size_t>(tau[i] / n);
    ++total[b];
    if (sigma[i] == Step::S) ++souths[b];
  };

  assigned[0] = 1;
  tally(0);
  for (std::size_t i = 1; i < len; ++i) {
    if (!assigned[i]) {
      const Level m = tau[i - 1];
      if (sigma[i] == Step::S) {
        tau[i] = m;
      } else {
        const Level lower = m - kn;
        const Level x = total[static_cast<std::size_t>(m / n)] -
                        (lower >= 0 ? souths[static_cast<std::size_t>(lower / n)] : 0);
        if (x == 0) zero_branch(i + 1, m);
        const Level level = x > 0 ? m + n : m;
        const auto count = static_cast<std::size_t>(std::llabs(x));
        const std::size_t first = w_rank[i];
        if (count > w_positions.size() - first) batch_overflow(i + 1, x);
        for (std::size_t j = first; j < first + count; ++j) {
          tau[w_positions[j]] = level;
          assigned[w_positions[j]] = 1;
        }
      }
      assigned[i] = 1;
    }
    tally(i);
  }
  return tau;
}

std::vector<Level> recover_levels_naive(std::span<const Step> sigma, const PathParams& params) {
  check_sigma(sigma, params);
  const std::size_t len = sigma.size();
  const Level kn = params.north_delta();

  std::vector<Level> tau(len, 0);
  std::vector<char> assigned(len, 0);
  assigned[0] = 1;

  for (std::size_t i = 1; i < len; ++i) {
    if (assigned[i]) {
      // Batches only ever assign W positions.
      if (sigma[i] == Step::S) throw std::logic_error("S position " + std::to_string(i + 1) + " assigned by a batch");
      continue;
    }
    const Level m = tau[i - 1];
    if (sigma[i] == Step::S) {
      tau[i] = m;
      assigned[i] = 1;
      continue;
    }

    Level same = 0, lower_souths = 0;
    for (std::size_t j = 0; j < len; ++j) {
      if (!assigned[j]) continue;
      if (j >= i) throw std::logic_error("assigned set is not the prefix 1.." + std::to_string(i));
      if (tau[j] == m) ++same;
      if (tau[j] == m - kn && sigma[j] == Step::S) ++lower_souths;
    }
    const Level x = same - lower_souths;
    if (x == 0) zero_branch(i + 1, m);

    const Level level = x > 0 ? m + params.n() : m;
    Level remaining = std::llabs(x);
    for (std::size_t j = i; j < len && remaining > 0; ++j) {
      if (sigma[j] != Step::W) continue;
      tau[j] = level;
      assigned[j] = 1;
      --remaining;
    }
    if (remaining > 0) batch_overflow(i + 1, x);
  }
  return tau;
}

DyckPath reconstruct_path(const SweepImage& image) {
  const PathParams& params = image.params;
  const std::size_t len = params.length();
  if (image.sigma.size() != len || image.tau.size() != len) {
    throw SweepError(ErrorKind::SigmaMalformed, "sigma and tau must both have length " + std::to_string(len));
  }

  // Indices per level, ascending; consumption pops from the back.
  const Level n = params.n();
  std::vector<std::vector<std::size_t>> by_level(static_cast<std::size_t>(params.k() * n) + 1);
  std::size_t bucketed = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Level t = image.tau[i];
    if (t >= 0 && t <= params.max_level() && t % n == 0) {
      by_level[static_cast<std::size_t>(t / n)].push_back(i);
      ++bucketed;
    }
  }

  Word out;
  out.reserve(len);
  Level rank = 0;
  for (std::size_t step = 1; step <= len; ++step) {
    if (rank < 0 || rank > params.max_level() || by_level[static_cast<std::size_t>(rank / n)].empty()) {
      throw SweepError(ErrorKind::NoEndpointAtRank,
                       "no unconsumed endpoint at rank " + std::to_string(rank) + " for step " + std::to_string(step),
                       step);
    }
    auto& slot = by_level[static_cast<std::size_t>(rank / n)];
    const Step letter = image.sigma[slot.back()];
    slot.pop_back();
    out.push_back(letter);
    rank += params.delta(letter);
  }
  if (bucketed != len) {
    throw SweepError(ErrorKind::LeftoverEntries,
                     std::to_string(len - bucketed) + " tau entries were never consumed");
  }
  return DyckPath::validate(out, params);
}

DyckPath invert_sweep(std::span<const Step> sigma, const PathParams& params) {
  auto tau = recover_levels(sigma, params);
  return reconstruct_path(SweepImage{params, Word(sigma.begin(), sigma.end()), std::move(tau)});
}

}  // namespace sweepmap
