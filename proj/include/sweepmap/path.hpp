#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sweepmap/error.hpp"

namespace sweepmap {

using Level = std::int64_t;
using BigCount = boost::multiprecision::cpp_int;

// S identifies a north step by its south endpoint, W an east step by its
// west endpoint.
enum class Step : char { S = 'S', W = 'W' };

using Word = std::vector<Step>;

/// Grid parameters of a (kn, n)-Dyck path.
class PathParams {
 public:
  /// Throws BadParams unless k, n >= 1, and ParamsOverflow if k*n*n or the
  /// word length does not fit in a signed 64-bit level.
  PathParams(std::int64_t k, std::int64_t n);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t n() const noexcept { return n_; }

  std::size_t length() const noexcept { return static_cast<std::size_t>((k_ + 1) * n_); }
  std::size_t north_count() const noexcept { return static_cast<std::size_t>(n_); }
  std::size_t east_count() const noexcept { return static_cast<std::size_t>(k_ * n_); }

  Level north_delta() const noexcept { return k_ * n_; }
  Level east_delta() const noexcept { return -n_; }
  Level max_level() const noexcept { return k_ * n_ * n_; }

  Level delta(Step s) const noexcept { return s == Step::S ? north_delta() : east_delta(); }

  friend bool operator==(const PathParams&, const PathParams&) = default;

 private:
  std::int64_t k_;
  std::int64_t n_;
};

/// Strict parse over {S, W}. Throws BadAlphabet with the offending position.
Word parse_word(std::string_view text);
std::string to_string(std::span<const Step> word);

/// n = #S, k = #W / #S. Throws WrongLetterCount if there is no S or the
/// ratio is not a positive integer.
PathParams infer_params(std::span<const Step> word);

/// A step word that is known to be a (kn, n)-Dyck path.
class DyckPath {
 public:
  /// Throws WrongLetterCount or BelowDiagonal (1-based index of the first
  /// prefix whose rank is negative).
  static DyckPath validate(std::span<const Step> word, const PathParams& params);
  static DyckPath validate(std::string_view text, const PathParams& params);

  const PathParams& params() const noexcept { return params_; }
  const Word& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::string str() const { return to_string(steps_); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.params_ == b.params_ && a.steps_ == b.steps_;
  }

 private:
  DyckPath(PathParams params, Word steps) : params_(params), steps_(std::move(steps)) {}

  PathParams params_;
  Word steps_;
};

struct RankedEndpoint {
  Step letter;
  Level level;               // rank of the step's starting lattice point
  std::size_t origin_index;  // 1-based position of the step in the path

  friend bool operator==(const RankedEndpoint&, const RankedEndpoint&) = default;
};

/// One endpoint per step, in path order. Levels are prefix sums of
/// (+kn for S, -n for W) starting at 0.
std::vector<RankedEndpoint> rank_sequence(const DyckPath& path);

/// Lexicographic (S < W) enumeration of every (kn, n)-Dyck path, optionally
/// restricted to the paths that start with `prefix`. Backtracking keeps
/// memory at O(L).
class PathEnumerator {
 public:
  explicit PathEnumerator(const PathParams& params, Word prefix = {});

  /// Next path in order, or nullopt once the stream is exhausted.
  std::optional<DyckPath> next();

 private:
  bool fill_from(std::size_t pos);

  PathParams params_;
  std::size_t fixed_;        // length of the fixed prefix
  Word word_;
  std::vector<Level> rank_;  // rank_[i] = rank after the first i letters
  std::vector<std::size_t> norths_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<DyckPath> enumerate_paths(const PathParams& params, std::optional<std::size_t> limit = {});

/// Every valid prefix of length `depth` (or shorter when L < depth), in
/// lexicographic order. Used to split enumeration into independent tasks.
std::vector<Word> enumerate_prefixes(const PathParams& params, std::size_t depth);

/// Fuss-Catalan number 1/(kn+1) * C((k+1)n, n), exact.
BigCount count_paths(const PathParams& params);

/// Seeded shuffle of n S's and kn W's rotated to its leftmost minimum-rank
/// cyclic shift. Always a valid path; not uniform when n > 1.
DyckPath random_path(const PathParams& params, std::uint64_t seed);

}  // namespace sweepmap
