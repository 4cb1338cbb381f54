#include "sweepmap/path.hpp"

#include <algorithm>
#include <random>

namespace sweepmap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadAlphabet: return "BadAlphabet";
    case ErrorKind::WrongLetterCount: return "WrongLetterCount";
    case ErrorKind::BelowDiagonal: return "BelowDiagonal";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParamsOverflow: return "ParamsOverflow";
    case ErrorKind::SigmaMalformed: return "SigmaMalformed";
    case ErrorKind::ZeroBranch: return "InvalidSweepImage(x=0)";
    case ErrorKind::BatchOverflow: return "InvalidSweepImage(batch overflow)";
    case ErrorKind::NoEndpointAtRank: return "NoEndpointAtRank";
    case ErrorKind::LeftoverEntries: return "LeftoverEntries";
  }
  return "Unknown";
}

PathParams::PathParams(std::int64_t k, std::int64_t n) : k_(k), n_(n) {
  if (k < 1 || n < 1) {
    throw SweepError(ErrorKind::BadParams,
                     "k and n must be positive (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  std::int64_t kn = 0, knn = 0, len = 0;
  if (__builtin_mul_overflow(k, n, &kn) || __builtin_mul_overflow(kn, n, &knn) ||
      __builtin_add_overflow(kn, n, &len)) {
    throw SweepError(ErrorKind::ParamsOverflow,
                     "k*n*n exceeds the 64-bit level range (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

Word parse_word(std::string_view text) {
  Word word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'S': word.push_back(Step::S); break;
      case 'W': word.push_back(Step::W); break;
      default:
        throw SweepError(ErrorKind::BadAlphabet,
                         "letter '" + std::string(1, text[i]) + "' at position " + std::to_string(i + 1) +
                             " is not S or W",
                         i + 1);
    }
  }
  return word;
}

std::string to_string(std::span<const Step> word) {
  std::string out;
  out.reserve(word.size());
  for (Step s : word) out.push_back(static_cast<char>(s));
  return out;
}

PathParams infer_params(std::span<const Step> word) {
  const auto norths = std::count(word.begin(), word.end(), Step::S);
  const auto easts = static_cast<std::int64_t>(word.size()) - norths;
  if (norths == 0 || easts == 0 || easts % norths != 0) {
    throw SweepError(ErrorKind::WrongLetterCount,
                     "cannot infer (k, n): word has " + std::to_string(norths) + " S and " + std::to_string(easts) +
                         " W; #W must be a positive multiple of #S");
  }
  return PathParams(easts / norths, norths);
}

DyckPath DyckPath::validate(std::span<const Step> word, const PathParams& params) {
  const auto norths = static_cast<std::size_t>(std::count(word.begin(), word.end(), Step::S));
  const auto easts = word.size() - norths;
  if (norths != params.north_count() || easts != params.east_count()) {
    throw SweepError(ErrorKind::WrongLetterCount,
                     "expected " + std::to_string(params.north_count()) + " S and " +
                         std::to_string(params.east_count()) + " W, got " + std::to_string(norths) + " S and " +
                         std::to_string(easts) + " W");
  }
  Level rank = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    rank += params.delta(word[i]);
    if (rank < 0) {
      throw SweepError(ErrorKind::BelowDiagonal,
                       "path drops below the diagonal at step " + std::to_string(i + 1), i + 1);
    }
  }
  return DyckPath(params, Word(word.begin(), word.end()));
}

DyckPath DyckPath::validate(std::string_view text, const PathParams& params) {
  return validate(parse_word(text), params);
}

std::vector<RankedEndpoint> rank_sequence(const DyckPath& path) {
  std::vector<RankedEndpoint> out;
  out.reserve(path.size());
  Level rank = 0;
  std::size_t index = 1;
  for (Step s : path.steps()) {
    out.push_back({s, rank, index++});
    rank += path.params().delta(s);
  }
  return out;
}

PathEnumerator::PathEnumerator(const PathParams& params, Word prefix)
    : params_(params), fixed_(prefix.size()), word_(std::move(prefix)) {
  const std::size_t len = params_.length();
  rank_.assign(len + 1, 0);
  norths_.assign(len + 1, 0);
  if (fixed_ > len) {
    done_ = true;
    return;
  }
  word_.resize(len, Step::S);
  for (std::size_t i = 0; i < fixed_; ++i) {
    rank_[i + 1] = rank_[i] + params_.delta(word_[i]);
    norths_[i + 1] = norths_[i] + (word_[i] == Step::S ? 1 : 0);
    const std::size_t easts = i + 1 - norths_[i + 1];
    if (rank_[i + 1] < 0 || norths_[i + 1] > params_.north_count() || easts > params_.east_count()) {
      done_ = true;
      return;
    }
  }
}

bool PathEnumerator::fill_from(std::size_t pos) {
  std::size_t norths_left = params_.north_count() - norths_[pos];
  for (std::size_t i = pos; i < word_.size(); ++i) {
    word_[i] = norths_left > 0 ? Step::S : Step::W;
    if (norths_left > 0) --norths_left;
    rank_[i + 1] = rank_[i] + params_.delta(word_[i]);
    norths_[i + 1] = norths_[i] + (word_[i] == Step::S ? 1 : 0);
  }
  return rank_.back() == 0;
}

std::optional<DyckPath> PathEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_from(fixed_)) {
      done_ = true;
      return std::nullopt;
    }
    return DyckPath::validate(word_, params_);
  }
  // Rightmost S (outside the prefix) that can become a W without the rank
  // going negative; everything after it is reset to the smallest completion.
  std::size_t j = word_.size();
  while (j > fixed_) {
    --j;
    if (word_[j] == Step::S && rank_[j] + params_.east_delta() >= 0) {
      word_[j] = Step::W;
      rank_[j + 1] = rank_[j] + params_.east_delta();
      norths_[j + 1] = norths_[j];
      fill_from(j + 1);
      return DyckPath::validate(word_, params_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<DyckPath> enumerate_paths(const PathParams& params, std::optional<std::size_t> limit) {
  std::vector<DyckPath> out;
  PathEnumerator it(params);
  while (!limit || out.size() < *limit) {
    auto p = it.next();
    if (!p) break;
    out.push_back(std::move(*p));
  }
  return out;
}

namespace {

void extend_prefixes(const PathParams& params, std::size_t depth, Word& cur, Level rank, std::size_t norths,
                     std::vector<Word>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  if (norths < params.north_count()) {
    cur.push_back(Step::S);
    extend_prefixes(params, depth, cur, rank + params.north_delta(), norths + 1, out);
    cur.pop_back();
  }
  const std::size_t easts = cur.size() - norths;
  if (easts < params.east_count() && rank + params.east_delta() >= 0) {
    cur.push_back(Step::W);
    extend_prefixes(params, depth, cur, rank + params.east_delta(), norths, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_prefixes(const PathParams& params, std::size_t depth) {
  std::vector<Word> out;
  Word cur;
  extend_prefixes(params, std::min(depth, params.length()), cur, 0, 0, out);
  return out;
}

BigCount count_paths(const PathParams& params) {
  const auto len = static_cast<std::uint64_t>(params.length());
  const auto n = static_cast<std::uint64_t>(params.n());
  BigCount c = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    c *= len - n + i;
    c /= i;
  }
  return c / (static_cast<std::uint64_t>(params.k() * params.n()) + 1);
}

DyckPath random_path(const PathParams& params, std::uint64_t seed) {
  Word word(params.north_count(), Step::S);
  word.resize(params.length(), Step::W);
  std::mt19937_64 rng(seed);
  std::shuffle(word.begin(), word.end(), rng);

  // Cycle lemma: starting at the leftmost minimum of the running rank makes
  // every prefix rank nonnegative.
  Level rank = 0, lowest = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (rank < lowest) {
      lowest = rank;
      start = i;
    }
    rank += params.delta(word[i]);
  }
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
  return DyckPath::validate(word, params);
}

}  // namespace sweepmap
