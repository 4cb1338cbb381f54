#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sweepmap {

enum class ErrorKind {
  BadAlphabet,
  WrongLetterCount,
  BelowDiagonal,
  BadParams,
  ParamsOverflow,
  SigmaMalformed,
  ZeroBranch,      // x = 0 while recovering levels
  BatchOverflow,   // fewer W positions remain than the batch needs
  NoEndpointAtRank,
  LeftoverEntries,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `index` is a
// 1-based word position when the error refers to one, 0 otherwise.
class SweepError : public std::runtime_error {
 public:
  SweepError(ErrorKind kind, std::string message, std::size_t index = 0)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::size_t index_;
};

}  // namespace sweepmap
