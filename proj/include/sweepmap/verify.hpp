#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sweepmap/path.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

enum class Violation {
  LengthMismatch,
  LetterCount,
  SigmaStart,          // sigma_1 != S
  TauStart,            // tau_1 != 0
  TauDecreasing,
  TauNotMultiple,      // some level is negative or not a multiple of n
  SouthLevelMismatch,  // W,S (or W,S,S) whose levels are not all equal
  SigmaNotDyck,
};

const char* to_string(Violation v);

/// Empty iff the image passes every structural check, including the rule that
/// an S directly after a W (and a second S after that) shares the W's level.
std::vector<Violation> check_image_properties(const SweepImage& image);

struct RoundTripFailure {
  std::string path;
  std::string sigma;
  std::vector<Level> tau;
  std::string reconstructed;  // empty when inversion threw
  std::string reason;
};

struct PropertyViolation {
  std::string path;
  Violation tag;
};

struct VerifyReport {
  explicit VerifyReport(const PathParams& p) : params(p) {}

  PathParams params;
  std::uint64_t paths_checked = 0;
  std::vector<RoundTripFailure> roundtrip_failures;
  std::uint64_t distinct_images = 0;
  BigCount count_expected = 0;
  std::vector<PropertyViolation> property_violations;
  std::uint64_t zero_branch_errors = 0;
  bool truncated = false;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool success() const {
    return roundtrip_failures.empty() && distinct_images == paths_checked && property_violations.empty();
  }
  bool count_matches() const { return BigCount(paths_checked) == count_expected; }
  /// success() plus the Fuss-Catalan count when the run was not truncated.
  bool passed() const { return success() && (truncated || count_matches()); }
};

/// Same results, ignoring elapsed time.
bool equivalent(const VerifyReport& a, const VerifyReport& b);

struct VerifyOptions {
  std::optional<std::uint64_t> max_paths;
  bool compare_naive = true;  // also require recover_levels_naive == recover_levels
};

/// Serial reference: walks the enumeration once, in order.
VerifyReport verify_roundtrip(const PathParams& params, const VerifyOptions& options = {});

/// OpenMP version: the enumeration is split by path prefix, each prefix is
/// checked independently and the results are merged in prefix order, so the
/// report is identical to the serial one. jobs <= 0 uses the OpenMP default.
VerifyReport verify_roundtrip_parallel(const PathParams& params, const VerifyOptions& options = {}, int jobs = 0);

struct CountCheck {
  BigCount expected;
  std::uint64_t enumerated = 0;
  bool equal = false;
};

CountCheck fuss_catalan_check(const PathParams& params);

/// Empty if sigma is a genuine sweep image (inverts, and the preimage sweeps
/// back to sigma); otherwise a description of what went wrong. Malformed
/// sigma (SigmaMalformed) is thrown, not reported.
std::string image_problem(std::span<const Step> sigma, const PathParams& params);

/// {k=1, n<=7} u {k=2, n<=5} u {k=3, n<=4} u {k=4, n<=3}.
std::vector<PathParams> desk_grid();

std::string summary_line(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json big_to_json(const BigCount& value);

}  // namespace sweepmap
