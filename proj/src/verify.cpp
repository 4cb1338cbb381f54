#include "sweepmap/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <omp.h>

#include "sweepmap/invert.hpp"

namespace sweepmap {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::LengthMismatch: return "LengthMismatch";
    case Violation::LetterCount: return "LetterCount";
    case Violation::SigmaStart: return "SigmaStart";
    case Violation::TauStart: return "TauStart";
    case Violation::TauDecreasing: return "TauDecreasing";
    case Violation::TauNotMultiple: return "TauNotMultiple";
    case Violation::SouthLevelMismatch: return "SouthLevelMismatch";
    case Violation::SigmaNotDyck: return "SigmaNotDyck";
  }
  return "Unknown";
}

std::vector<Violation> check_image_properties(const SweepImage& image) {
  const PathParams& params = image.params;
  const auto& sigma = image.sigma;
  const auto& tau = image.tau;
  std::vector<Violation> out;
  if (sigma.size() != params.length() || tau.size() != sigma.size()) {
    out.push_back(Violation::LengthMismatch);
    return out;
  }
  if (static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), Step::S)) != params.north_count()) {
    out.push_back(Violation::LetterCount);
  }
  if (sigma.front() != Step::S) out.push_back(Violation::SigmaStart);
  if (tau.front() != 0) out.push_back(Violation::TauStart);
  if (!std::is_sorted(tau.begin(), tau.end())) out.push_back(Violation::TauDecreasing);
  if (std::any_of(tau.begin(), tau.end(), [&](Level t) { return t < 0 || t % params.n() != 0; })) {
    out.push_back(Violation::TauNotMultiple);
  }
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] != Step::W || sigma[i + 1] != Step::S) continue;
    const bool second = i + 2 < sigma.size() && sigma[i + 2] == Step::S;
    if (tau[i + 1] != tau[i] || (second && tau[i + 2] != tau[i])) {
      out.push_back(Violation::SouthLevelMismatch);
      break;
    }
  }
  try {
    DyckPath::validate(sigma, params);
  } catch (const SweepError&) {
    out.push_back(Violation::SigmaNotDyck);
  }
  return out;
}

bool equivalent(const VerifyReport& a, const VerifyReport& b) {
  auto same_failure = [](const RoundTripFailure& x, const RoundTripFailure& y) {
    return x.path == y.path && x.sigma == y.sigma && x.tau == y.tau && x.reconstructed == y.reconstructed &&
           x.reason == y.reason;
  };
  auto same_violation = [](const PropertyViolation& x, const PropertyViolation& y) {
    return x.path == y.path && x.tag == y.tag;
  };
  return a.params == b.params && a.paths_checked == b.paths_checked && a.distinct_images == b.distinct_images &&
         a.count_expected == b.count_expected && a.zero_branch_errors == b.zero_branch_errors &&
         a.truncated == b.truncated &&
         std::equal(a.roundtrip_failures.begin(), a.roundtrip_failures.end(), b.roundtrip_failures.begin(),
                    b.roundtrip_failures.end(), same_failure) &&
         std::equal(a.property_violations.begin(), a.property_violations.end(), b.property_violations.begin(),
                    b.property_violations.end(), same_violation);
}

namespace {

struct PathOutcome {
  std::string sigma;
  std::optional<RoundTripFailure> failure;
  std::vector<Violation> violations;
  bool zero_branch = false;
};

PathOutcome check_path(const DyckPath& path, bool compare_naive) {
  const SweepImage image = sweep_map(path);
  PathOutcome out;
  out.sigma = to_string(image.sigma);
  out.violations = check_image_properties(image);

  auto fail = [&](std::string reconstructed, std::string reason) {
    out.failure = RoundTripFailure{path.str(), out.sigma, image.tau, std::move(reconstructed), std::move(reason)};
  };
  try {
    const auto tau = recover_levels(image.sigma, path.params());
    if (tau != image.tau) {
      fail("", "recovered levels differ from the sweep levels");
      return out;
    }
    if (compare_naive && recover_levels_naive(image.sigma, path.params()) != tau) {
      fail("", "naive and counter-based level recovery disagree");
      return out;
    }
    const DyckPath back = reconstruct_path(SweepImage{path.params(), image.sigma, tau});
    if (!(back == path)) fail(back.str(), "preimage differs from the original path");
  } catch (const SweepError& e) {
    if (e.kind() == ErrorKind::ZeroBranch) out.zero_branch = true;
    fail("", e.what());
  }
  return out;
}

// Folds outcomes in enumeration order.
class ReportBuilder {
 public:
  explicit ReportBuilder(const PathParams& params, const VerifyOptions& options)
      : options_(options), report_(params) {
    report_.count_expected = count_paths(params);
  }

  bool full() const { return options_.max_paths && report_.paths_checked >= *options_.max_paths; }

  void add(std::string_view path, PathOutcome&& outcome) {
    ++report_.paths_checked;
    seen_.insert(std::move(outcome.sigma));
    if (outcome.failure) report_.roundtrip_failures.push_back(std::move(*outcome.failure));
    for (Violation v : outcome.violations) report_.property_violations.push_back({std::string(path), v});
    if (outcome.zero_branch) ++report_.zero_branch_errors;
  }

  VerifyReport finish(bool truncated, std::chrono::steady_clock::time_point started) {
    report_.distinct_images = seen_.size();
    report_.truncated = truncated;
    report_.elapsed = std::chrono::steady_clock::now() - started;
    return std::move(report_);
  }

 private:
  VerifyOptions options_;
  VerifyReport report_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

VerifyReport verify_roundtrip(const PathParams& params, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  ReportBuilder builder(params, options);
  PathEnumerator paths(params);
  bool truncated = false;
  while (auto path = paths.next()) {
    if (builder.full()) {
      truncated = true;
      break;
    }
    builder.add(path->str(), check_path(*path, options.compare_naive));
  }
  return builder.finish(truncated, started);
}

VerifyReport verify_roundtrip_parallel(const PathParams& params, const VerifyOptions& options, int jobs) {
  const auto started = std::chrono::steady_clock::now();
  const auto prefixes = enumerate_prefixes(params, 10);
  const std::uint64_t cap = options.max_paths.value_or(UINT64_MAX);

  struct Task {
    std::vector<std::string> paths;
    std::vector<PathOutcome> outcomes;
    bool more = false;  // stopped at the cap with paths left over
  };
  std::vector<Task> tasks(prefixes.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(prefixes.size()); ++t) {
    Task& task = tasks[static_cast<std::size_t>(t)];
    PathEnumerator paths(params, prefixes[static_cast<std::size_t>(t)]);
    while (auto path = paths.next()) {
      if (task.outcomes.size() >= cap) {
        task.more = true;
        break;
      }
      task.paths.push_back(path->str());
      task.outcomes.push_back(check_path(*path, options.compare_naive));
    }
  }

  ReportBuilder builder(params, options);
  bool truncated = false;
  for (Task& task : tasks) {
    for (std::size_t i = 0; i < task.outcomes.size(); ++i) {
      if (builder.full()) {
        truncated = true;
        break;
      }
      builder.add(task.paths[i], std::move(task.outcomes[i]));
    }
    if (truncated) break;
    if (task.more) {
      truncated = true;
      break;
    }
  }
  return builder.finish(truncated, started);
}

CountCheck fuss_catalan_check(const PathParams& params) {
  CountCheck out;
  out.expected = count_paths(params);
  PathEnumerator paths(params);
  while (paths.next()) ++out.enumerated;
  out.equal = BigCount(out.enumerated) == out.expected;
  return out;
}

std::string image_problem(std::span<const Step> sigma, const PathParams& params) {
  try {
    const DyckPath pre = invert_sweep(sigma, params);
    const SweepImage again = sweep_map(pre);
    if (!std::equal(sigma.begin(), sigma.end(), again.sigma.begin(), again.sigma.end())) {
      return "preimage " + pre.str() + " sweeps to " + to_string(again.sigma);
    }
    return {};
  } catch (const SweepError& e) {
    if (e.kind() == ErrorKind::SigmaMalformed) throw;
    return e.what();
  }
}

std::vector<PathParams> desk_grid() {
  std::vector<PathParams> grid;
  const std::pair<int, int> rows[] = {{1, 7}, {2, 5}, {3, 4}, {4, 3}};
  for (auto [k, max_n] : rows) {
    for (int n = 1; n <= max_n; ++n) grid.emplace_back(k, n);
  }
  return grid;
}

std::string summary_line(const VerifyReport& r) {
  std::ostringstream os;
  const std::uint64_t ok = r.paths_checked - r.roundtrip_failures.size();
  os << "k=" << r.params.k() << " n=" << r.params.n() << ": " << ok << "/" << r.paths_checked << " paths OK";
  if (r.distinct_images == r.paths_checked) {
    os << ", injective";
  } else {
    os << ", NOT injective (" << r.distinct_images << " distinct images)";
  }
  if (r.truncated) {
    os << ", truncated";
  } else if (r.count_matches()) {
    os << ", count matches";
  } else {
    os << ", count MISMATCH (expected " << r.count_expected << ")";
  }
  if (!r.property_violations.empty()) os << ", " << r.property_violations.size() << " property violations";
  return os.str();
}

nlohmann::json big_to_json(const BigCount& value) {
  if (value <= BigCount(UINT64_MAX)) return value.convert_to<std::uint64_t>();
  return value.str();
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.roundtrip_failures) {
    failures.push_back(
        {{"path", f.path}, {"sigma", f.sigma}, {"tau", f.tau}, {"reconstructed", f.reconstructed}, {"reason", f.reason}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.property_violations) violations.push_back({{"path", v.path}, {"tag", to_string(v.tag)}});
  return {
      {"k", r.params.k()},
      {"n", r.params.n()},
      {"paths_checked", r.paths_checked},
      {"distinct_images", r.distinct_images},
      {"count_expected", big_to_json(r.count_expected)},
      {"failures", failures},
      {"violations", violations},
      {"zero_branch_errors", r.zero_branch_errors},
      {"truncated", r.truncated},
      {"success", r.passed()},
      {"elapsed_ms", r.elapsed.count()},
  };
}

}  // namespace sweepmap
