#include "sweepmap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "sweepmap/invert.hpp"
#include "sweepmap/path.hpp"
#include "sweepmap/sweep.hpp"
#include "sweepmap/verify.hpp"

namespace sweepmap::cli {

using nlohmann::json;

std::string normalize_word(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c == 'N') c = 'S';
    if (c == 'E') c = 'W';
    out.push_back(c);
  }
  return out;
}

int exit_code_for(const VerifyReport& report) { return report.passed() ? kExitOk : kExitVerifyFailed; }

namespace {

struct Options {
  std::string word;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
  std::int64_t scale = 0;
  std::string impl = "fast";
  std::string emit = "both";
  int jobs = 0;
  CLI::Option* word_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* limit_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

std::string join_levels(const std::vector<Level>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(levels[i]);
  }
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  bool json_mode() const { return o_.format == "json"; }

  void emit(const json& j, const std::vector<std::pair<std::string, std::string>>& text) {
    if (json_mode()) {
      out_ << j.dump() << '\n';
    } else {
      for (const auto& [label, value] : text) out_ << label << (label.empty() ? "" : ": ") << value << '\n';
    }
    out_.flush();
  }

  // Explicit params, checked against what the word implies.
  PathParams params_for(std::span<const Step> word) const {
    const bool has_k = o_.k_opt->count() > 0, has_n = o_.n_opt->count() > 0;
    if (has_k && has_n) return PathParams(o_.k, o_.n);
    const PathParams inferred = infer_params(word);
    if ((has_k && o_.k != inferred.k()) || (has_n && o_.n != inferred.n())) {
      throw SweepError(ErrorKind::BadParams, "--k/--n do not match the word (it implies k=" +
                                                 std::to_string(inferred.k()) + ", n=" + std::to_string(inferred.n()) +
                                                 ")");
    }
    return inferred;
  }

  PathParams required_params() const {
    if (o_.k_opt->count() == 0 || o_.n_opt->count() == 0) {
      throw SweepError(ErrorKind::BadParams, "--k and --n are required");
    }
    return PathParams(o_.k, o_.n);
  }

  // Applies `fn` to --path/--sigma, or to every word on stdin. A stdin line
  // may be a bare word, "label: word", or a JSON object; labelled lines whose
  // label is not in `fields` are skipped.
  int for_each_word(const std::vector<std::string>& fields, const std::function<void(const std::string&)>& fn) {
    if (o_.word_opt->count() > 0) return guarded(fn, o_.word);
    int code = kExitOk;
    std::string line;
    while (std::getline(in_, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      std::optional<std::string> word;
      if (line[first] == '{') {
        try {
          const json j = json::parse(line);
          for (const auto& f : fields) {
            if (j.contains(f) && j[f].is_string()) {
              word = j[f].get<std::string>();
              break;
            }
          }
          if (!word) {
            err_ << "error: JSON line has none of the expected fields\n";
            code = kExitBadInput;
            continue;
          }
        } catch (const json::exception& e) {
          err_ << "error: " << e.what() << '\n';
          code = kExitBadInput;
          continue;
        }
      } else if (const auto colon = line.find(':'); colon != std::string::npos) {
        const std::string label = normalize_label(line.substr(first, colon - first));
        if (std::find(fields.begin(), fields.end(), label) == fields.end()) continue;
        word = line.substr(colon + 1);
      } else {
        word = line;
      }
      code = std::max(code, guarded(fn, *word));
    }
    return code;
  }

  int guarded(const std::function<void(const std::string&)>& fn, const std::string& raw) {
    try {
      fn(normalize_word(raw));
      return kExitOk;
    } catch (const SweepError& e) {
      err_ << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
      return kExitBadInput;
    }
  }

  int sweep() {
    return for_each_word({"path", "preimage"}, [&](const std::string& text) {
      const Word word = parse_word(text);
      const DyckPath path = DyckPath::validate(word, params_for(word));
      const SweepImage image = sweep_map(path);
      emit({{"k", path.params().k()},
            {"n", path.params().n()},
            {"path", path.str()},
            {"sigma", to_string(image.sigma)},
            {"tau", image.tau}},
           {{"sigma", to_string(image.sigma)}, {"tau", join_levels(image.tau)}});
    });
  }

  int invert() {
    return for_each_word({"sigma"}, [&](const std::string& text) {
      const Word sigma = parse_word(text);
      const PathParams params = params_for(sigma);
      const auto tau = o_.impl == "naive" ? recover_levels_naive(sigma, params) : recover_levels(sigma, params);
      json j{{"k", params.k()}, {"n", params.n()}, {"sigma", to_string(sigma)}};
      std::vector<std::pair<std::string, std::string>> text_out;
      if (o_.emit != "path") {
        j["tau"] = tau;
        text_out.emplace_back("tau", join_levels(tau));
      }
      if (o_.emit != "tau") {
        const DyckPath pre = reconstruct_path(SweepImage{params, sigma, tau});
        j["preimage"] = pre.str();
        text_out.emplace_back("preimage", pre.str());
      }
      emit(j, text_out);
    });
  }

  int ranks() {
    return for_each_word({"path", "preimage"}, [&](const std::string& text) {
      const Word word = parse_word(text);
      const DyckPath path = DyckPath::validate(word, params_for(word));
      std::vector<Level> levels;
      for (const auto& e : rank_sequence(path)) levels.push_back(e.level);
      emit({{"k", path.params().k()}, {"n", path.params().n()}, {"path", path.str()}, {"ranks", levels}},
           {{"ranks", join_levels(levels)}});
    });
  }

  int render() {
    return for_each_word({"path", "preimage"}, [&](const std::string& text) {
      const Word word = parse_word(text);
      const DyckPath path = DyckPath::validate(word, params_for(word));
      const std::string picture = draw(path);
      if (json_mode()) {
        emit({{"k", path.params().k()}, {"n", path.params().n()}, {"path", path.str()}, {"render", picture}}, {});
      } else {
        out_ << picture;
        out_.flush();
      }
    });
  }

  int enumerate() {
    const PathParams params = required_params();
    PathEnumerator paths(params);
    std::uint64_t emitted = 0;
    while (auto p = paths.next()) {
      if (o_.limit_opt->count() > 0 && emitted >= o_.limit) break;
      emit({{"k", params.k()}, {"n", params.n()}, {"path", p->str()}}, {{"", p->str()}});
      ++emitted;
    }
    return kExitOk;
  }

  int count() {
    const PathParams params = required_params();
    const BigCount c = count_paths(params);
    emit({{"k", params.k()}, {"n", params.n()}, {"count", big_to_json(c)}}, {{"", c.str()}});
    return kExitOk;
  }

  int random() {
    const PathParams params = required_params();
    const DyckPath p = random_path(params, o_.seed);
    emit({{"k", params.k()}, {"n", params.n()}, {"seed", o_.seed}, {"path", p.str()}}, {{"", p.str()}});
    return kExitOk;
  }

  int verify() {
    if (o_.word_opt->count() > 0) {
      const Word sigma = parse_word(normalize_word(o_.word));
      const PathParams params = params_for(sigma);
      const std::string problem = image_problem(sigma, params);
      emit({{"k", params.k()}, {"n", params.n()}, {"sigma", to_string(sigma)}, {"genuine", problem.empty()},
            {"reason", problem}},
           {{"sigma", to_string(sigma)}, {"image", problem.empty() ? "genuine" : "not genuine: " + problem}});
      return problem.empty() ? kExitOk : kExitVerifyFailed;
    }
    std::vector<PathParams> cells;
    if (o_.k_opt->count() == 0 && o_.n_opt->count() == 0) {
      cells = desk_grid();
    } else {
      cells.push_back(required_params());
    }
    VerifyOptions options;
    if (o_.limit_opt->count() > 0) options.max_paths = o_.limit;
    int code = kExitOk;
    for (const auto& params : cells) {
      const VerifyReport report = verify_roundtrip_parallel(params, options, o_.jobs);
      emit(to_json(report), {{"", summary_line(report)}});
      code = std::max(code, exit_code_for(report));
    }
    return code;
  }

  int bench() {
    if (o_.scale <= 0) throw SweepError(ErrorKind::BadParams, "--scale must be positive");
    const std::int64_t k = o_.k_opt->count() > 0 ? o_.k : 2;
    const std::int64_t n = std::max<std::int64_t>(1, std::llround(static_cast<double>(o_.scale) / double(k + 1)));
    const PathParams params(k, n);
    const DyckPath path = random_path(params, o_.seed);
    const SweepImage image = sweep_map(path);

    const std::vector<std::string> impls =
        o_.impl == "both" ? std::vector<std::string>{"naive", "fast"} : std::vector<std::string>{o_.impl};
    const auto path_hash = std::hash<std::string>{}(path.str());
    int code = kExitOk;
    for (const auto& impl : impls) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto tau = impl == "naive" ? recover_levels_naive(image.sigma, params) : recover_levels(image.sigma, params);
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - t0;
      const bool ok = tau == image.tau;
      if (!ok) code = kExitVerifyFailed;
      const auto tau_hash = std::hash<std::string_view>{}(
          std::string_view(reinterpret_cast<const char*>(tau.data()), tau.size() * sizeof(Level)));
      std::ostringstream line;
      line << "impl=" << impl << " k=" << k << " n=" << n << " L=" << params.length() << " millis=" << ms.count()
           << " tau_ok=" << (ok ? "yes" : "NO") << " path_hash=" << path_hash << " tau_hash=" << tau_hash;
      emit({{"impl", impl},
            {"k", k},
            {"n", n},
            {"L", params.length()},
            {"seed", o_.seed},
            {"millis", ms.count()},
            {"tau_ok", ok},
            {"path_hash", path_hash},
            {"tau_hash", tau_hash}},
           {{"", line.str()}});
    }
    return code;
  }

 private:
  static std::string normalize_label(std::string label) {
    label.erase(std::remove_if(label.begin(), label.end(), [](unsigned char c) { return std::isspace(c); }),
                label.end());
    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::tolower(c); });
    return label;
  }

  // Lattice points (x, y) for x in [0, kn], y in [0, n], top row first.
  // 'o' marks a point on the path, '.' a diagonal point off the path.
  static std::string draw(const DyckPath& path) {
    const auto width = static_cast<std::size_t>(path.params().k() * path.params().n()) + 1;
    const auto height = static_cast<std::size_t>(path.params().n()) + 1;
    std::vector<std::string> rows(height, std::string(width, ' '));
    for (std::size_t y = 0; y < height; ++y) {
      const auto x = y * static_cast<std::size_t>(path.params().k());
      rows[y][x] = '.';
    }
    std::size_t x = 0, y = 0;
    rows[0][0] = 'o';
    for (Step s : path.steps()) {
      if (s == Step::S) ++y; else ++x;
      rows[y][x] = 'o';
    }
    std::string out;
    for (std::size_t r = height; r-- > 0;) {
      std::string row = rows[r];
      row.erase(row.find_last_not_of(' ') + 1);
      out += row + '\n';
    }
    return out;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sweep map on (kn,n)-Dyck paths: sweep, invert, enumerate, verify, bench", "sweepmap"};
  app.require_subcommand(1);
  Options o;

  auto params_flags = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "horizontal multiplier k");
    sub->add_option("--n", o.n, "number of north steps n");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* sweep = app.add_subcommand("sweep", "sweep a path: print sigma and tau");
  auto* invert = app.add_subcommand("invert", "recover tau and the preimage path from sigma");
  auto* ranks = app.add_subcommand("ranks", "print the rank of each step's starting point");
  auto* render = app.add_subcommand("render", "draw the path on the lattice");
  auto* enumerate = app.add_subcommand("enumerate", "list every (kn,n)-Dyck path in lexicographic order");
  auto* count = app.add_subcommand("count", "number of (kn,n)-Dyck paths");
  auto* random = app.add_subcommand("random", "seeded random path");
  auto* verify = app.add_subcommand("verify", "exhaustive round-trip check (whole desk grid without --k/--n)");
  auto* bench = app.add_subcommand("bench", "time level recovery on a random path of length ~scale");

  for (auto* sub : {sweep, invert, ranks, render, enumerate, count, random, verify, bench}) params_flags(sub);
  for (auto* sub : {sweep, ranks, render}) sub->add_option("--path", o.word, "path word over S/W (N/E accepted)");
  for (auto* sub : {invert, verify}) sub->add_option("--sigma", o.word, "sweep image word");
  invert->add_option("--emit", o.emit, "tau, path or both")->check(CLI::IsMember({"tau", "path", "both"}));
  invert->add_option("--impl", o.impl, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));
  for (auto* sub : {enumerate, verify}) sub->add_option("--limit", o.limit, "stop after this many paths");
  for (auto* sub : {random, bench}) sub->add_option("--seed", o.seed, "generator seed");
  verify->add_option("--jobs", o.jobs, "OpenMP threads (0 = default)");
  bench->add_option("--scale", o.scale, "target path length L = (k+1)n")->required();
  bench->add_option("--impl", o.impl, "naive, fast or both")->check(CLI::IsMember({"naive", "fast", "both"}));

  std::vector<const char*> argv{"sweepmap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  o.k_opt = chosen->get_option("--k");
  o.n_opt = chosen->get_option("--n");
  o.word_opt = chosen->get_option_no_throw(chosen == invert || chosen == verify ? "--sigma" : "--path");
  o.limit_opt = chosen->get_option_no_throw("--limit");

  // Subcommands without --path/--sigma or --limit get a never-set option.
  CLI::App dummy;
  CLI::Option* absent = dummy.add_option("--absent");
  if (!o.word_opt) o.word_opt = absent;
  if (!o.limit_opt) o.limit_opt = absent;

  Runner runner(o, in, out, err);
  try {
    if (chosen == sweep) return runner.sweep();
    if (chosen == invert) return runner.invert();
    if (chosen == ranks) return runner.ranks();
    if (chosen == render) return runner.render();
    if (chosen == enumerate) return runner.enumerate();
    if (chosen == count) return runner.count();
    if (chosen == random) return runner.random();
    if (chosen == verify) return runner.verify();
    return runner.bench();
  } catch (const SweepError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace sweepmap::cli
