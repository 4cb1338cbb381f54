#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sweepmap/cli.hpp"

using namespace sweepmap;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("sweep") {
  auto r = run({"sweep", "--path", "SWWSWWSWWWWWWWW"});
  CHECK(r.code == 0);
  CHECK(r.out == "sigma: SWWSWWWSWWWWWWW\ntau: 0 3 6 6 9 9 12 12 12 15 15 18 18 21 24\n");
  CHECK(run({"sweep", "--path", "SW"}).out == "sigma: SW\ntau: 0 1\n");
  CHECK(run({"sweep", "--path", "SWWSWW"}).out == "sigma: SSWWWW\ntau: 0 0 2 2 4 4\n");

  // Aliases and case.
  CHECK(run({"sweep", "--path", "nee nee"}).out == "sigma: SSWWWW\ntau: 0 0 2 2 4 4\n");

  const auto j = nlohmann::json::parse(run({"sweep", "--path", "SWWSWW", "--format", "json"}).out);
  CHECK(j["k"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["sigma"] == "SSWWWW");
  CHECK(j["tau"] == nlohmann::json::array({0, 0, 2, 2, 4, 4}));
}

TEST_CASE("invert") {
  auto r = run({"invert", "--sigma", "SWWSWWWSWWWWWWW", "--emit", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau: 0 3 6 6 9 9 12 12 12 15 15 18 18 21 24\npreimage: SWWSWWSWWWWWWWW\n");
  CHECK(run({"invert", "--sigma", "SW"}).out == "tau: 0 1\npreimage: SW\n");
  CHECK(run({"invert", "--sigma", "SSWWWW", "--emit", "path"}).out == "preimage: SWWSWW\n");
  CHECK(run({"invert", "--sigma", "SSWWWW", "--emit", "tau", "--impl", "naive"}).out == "tau: 0 0 2 2 4 4\n");

  const auto j = nlohmann::json::parse(run({"invert", "--sigma", "SSWWWW", "--format", "json"}).out);
  CHECK(j["preimage"] == "SWWSWW");
  CHECK(j["sigma"] == "SSWWWW");
  CHECK(j["tau"].size() == 6);

  r = run({"invert", "--sigma", "SWWS"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 3") != std::string::npos);
  r = run({"invert", "--sigma", "WSSW"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SigmaMalformed") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--k", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12/12 paths OK, injective, count matches") != std::string::npos);
  CHECK(run({"verify", "--k", "1", "--n", "1"}).out.find("1/1 paths OK") != std::string::npos);
  r = run({"verify", "--k", "2", "--n", "5", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("273/273 paths OK") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"verify", "--k", "4", "--n", "3", "--format", "json"}).out);
  CHECK(j["paths_checked"] == 35);
  CHECK(j["distinct_images"] == 35);
  CHECK(j["failures"].empty());
  CHECK(j["violations"].empty());
  CHECK(j.contains("elapsed_ms"));

  CHECK(run({"verify", "--k", "2", "--n", "4", "--limit", "10"}).out.find("10/10 paths OK") != std::string::npos);

  // A well-formed word that is not a sweep image is a verification failure.
  CHECK(run({"verify", "--sigma", "SWWS"}).code == 1);
  CHECK(run({"verify", "--sigma", "SWWSWWWSWWWWWWW"}).code == 0);
  CHECK(run({"verify", "--sigma", "WWSS"}).code == 2);
}

TEST_CASE("exit code mapping") {
  VerifyReport report = verify_roundtrip(PathParams(2, 2));
  CHECK(cli::exit_code_for(report) == 0);
  report.property_violations.push_back({"SWWSWW", Violation::SouthLevelMismatch});
  CHECK(cli::exit_code_for(report) == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"sweep", "--path", "SWX"}).code == 2);
  CHECK(run({"sweep", "--path", "WS"}).code == 2);
  CHECK(run({"sweep", "--path", "SWW"}).code == 0);
  CHECK(run({"sweep", "--path", "SWW", "--k", "1"}).code == 2);
  CHECK(run({"sweep", "--path", "SWW", "--k", "2", "--n", "1"}).code == 0);
  CHECK(run({"sweep", "--path", "SSW"}).code == 2);
  CHECK(run({"enumerate", "--k", "2"}).code == 2);
  CHECK(run({"count", "--k", "0", "--n", "2"}).code == 2);
  CHECK(run({"bench", "--k", "2", "--scale", "0"}).code == 2);
  CHECK(run({"bench", "--k", "2"}).code == 2);
  CHECK(run({"sweep", "--format", "yaml", "--path", "SW"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate | sweep | invert in batch mode reproduces every path") {
  const auto enumerated = run({"enumerate", "--k", "2", "--n", "4"});
  REQUIRE(enumerated.code == 0);
  const auto paths = lines(enumerated.out);
  REQUIRE(paths.size() == 55);

  const auto swept = run({"sweep"}, enumerated.out);
  REQUIRE(swept.code == 0);
  const auto inverted = run({"invert", "--emit", "path"}, swept.out);
  REQUIRE(inverted.code == 0);
  std::vector<std::string> back;
  for (const auto& l : lines(inverted.out)) back.push_back(l.substr(std::string("preimage: ").size()));
  CHECK(back == paths);
}

TEST_CASE("JSON pipeline and text/JSON field agreement") {
  const auto enumerated = run({"enumerate", "--k", "3", "--n", "3", "--format", "json"});
  const auto swept = run({"sweep", "--format", "json"}, enumerated.out);
  const auto swept_text = run({"sweep"}, enumerated.out);
  const auto inverted = run({"invert", "--format", "json"}, swept.out);
  const auto in = lines(enumerated.out), mid = lines(swept.out), mid_text = lines(swept_text.out),
             out = lines(inverted.out);
  REQUIRE(in.size() == 22);
  REQUIRE(mid.size() == 22);
  REQUIRE(out.size() == 22);
  REQUIRE(mid_text.size() == 44);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto a = nlohmann::json::parse(in[i]);
    const auto b = nlohmann::json::parse(mid[i]);
    const auto c = nlohmann::json::parse(out[i]);
    CHECK(b["path"] == a["path"]);
    CHECK(c["preimage"] == a["path"]);
    CHECK(c["tau"] == b["tau"]);
    CHECK(mid_text[2 * i] == "sigma: " + b["sigma"].get<std::string>());
    std::string tau_text = "tau:";
    for (const auto& t : b["tau"]) tau_text += " " + std::to_string(t.get<long long>());
    CHECK(mid_text[2 * i + 1] == tau_text);
  }
}

TEST_CASE("batch mode keeps going after a bad line and exits 2") {
  const auto r = run({"sweep"}, "SW\nWS\nSWWSWW\n");
  CHECK(r.code == 2);
  CHECK(lines(r.out).size() == 4);
  CHECK(r.err.find("BelowDiagonal") != std::string::npos);
}

TEST_CASE("thin wrappers") {
  CHECK(run({"count", "--k", "2", "--n", "5"}).out == "273\n");
  CHECK(run({"count", "--k", "1", "--n", "40"}).out == "2622127042276492108820\n");
  CHECK(run({"ranks", "--path", "SWWSWW"}).out == "ranks: 0 4 2 0 4 2\n");
  CHECK(lines(run({"enumerate", "--k", "2", "--n", "2"}).out) == std::vector<std::string>{"SSWWWW", "SWSWWW", "SWWSWW"});
  CHECK(lines(run({"enumerate", "--k", "2", "--n", "5", "--limit", "4"}).out).size() == 4);

  const auto a = run({"random", "--k", "3", "--n", "20", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"random", "--k", "3", "--n", "20", "--seed", "42"}).out);
  CHECK(run({"sweep", "--path", lines(a.out).front()}).code == 0);

  const auto pic = run({"render", "--path", "SWWSWW"});
  CHECK(pic.code == 0);
  CHECK(lines(pic.out) == std::vector<std::string>{"  ooo", "ooo", "o"});
}

TEST_CASE("bench") {
  auto strip_time = [](std::string s) {
    const auto at = s.find("millis=");
    const auto end = s.find(' ', at);
    return s.erase(at, end - at);
  };
  const auto naive = run({"bench", "--k", "2", "--scale", "300", "--impl", "naive", "--seed", "3"});
  const auto fast = run({"bench", "--k", "2", "--scale", "300", "--impl", "fast", "--seed", "3"});
  CHECK(naive.code == 0);
  CHECK(fast.code == 0);
  const auto tau_hash = [](const std::string& s) { return s.substr(s.find("tau_hash=")); };
  CHECK(tau_hash(naive.out) == tau_hash(fast.out));
  CHECK(naive.out.find("tau_ok=yes") != std::string::npos);
  CHECK(strip_time(fast.out) == strip_time(run({"bench", "--k", "2", "--scale", "300", "--seed", "3"}).out));

  const auto j = nlohmann::json::parse(run({"bench", "--scale", "3000", "--format", "json"}).out);
  CHECK(j["impl"] == "fast");
  CHECK(j["L"] == 3000);
  CHECK(j.contains("millis"));
  CHECK(j["tau_ok"] == true);

  const auto both = run({"bench", "--scale", "600", "--impl", "both"});
  CHECK(lines(both.out).size() == 2);
}
