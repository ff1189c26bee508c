#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "trivalent/cli.hpp"
#include "trivalent/parse.hpp"
#include "trivalent/scheme.hpp"
#include "trivalent/semantics.hpp"

using namespace trivalent;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "trivalent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("trivalent_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kGap = "p | (q & ~q) => p & (r | ~r)";

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "--scheme", "strong", "--standard", "st", kGap});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid") != std::string::npos);

  r = run({"check", "--scheme", "strong", "--standard", "ss", kGap});
  CHECK(r.code == 1);
  CHECK(r.out.find("p=1 q=0 r=i") != std::string::npos);

  r = run({"check", "--scheme", "strong", "--standard", "ts", "p => p"});
  CHECK(r.code == 1);

  r = run({"check", "--scheme", "all", "--standard", "st", kGap});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);
}

TEST_CASE("check reports usage errors") {
  CHECK(run({"check", "p &"}).code == 2);
  CHECK(run({"check", "--scheme", "kleene", "p => p"}).code == 2);
  CHECK(run({"check", "--standard", "xy", "p => p"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check JSON countervaluations reproduce the verdict") {
  const auto r = run({"--format", "json", "check", "--scheme", "all", "--standard", "ss", "--standard", "tt", kGap});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "invalid");
  REQUIRE(doc["results"].size() == 32);
  const Inference inf = parse_inference(doc["inference"].get<std::string>());
  for (const auto& row : doc["results"]) {
    REQUIRE(row.contains("countervaluation"));
    Valuation v;
    for (const auto& [atom, value] : row["countervaluation"].items())
      v.set(atom, *truth_value_from_char(value.get<std::string>()[0]));
    const Scheme s = resolve_scheme(row["scheme"].get<std::string>());
    CHECK_FALSE(satisfies_inference(s, v, inf, Standard::parse(row["standard"].get<std::string>())));
  }
}

TEST_CASE("derive") {
  auto r = run({"derive", "--tt-scheme", "strong", "--ss-scheme", "strong", kGap});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness found") != std::string::npos);
  CHECK(r.out.find("r | ~r") != std::string::npos);

  r = run({"derive", "--tt-scheme", "weak", kGap});
  CHECK(r.code == 0);

  r = run({"derive", "p => q"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not classically valid") != std::string::npos);

  r = run({"--format", "json", "derive", kGap});
  CHECK(nlohmann::json::parse(r.out)["status"] == "witness");
}

TEST_CASE("schemes") {
  auto r = run({"schemes"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);

  r = run({"schemes", "--named"});
  CHECK(r.out.find("strong") != std::string::npos);
  CHECK(r.out.find("weak") != std::string::npos);
  CHECK(r.out.find("middle") != std::string::npos);

  const Scheme s = preset("strong");
  auto conj = s.conj_table();
  conj[index_of(TruthValue::I)][index_of(TruthValue::T)] = TruthValue::T;
  const auto path = temp_file("bad_scheme.txt", format_scheme_document(Scheme(s.neg_table(), conj, s.disj_table())));
  r = run({"schemes", "--check", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("not monotonic") != std::string::npos);

  const auto good = temp_file("good_scheme.txt", format_scheme_document(preset("weak")));
  r = run({"schemes", "--check", good});
  CHECK(r.code == 0);
  CHECK(run({"check", "--scheme", good, "--standard", "st", kGap}).code == 0);
  CHECK(run({"check", "--scheme", path, "p => p"}).code == 2);
  CHECK(run({"--allow-non-bnm", "check", "--scheme", path, "p => p"}).code == 0);
}

TEST_CASE("closure") {
  const auto chain = temp_file("chain.txt", "atoms=p,q,r; depth=0; cap=1; reserve=\np => q\nq => r\n");
  auto r = run({"closure", chain});
  CHECK(r.code == 0);
  CHECK(r.out.find("p => r") != std::string::npos);
  CHECK(r.out.find("relative") != std::string::npos);

  const auto refl = temp_file("refl.txt", "p => p\n");
  r = run({"--format", "json", "closure", "--mode", "td", "--atoms", "p", "--depth", "0", "--cap", "1", "--reserve",
           "q", refl});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["relative"] == true);
  CHECK(doc["count"] == 0);

  const auto empty = temp_file("empty.txt", "atoms=p; depth=1; cap=2; reserve=\n");
  r = run({"--format", "json", "closure", "--mode", "tar", empty});
  doc = nlohmann::json::parse(r.out);
  const auto& list = doc["inferences"];
  CHECK(std::find(list.begin(), list.end(), "p => p") != list.end());
  CHECK(std::find(list.begin(), list.end(), "p, ~p => p") != list.end());

  // Text output can be read back as input.
  r = run({"closure", chain});
  const auto again = temp_file("again.txt", r.out);
  CHECK(run({"closure", again}).out == r.out);

  const auto outside = temp_file("outside.txt", "atoms=p; depth=0; cap=1; reserve=\nq => p\n");
  CHECK(run({"closure", outside}).code == 2);
  CHECK(run({"closure", "--atoms", "p,q,r", "--depth", "3", chain}).code == 3);
  CHECK(run({"closure", "/nonexistent/file"}).code == 2);
}

TEST_CASE("verify subsets and determinism") {
  auto r = run({"--format", "json", "verify", "--only", "schemes,theorem3", "--no-timestamp"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["claims"].size() == 2);
  CHECK(doc["claims"][0]["claim"] == "schemes");
  CHECK(doc["claims"][0]["status"] == "pass");
  CHECK(doc["claims"][0]["runtime_ms"] == 0);
  CHECK_FALSE(doc.contains("timestamp"));
  CHECK(run({"--format", "json", "verify", "--only", "schemes,theorem3", "--no-timestamp"}).out == r.out);

  r = run({"--format", "json", "verify", "--only", "schemes"});
  CHECK(nlohmann::json::parse(r.out).contains("timestamp"));

  CHECK(run({"verify", "--only", "theorem9"}).code == 2);
  CHECK(run({"verify", "--only", "theorem4", "--schemes", "named", "--corpus-size", "300"}).code == 0);
}

TEST_CASE("config file") {
  const auto config = temp_file("config.toml", "format = \"json\"\n");
  const auto r = run({"--config", config, "schemes"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 16);
}
