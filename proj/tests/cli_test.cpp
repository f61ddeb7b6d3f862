#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fideal/json_io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(FIDEAL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) {
    r.out.append(buf.data(), got);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fideal::Json json_of(const Run& r) { return fideal::Json::parse(r.out); }

TEST(CliCheck, FIdealExitsZero) {
  const auto r = run("check \"n=4; x1*x2, x2*x3, x3*x4\" --format json");
  EXPECT_EQ(r.status, 0);
  const auto doc = json_of(r);
  EXPECT_TRUE(doc["report"]["f_ideal"].get<bool>());
  EXPECT_EQ(doc["report"]["f_facet"].dump(), "[4,3]");
  EXPECT_EQ(doc["report"]["f_nonface"].dump(), "[4,3]");
}

TEST(CliCheck, NegativeVerdictExitsOne) {
  const auto r = run("check \"n=3; x1*x2, x2*x3\" --format json");
  EXPECT_EQ(r.status, 1);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["report"]["f_facet"].dump(), "[3,2]");
  EXPECT_EQ(doc["report"]["f_nonface"].dump(), "[3,1]");
}

TEST(CliCheck, InputErrorExitsTwo) {
  EXPECT_EQ(run("check \"n=3; x1*x9\"").status, 2);
  EXPECT_EQ(run("check \"n=3; x1*x9\" --format json").out, "");
  EXPECT_EQ(run("check").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("check \"n=30; x1\"").status, 2);
  EXPECT_EQ(run("check \"n=30; x1\" --limit 30").status, 1);
}

TEST(CliCheck, TextOutput) {
  const auto r = run("check \"n=4; x1*x2, x2*x3, x3*x4\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("(4,3)"), std::string::npos);
  EXPECT_NE(r.out.find("f-ideal:                    yes"), std::string::npos);
}

TEST(CliInput, StdinAndFile) {
  const auto piped = run("check - --format json < /dev/null");
  EXPECT_EQ(piped.status, 2);
  const auto path = std::filesystem::temp_directory_path() / "fideal_cli_input.txt";
  std::ofstream(path) << R"({"n": 4, "generators": [[1,2],[2,3],[3,4]]})" << '\n';
  const auto from_stdin = run("check - --format json < " + path.string());
  EXPECT_EQ(from_stdin.status, 0);
  const auto f = run("fvector --file " + path.string() + " --format json");
  EXPECT_EQ(f.status, 0);
  EXPECT_EQ(json_of(f).dump(), R"({"facet":[4,3],"nonface":[4,3]})");
  EXPECT_EQ(run("fvector x --file " + path.string()).status, 2);
  std::filesystem::remove(path);
}

TEST(CliComplexes, SupportDeficientExample) {
  const auto r = run("complexes \"n=4; x2*x3, x2*x4, x3*x4\" --format json");
  EXPECT_EQ(r.status, 0);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["facet_complex"]["facets"].dump(), "[[2,3],[2,4],[3,4]]");
  EXPECT_EQ(doc["nonface_complex"]["facets"].dump(), "[[1,2],[1,3],[1,4]]");
  const auto text = run("complexes \"n=4; x2*x3, x2*x4, x3*x4\"");
  EXPECT_NE(text.out.find("[[1,2],[1,3],[1,4]]"), std::string::npos);
}

TEST(CliFvector, TwoEdgePath) {
  const auto r = run("fvector \"n=3; x1*x2, x2*x3\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "facet:   (3,2)\nnonface: (3,1)\n");
}

TEST(CliPrimes, PathCovers) {
  const auto r = run("primes \"n=4; x1*x2, x2*x3, x3*x4\" --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r).dump(), R"({"covers":[[1,3],[2,3],[2,4]],"height":2,"unmixed":true})");
}

TEST(CliCensus, FourVertices) {
  const auto r = run("census --n 4 --degree 2 --format json");
  EXPECT_EQ(r.status, 0);
  const auto doc = json_of(r);
  EXPECT_EQ(doc["f_ideal_count"].get<int>(), 12);
  EXPECT_EQ(doc["mismatches"].size(), 0u);
}

TEST(CliCensus, ThreeVerticesAndCeiling) {
  const auto r = run("census --n 3 --degree 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("f-ideals:                  0"), std::string::npos);
  EXPECT_EQ(run("census --n 9 --degree 2").status, 2);
  EXPECT_EQ(run("census --n 9 --degree 2 --sample 10").status, 2);
  EXPECT_EQ(run("census --n 9 --degree 2 --sample 50 --seed 1 --format json").status, 0);
  EXPECT_EQ(run("census --n 8 --degree 2 --limit 8 --m 1").status, 0);
}

TEST(CliCensus, CatalogOutput) {
  const auto path = std::filesystem::temp_directory_path() / "fideal_cli_catalog.jsonl";
  EXPECT_EQ(run("census --n 4 --m 3 --out " + path.string()).status, 0);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 16u);
  std::filesystem::remove(path);
}

TEST(CliFormats, TextAndJsonAgree) {
  const auto text = run("primes \"n=3; x1*x2, x2*x3\"");
  const auto json = json_of(run("primes \"n=3; x1*x2, x2*x3\" --format json"));
  EXPECT_NE(text.out.find(json["covers"].dump()), std::string::npos);
  EXPECT_NE(text.out.find("height:  " + json["height"].dump()), std::string::npos);
}

}  // namespace
