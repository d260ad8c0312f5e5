#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "compat/model.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = compat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(COMPAT_TEST_DATA) + "/" + name; }

std::string tmp(const std::string& name) {
  const auto dir = std::filesystem::path(testing::TempDir()) / "compat_cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SolveTwoConvexSix) {
  const CliResult r = run({"solve", "--instance", data("two_convex_six.json"), "--algorithm", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["matching"].size(), 2u);
  EXPECT_TRUE(j["optimal"].get<bool>());
}

TEST(Cli, GenerateThenSolveFiveBlock) {
  const CliResult g = run({"generate", "--kind", "five-block", "--n", "10"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.err, "seed=0\n");
  const std::string path = tmp("five.json");
  write(path, g.out);
  const CliResult s = run({"solve", "--instance", path, "--algorithm", "exact"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out)["size"], 4);
}

TEST(Cli, EveryAlgorithmRuns) {
  const std::string path = tmp("conv.json");
  ASSERT_EQ(run({"generate", "--kind", "random-convex", "--n", "12", "--seed", "3", "--out", path})
                .code,
            0);
  for (const char* alg : {"exact", "greedy", "blocks", "rball", "oracle"}) {
    const CliResult r = run({"solve", "--instance", path, "--algorithm", alg});
    if (std::string(alg) == "oracle") {
      EXPECT_EQ(r.code, 1);  // n = 12 exceeds the brute-force guard
      EXPECT_EQ(json::parse(r.err)["error"], "guard");
      continue;
    }
    ASSERT_EQ(r.code, 0) << alg << r.err;
    EXPECT_GE(json::parse(r.out)["size"].get<int>(), 1) << alg;
  }
  const CliResult shape =
      run({"solve", "--instance", path, "--algorithm", "shape", "--shape", "1-4,2-3"});
  ASSERT_EQ(shape.code, 0) << shape.err;
  EXPECT_EQ(json::parse(shape.out)["size"], 2);
  EXPECT_EQ(run({"solve", "--instance", path, "--algorithm", "shape"}).code, 1);
}

TEST(Cli, VerifyMatching) {
  const CliResult ok = run({"verify", "--instance", data("forcing_four.json"), "--matching",
                      data("empty_matching.json")});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["compatible"].get<bool>());

  const std::string m = tmp("m.json");
  write(m, R"({"edges":[[1,2],[3,4]]})");
  const CliResult bad = run({"verify", "--instance", data("forcing_four.json"), "--matching", m});
  ASSERT_EQ(bad.code, 0);
  const json j = json::parse(bad.out);
  EXPECT_FALSE(j["compatible"].get<bool>());
  EXPECT_EQ(j["crossing"]["set"], 2);

  const CliResult fam = run({"verify", "--instance", data("forcing_four.json")});
  EXPECT_TRUE(json::parse(fam.out)["forces_single_edge"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", "--instance", data("two_convex_six.json"), "--algorithm", "magic"}).code, 2);
  EXPECT_EQ(run({"ccm", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"force"}).code, 2);

  const CliResult missing = run({"solve", "--instance", tmp("does_not_exist.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(json::parse(missing.err)["error"], "syntax");

  const std::string bad = tmp("bad.json");
  write(bad, R"({"n":3,"sets":[{"type":"convex","order":[1,1,2]}]})");
  const CliResult perm = run({"solve", "--instance", bad});
  EXPECT_EQ(perm.code, 1);
  EXPECT_EQ(json::parse(perm.err)["error"], "not_permutation");

  EXPECT_EQ(run({"generate", "--kind", "five-block", "--n", "12"}).code, 1);
  EXPECT_EQ(run({"ccm", "--n", "13"}).code, 1);
}

TEST(Cli, CcmCsv) {
  const CliResult r = run({"ccm", "--n", "6", "--mode", "full"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "n,ccm,witness_permutation,labelings_examined,mode,seconds");
  EXPECT_TRUE(std::regex_match(row, std::regex(R"(6,2,1 3 5 2 6 4,720,full,[0-9]+\.[0-9]{3})")))
      << row;
}

TEST(Cli, BoundsJson) {
  const CliResult r = run({"bounds", "--n", "1000", "--l", "2"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["probabilistic"]["k_convex"], 400);
  EXPECT_TRUE(j["probabilistic"]["inequality_holds"].get<bool>());
  EXPECT_EQ(j["lower_bounds"]["rball"], 43);
  const json small = json::parse(run({"bounds", "--n", "4"}).out);
  EXPECT_TRUE(small["probabilistic"]["log10_ratio"].is_null());
}

TEST(Cli, ForceCertified) {
  const CliResult r = run({"force", "--n", "6", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.err, "seed=5\n");
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["family"]["sets"].size(), j["ell"].get<std::size_t>());
  // The emitted family is itself a valid instance that verify accepts.
  const std::string path = tmp("family.json");
  write(path, j["family"].dump());
  EXPECT_TRUE(json::parse(run({"verify", "--instance", path}).out)["forces_single_edge"]
                  .get<bool>());
  EXPECT_EQ(run({"force", "--n", "6", "--seed", "5"}).out, r.out);
}

TEST(Cli, DrawHighlightsCrossing) {
  const std::string m = tmp("pm.json");
  write(m, R"({"edges":[[1,2],[3,4]]})");
  const CliResult r = run({"draw", "--instance", data("forcing_four.json"), "--matching", m});
  ASSERT_EQ(r.code, 0);
  // Three panels; the pair crosses only in the second.
  const std::string& svg = r.out;
  const auto p2 = svg.find("<g id=\"set2\">");
  const auto p3 = svg.find("<g id=\"set3\">");
  ASSERT_NE(p2, std::string::npos);
  ASSERT_NE(p3, std::string::npos);
  EXPECT_EQ(svg.substr(0, p2).find("#d62728"), std::string::npos);
  EXPECT_NE(svg.substr(p2, p3 - p2).find("#d62728"), std::string::npos);
  EXPECT_EQ(svg.substr(p3).find("#d62728"), std::string::npos);
  EXPECT_EQ(run({"draw", "--instance", data("forcing_four.json"), "--matching", m}).out, svg);

  const CliResult empty = run({"draw", "--instance", data("forcing_four.json")});
  EXPECT_EQ(empty.out.find("<line"), std::string::npos);
  EXPECT_NE(empty.out.find("<circle"), std::string::npos);
}

TEST(Cli, OutFlagAndRoundTrip) {
  for (const char* kind : {"five-block", "bit-partition", "random-convex", "random-planar"}) {
    const std::string path = tmp(std::string(kind) + ".json");
    const CliResult g = run({"generate", "--kind", kind, "--n", "10", "--seed", "1", "--out", path});
    ASSERT_EQ(g.code, 0) << kind << g.err;
    EXPECT_TRUE(g.out.empty());
    EXPECT_NO_THROW(compat::parse_instance(slurp(path)));
    EXPECT_EQ(run({"solve", "--instance", path, "--algorithm", "greedy"}).code, 0) << kind;
    EXPECT_EQ(run({"verify", "--instance", path}).code, 0) << kind;
    EXPECT_EQ(run({"draw", "--instance", path}).code, 0) << kind;
  }
}
