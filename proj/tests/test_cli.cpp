#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "starec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = starec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("starec_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> f;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    f.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return f;
    start = tab + 1;
  }
}

}  // namespace

TEST(Duration, Parse) {
  using namespace std::chrono;
  EXPECT_EQ(starec::cli::parse_duration("60s"), milliseconds(60000));
  EXPECT_EQ(starec::cli::parse_duration("500ms"), milliseconds(500));
  EXPECT_EQ(starec::cli::parse_duration("2m"), milliseconds(120000));
  EXPECT_EQ(starec::cli::parse_duration("3"), milliseconds(3000));
  EXPECT_THROW(starec::cli::parse_duration("5x"), std::invalid_argument);
  EXPECT_THROW(starec::cli::parse_duration("abc"), std::invalid_argument);
}

TEST_F(Cli, RoundTripEveryFamily) {
  const std::vector<std::vector<std::string>> direct{
      {"--family", "k2d", "--d", "7"},           {"--family", "k3d", "--d", "9"},
      {"--family", "k4d-blocks", "--d", "15"},   {"--family", "krd-blocks", "--r", "9", "--d", "10"},
      {"--family", "krd-best", "--r", "6", "--d", "11"}, {"--family", "fixture", "--r", "5", "--d", "8"},
      {"--family", "two-p5"}};
  for (const auto& flags : direct) {
    std::vector<std::string> args{"color"};
    args.insert(args.end(), flags.begin(), flags.end());
    args.insert(args.end(), {"-o", path("c"), "--write-graph", path("g")});
    const Result r = run(args);
    ASSERT_EQ(r.code, 0) << flags[1] << r.err;
    EXPECT_EQ(run({"verify", path("g"), path("c")}).code, 0) << flags[1];
  }

  ASSERT_EQ(run({"generate", "--family", "halin", "--cycle", "25", "--seed", "9", "-o", path("h")}).code, 0);
  ASSERT_EQ(run({"color", "--family", "halin", "--graph", path("h"), "-o", path("hc")}).code, 0);
  EXPECT_EQ(run({"verify", path("h"), path("hc")}).code, 0);

  ASSERT_EQ(run({"generate", "--family", "biregular", "--y", "10", "--b", "6", "--seed", "2", "-o", path("b")}).code, 0);
  ASSERT_EQ(run({"color", "--family", "bireg", "--k", "3", "--graph", path("b"), "-o", path("bc")}).code, 0);
  EXPECT_EQ(run({"verify", path("b"), path("bc")}).code, 0);

  ASSERT_EQ(run({"generate", "--family", "biregular", "--y", "10", "--b", "7", "--seed", "2", "-o", path("o")}).code, 0);
  ASSERT_EQ(run({"color", "--family", "bireg", "--k", "3", "--graph", path("o"), "-o", path("oc")}).code, 0);
  EXPECT_EQ(run({"verify", path("o"), path("oc")}).code, 0);

  ASSERT_EQ(run({"generate", "--family", "bipartite", "--x", "40", "--y", "15", "--max-y", "3", "-o", path("t")}).code, 0);
  ASSERT_EQ(run({"color", "--family", "bip23", "--graph", path("t"), "-o", path("tc")}).code, 0);
  EXPECT_EQ(run({"verify", path("t"), path("tc")}).code, 0);

  ASSERT_EQ(run({"generate", "--family", "ladder", "--rungs", "5", "--matching", "-o", path("l")}).code, 0);
  ASSERT_EQ(run({"color", "--family", "planar-matched", "--graph", path("l"), "--matching", path("l.matching"),
                 "-o", path("lc")})
                .code,
            0);
  EXPECT_EQ(run({"verify", path("l"), path("lc")}).code, 0);
}

TEST_F(Cli, VerifyReportsWitness) {
  std::ofstream(path("p")) << "graph 5 4\n0 1\n1 2\n2 3\n3 4\n";
  std::ofstream(path("c")) << "coloring 4\n0 1\n1 2\n2 1\n3 2\n";
  const Result r = run({"--tsv", "verify", path("p"), path("c")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "violation\tBicoloredP4\t0,1,2,3\n");
  EXPECT_EQ(run({"verify", path("p"), path("c"), "--mode", "proper", "--tsv"}).out, "ok\tproper\t2\n");
}

TEST_F(Cli, ChiExitCodes) {
  ASSERT_EQ(run({"generate", "--family", "complete", "--r", "3", "--d", "3", "-o", path("k")}).code, 0);
  const Result ok = run({"chi", path("k"), "--tsv", "-o", path("w")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(split_tabs(ok.out.substr(0, ok.out.find('\n')))[1], "6");
  EXPECT_EQ(run({"verify", path("k"), path("w")}).code, 0);
  EXPECT_EQ(run({"chi", path("k"), "--max-colors", "5"}).code, 1);
  ASSERT_EQ(run({"generate", "--family", "complete", "--r", "5", "--d", "5", "-o", path("k55")}).code, 0);
  EXPECT_EQ(run({"chi", path("k55"), "--budget", "1ms"}).code, 3);
  EXPECT_EQ(run({"chi", path("missing")}).code, 2);
  std::ofstream(path("bad")) << "graph 2 1\n0 7\n";
  EXPECT_EQ(run({"chi", path("bad")}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  const Result r = run({"color", "--family", "nope"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bound", "--r", "4"}).code, 2);
  EXPECT_EQ(run({"color", "--family", "k2d"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, BoundGolden) {
  EXPECT_EQ(run({"bound", "--r", "4", "--d", "6"}).out, "10\n");
  EXPECT_EQ(run({"bound", "--r", "4", "--d", "6", "--ilp"}).out, "10\n");
  EXPECT_EQ(run({"--tsv", "bound", "--r", "5", "--d", "7", "--rhs", "half"}).out, "5\t7\tlp\thalf\t35/3\n");
  EXPECT_EQ(run({"bound", "--r", "8", "--d", "8", "--ilp", "--budget", "1ms"}).code, 3);
  const Result dump = run({"bound", "--r", "3", "--d", "2", "--dump-model"});
  EXPECT_NE(dump.out.find("x111"), std::string::npos);
}

TEST_F(Cli, FixturesTsvIsStrict) {
  const Result r = run({"--tsv", "fixtures", "--check"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto f = split_tabs(line);
    ASSERT_EQ(f.size(), 5u) << line;
    EXPECT_EQ(f[2], f[3]);
    EXPECT_EQ(f[4], "ok");
    ++rows;
  }
  EXPECT_EQ(rows, 22);
}
