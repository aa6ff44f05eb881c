#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "ghd/convert.hpp"
#include "ghd/grid_io.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("ghd-shell-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Exit code of the CLI; stdout and stderr go to out.txt in the scratch dir.
int cli(const std::string& args) {
  std::string cmd = std::string("\"") + GHD_CLI_PATH + "\" " + args + " > \"" + (scratch() / "out.txt").string() +
                    "\" 2>&1";
  int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string output() { return ghd::read_file(scratch() / "out.txt"); }

std::string data(const std::string& f) { return "\"" + oracle::data_path(f).string() + "\""; }

}  // namespace

TEST(Cli, VerifyGrid) {
  EXPECT_EQ(cli("verify " + data("ex1_1.grid") + " --star auto"), 0);
  EXPECT_NE(output().find("GHD(8,18) verified"), std::string::npos) << output();
}

TEST(Cli, VerifyStarter) {
  EXPECT_EQ(cli("verify " + data("appB_t_n8.sa") + " --star auto"), 0);
  EXPECT_NE(output().find("star hole of size 4"), std::string::npos) << output();
}

TEST(Cli, VerifyBrokenGrid) {
  EXPECT_EQ(cli("verify " + data("ex3_1.grid")), 1);
}

TEST(Cli, ExpandCheckAgainst) {
  EXPECT_EQ(cli("expand " + data("appB_t_n8.sa") + " --check-against " + data("ex3_1.grid")), 1);
  EXPECT_NE(output().find("11 cells differ"), std::string::npos) << output();
  EXPECT_EQ(cli("expand " + data("appB_i_n7.sa") + " --check-against " + data("ex3_2.grid")), 0);
}

TEST(Cli, ExpandToFile) {
  auto out = scratch() / "n8.grid";
  ASSERT_EQ(cli("expand " + data("appB_t_n8.sa") + " -o \"" + out.string() + "\""), 0);
  EXPECT_TRUE(oracle::is_ghd(ghd::load_grid(out)));
}

TEST(Cli, Build) {
  auto recipe = oracle::source_dir() / "recipes" / "ghd44_126.json";
  EXPECT_EQ(cli("build --recipe \"" + recipe.string() + "\""), 0);
  EXPECT_NE(output().find("GHD(44,126) verified"), std::string::npos) << output();
}

TEST(Cli, Search) {
  EXPECT_EQ(cli("search starter -n 8 -x 2"), 0);
  EXPECT_NE(output().find("Found"), std::string::npos);
  EXPECT_EQ(cli("search exhaustive -s 3 -v 9"), 1);
  EXPECT_NE(output().find("Empty"), std::string::npos);
  EXPECT_EQ(cli("search imols -y 8 -a 0"), 0);
}

TEST(Cli, Catalog) {
  EXPECT_EQ(cli("catalog list"), 0);
  EXPECT_NE(output().find("52 verified, 1 quarantined"), std::string::npos) << output();
  EXPECT_EQ(cli("catalog check-all"), 1);
  EXPECT_EQ(cli("catalog show ex1.1"), 0);
  EXPECT_EQ(cli("catalog show ex3.1"), 1);
  EXPECT_EQ(cli("catalog show nope"), 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("frobnicate"), 2);
  EXPECT_EQ(cli("verify"), 2);
  EXPECT_EQ(cli("convert " + data("ex1_1.grid") + " --to xml"), 2);
  EXPECT_EQ(cli("verify \"" + (scratch() / "missing.grid").string() + "\""), 2);
  EXPECT_EQ(cli("--help"), 0);
}

TEST(Cli, ConvertRoundTrip) {
  auto src = ghd::load_grid(oracle::data_path("ex1_1.grid"));
  for (std::string fmt : {"pa", "dcw", "json", "grid"}) {
    auto out = scratch() / ("ex1_1." + fmt);
    ASSERT_EQ(cli("convert " + data("ex1_1.grid") + " --to " + fmt + " -o \"" + out.string() + "\""), 0) << fmt;
    auto back = scratch() / ("back_" + fmt + ".grid");
    ASSERT_EQ(cli("convert \"" + out.string() + "\" --to grid -o \"" + back.string() + "\""), 0) << fmt;
    auto g = ghd::load_grid(back);
    EXPECT_TRUE(oracle::is_ghd(g)) << fmt;
    EXPECT_EQ(g.side(), src.side());
    EXPECT_EQ(g.v(), src.v());
    if (fmt == "json" || fmt == "grid") EXPECT_TRUE(ghd::same_by_label(g, src)) << fmt;
  }
}
