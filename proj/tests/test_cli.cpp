#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "telepathy_cli_test";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kScratch);
  auto log = kScratch / "stdout.txt";
  std::string cmd = std::string("\"") + TELEPATHY_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("color --n 5").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("tables --dist 8").code, 2);
  EXPECT_EQ(run("game --n 2 --strategy nonsense").code, 2);
  EXPECT_EQ(run("game --n 2 --strategy hash:1 --mode sometimes").code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Quantum) {
  auto r = run("quantum --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("z=0 P(equal)=1/1 verdict=pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("z=3 P(equal)=0/1 verdict=pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("classes=7 failures=0"), std::string::npos) << r.out;
}

TEST(Cli, ColorAndGame) {
  auto file = kScratch / "c8.txt";
  auto r = run("color --n 3 --out \"" + file.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.out;
  r = run("game --n 3 --strategy coloring:" + file.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("win 1/1"), std::string::npos) << r.out;
  EXPECT_EQ(run("game --n 2 --strategy coloring:" + file.string()).code, 2);
  EXPECT_EQ(run("color --n 2 --max-colors 3").code, 1);
}

TEST(Cli, GameHash) {
  auto r = run("game --n 2 --strategy hash:7");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equal questions 1/1"), std::string::npos) << r.out;
}

TEST(Cli, AlphaAndReduction) {
  auto r = run("alpha --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("alpha 4"), std::string::npos) << r.out;
  r = run("validate-reduction --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("alpha(G) = 4"), std::string::npos) << r.out;
  EXPECT_EQ(run("validate-reduction --n 4").code, 2);
}

TEST(Cli, VerifyAndCheckSmallN) {
  auto dir = kScratch / "cert8";
  fs::remove_all(dir);
  auto r = run("verify --n 3 --out \"" + dir.string() + "\"");
  EXPECT_EQ(r.code, 1) << r.out;
  r = run("check \"" + dir.string() + "\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("final implication"), std::string::npos) << r.out;
  EXPECT_EQ(run("check \"" + (kScratch / "missing").string() + "\"").code, 1);
}

TEST(Cli, VerifyIsDeterministic) {
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto a = kScratch / "det_a", b = kScratch / "det_b";
  fs::remove_all(a);
  fs::remove_all(b);
  run("verify --n 3 --seed 5 --out \"" + a.string() + "\"");
  run("verify --n 3 --seed 5 --out \"" + b.string() + "\"");
  auto ca = slurp(a / "certificate.txt");
  EXPECT_FALSE(ca.empty());
  EXPECT_EQ(ca, slurp(b / "certificate.txt"));
  // idempotent check
  EXPECT_EQ(run("check \"" + a.string() + "\"").out, run("check \"" + a.string() + "\"").out);
}
