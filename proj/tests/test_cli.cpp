#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "superstar/cli.hpp"
#include <json.hpp>

namespace superstar::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = fs::temp_directory_path() /
            ("superstar_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(counter_++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Cli, StarAndBracket) {
  auto r = run_command({"star", "--sig", "1,1,1", "p1", "q1"});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.out, "p1*q1 + 1/2*h\n");
  EXPECT_EQ(run_command({"bracket", "--sig", "1,1,1", "p1", "q1"}).out, "1\n");
  EXPECT_EQ(run_command({"commutator", "--sig", "1,1,1", "t1", "t1"}).out, "-1*h\n");
  EXPECT_EQ(run_command({"star", "--sig", "1,1,1", "--eps", "-,+", "t1", "t1"}).out, "1/2*h\n");
  EXPECT_EQ(run_command({"star", "--sig", "1,0,0", "--max-hbar", "0", "p1", "q1"}).out, "p1*q1\n");
}

TEST(Cli, JsonResult) {
  auto r = run_command({"star", "--sig", "1,1,1", "--json", "p1", "q1"});
  ASSERT_EQ(r.exit_code, kSuccess);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["ok"], true);
  EXPECT_EQ(doc["result"], "p1*q1 + 1/2*h");
  EXPECT_EQ(doc["signature"]["n"], 1);
  EXPECT_EQ(doc["signature"]["a"], 1);
  EXPECT_EQ(doc["signature"]["b"], 1);
  EXPECT_EQ(doc["signature"]["eps"], (json::array({1, -1})));
  EXPECT_EQ(doc["hbar_order"], 1);
}

TEST(Cli, NormalOrder) {
  EXPECT_EQ(run_command({"normal-order", "--sig", "1,1,0", "q1 p1"}).out, "p1*q1 - h\n");
  EXPECT_EQ(run_command({"normal-order", "--sig", "1,1,0", "t1*t1"}).out, "-1/2*h\n");
  EXPECT_EQ(run_command({"normal-order", "--sig", "1,1,0", "--star-basis", "p1 q1"}).out,
            "p1*q1 + 1/2*h\n");
  EXPECT_EQ(run_command({"normal-order", "--sig", "1,1,0", "p1 x1"}).exit_code, kUsageError);
}

TEST(Cli, MemberAndAct) {
  TempFile shear(R"({"A": [[1, 1], [0, 1]]})");
  EXPECT_EQ(run_command({"member", "--sig", "1,0,0", shear.path()}).out, "true\n");
  EXPECT_EQ(run_command({"act", "--sig", "1,0,0", shear.path(), "q1"}).out, "p1 + q1\n");

  TempFile perturbed(R"({"A": [[1, 1], ["1/3", 1]]})");
  auto r = run_command({"member", "--sig", "1,0,0", perturbed.path()});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run_command({"act", "--sig", "1,0,0", perturbed.path(), "q1"}).exit_code, kMathError);

  TempFile odd_lie(R"({"A": [[0, 0], [0, 0]], "B": [[0], ["x1"]], "C": [["x1", 0]], "D": [[0]]})");
  EXPECT_EQ(run_command({"member", "--sig", "1,1,0", "--lie", odd_lie.path()}).out, "true\n");
  EXPECT_EQ(run_command({"member", "--sig", "1,1,0", odd_lie.path()}).out, "false\n");
  TempFile odd(R"({"A": [[1, 0], [0, 1]], "B": [[0], ["x1"]], "C": [["x1", 0]], "D": [[1]]})");
  EXPECT_EQ(run_command({"member", "--sig", "1,1,0", odd.path()}).out, "true\n");
  TempFile missing_d(R"({"A": [[1, 0], [0, 1]]})");
  EXPECT_EQ(run_command({"member", "--sig", "1,1,0", missing_d.path()}).exit_code, kMathError);

  TempFile rotation(R"({"D": [["3/5", "4/5"], ["-4/5", "3/5"]]})");
  EXPECT_EQ(run_command({"member", "--sig", "0,2,0", rotation.path()}).out, "true\n");

  TempFile wrong_size(R"({"A": [[1, 0, 0]]})");
  EXPECT_EQ(run_command({"member", "--sig", "1,0,0", wrong_size.path()}).exit_code, kMathError);
  TempFile broken("{not json");
  EXPECT_EQ(run_command({"member", "--sig", "1,0,0", broken.path()}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"member", "--sig", "1,0,0", "/nonexistent/m.json"}).exit_code,
            kUsageError);
}

TEST(Cli, Jet) {
  EXPECT_EQ(run_command({"jet", "--sig", "1,2,0", "t1*t2"}).out,
            "t1*t2 + t1*T2 - t2*T1 + T1*T2\n");
  auto defect = run_command({"jet", "--sig", "1,0,0", "--defect", "--json", "p1^2*q1"});
  ASSERT_EQ(defect.exit_code, kSuccess);
  EXPECT_EQ(json::parse(defect.out)["flat"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_command({}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"frobnicate"}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"star", "p1", "q1"}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"star", "--sig", "1,x,0", "p1", "q1"}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"star", "--sig", "1,1,0", "--eps", "+,+", "t1", "t1"}).exit_code,
            kUsageError);
  auto r = run_command({"star", "--sig", "1,0,0", "p1 +", "q1"});
  EXPECT_EQ(r.exit_code, kUsageError);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  EXPECT_EQ(run_command({"star", "--sig", "1,0,0", "t1", "q1"}).exit_code, kUsageError);
  EXPECT_EQ(run_command({"star", "--help"}).exit_code, kSuccess);
}

TEST(Cli, OddSquareWarning) {
  auto r = run_command({"star", "--sig", "0,1,0", "t1^2", "1"});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.out, "0\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, CheckPassesAndDetectsFaults) {
  auto clean = run_command({"check", "--sig", "1,1,1", "--degree", "3", "--cases", "20"});
  EXPECT_EQ(clean.exit_code, kSuccess) << clean.out;
  for (const char* fault : {"star-reversed", "bracket-scaled", "no-koszul"}) {
    auto broken = run_command(
        {"check", "--sig", "1,1,1", "--degree", "3", "--cases", "20", "--inject-fault", fault});
    EXPECT_EQ(broken.exit_code, kInvariantFailure) << fault;
    EXPECT_NE(broken.out.find("FAIL"), std::string::npos) << fault;
  }
  EXPECT_EQ(run_command({"check", "--sig", "1,1,1", "--inject-fault", "bogus"}).exit_code,
            kUsageError);
}

TEST(Cli, CheckIsDeterministic) {
  std::vector<std::string> args{"check", "--sig", "1,1,1", "--cases", "10", "--seed", "42", "--json"};
  auto first = run_command(args);
  auto second = run_command(args);
  args.push_back("--serial");
  auto serial = run_command(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, serial.out);
  EXPECT_EQ(json::parse(first.out)["checks"].size(), 32u);
}

TEST(Cli, BinaryExitCodes) {
  const std::string cli = SUPERSTAR_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("star --sig 1,1,1 p1 q1"), kSuccess);
  EXPECT_EQ(status("star --sig 1,1,1 'p1 +' q1"), kUsageError);
  EXPECT_EQ(status("check --sig 1,0,0 --cases 5 --inject-fault bracket-scaled"), kInvariantFailure);
}

}  // namespace
}  // namespace superstar::cli
