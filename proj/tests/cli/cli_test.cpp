#include "colorgates/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace colorgates {
namespace {

namespace fs = std::filesystem;

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "colorgates");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("colorgates_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  fs::path dir_;
};

TEST_F(CliTest, CheckAllPasses) {
  const auto r = run({"check", "all"});
  EXPECT_EQ(r.rc, cli::kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"colex", "validate", "tetra15", "--bogus"}).rc, cli::kUsageError);
  EXPECT_EQ(run({}).rc, cli::kUsageError);
  EXPECT_EQ(run({"colex", "validate", (dir_ / "missing.json").string()}).rc, cli::kUsageError);
  EXPECT_EQ(run({"oracle", "theorem1", "--qubit", "1", "--pauli", "x.txt"}).rc, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).rc, cli::kOk);
}

TEST_F(CliTest, ValidateBuiltins) {
  EXPECT_EQ(run({"colex", "validate", "tetra15"}).rc, cli::kOk);
  EXPECT_EQ(run({"colex", "validate", "torus:4"}).rc, cli::kOk);
  EXPECT_EQ(run({"colex", "validate", "torus:2"}).rc, cli::kCheckFailed);
}

TEST_F(CliTest, Theorem1IsDeterministic) {
  const auto a = run({"oracle", "theorem1", "--qubit", "3"});
  const auto b = run({"oracle", "theorem1", "--qubit", "3"});
  EXPECT_EQ(a.rc, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST_F(CliTest, MalformedPauliReportsLine) {
  const auto p = write("bad.txt", "X 0 1\nY 2\n");
  const auto r = run({"code", "syndrome", "tetra15", p.string()});
  EXPECT_EQ(r.rc, cli::kUsageError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, SyndromeAndTolerable) {
  const auto p = write("x.txt", "X 0\n");
  const auto s = run({"code", "syndrome", "tetra15", p.string()});
  EXPECT_EQ(s.rc, cli::kOk);
  EXPECT_EQ(run({"tga", "tolerable", "tetra15", p.string()}).rc, cli::kOk);
}

TEST_F(CliTest, PropagationRoundTrip) {
  const auto p = write("x.txt", "X 0 5\n");
  const auto out = dir_ / "y.txt";
  ASSERT_EQ(run({"prop", "apply", "standard-p", p.string(), "--out", out.string()}).rc, cli::kOk);
  const auto text = slurp(out);
  EXPECT_NE(text.find("X 0 5"), std::string::npos) << text;
  EXPECT_NE(text.find("Z 0 5"), std::string::npos) << text;
}

TEST_F(CliTest, NoiseOutputIsDeterministicAndComplete) {
  const auto a = dir_ / "a.csv", b = dir_ / "b.csv", h = dir_ / "h.csv";
  const std::vector<std::string> common{"noise", "mc", "torus:4", "--p", "0.004", "--trials", "200", "--seed", "11"};
  auto args = common;
  args.insert(args.end(), {"--out", a.string(), "--hist", h.string(), "--threads", "1"});
  ASSERT_EQ(run(args).rc, cli::kOk);
  args = common;
  args.insert(args.end(), {"--out", b.string(), "--threads", "3"});
  ASSERT_EQ(run(args).rc, cli::kOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_TRUE(fs::exists(h));
  // No temporaries are left next to the outputs.
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 3U);
}

TEST_F(CliTest, FailedRunLeavesNoOutput) {
  const auto a = dir_ / "a.csv";
  EXPECT_EQ(run({"noise", "mc", "tetra15", "--p", "1.5", "--seed", "1", "--out", a.string()}).rc, cli::kUsageError);
  EXPECT_FALSE(fs::exists(a));
}

}  // namespace
}  // namespace colorgates
