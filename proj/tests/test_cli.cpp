#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "cwl/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cwl_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cwl::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CWL_TEST_DATA_DIR) + "/" + name; }

void expect_output(const std::vector<std::string>& args, const std::string& expected) {
  const Result r = cwl_run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, expected);
}

void expect_usage_error(const std::vector<std::string>& args) {
  const Result r = cwl_run(args);
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_TRUE(r.out.empty()) << r.out;
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.rfind("cwl: ", 0), 0U) << r.err;
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;  // one line
}

}  // namespace

TEST(Cli, LensExamples) {
  expect_output({"lens", "13", "4"}, "1/2\n");
  expect_output({"lens", "5", "3"}, "0\n");
  expect_output({"lens", "1", "1"}, "0\n");
  expect_output({"lens", "4", "3"}, "1/4\n");
  expect_output({"lens", "7", "10"}, "1/4\n");
  expect_usage_error({"lens", "4", "2"});
  expect_usage_error({"lens", "0", "1"});
}

TEST(Cli, DedekindExamples) {
  expect_output({"dedekind", "26", "5"}, "1/5\n");
  expect_output({"dedekind", "2", "3"}, "-1/18\n");
  expect_output({"dedekind", "-2", "3"}, "1/18\n");
  expect_output({"dedekind", "6", "9"}, "-1/18\n");
  expect_usage_error({"dedekind", "1", "0"});
  expect_usage_error({"dedekind", "1/2", "3"});
}

TEST(Cli, TnExamples) {
  expect_output({"tn", "3", "7/2"}, "8\n");
  expect_output({"tn", "2", "3"}, "1/2\n");
  expect_output({"tn", "1", "5"}, "0\n");
  expect_usage_error({"tn", "0", "3"});
  expect_usage_error({"tn", "2", "3/0"});
}

TEST(Cli, ChainExamples) {
  expect_output({"chain", "2", "2", "2"}, "L(4,3)\n");
  expect_output({"chain", "2", "3"}, "L(5,3)\n");
  expect_output({"chain", "2", "-1", "--tail", "-1/5"}, "L(13,4)\n");
  expect_usage_error({"chain", "2", "0"});
  expect_usage_error({"chain", "-2"});
  expect_usage_error({"chain", "2", "x"});
  expect_usage_error({"chain"});
}

TEST(Cli, LinkFileVerbs) {
  expect_output({"lambda", data("chain222.lnk")}, "1/4\n");
  expect_output({"walker", data("chain222.lnk")}, "1/8\n");
  expect_output({"h1", data("chain222.lnk")}, "4\n");
  expect_output({"lambda", data("unknot13_4.lnk")}, "1/2\n");
  expect_output({"walker", data("unknot13_4.lnk")}, "1/13\n");
  expect_output({"h1", data("unknot13_4.lnk")}, "13\n");
  expect_output({"h1", data("hopf3.lnk")}, "10\n");
  expect_output({"h1", data("singular.lnk")}, "0\n");
  expect_usage_error({"walker", data("singular.lnk")});
}

TEST(Cli, LambdaWarnsAboutDefaultedA1) {
  const Result hopf = cwl_run({"lambda", data("hopf3.lnk")});
  EXPECT_EQ(hopf.code, 0);
  EXPECT_EQ(hopf.out, "0\n");
  EXPECT_EQ(hopf.err, "warning: a1 defaulted to 0 for sublinks: {1} {2} {1,2}\n");
  const Result chain = cwl_run({"lambda", data("chain222.lnk")});
  EXPECT_TRUE(chain.err.empty()) << chain.err;
}

TEST(Cli, DeltaPrintsStepsAndTotal) {
  expect_output({"delta", data("t3.lnk")}, "step 1: 8\nstep 2: 8\ntotal: 16\n");
  expect_output({"delta", data("hopf3.lnk")}, "total: 0\n");
  // A path file is also a valid link file.
  expect_output({"h1", data("t3.lnk")}, "85\n");
}

TEST(Cli, VerifyReport) {
  const Result r = cwl_run({"verify", "--max-r", "12", "--max-nb", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all sweeps passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  expect_usage_error({"verify", "--max-r", "0"});
  expect_usage_error({"verify", "--max-r", "ten"});
}

TEST(Cli, UsageErrors) {
  expect_usage_error({});
  expect_usage_error({"frobnicate"});
  expect_usage_error({"lens", "13"});
  expect_usage_error({"lens", "13", "4", "5"});
  expect_usage_error({"lens", "1.5", "4"});
  expect_usage_error({"lambda", data("does_not_exist.lnk")});
  expect_usage_error({"lambda"});
}

TEST(Cli, ParseErrorNamesFileAndLine) {
  const Result r = cwl_run({"lambda", data("bad_line.lnk")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad_line.lnk"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find('3'), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const Result r = cwl_run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lambda"), std::string::npos);
}

TEST(Cli, OutputIsByteDeterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"verify", "--max-r", "20", "--max-nb", "4"},
      {"lambda", data("hopf3.lnk")},
      {"delta", data("t3.lnk")},
      {"chain", "3", "5", "7"},
  };
  for (const auto& args : cases) {
    const Result a = cwl_run(args);
    for (int k = 0; k < 3; ++k) {
      const Result b = cwl_run(args);
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(a.err, b.err);
      EXPECT_EQ(a.code, b.code);
    }
  }
}

TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(CWL_BIN) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("lens 13 4"), 0);
  EXPECT_EQ(status("lens 4 2"), 2);
  EXPECT_EQ(status("frobnicate"), 2);
  EXPECT_EQ(status("lambda " + data("does_not_exist.lnk")), 2);
}
