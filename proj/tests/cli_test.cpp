#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "hmf/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hmf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hmf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(HMF_SAMPLES_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "circulant", "--n", "3"}).code, 0);
  const auto bad = run({"verify", "no-such-id"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"verify", "circulant", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "circulant", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "orthogonal-basis-Linf"}).code, 0);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "ons-not-closed", "--n", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["id"], "ons-not-closed");
  EXPECT_TRUE(j["passed"].get<bool>());
  bool found = false;
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass") << c.dump();
    found |= c["name"] == "residual-norm-one";
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyAllDeterministic) {
  const auto a = run({"verify", "all", "--format", "json"});
  const auto b = run({"verify", "all", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).size(), hmf::gallery::ids().size());
  const auto csv = run({"verify", "all", "--format", "csv"});
  EXPECT_EQ(lines(csv.out).front(), "id,check,status,claim");
}

TEST(Cli, Table) {
  const auto r = run({"table", "--system", sample("ons-system.json"), "--vector", sample("ons-vector.json"), "--schedule",
                      "1,2,4,8", "--eps", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5U);
  EXPECT_EQ(ls[0], "n,residual_norm_lo,residual_norm_hi,measure_gt_1/2_lo,measure_gt_1/2_hi");
  EXPECT_EQ(ls[1], "1,1/1,1/1,1/2,1/2");
  EXPECT_EQ(ls[4], "8,1/1,1/1,1/256,1/256");

  const auto j = run({"table", "--system", sample("ons-system.json"), "--vector", sample("ons-vector.json"), "--schedule",
                      "3", "--eps", "1/2", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(nlohmann::json::parse(j.out)[0]["superlevel"]["1/2"].dump(), R"(["1/8","1/8"])");

  EXPECT_EQ(run({"table", "--system", sample("ons-system.json"), "--vector", sample("ons-vector.json"), "--schedule", "1",
                 "--eps", "0"}).code,
            2);
  EXPECT_EQ(run({"table", "--system", sample("missing.json"), "--vector", sample("ons-vector.json"), "--schedule", "1"}).code,
            2);
  EXPECT_EQ(run({"table", "--system", sample("ons-system.json"), "--vector", sample("element.json"), "--schedule", "1"}).code,
            2);
}

TEST(Cli, Frame) {
  const auto ok = run({"frame", "--system", sample("halves-system.json"), "--vector", sample("halves-tests.json"), "--lower",
                       "1", "--upper", "1", "--format", "json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(j["tight"].get<bool>());
  EXPECT_TRUE(j["standard"].get<bool>());

  const auto bad = run({"frame", "--system", sample("halves-system.json"), "--vector", sample("halves-tests.json"), "--lower",
                        "2", "--upper", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("FAILED"), std::string::npos);

  EXPECT_EQ(run({"frame", "--system", sample("ons-system.json"), "--vector", sample("ons-vector.json"), "--lower", "1",
                 "--upper", "1"}).code,
            2);
}

TEST(Cli, Inspect) {
  const auto r = run({"inspect", sample("element.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sup_norm"].dump(), R"(["1/4","1/4"])");
  EXPECT_TRUE(j["nonnegative"].get<bool>());
  EXPECT_EQ(j["isolated_zeros"], 1);
  EXPECT_EQ(run({"inspect", sample("element.json"), "--width", "0"}).code, 2);
  EXPECT_EQ(run({"inspect", sample("halves-system.json")}).code, 2);
}

TEST(Cli, WidthFromEnvironment) {
  ::setenv("HMF_WIDTH", "-1", 1);
  EXPECT_EQ(run({"inspect", sample("element.json")}).code, 2);
  ::setenv("HMF_WIDTH", "1/1024", 1);
  EXPECT_EQ(run({"inspect", sample("element.json")}).code, 0);
  EXPECT_EQ(run({"inspect", sample("element.json"), "--width", "1/8"}).code, 0);
  ::unsetenv("HMF_WIDTH");
}
