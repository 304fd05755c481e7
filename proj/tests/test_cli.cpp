#include "aztec/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace aztec::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> class_sizes(const nlohmann::json& doc) {
  std::map<std::string, std::string> out;
  for (const auto& c : doc.at("classes"))
    if (c.at("size") != "0") out[c.at("signature")] = c.at("size");
  return out;
}

TEST(Cli, CountDefaultsToAllZip) {
  const auto r = invoke({"count", "--n", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"n\":2,\"barriers\":\"..\",\"count\":\"8\"}\n");
}

TEST(Cli, CountWithBarriers) {
  const auto r = invoke({"count", "--n", "8", "--barriers", ".i.a.a.i"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("count"), "4294967296");
}

TEST(Cli, CountCsv) {
  const auto r = invoke({"count", "--n", "3", "--barriers", ".i.a", "--format", "csv"});
  EXPECT_EQ(r.out, "n,barriers,count\n3,.i.a,16\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"count"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "2", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "2", "--barriers", "..."}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "2", "--barriers", "xz"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "11"}).code, kUsage);
  EXPECT_EQ(invoke({"enumerate", "--n", "6"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "2", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"stats", "distribution", "--k", "11"}).code, kUsage);
  EXPECT_EQ(invoke({"signature", "--n", "2"}, "not json").code, kUsage);
  const auto r = invoke({"count", "--n", "11"});
  EXPECT_NE(r.err.find("ceiling"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("census"), std::string::npos);
}

TEST(Cli, EnumerateSignatureCensusRoundTrip) {
  const auto tilings = invoke({"enumerate", "--n", "3"});
  ASSERT_EQ(tilings.code, kOk);
  const auto doc = nlohmann::json::parse(tilings.out);
  EXPECT_EQ(doc.at("count"), "64");
  EXPECT_EQ(doc.at("tilings").size(), 64u);

  const auto sig = invoke({"signature"}, tilings.out);
  ASSERT_EQ(sig.code, kOk) << sig.err;
  const auto census = invoke({"census", "--n", "3"});
  ASSERT_EQ(census.code, kOk);
  EXPECT_EQ(class_sizes(nlohmann::json::parse(sig.out)), class_sizes(nlohmann::json::parse(census.out)));
}

TEST(Cli, SignatureAcceptsBareArray) {
  const auto doc = nlohmann::json::parse(invoke({"enumerate", "--n", "1"}).out);
  const auto r = invoke({"signature", "--n", "1"}, doc.at("tilings").dump());
  ASSERT_EQ(r.code, kOk);
  const auto out = nlohmann::json::parse(r.out);
  EXPECT_EQ(out.at("signatures"), (nlohmann::json{"ai", "ia"}));
}

TEST(Cli, CensusAboveEnumerationCeilingUsesDp) {
  const auto r = invoke({"census", "--n", "6"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("method"), "dp");
  EXPECT_EQ(doc.at("tilings"), "2097152");
}

TEST(Cli, VerifySplitMinorsExactOutput) {
  const auto r = invoke({"verify", "theorem2", "--k", "3", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"status\":\"ok\",\"trials\":100}\n");
}

TEST(Cli, VerifyFamily) {
  for (const std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"verify", "theorem1", "--n", "4"},
           {"verify", "theorem1", "--n", "5", "--rotated"},
           {"verify", "formula1", "--n", "4"},
           {"verify", "jacobi-trudi", "--k", "3", "--trials", "3"},
           {"verify", "staircase", "--k", "4"},
           {"verify", "independence", "--k", "4"},
           {"verify", "moments", "--k", "4"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kOk) << args[1] << ": " << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("status"), "ok") << args[1];
  }
}

TEST(Cli, StatsReports) {
  const auto corr = nlohmann::json::parse(invoke({"stats", "correlations", "--k", "3"}).out);
  EXPECT_EQ(corr.at("same_parity_zero"), true);
  EXPECT_EQ(corr.at("pairs").size(), 15u);
  EXPECT_NE(corr.at("opposite_parity").at("label").get<std::string>().find("CONJECTURE"), std::string::npos);

  const auto sub = nlohmann::json::parse(invoke({"stats", "subset-correlations", "--n", "2", "--k", "1"}).out);
  EXPECT_EQ(sub.at("covariance")[0][1], "-1/4");

  const auto prof = invoke({"stats", "variance-profile", "--k", "1", "--format", "csv"});
  EXPECT_EQ(prof.out, "m,variance,exact\n1,0.25,1/4\n2,0,0/1\n");

  const auto dist = nlohmann::json::parse(invoke({"stats", "distribution", "--k", "2"}).out);
  EXPECT_EQ(dist.at("table")[1].at("probability"), "1/4");
}

TEST(Cli, SampleIsReproducible) {
  const auto a = invoke({"sample", "--k", "3", "--trials", "50", "--seed", "9"});
  const auto b = invoke({"sample", "--k", "3", "--trials", "50", "--seed", "9"});
  const auto c = invoke({"sample", "--k", "3", "--trials", "50", "--seed", "10"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).at("samples").size(), 50u);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "aztec_cli_out.json";
  const auto r = invoke({"count", "--n", "1", "--out", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "{\"n\":1,\"barriers\":\"..\",\"count\":\"2\"}");
  std::remove(path.c_str());
}

}  // namespace
}  // namespace aztec::cli
