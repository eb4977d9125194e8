#include <gtest/gtest.h>

#include <sstream>

#include "rummy/cli.hpp"

using namespace rummy;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDeclarable = "2H 3H 4H 5H 5C 6C 7C 9S 9D 9H JS JD JC";
const std::string kExtremal = "2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD";

}  // namespace

TEST(Cli, MindistOfADeclarableHand) {
  const Outcome o = call({"mindist", "--hand", kDeclarable, "--wcj", "AD"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, 2), "0\n");
}

TEST(Cli, MindistJson) {
  const Outcome o = call({"--format", "json", "mindist", "--hand", kExtremal, "--wcj", "AH"});
  ASSERT_EQ(o.code, 0);
  const auto j = Json::parse(o.out);
  EXPECT_EQ(j["mindist"], 7);
  EXPECT_EQ(j["kept"].size(), 6u);
  EXPECT_EQ(j["replacements"].size(), 7u);
  EXPECT_TRUE(j.contains("witness_melds"));
}

TEST(Cli, Declarable) {
  EXPECT_EQ(call({"declarable", "--hand", kDeclarable, "--wcj", "AD"}).out.substr(0, 4), "yes\n");
  EXPECT_EQ(call({"declarable", "--hand", kExtremal, "--wcj", "AH"}).out, "no\n");
}

TEST(Cli, CertifyEachConstruction) {
  for (const char* prop : {"1", "2", "3"}) {
    const Outcome o = call({"--format", "json", "certify", "--hand", kExtremal, "--wcj", "AH", "--prop", prop});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = Json::parse(o.out);
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_LE(j["claimed_distance"].get<int>(), j["bound"].get<int>());
  }
}

TEST(Cli, VerifyExtremal) {
  const Outcome o = call({"verify", "extremal", "--workers", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("MinDist 7"), std::string::npos);
}

TEST(Cli, VerifyLemma1Json) {
  const Outcome o = call({"--format", "json", "verify", "lemma1"});
  EXPECT_EQ(o.code, 0);
  const auto j = Json::parse(o.out);
  EXPECT_EQ(j["cases_enumerated"], 715);
  EXPECT_EQ(j["figures"]["max_min_gap"], 2);
}

TEST(Cli, VerifyLinearModelReportsItsCounterexamples) {
  const Outcome o = call({"verify", "3332", "--model", "paper"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("cases: 1108800"), std::string::npos);
  EXPECT_NE(o.out.find("failures: 144"), std::string::npos);
}

TEST(Cli, SampleWithCsv) {
  const std::string path = ::testing::TempDir() + "hist.csv";
  const Outcome o = call({"--format", "json", "sample", "--n", "20", "--seed", "7", "--csv", path});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(Json::parse(o.out)["sample_size"], 20);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "value,count");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"mindist", "--hand", kDeclarable}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"mindist", "--hand", kDeclarable, "--wcj", "AD", "--bogus"}).code, 2);
  EXPECT_EQ(call({"verify", "3332", "--model", "circular"}).code, 2);
  EXPECT_EQ(call({"certify", "--hand", kDeclarable, "--wcj", "AD", "--prop", "4"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "verify", "lemma1"}).code, 2);
  const Outcome unknown = call({"mindist", "--hand", kDeclarable, "--wcj", "AD", "--bogus"});
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos);
}

TEST(Cli, InputErrorsNameTheToken) {
  const Outcome bad = call({"mindist", "--hand", "2H 3H 4H 5H 5C 6C 7C 9S 9D 9H JS JD 1X", "--wcj", "AD"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("1X"), std::string::npos);
  EXPECT_EQ(call({"mindist", "--hand", "2H 3H", "--wcj", "AD"}).code, 2);
  EXPECT_EQ(call({"mindist", "--hand", kDeclarable, "--wcj", "2H"}).code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  const Outcome o = call({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("verify"), std::string::npos);
}
