#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = avmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = AVMOD_DATA_DIR;

}  // namespace

TEST(Cli, PhiExample) {
  const CliRun r = run({"phi", "-n", "1", "1 # x1^2*d1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1^2*d1 @ 1 + 2*x1 @ x1*d1 + 1 @ x1^2*d1\n");
}

TEST(Cli, PsiInvertsPhi) {
  const CliRun r = run({"psi", "-n", "1", "x1^2*d1 @ 1 + 2*x1 @ x1*d1 + 1 @ x1^2*d1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 # x1^2*d1\n");
}

TEST(Cli, NormalizeMulBracket) {
  EXPECT_EQ(run({"normalize", "-a", "weyl", "d1*x1"}).out, "x1*d1 + 1\n");
  EXPECT_EQ(run({"mul", "-a", "weyl", "d1", "x1"}).out, "x1*d1 + 1\n");
  EXPECT_EQ(run({"bracket", "-a", "weyl", "d1", "x1"}).out, "1\n");
  EXPECT_EQ(run({"bracket", "-a", "vectorfield", "-n", "2", "d1", "x1*d2"}).out, "d2\n");
  EXPECT_EQ(run({"mul", "-a", "vectorfield", "d1", "d1"}).code, 2);
}

TEST(Cli, FlagsMayFollowSubcommands) {
  EXPECT_EQ(run({"normalize", "x2", "-a", "poly", "-n", "2"}).out, run({"-n", "2", "-a", "poly", "normalize", "x2"}).out);
}

TEST(Cli, LeadingMinusAfterSeparator) {
  EXPECT_EQ(run({"normalize", "-a", "poly", "--", "-x1 + 2"}).out, "-x1 + 2\n");
  EXPECT_EQ(run({"normalize", "-a", "poly", "-x1"}).code, 2);
}

TEST(Cli, SuitesExitZero) {
  EXPECT_EQ(run({"roundtrip", "-n", "2", "--max-deg", "3", "--seed", "7"}).code, 0);
  EXPECT_EQ(run({"roundtrip", "-n", "1", "1 # x1^2*d1 + x1 # 1"}).code, 0);
  EXPECT_EQ(run({"roundtrip", "-a", "tensor", "-n", "1", "d1 @ x1*d1"}).code, 0);
  EXPECT_EQ(run({"hom-check", "-n", "1", "--max-deg", "2"}).code, 0);
  EXPECT_EQ(run({"lemma-check", "-n", "2", "--max-deg", "2"}).code, 0);
  EXPECT_EQ(run({"fuzz", "--iterations", "8", "--max-deg", "2"}).code, 0);
}

TEST(Cli, GaugeCommands) {
  const CliRun verify = run({"gauge", "verify", kData + "/adjoint2.json"});
  EXPECT_EQ(verify.code, 0);
  EXPECT_NE(verify.out.find("result: PASS"), std::string::npos);
  EXPECT_EQ(run({"gauge", "act", kData + "/adjoint2.json", "x2*d1", "0,1"}).out, "(-1, 0)\n");
  EXPECT_EQ(run({"gauge", "axioms", kData + "/adjoint1.json"}).code, 0);
  EXPECT_EQ(run({"gauge", "transport", kData + "/trivial2.json", "--max-deg", "2"}).code, 0);
  for (const char* broken : {"/broken_gf1.json", "/broken_gf2.json", "/broken_hom.json"}) {
    const CliRun r = run({"gauge", "verify", kData + broken});
    EXPECT_EQ(r.code, 1) << broken;
    EXPECT_NE(r.out.find("residual"), std::string::npos) << broken;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"normalize", "-a", "poly", "x1 +"}).code, 2);
  EXPECT_EQ(run({"normalize", "-a", "poly", "-n", "1", "x2"}).code, 2);
  EXPECT_EQ(run({"psi", "-n", "1", "1 @ d1"}).code, 2);
  EXPECT_EQ(run({"gauge", "act", kData + "/adjoint2.json", "d1", "1"}).code, 2);
  EXPECT_EQ(run({"gauge", "verify", kData + "/missing.json"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ErrorsGoToErr) {
  const CliRun r = run({"normalize", "-a", "poly", "x1 + )"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("position"), std::string::npos);
}

TEST(Cli, ReportsAreReproducible) {
  const std::vector<std::string> args{"roundtrip", "-n", "2", "--max-deg", "2", "--seed", "11", "--count", "10"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed 11"), std::string::npos);
  std::vector<std::string> json_args = args;
  json_args.push_back("--json");
  EXPECT_EQ(run(json_args).out, run(json_args).out);
}
