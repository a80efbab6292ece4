#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "rnafold/io.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(RNAFOLD_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(RNAFOLD_FIXTURES) + "/" + name; }

rnafold::ResultDocument doc(const CliRun& r) { return rnafold::ResultDocument::from_text(r.out); }

}  // namespace

TEST(Cli, SolveSn4) {
  const CliRun r = cli("solve GGGGCCCC");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(doc(r).get("optimal-score"), "3");
  EXPECT_EQ(doc(r).get("unique"), "true");
  EXPECT_EQ(doc(r).get("command"), "solve");
}

TEST(Cli, SolveWithoutBonds) {
  const CliRun r = cli("solve GGGG");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(doc(r).get("optimal-score"), "0");
}

TEST(Cli, LengthLimitExitsWithTwo) {
  EXPECT_EQ(cli("solve " + std::string(21, 'G')).code, 2);
}

TEST(Cli, ParseErrorExitsWithOne) {
  EXPECT_EQ(cli("solve GGQC").code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
  EXPECT_EQ(cli("approx GGAUCC").code, 1);
}

TEST(Cli, StructuredOutputIsJson) {
  const CliRun r = cli("solve GGGGCCCC --format structured");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("optimal-score"), "3");
}

TEST(Cli, WorkersDoNotChangeOutput) {
  EXPECT_EQ(cli("solve GCAUGGCCAUGC --workers 1").out, cli("solve GCAUGGCCAUGC --workers 3").out);
}

TEST(Cli, BoundParity) {
  const CliRun r = cli("bound --parity GGGGCCCC");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(doc(r).get("parity-bound"), "4");
  EXPECT_FALSE(doc(r).get("bbox-bound").has_value());
}

TEST(Cli, GenFamilies) {
  EXPECT_EQ(doc(cli("gen sn 4")).get("sequence"), "GGGGCCCC");
  EXPECT_EQ(doc(cli("gen mixed 4 2")).get("sequence"), "GGAUCC");
  EXPECT_EQ(doc(cli("gen fn 3")).get("bonds"), "2");
  EXPECT_EQ(cli("gen zz 3").code, 1);
}

TEST(Cli, ApproxWritesFoldingFile) {
  const auto path = std::filesystem::temp_directory_path() / "rnafold_cli_approx.fold";
  const CliRun r = cli("approx GGGGCCCC --exact --out " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(std::stoul(*doc(r).get("achieved")), 2u);
  EXPECT_EQ(doc(r).get("optimal"), "3");
  const auto f = rnafold::read_folding(rnafold::read_file(path.string()));
  EXPECT_EQ(f.size(), 8u);
  std::filesystem::remove(path);
}

TEST(Cli, ReduceAndVerify) {
  const CliRun r = cli("reduce " + fixture("toy_clause.layout") + " --assignment x1=1");
  ASSERT_EQ(r.code, 0);
  const auto d = doc(r);
  EXPECT_EQ(d.get("assignment.1.bonds"), d.get("k"));
  EXPECT_EQ(cli("verify " + fixture("toy_clause.layout") + " x1=1").code, 0);
  EXPECT_EQ(cli("verify " + fixture("toy_clause.layout") + " x1=0").code, 3);
  EXPECT_EQ(cli("reduce " + fixture("bad_spacing.layout")).code, 1);
}

TEST(Cli, VerifyGadget) {
  const CliRun r = cli("verify --gadget rigid --periods 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(doc(r).get("straight-unique"), "true");
}

TEST(Cli, RenderAscii) {
  const CliRun r = cli("render GGGGCCCC RRRULLL");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "C-C-C-C\n: : : |\nG-G-G-G\n");
  EXPECT_EQ(cli("render GGGCCCC RRRULLL").code, 1);
  const CliRun svg = cli("render GGGGCCCC RRRULLL --render svg");
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
}
