#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sigfrac/circulant.hpp"
#include "sigfrac/sg_format.hpp"

namespace {

using testing::EndsWith;
using testing::HasSubstr;
using testing::StartsWith;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(SIGFRAC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SIGFRAC_SAMPLES) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sigfrac_cli_test_" + name);
}

TEST(ChiF, Circulants) {
  auto r = run("chi-f --circulant 5 --pos 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "chi_f=5/2\n");
  EXPECT_EQ(run("chi-f --circulant 3 --neg 1").out, "chi_f=2/1\n");
}

TEST(ChiF, FileAndWitness) {
  auto r = run("chi-f " + sample("c5_pos.sg") + " --witness");
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, StartsWith("chi_f=5/2\nw A="));
  EXPECT_THAT(r.out, EndsWith("theta: 0=1/2 1=1/2 2=1/2 3=1/2 4=1/2\n"));
}

TEST(ChiF, Errors) {
  EXPECT_EQ(run("chi-f " + sample("broken.sg")).status, 2);
  EXPECT_EQ(run("chi-f " + sample("missing.sg")).status, 2);
  EXPECT_EQ(run("chi-f --circulant 3 --pos 1 --neg 1").status, 2);
  EXPECT_EQ(run("chi-f").status, 2);
  EXPECT_EQ(run("chi-f --circulant 40 --pos 1").status, 3);
  EXPECT_EQ(run("no-such-command").status, 2);
}

TEST(AlphaS, Circulant) {
  auto r = run("alpha-s --circulant 4 --pos 1 --neg 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "alpha_s=4\n");
}

TEST(Circulant, RoundTrip) {
  auto path = temp_file("c7.sg");
  ASSERT_EQ(run("circulant 7 --pos 1 --neg 3 -o " + path.string()).status, 0);
  auto g = sigfrac::read_sg_file(path.string());
  EXPECT_EQ(g, sigfrac::circulant({7, {1}, {3}}));
  EXPECT_EQ(run("circulant 7 --pos 1 --neg 3").out, sigfrac::to_sg(g));
  std::filesystem::remove(path);
}

TEST(Product, DirectToFile) {
  auto path = temp_file("prod.sg");
  ASSERT_EQ(run("product --kind direct " + sample("tri_neg.sg") + " " + sample("c5_pos.sg") + " -o " + path.string()).status, 0);
  EXPECT_EQ(sigfrac::read_sg_file(path.string()).vertex_count(), 15);
  std::filesystem::remove(path);
}

TEST(Product, LexAndBlowup) {
  auto lex = run("product --kind lex " + sample("k2_pos.sg") + " " + sample("tri_neg.sg"));
  EXPECT_EQ(lex.status, 0);
  EXPECT_THAT(lex.out, StartsWith("sg 1\nn 6\n"));
  auto blow = run("product --kind blowup -k 3 " + sample("k2_pos.sg"));
  EXPECT_EQ(sigfrac::parse_sg(blow.out).edge_count(), 15u);
  EXPECT_EQ(run("product --kind lex " + sample("k2_pos.sg")).status, 2);
  EXPECT_EQ(run("product --kind sideways " + sample("k2_pos.sg")).status, 2);
}

TEST(Coloring, WitnessOrNone) {
  auto r = run("coloring " + sample("c5_pos.sg") + " -p 10 -q 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, StartsWith("f: 0->{"));
  EXPECT_EQ(run("coloring " + sample("c4_unbalanced.sg") + " -p 2 -q 1").out, "NONE\n");
  EXPECT_EQ(run("coloring " + sample("c5_pos.sg") + " -p 5 -q 2").status, 2);
}

TEST(Sets, ListAndCsv) {
  auto r = run("sets " + sample("k2_pos.sg"));
  EXPECT_EQ(r.out, "A=0;B=0;size=2\nA=0;B=1;size=2\nA=1;B=0;size=2\nA=1;B=1;size=2\n");
  auto csv = run("sets --csv " + sample("k2_pos.sg"));
  EXPECT_EQ(csv.out, "vertex,J0,J1,J2,J3\n0,1,1/2,1/2,0\n1,0,1/2,1/2,1\n");
  auto cols = run("sets --columns --circulant 5 --pos 1");
  EXPECT_EQ(std::count(cols.out.begin(), cols.out.end(), '\n'), 15);
}

TEST(Hom, FoundAndMissing) {
  auto r = run("hom " + sample("k2_pos.sg") + " " + sample("tri_neg.sg"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "switch: {1}\nmap: 0->0 1->1\n");
  EXPECT_EQ(run("hom " + sample("tri_neg.sg") + " " + sample("k2_pos.sg")).out, "NONE\n");
}

TEST(Verify, Lemma1) {
  auto r = run("verify lemma1 --max-n 8");
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, StartsWith("case: lemma1 G(3,{},{})\n"));
  EXPECT_THAT(r.out, EndsWith("PASS 156/156\n"));
}

TEST(Verify, TheoremSingleCase) {
  auto r = run("verify theorem --left-file " + sample("tri_neg.sg") + " --n 3 --pos 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, HasSubstr("  chi_f(product): 2/1\n"));
  EXPECT_THAT(r.out, EndsWith("PASS 1/1\n"));
}

TEST(Verify, TheoremCounterexampleFails) {
  auto r = run("verify theorem --left-file " + sample("tri_neg.sg") + " --n 3 --neg 1");
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.out, HasSubstr("  chi_f(product): 3/1\n"));
  EXPECT_THAT(r.out, EndsWith("FAIL 0/1\n"));
}

TEST(Verify, DualityFile) {
  auto r = run("verify duality --graph-file " + sample("c4_unbalanced.sg"));
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, HasSubstr("  w_f: 2/1\n"));
  EXPECT_THAT(r.out, EndsWith("PASS 1/1\n"));
}

TEST(Verify, SmallSweeps) {
  EXPECT_EQ(run("verify duality --max-n 5 --catalog-n 3").status, 0);
  EXPECT_EQ(run("verify lex-lemma --catalog-n 2 --max-k 2").status, 0);
  auto ap = run("verify alpha-product --max-product 9");
  EXPECT_EQ(ap.status, 1);
  EXPECT_THAT(ap.out, EndsWith("FAIL 8/9\n"));
}

TEST(Verify, PersistenceModes) {
  auto d = run("verify persistence --max-n 3 --catalog-n 2");
  EXPECT_EQ(d.status, 1);
  EXPECT_THAT(d.out, HasSubstr("  mode: double\n"));
  auto i = run("verify persistence --max-n 3 --catalog-n 2 --count-mode incidence");
  EXPECT_EQ(i.status, 0);
  EXPECT_EQ(run("verify persistence --count-mode triple").status, 2);
}

TEST(Verify, SizeLimitKeepsPartialReport) {
  auto r = run("verify lemma1 --max-n 8 --max-generators 1", "SIGFRAC_MAX_VERTICES=6");
  EXPECT_EQ(r.status, 3);
  EXPECT_THAT(r.out, EndsWith("case: lemma1 G(6,{3},{})\n  alpha_s: 6\n  2n/alpha_s: 2/1\n  chi_f: 2/1\n"
                              "  certified: true\n  verdict: PASS\n"));
}

TEST(Determinism, ByteIdenticalOutput) {
  const std::string args = "chi-f --circulant 7 --pos 1 --neg 2 --witness";
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
