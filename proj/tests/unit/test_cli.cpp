#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "endorsim/endorsim.hpp"

using namespace endorsim;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("endorsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::string out_, err_;
};

}  // namespace

TEST_F(CliTest, GenerateIsDeterministic) {
  const std::vector<std::string> base = {"generate", "--preset", "linkedin", "--iterations", "200", "--seed", "42"};
  auto a = base, b = base;
  a.insert(a.end(), {"-o", path("a.graph"), "--events", path("a.csv")});
  b.insert(b.end(), {"-o", path("b.graph"), "--events", path("b.csv")});
  ASSERT_EQ(run(a), cli::kSuccess) << err_;
  ASSERT_EQ(run(b), cli::kSuccess) << err_;
  EXPECT_EQ(slurp(path("a.graph")), slurp(path("b.graph")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_NE(out_.find("Iterations"), std::string::npos);
}

TEST_F(CliTest, ZeroIterationsGivesTheSeedClique) {
  ASSERT_EQ(run({"generate", "--preset", "flickr", "--iterations", "0", "--seed", "1", "-o", path("g")}),
            cli::kSuccess);
  const auto doc = decode(slurp(path("g")));
  EXPECT_EQ(*doc.graph, Graph::complete(5));
}

TEST_F(CliTest, NodeBoundStopsGrowth) {
  ASSERT_EQ(run({"generate", "--preset", "answers", "--max-nodes", "500", "--seed", "3", "-o", path("g")}),
            cli::kSuccess);
  const auto doc = decode(slurp(path("g")));
  EXPECT_GE(doc.graph->vertex_count(), 500u);
  EXPECT_NE(out_.find("node-limit"), std::string::npos);
}

TEST_F(CliTest, CustomParametersNeedEveryValue) {
  EXPECT_EQ(run({"generate", "--alpha", "0.8", "--beta", "0.002", "-o", path("g")}), cli::kValidation);
  EXPECT_FALSE(fs::exists(path("g")));
  EXPECT_EQ(run({"generate", "--arrival-poly", "1,5", "--alpha", "0.8", "--beta", "0.002", "--lambda", "0.0032",
                 "--iterations", "20", "--seed", "1", "-o", path("g")}),
            cli::kSuccess)
      << err_;
}

TEST_F(CliTest, ZeroTargetNeedsNoArcs) {
  write("k4.graph", encode(Graph::complete(4)));
  write("zero.csv", "0,0\n0,0\n");
  ASSERT_EQ(run({"endorse", "--graph", path("k4.graph"), "--target", path("zero.csv"), "--seed", "1", "-o",
                 path("out.graph")}),
            cli::kSuccess)
      << err_;
  const auto doc = decode(slurp(path("out.graph")));
  ASSERT_TRUE(doc.endorsements);
  EXPECT_EQ(doc.endorsements->total_arcs(), 0u);
  EXPECT_TRUE(fs::exists(path("trace.csv")));
}

TEST_F(CliTest, UnrealizableTargetStalls) {
  // An isolated pair can only produce pattern values in {0, 1/2, 1}.
  Graph g(2);
  g.add_edge(0, 1);
  write("pair.graph", encode(g));
  write("t.csv", "0.3\n");
  EXPECT_EQ(run({"endorse", "--graph", path("pair.graph"), "--target", path("t.csv"), "--seed", "1", "--stall-limit",
                 "50", "-o", path("out.graph")}),
            cli::kStalled);
  EXPECT_TRUE(fs::exists(path("out.graph")));
}

TEST_F(CliTest, BadTargetsAreValidationErrors) {
  write("k4.graph", encode(Graph::complete(4)));
  write("ragged.csv", "0.1,0.2\n0.3\n");
  write("negative.csv", "-0.1\n");
  write("three.csv", "0.1,0.1,0.1\n0.1,0.1,0.1\n0.1,0.1,0.1\n");
  for (const char* t : {"ragged.csv", "negative.csv"}) {
    EXPECT_EQ(run({"endorse", "--graph", path("k4.graph"), "--target", path(t), "--seed", "1", "-o", path("o")}),
              cli::kValidation)
        << t;
  }
  EXPECT_EQ(run({"endorse", "--graph", path("k4.graph"), "--target", path("three.csv"), "--weights",
                 path("negative.csv"), "--seed", "1", "-o", path("o")}),
            cli::kValidation);
  EXPECT_FALSE(fs::exists(path("o")));

  // Existing endorsements for two skills cannot be refit to three.
  auto g = std::make_shared<const Graph>(Graph::complete(4));
  EndorsementSet d(g, 2);
  d.add_arc(0, 0, 1);
  write("endorsed.graph", encode(*g, &d));
  EXPECT_EQ(run({"endorse", "--graph", path("endorsed.graph"), "--target", path("three.csv"), "--seed", "1", "-o",
                 path("o")}),
            cli::kValidation);
}

TEST_F(CliTest, RipToRepExample) {
  write("p.csv", "2,1\n1,3\n");
  ASSERT_EQ(run({"rip2rep", "-i", path("p.csv"), "-o", path("k5.graph"), "--matrix", path("m.csv")}), cli::kSuccess)
      << err_;
  EXPECT_EQ(*decode(slurp(path("k5.graph"))).graph, Graph::complete(5));
  EXPECT_EQ(matrix_from_csv(slurp(path("m.csv"))),
            SquareMatrix::from_rows({{0.4, 0.5}, {1.0 / 3.0, 0.6}}));
  EXPECT_NE(out_.find("1/3"), std::string::npos);

  write("one.csv", "1\n");
  ASSERT_EQ(run({"rip2rep", "-i", path("one.csv"), "-o", path("k1.graph"), "--matrix", path("m1.csv")}),
            cli::kSuccess);
  EXPECT_EQ(decode(slurp(path("k1.graph"))).graph->vertex_count(), 1u);

  write("asym.csv", "1,2\n1,3\n");
  EXPECT_EQ(run({"rip2rep", "-i", path("asym.csv"), "-o", path("x.graph"), "--matrix", path("x.csv")}),
            cli::kValidation);
  EXPECT_FALSE(fs::exists(path("x.graph")));
  EXPECT_FALSE(fs::exists(path("x.csv")));
}

TEST_F(CliTest, MissingFilesAreIoErrors) {
  EXPECT_EQ(run({"sample", "-i", path("nope.graph"), "--size", "3", "-o", path("s")}), cli::kIo);
  EXPECT_EQ(run({"generate", "--preset", "flickr", "--iterations", "0", "-o", path("no/such/dir/g")}), cli::kIo);
  EXPECT_NE(err_.find("error:"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsAreValidationErrors) {
  EXPECT_EQ(run({"generate", "--preset", "myspace", "-o", path("g")}), cli::kValidation);
  EXPECT_EQ(run({"generate"}), cli::kValidation);
  EXPECT_EQ(run({"--help"}), cli::kSuccess);
}

TEST_F(CliTest, ConfigFileWithOverrides) {
  write("gen.ini", "preset = answers\nmax-nodes = 500\nseed = 7\n");
  ASSERT_EQ(run({"--config", path("gen.ini"), "generate", "-o", path("a.graph")}), cli::kSuccess) << err_;
  ASSERT_EQ(run({"generate", "--preset", "answers", "--max-nodes", "500", "--seed", "7", "-o", path("b.graph")}),
            cli::kSuccess);
  EXPECT_EQ(slurp(path("a.graph")), slurp(path("b.graph")));

  ASSERT_EQ(run({"--config", path("gen.ini"), "generate", "--iterations", "0", "-o", path("c.graph")}),
            cli::kSuccess);
  EXPECT_EQ(*decode(slurp(path("c.graph"))).graph, Graph::complete(5));
}

TEST_F(CliTest, SampleAndAnalyze) {
  ASSERT_EQ(run({"generate", "--preset", "linkedin", "--iterations", "150", "--seed", "5", "-o", path("g"),
                 "--events", path("ev.csv")}),
            cli::kSuccess);
  ASSERT_EQ(run({"sample", "-i", path("g"), "--size", "40", "--seed", "2", "-o", path("s"), "--ids", path("ids")}),
            cli::kSuccess)
      << err_;
  EXPECT_EQ(decode(slurp(path("s"))).graph->vertex_count(), 40u);
  EXPECT_EQ(run({"sample", "-i", path("g"), "--size", "40", "--seed", "2", "-o", path("s2"), "--pattern",
                 path("p.csv")}),
            cli::kValidation);

  ASSERT_EQ(run({"analyze", "-i", path("g"), "--events", path("ev.csv"), "--preset", "linkedin", "-o",
                 path("r.json"), "--densification", path("d.csv")}),
            cli::kSuccess)
      << err_;
  const std::string report = slurp(path("r.json"));
  EXPECT_NE(report.find("\"theoretical_exponent\""), std::string::npos);
  EXPECT_NE(report.find("\"densification\""), std::string::npos);
  EXPECT_EQ(slurp(path("d.csv")).rfind("iteration,t,nodes,edges,avg_degree,diameter\n", 0), 0u);
}
