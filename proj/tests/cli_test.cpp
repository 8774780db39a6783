// Copyright 2026 The edgeguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeguard/cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "edgeguard/corpus.hpp"
#include "edgeguard/io.hpp"
#include "test_graphs.hpp"

namespace edgeguard {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "edgeguard");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgeguard_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string save(const std::string& name, const PlaneGraph& g) {
    const std::string p = (dir_ / name).string();
    write_text_file(p, write_graph_document(g.serialize()));
    return p;
  }
  std::string save_text(const std::string& name, const std::string& text) {
    const std::string p = (dir_ / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, GuardTriangle) {
  const auto r = run_cli({"guard", save("t.json", testing::triangle()), "-a", "2n5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const GuardDocument doc = parse_guard_document(r.out);
  EXPECT_EQ(doc.edges.size(), 1u);
  EXPECT_EQ(doc.algorithm, "2n5");
  EXPECT_EQ(run_cli({"verify", path("t.json"), save_text("g.json", r.out)}).code, 0);
}

TEST_F(Cli, GuardIcosahedron) {
  const std::string in = save("ico.json", platonic("icosahedron"));
  const auto r = run_cli({"guard", in, "--algorithm", "3n8", "-o", path("g.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const GuardDocument doc = parse_guard_document(read_text_file(path("g.json")));
  EXPECT_LE(doc.edges.size(), 4u);
  EXPECT_EQ(run_cli({"verify", in, path("g.json")}).code, 0);
}

TEST_F(Cli, BestOnSquare) {
  const auto r = run_cli({"guard", save("c4.json", testing::cycle(4))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_guard_document(r.out).edges.size(), 1u);
}

TEST_F(Cli, BestSkipsThreeHopWhenQuadsAreClose) {
  const auto r = run_cli({"guard", save("cube.json", platonic("cube"))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.err.find("3hop"), std::string::npos);
  EXPECT_EQ(run_cli({"guard", path("cube.json"), "-a", "3hop"}).code, 2);
}

TEST_F(Cli, EveryAlgorithmVerifies) {
  const std::string in = save("g.json", random_plane(30, 4, 0.3, true));
  for (const char* a : {"2n5", "3n8", "chromatic", "best"}) {
    const auto r = run_cli({"guard", in, "-a", a, "-o", path("out.json")});
    ASSERT_EQ(r.code, 0) << a << r.err;
    EXPECT_EQ(run_cli({"verify", in, path("out.json")}).code, 0) << a;
  }
  EXPECT_EQ(run_cli({"guard", save("fan.json", fan_outerplanar(9)), "-a",
                     "n3-degenerate"})
                .code,
            0);
}

TEST_F(Cli, Verify) {
  const std::string tri = save("t.json", testing::triangle());
  const std::string ab = save_text(
      "ab.json", R"({"edges":[[0,1]],"algorithm":"manual","bound":"1"})");
  auto r = run_cli({"verify", tri, ab});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "all 2 faces guarded\n");

  r = run_cli({"verify", save("two.json", disjoint_triangles(2)), ab});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("1 of 3 faces unguarded"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);

  const std::string bad = save_text(
      "bad.json", R"({"edges":[[0,7]],"algorithm":"manual","bound":"1"})");
  EXPECT_EQ(run_cli({"verify", tri, bad}).code, 2);
  EXPECT_EQ(run_cli({"verify", tri, path("missing.json")}).code, 2);
  EXPECT_EQ(run_cli({"verify", save_text("junk.json", "{"), ab}).code, 2);
}

TEST_F(Cli, Stats) {
  const auto r = run_cli({"stats", save("c4.json", testing::cycle(4))});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("alpha=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("n=4\n"), std::string::npos);
  EXPECT_NE(r.out.find("quad_hops=0-1:0\n"), std::string::npos) << r.out;
}

TEST_F(Cli, OracleOnFigure) {
  const std::string in = save("fig.json", figure_no_guard_coloring());
  auto r = run_cli({"oracle", in});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_guard_document(r.out).edges.size(), 2u);
  EXPECT_EQ(run_cli({"oracle", in, "--at-most", "1"}).out, "guardable with 1: no\n");
  EXPECT_EQ(run_cli({"oracle", in, "--at-most", "2"}).out, "guardable with 2: yes\n");
  EXPECT_EQ(run_cli({"oracle", in, "--limit", "5"}).code, 3);
}

TEST_F(Cli, GuardColoring) {
  auto r = run_cli({"check-guard-coloring", save("fig.json", figure_no_guard_coloring())});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "none\n");
  r = run_cli({"check-guard-coloring", save("c4.json", testing::cycle(4))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("found\n", 0), 0u);
  r = run_cli({"check-guard-coloring", save("big.json", random_triangulation(30, 1)),
               "--budget", "20"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, GenIsDeterministic) {
  const auto a = run_cli({"gen", "--family", "random_plane", "--size", "20"});
  const auto b = run_cli({"gen", "--family", "random_plane", "--size", "20", "--seed", "0"});
  const auto c = run_cli({"gen", "--family", "random_plane", "--size", "20", "--seed", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(run_cli({"gen", "--family", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "--family", "far_quads", "--size", "5"}).code, 2);
}

TEST_F(Cli, DocumentsRoundTrip) {
  const auto gen = run_cli({"gen", "-f", "far_quads", "-n", "30", "-s", "2"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const RotationSystem rs = parse_graph_document(gen.out);
  EXPECT_EQ(write_graph_document(rs), gen.out);
  const std::string in = save_text("g.json", gen.out);
  const auto r = run_cli({"guard", in, "-a", "3hop"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(write_guard_document(parse_guard_document(r.out)), r.out);
}

TEST_F(Cli, Render) {
  const std::string tri = save("t.json", testing::triangle());
  const std::string ab = save_text(
      "ab.json", R"({"edges":[[0,1]],"algorithm":"manual","bound":"1"})");
  ASSERT_EQ(run_cli({"render", tri, "--guards", ab, "-o", path("t.svg")}).code, 0);
  const std::string svg = read_text_file(path("t.svg"));
  const auto count = [&](const std::string& pat) {
    const std::regex re(pat);
    return std::distance(std::sregex_iterator(svg.begin(), svg.end(), re),
                         std::sregex_iterator());
  };
  EXPECT_EQ(count("<circle"), 3);
  EXPECT_EQ(count("class=\"edge guard\""), 1);
  EXPECT_EQ(count("<line"), 3);

  ASSERT_EQ(run_cli({"render", save("ico.json", platonic("icosahedron")), "-o",
                     path("ico.svg")})
                .code,
            0);
  const std::string ico = read_text_file(path("ico.svg"));
  const std::regex line("<line");
  EXPECT_EQ(std::distance(std::sregex_iterator(ico.begin(), ico.end(), line),
                          std::sregex_iterator()),
            30);

  const std::string bad = save_text(
      "bad.json", R"({"edges":[[0,9]],"algorithm":"manual","bound":"1"})");
  EXPECT_EQ(run_cli({"render", tri, "-g", bad, "-o", path("x.svg")}).code, 2);
  EXPECT_FALSE(fs::exists(path("x.svg")));
}

TEST_F(Cli, RenderWithoutCoordsIsDeterministic) {
  const std::string in = save("g.json", random_plane(25, 3, 0.3, true));
  ASSERT_EQ(run_cli({"render", in, "-o", path("a.svg")}).code, 0);
  ASSERT_EQ(run_cli({"render", in, "-o", path("b.svg")}).code, 0);
  EXPECT_EQ(read_text_file(path("a.svg")), read_text_file(path("b.svg")));
  const std::string two = save("two.json", disjoint_triangles(3));
  ASSERT_EQ(run_cli({"render", two, "-o", path("c.svg")}).code, 0);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"guard"}).code, 2);
  EXPECT_EQ(run_cli({"guard", "x.json", "-a", "fastest"}).code, 2);
  EXPECT_EQ(run_cli({"guard", path("missing.json")}).code, 2);
}

}  // namespace
}  // namespace edgeguard
