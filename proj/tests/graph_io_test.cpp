// Copyright 2026 The cliquecode Authors
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

#include "cliquecode/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace cliquecode {
namespace {

TEST(EdgeList, ParsesWithComments) {
  auto g = parse_graph("# a path\n3 2\n0 1\n# middle\n1 2\n");
  EXPECT_EQ(g, generate_family(Family::kPath, 3));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);          // too few edges
  EXPECT_THROW(parse_graph("3 1\n0 5\n"), ParseError);          // bad id
  EXPECT_THROW(parse_graph("3 1\n1 1\n"), ParseError);          // self-loop
  EXPECT_THROW(parse_graph("3 1\n0 x\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("", GraphFormat::kEdgeList), ParseError);
}

TEST(Dimacs, OneBased) {
  auto g = parse_graph("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  EXPECT_EQ(g, generate_family(Family::kCycle, 4));
  EXPECT_THROW(parse_graph("p edge 2 1\ne 0 1\n"), ParseError);
}

TEST(Graph6, KnownStrings) {
  // Standard encodings: K4 is "C~", P3 (0-1-2) is "Bg", empty on 5 is "D??".
  EXPECT_EQ(read_graph6("C~"), generate_family(Family::kComplete, 4));
  EXPECT_EQ(read_graph6("Bg"), generate_family(Family::kPath, 3));
  EXPECT_EQ(read_graph6(">>graph6<<D??"), generate_family(Family::kEmpty, 5));
  EXPECT_EQ(write_graph6(generate_family(Family::kComplete, 4)), "C~");
  EXPECT_EQ(parse_graph("Bg\n"), generate_family(Family::kPath, 3));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(read_graph6(""), ParseError);
  EXPECT_THROW(read_graph6("C~~"), ParseError);
  EXPECT_THROW(read_graph6("C!"), ParseError);
}

TEST(Formats, RoundTripRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 63;
    auto g = testing::random_graph(rng, n, 0.3);
    EXPECT_EQ(read_graph6(write_graph6(g)), g);
    EXPECT_EQ(parse_graph(write_edge_list(g), GraphFormat::kEdgeList), g);
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_graph_format("graph6"), GraphFormat::kGraph6);
  EXPECT_EQ(parse_graph_format("dimacs"), GraphFormat::kDimacs);
  EXPECT_EQ(parse_graph_format("edges"), GraphFormat::kEdgeList);
  EXPECT_THROW(parse_graph_format("gml"), InputError);
}

}  // namespace
}  // namespace cliquecode
