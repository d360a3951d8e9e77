// Copyright 2026 The strgraph Authors
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

#include "strgraph/io.hpp"

#include <gtest/gtest.h>

#include "strgraph/generators.hpp"

namespace strgraph {
namespace {

TEST(CurveFileTest, ParsesCommentsAndAnyIdOrder) {
  const auto family = parse_curve_family(
      "# two curves\n"
      "1: 0,5 10,5\n"
      "\n"
      "0: 0,0 4,0 4,4\n");
  ASSERT_EQ(family.size(), 2u);
  EXPECT_EQ(family.curves[0].vertices().size(), 3u);
  EXPECT_EQ(family.curves[1].front(), (Point{0, 5}));
  EXPECT_EQ(format_curve_family(family), "0: 0,0 4,0 4,4\n1: 0,5 10,5\n");
}

TEST(CurveFileTest, RoundTripsGeneratedFamilies) {
  const auto family = random_segments(25, 100, Seed{3});
  EXPECT_EQ(parse_curve_family(format_curve_family(family)), family);
}

TEST(CurveFileTest, ReportsErrorsWithLineNumbers) {
  try {
    parse_curve_family("0: 0,0 1,1\n1: 0,0 x,1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_curve_family("0: 0,0\n"), ParseError);
  EXPECT_THROW(parse_curve_family("0: 0,0 1,1\n2: 0,0 1,1\n"), ParseError);
  EXPECT_THROW(parse_curve_family("0: 0,0 1,1\n0: 0,0 1,1\n"), ParseError);
  EXPECT_THROW(parse_curve_family("0: 0,0 2000000000,1\n"), ParseError);
}

TEST(GraphFileTest, RoundTrip) {
  const Graph g = named::cycle(6);
  const std::string text = format_graph(g);
  EXPECT_EQ(text, "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(parse_graph("# empty\n3 0\n"), named::empty(3));
}

TEST(GraphFileTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 0\n"), ParseError);       // u > v
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);       // out of range
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);       // count mismatch
  EXPECT_THROW(parse_graph("3 2\n0 1\n0 1\n"), ParseError);  // duplicate
}

TEST(DrawingFileTest, RoundTripAndValidation) {
  const Drawing d = convex_drawing(5);
  const std::string text = format_drawing(d);
  EXPECT_EQ(text.rfind("[points]\n0: 0,0\n", 0), 0u);
  EXPECT_EQ(parse_drawing(text), d);

  const std::string through_vertex =
      "[points]\n0: 0,0\n1: 2,0\n2: 4,0\n[edges]\n0 2: 0,0 4,0\n";
  EXPECT_THROW(parse_drawing(through_vertex), ParseError);
  const std::string wrong_end = "[points]\n0: 0,0\n1: 2,0\n[edges]\n0 1: 0,0 2,1\n";
  EXPECT_THROW(parse_drawing(wrong_end), ParseError);
}

TEST(LabelledSetsTest, RoundTrip) {
  const std::string text = format_labelled_set("S", VertexSet{4}) +
                           format_labelled_set("V1", VertexSet{0, 1, 2, 3}) +
                           format_labelled_set("V2", VertexSet{});
  EXPECT_EQ(text, "S: 4\nV1: 0 1 2 3\nV2:\n");
  const auto sets = parse_labelled_sets(text);
  EXPECT_EQ(sets.at("S"), VertexSet{4});
  EXPECT_TRUE(sets.at("V2").empty());
}

TEST(FileKindTest, Detection) {
  EXPECT_EQ(detect_file_kind("# c\n0: 0,0 1,1\n"), FileKind::kCurveFamily);
  EXPECT_EQ(detect_file_kind("3 0\n"), FileKind::kGraph);
  EXPECT_EQ(detect_file_kind("[points]\n0: 1,1\n"), FileKind::kDrawing);
}

}  // namespace
}  // namespace strgraph
