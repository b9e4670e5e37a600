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

#include "cliquecode/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace cliquecode {
namespace {

using testing::sample_cliques;
using testing::sample_graph;
using testing::graph;
using testing::seq;

const char kSampleCanonical[] = "2*x1 + 2*x2 + x3 + x4 + x5 + 3*x1*x3 + x2*x4*x5";
const char kDivisor60[] = "2*x1 + x2 + x3 + 2*x1*x2 + 2*x1*x3 + x2*x3 + 2*x1*x2*x3";

TEST(Monomial, Basics) {
  Monomial m{3, 1};
  EXPECT_EQ(m.variables(), (std::vector<unsigned>{1, 3}));
  EXPECT_TRUE(m.shares_variable(Monomial{3}));
  EXPECT_FALSE(m.shares_variable(Monomial{2}));
  EXPECT_FALSE(Monomial{}.shares_variable(m));
  EXPECT_THROW((Monomial{1, 1}), InputError);
  EXPECT_THROW((Monomial{0}), InputError);
}

TEST(Render, OrderAndFormat) {
  GraphPolynomial p{{Monomial{1, 3}, 3}, {Monomial{3}, 1}, {Monomial{1}, 2}};
  EXPECT_EQ(render(p), "2*x1 + x3 + 3*x1*x3");
  EXPECT_EQ(render(GraphPolynomial{{Monomial{}, 2}, {Monomial{2}, 1}}), "2 + x2");
  EXPECT_EQ(render(GraphPolynomial{}), "0");
}

TEST(Parse, RoundTrip) {
  for (const char* text : {kSampleCanonical, kDivisor60, "1", "4 + x1*x2", "0"}) {
    EXPECT_EQ(render(parse_polynomial(text)), text);
  }
  // Like terms combine; factors may come in any order.
  EXPECT_EQ(render(parse_polynomial("x2*x1 + x1*x2 + 2*x1")), "2*x1 + 2*x1*x2");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +"), ParseError);
  EXPECT_THROW(parse_polynomial("x0"), ParseError);
  EXPECT_THROW(parse_polynomial("x1*x1"), ParseError);
  EXPECT_THROW(parse_polynomial("2*3*x1"), ParseError);
  EXPECT_THROW(parse_polynomial("y1"), ParseError);
  EXPECT_THROW(parse_polynomial("0*x1"), ParseError);
}

TEST(PolyFromCovering, SampleGraph) {
  auto p = poly_from_covering(sample_graph(), TotalCliqueCovering(sample_cliques()));
  EXPECT_EQ(p, parse_polynomial("x1 + 2*x2 + 2*x3 + x4 + x5 + 3*x1*x2 + x3*x4*x5"));
  EXPECT_EQ(p.total_mass(), 11u);
  EXPECT_EQ(p.variable_count(), 5u);
}

TEST(PolyFromCovering, CompleteGraph) {
  for (std::size_t n = 2; n <= 6; ++n) {
    Clique all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    auto p = poly_from_covering(generate_family(Family::kComplete, n), TotalCliqueCovering({all}));
    EXPECT_EQ(p, (GraphPolynomial{{Monomial{1}, n}}));
  }
}

TEST(PolyFromCovering, IsolatedVerticesGiveConstant) {
  auto p = poly_from_covering(graph(4, {{1, 2}}), TotalCliqueCovering({{0}, {1, 2}, {3}}));
  EXPECT_EQ(render(p), "2 + 2*x1");
}

TEST(CanonicalPolynomial, Examples) {
  EXPECT_EQ(render(canonical_polynomial(sample_graph())), kSampleCanonical);
  EXPECT_EQ(render(canonical_polynomial(graph(1, {}))), "1");
  EXPECT_EQ(render(canonical_polynomial(generate_family(Family::kCycle, 4))),
            "x1*x2 + x1*x3 + x2*x4 + x3*x4");
  EXPECT_EQ(poly_from_sequence(seq({2, 2, 3, 3, 5, 7, 10, 10, 10, 11, 231})),
            parse_polynomial(kSampleCanonical));
}

TEST(DivisorClosedForm, Examples) {
  EXPECT_EQ(render(divisor_graph_polynomial_closed_form(60)), kDivisor60);
  EXPECT_EQ(render(divisor_graph_polynomial_closed_form(13)), "1");
  EXPECT_EQ(render(divisor_graph_polynomial_closed_form(8)), "3*x1");
  // Exponents are sorted descending: 2^1 * 3^2 uses r1 = 2.
  EXPECT_EQ(render(divisor_graph_polynomial_closed_form(18)), "2*x1 + x2 + 2*x1*x2");
  EXPECT_THROW(divisor_graph_polynomial_closed_form(1), InputError);
}

TEST(DivisorClosedForm, MatchesPipeline) {
  EXPECT_EQ(canonical_polynomial(divisor_graph(60).graph), divisor_graph_polynomial_closed_form(60));
  EXPECT_EQ(canonical_polynomial(divisor_graph(8).graph), divisor_graph_polynomial_closed_form(8));
  EXPECT_EQ(canonical_polynomial(divisor_graph(13).graph), divisor_graph_polynomial_closed_form(13));
}

TEST(FamilyClosedForm, Examples) {
  auto k5 = closed_form_family(Family::kComplete, 5);
  EXPECT_EQ(k5.code, seq({2, 2, 2, 2, 2}));
  EXPECT_EQ(render(k5.polynomial), "5*x1");
  auto k1 = closed_form_family(Family::kComplete, 1);
  EXPECT_EQ(k1.code, seq({1}));
  EXPECT_EQ(render(k1.polynomial), "1");
  auto p4 = closed_form_family(Family::kPath, 4);
  EXPECT_EQ(p4.code, seq({2, 3, 10, 15}));
  EXPECT_EQ(render(p4.polynomial), "x1 + x2 + x1*x3 + x2*x3");
  auto c4 = closed_form_family(Family::kCycle, 4);
  EXPECT_EQ(c4.code, seq({6, 10, 21, 35}));
  EXPECT_EQ(render(c4.polynomial), "x1*x2 + x1*x3 + x2*x4 + x3*x4");
  auto e3 = closed_form_family(Family::kEmpty, 3);
  EXPECT_EQ(e3.code, seq({1, 1, 1}));
  EXPECT_EQ(render(e3.polynomial), "3");
  EXPECT_THROW(closed_form_family(Family::kPath, 2), InputError);
  EXPECT_THROW(closed_form_family(Family::kCycle, 3), InputError);
}

TEST(FamilyClosedForm, PolynomialMatchesCode) {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (Family f : {Family::kComplete, Family::kPath, Family::kCycle, Family::kEmpty}) {
      auto form = closed_form_family(f, n);
      EXPECT_EQ(poly_from_sequence(form.code), form.polynomial) << family_name(f) << n;
    }
  }
}

TEST(Detection, Disconnected) {
  EXPECT_TRUE(detect_disconnected_poly(parse_polynomial(kSampleCanonical)));
  EXPECT_FALSE(detect_disconnected_poly(parse_polynomial(kDivisor60)));
  EXPECT_FALSE(detect_disconnected_poly(parse_polynomial("1")));
  EXPECT_TRUE(detect_disconnected_poly(parse_polynomial("2")));
  EXPECT_TRUE(detect_disconnected_poly(parse_polynomial("1 + 2*x1")));
  EXPECT_FALSE(detect_disconnected_poly(parse_polynomial("5*x1")));
}

TEST(Detection, Bipartite) {
  EXPECT_TRUE(detect_bipartite_poly(parse_polynomial("x1*x2 + x1*x3 + x2*x4 + x3*x4")));
  EXPECT_FALSE(detect_bipartite_poly(parse_polynomial("3*x1")));
  EXPECT_TRUE(detect_bipartite_poly(parse_polynomial("2*x1")));
  EXPECT_TRUE(detect_bipartite_poly(parse_polynomial("3")));
  // Odd cycle C5 in its canonical form.
  EXPECT_FALSE(detect_bipartite_poly(closed_form_family(Family::kCycle, 5).polynomial));
  EXPECT_TRUE(detect_bipartite_poly(closed_form_family(Family::kPath, 6).polynomial));
}

}  // namespace
}  // namespace cliquecode
