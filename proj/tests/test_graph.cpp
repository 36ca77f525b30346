#include <sstream>

#include "doctest.h"
#include "hcs/graph.hpp"

using namespace hcs;

namespace {
WeightedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in, "test");
}
}  // namespace

TEST_CASE("construction merges parallel edges and canonicalizes order") {
    WeightedGraph g(3, {{2, 1, 1.5}, {0, 1, 2.0}, {1, 0, 3.0}});
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.edges()[0].w == 5.0);
    CHECK(g.edges()[1].u == 1);
    CHECK(g.edges()[1].v == 2);
    CHECK(g.edges()[1].w == 1.5);
    CHECK(g.total_weight() == 6.5);
    CHECK(g.weighted_degree(1) == 6.5);
    CHECK(g.weighted_degree(2) == 1.5);
}

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(-1, {}), std::invalid_argument);
}

TEST_CASE("parses the documented format, skipping comments and blanks") {
    WeightedGraph g = parse("# a triangle\n3 3\n\n0 1 1\n1 2 2.5\n# middle\n0 2 0.5\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.total_weight() == 4.0);
}

TEST_CASE("parse errors name the line") {
    std::string bad_weight = "3 2\n0 1 1\n0 2 -4\n";
    CHECK_THROWS_WITH_AS(parse(bad_weight), doctest::Contains("test:3"), parse_error);
    std::string self_loop = "3 1\n1 1 2\n";
    CHECK_THROWS_WITH_AS(parse(self_loop), doctest::Contains("test:2"), parse_error);
    std::string bad_id = "2 1\n0 2 1\n";
    CHECK_THROWS_AS(parse(bad_id), parse_error);
    std::string short_file = "3 5\n0 1 1\n";
    CHECK_THROWS_AS(parse(short_file), parse_error);
    std::string long_file = "2 1\n0 1 1\n1 0 2\n";
    CHECK_THROWS_AS(parse(long_file), parse_error);
    std::string junk_header = "two 3\n";
    CHECK_THROWS_AS(parse(junk_header), parse_error);
    CHECK_THROWS_AS(parse(""), parse_error);
}

TEST_CASE("format and parse round-trip exactly") {
    WeightedGraph g(5, {{0, 1, 0.125}, {3, 4, 7}, {1, 2, 1e-3}, {0, 4, 123456789.0}});
    std::string text = format_graph(g);
    std::istringstream in(text);
    WeightedGraph h = parse_graph(in, "rt");
    REQUIRE(h.m() == g.m());
    for (int e = 0; e < g.m(); ++e) {
        CHECK(h.edges()[e].u == g.edges()[e].u);
        CHECK(h.edges()[e].v == g.edges()[e].v);
        CHECK(h.edges()[e].w == g.edges()[e].w);
    }
    CHECK(format_graph(h) == text);
}

TEST_CASE("format_weight keeps integers clean") {
    CHECK(format_weight(20) == "20");
    CHECK(format_weight(2) == "2");
    CHECK(format_weight(0.5) == "0.5");
}

TEST_CASE("cut_weight sums crossing edges and validates the sides") {
    // two 8-cliques joined by one bridge
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            edges.push_back({u, v, 1});
            edges.push_back({u + 8, v + 8, 1});
        }
    edges.push_back({7, 8, 1});
    WeightedGraph g(16, edges);
    std::vector<Vertex> left, right;
    for (int v = 0; v < 8; ++v) left.push_back(v);
    for (int v = 8; v < 16; ++v) right.push_back(v);
    CHECK(cut_weight(g, left, right) == 1.0);
    CHECK(cut_weight(g, {0, 1}, {8, 9}) == 0.0);
    CHECK(cut_weight(g, {7}, {8}) == 1.0);
    CHECK_THROWS_AS(cut_weight(g, {}, right), std::invalid_argument);
    CHECK_THROWS_AS(cut_weight(g, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cut_weight(g, {0}, {99}), std::invalid_argument);
}

TEST_CASE("induced subgraph relabels in the given order") {
    WeightedGraph g(5, {{0, 1, 1}, {1, 3, 2}, {3, 4, 3}, {0, 4, 4}});
    WeightedGraph s = g.induced({3, 1, 4});
    CHECK(s.n() == 3);
    CHECK(s.m() == 2);
    // 3->0, 1->1, 4->2: kept edges (1,3)->(1,0) and (3,4)->(0,2)
    CHECK(s.edges()[0].u == 0);
    CHECK(s.edges()[0].v == 1);
    CHECK(s.edges()[0].w == 2);
    CHECK(s.edges()[1].u == 0);
    CHECK(s.edges()[1].v == 2);
    CHECK(s.edges()[1].w == 3);
    CHECK_THROWS_AS(g.induced({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(g.induced({5}), std::invalid_argument);
}

TEST_CASE("components come back sorted by smallest vertex") {
    WeightedGraph g(6, {{4, 5, 1}, {1, 2, 1}});
    auto comps = g.components();
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<Vertex>{0});
    CHECK(comps[1] == std::vector<Vertex>{1, 2});
    CHECK(comps[2] == std::vector<Vertex>{3});
    CHECK(comps[3] == std::vector<Vertex>{4, 5});
}

TEST_CASE("edge list loader preserves duplicates and order") {
    std::istringstream in("3 3\n1 2 1\n0 1 1\n1 2 2\n");
    EdgeList raw = parse_edge_list(in, "raw");
    CHECK(raw.n == 3);
    REQUIRE(raw.edges.size() == 3);
    CHECK(raw.edges[0].u == 1);
    CHECK(raw.edges[0].v == 2);
    CHECK(raw.edges[2].w == 2.0);
}
