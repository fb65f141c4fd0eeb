#include <doctest.h>

#include "../support.hpp"

#include <acmlines/experiment.hpp>
#include <acmlines/graph.hpp>

using namespace acmlines;

namespace {

Graph cycle_graph(int n) {
    std::vector<HyperplaneId> labels;
    for (int i = 1; i <= n; ++i) labels.push_back({Family::A, i});
    Graph g(labels);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("build graph counts") {
    auto x = fixtures::load("not_acm_3_lines.json");
    auto g = build_graph(x).graph;
    CHECK(g.edge_count() == 3);
    CHECK(g.vertex_count() == 6);

    auto literal = make_variety(fixtures::raw("not_acm_3_lines.json"), ValidationMode::Lenient);
    CHECK(build_graph(literal).graph.vertex_count() == 8);

    CHECK(build_graph(VarietyOfLines({2, 2, 2}, {}, {}, {})).graph.edge_count() == 0);
    auto box = box_grid(3, 2, 4);
    CHECK(build_graph(box).graph.edge_count() == 3 * 2 + 3 * 4 + 2 * 4);
}

TEST_CASE("complement") {
    Graph empty(std::vector<HyperplaneId>{{Family::A, 1}, {Family::A, 2}, {Family::B, 1}, {Family::C, 1}});
    CHECK(empty.complemented().edge_count() == 6);

    auto w = fixtures::load("w_10_lines.json");
    auto g = build_graph(w);
    auto gc = complement(g);
    std::size_t pairs = 0, lines = 0;
    for (int u = 0; u < g.graph.vertex_count(); ++u)
        for (int v = u + 1; v < g.graph.vertex_count(); ++v) {
            ++pairs;
            lines += w.has_line(g.graph.label(u), g.graph.label(v));
        }
    CHECK(gc.graph.edge_count() == pairs - lines);
    CHECK(gc.graph.edge_count() == 5);

    for (int u = 0; u < gc.graph.vertex_count(); ++u)
        for (int v = u + 1; v < gc.graph.vertex_count(); ++v) {
            CHECK(gc.graph.adjacent(u, v) != g.graph.adjacent(u, v));
            if (gc.graph.label(u).family == gc.graph.label(v).family) CHECK(gc.graph.adjacent(u, v));
        }
}

TEST_CASE("chordality") {
    Graph k5 = Graph(std::vector<HyperplaneId>(5, HyperplaneId{Family::A, 1})).complemented();
    CHECK(is_chordal(k5).chordal);

    auto bad = is_chordal(complement(build_graph(fixtures::load("not_acm_3_lines.json"))));
    CHECK_FALSE(bad.chordal);
    REQUIRE(bad.witness);
    CHECK(bad.witness->length() == 4);
    CHECK(verify_witness(complement(build_graph(fixtures::load("not_acm_3_lines.json"))).graph, *bad.witness));

    CHECK(is_chordal(complement(build_graph(fixtures::load("w_10_lines.json")))).chordal);

    for (int n = 4; n <= 8; ++n) {
        auto r = is_chordal(cycle_graph(n));
        CHECK_FALSE(r.chordal);
        REQUIRE(r.witness);
        CHECK(r.witness->length() == static_cast<std::size_t>(n));
        CHECK(verify_witness(cycle_graph(n), *r.witness));
    }
}

TEST_CASE("chordless cycle listing") {
    CHECK(chordless_cycles(complement(build_graph(fixtures::load("w_10_lines.json"))), 6).empty());
    CHECK(chordless_cycles(cycle_graph(4), 6).size() == 1);
    CHECK(chordless_cycles(cycle_graph(6), 5).empty());

    auto gc = complement(build_graph(fixtures::load("multiplicity_9_lines.json")));
    auto cycles = chordless_cycles(gc, 6);
    bool six = false;
    for (const auto& c : cycles) {
        CHECK(verify_witness(gc.graph, c));
        if (c.length() == 6) six = true;
    }
    CHECK(six);
}

TEST_CASE("witnesses on random varieties") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto x = random_variety(rng, 4, 0.5);
        auto gc = complement(build_graph(x));
        auto r = is_chordal(gc);
        if (!r.chordal) {
            REQUIRE(r.witness);
            CHECK(verify_witness(gc.graph, *r.witness));
            CHECK(r.witness->length() <= 6);
        }
        // No induced cycle longer than 6.
        CHECK(chordless_cycles(gc, 8).size() == chordless_cycles(gc, 6).size());
    }
}

TEST_CASE("dot output") {
    auto dot = to_dot(build_graph(fixtures::load("single_line.json")).graph, "G");
    CHECK(dot == "graph G {\n  A1;\n  B1;\n  A1 -- B1;\n}\n");
}

}
