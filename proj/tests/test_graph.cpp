#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pentacover/construct.hpp"
#include "pentacover/graph.hpp"
#include "pentacover/graph6.hpp"

using namespace pentacover;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph random_graph(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, e);
}

} // namespace

TEST_CASE("construction enforces simple symmetric adjacency") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), graph_error);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), graph_error);
    Graph g(3, {{0, 1}, {1, 0}}); // duplicate collapses
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("connectivity and valency") {
    CHECK(is_connected(complete(6)));
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(two_edges));
    CHECK(regular_valency(complete(6)) == 5);
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(!regular_valency(path).has_value());
}

TEST_CASE("bipartite detection") {
    auto col = is_bipartite(family("k55").graph);
    REQUIRE(col.has_value());
    for (int i = 0; i < 5; ++i) {
        CHECK((*col)[i] == (*col)[0]);
        CHECK((*col)[5 + i] != (*col)[0]);
    }
    CHECK(!is_bipartite(complete(6)).has_value());
}

TEST_CASE("bipartite never coexists with an odd cycle") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(3 + t % 48, 0.2, rng);
        auto col = is_bipartite(g);
        int gir;
        try {
            gir = girth(g);
        } catch (const graph_error&) {
            continue; // forest: trivially bipartite
        }
        if (col) CHECK(gir % 2 == 0);
    }
}

TEST_CASE("contains_cycle") {
    Graph k6 = complete(6);
    CHECK(contains_cycle(k6, {0, 1, 2}));
    CHECK(contains_cycle(k6, {5, 2, 4, 0}));
    CHECK(!contains_cycle(k6, {0, 1, 1}));
    CHECK_THROWS_AS(contains_cycle(k6, {0, 1}), graph_error);
    Graph c6 = cycle(6);
    CHECK(contains_cycle(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(!contains_cycle(c6, {0, 1, 2}));
}

TEST_CASE("girth") {
    CHECK(girth(complete(6)) == 3);
    CHECK(girth(family("k55").graph) == 4);
    CHECK(girth(cycle(12)) == 12);
    Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(girth(tree), graph_error);
}

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(complete(4)) == "C~");
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(to_graph6(p4) == "Ch");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(from_graph6("C~") == complete(4));
    CHECK(from_graph6("Ch") == p4);
    CHECK(read_graph_string(">>graph6<<Ch\n") == p4);
}

TEST_CASE("sparse6 known encoding") {
    // 7 vertices, edges 01 02 12 56 (nauty's documented example)
    Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}});
    CHECK(to_sparse6(g) == ":Fa@x^");
    CHECK(from_sparse6(":Fa@x^") == g);
}

TEST_CASE("format round trips") {
    std::mt19937 rng(5);
    for (int n : {1, 2, 3, 4, 5, 8, 16, 17, 32, 61, 62, 63, 64, 65, 100}) {
        for (int t = 0; t < 12; ++t) {
            Graph g = random_graph(n, t / 12.0, rng);
            CHECK(from_graph6(to_graph6(g)) == g);
            CHECK(from_sparse6(to_sparse6(g)) == g);
        }
    }
    // a desk-scale instance through the long size header
    Graph big = family("cgd1", 1, 11, 2).graph;
    CHECK(big.vertex_count() == 2662);
    CHECK(from_graph6(to_graph6(big)) == big);
    CHECK(from_sparse6(to_sparse6(big)) == big);
    CHECK(to_graph6(big)[0] == 126); // multi-byte N(n)
}

TEST_CASE("file io") {
    Graph g = cycle(7);
    write_graph_file("roundtrip_test.g6", g, "graph6");
    CHECK(read_graph_file("roundtrip_test.g6") == g);
    write_graph_file("roundtrip_test.s6", g, "sparse6");
    CHECK(read_graph_file("roundtrip_test.s6") == g);
    CHECK_THROWS_AS(write_graph_file("x", g, "dot"), format_error);
    std::remove("roundtrip_test.g6");
    std::remove("roundtrip_test.s6");
}
