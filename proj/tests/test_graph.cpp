#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "secdom/graph.hpp"

using namespace secdom;
namespace th = secdom::testing;

TEST_CASE("building graphs from edge lists") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));

    Graph empty3 = Graph::from_edges(3, {});
    CHECK(empty3.edge_count() == 0);

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), input_error);

    // duplicates collapse
    Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("neighborhoods") {
    Graph p4 = th::path(4);
    CHECK(p4.neighbors(1) == VertexSet::of(4, {0, 2}));
    CHECK(p4.closed_neighborhood(1) == VertexSet::of(4, {0, 1, 2}));

    Graph k4 = th::complete(4);
    CHECK(k4.neighbors(0) == VertexSet::of(4, {1, 2, 3}));

    Graph empty3(3);
    CHECK(empty3.neighbors(2).empty());
    CHECK_THROWS_AS(empty3.neighbors(3), input_error);
}

TEST_CASE("pendant vertices") {
    CHECK(th::path(4).pendant_vertices() == VertexSet::of(4, {0, 3}));
    CHECK(th::cycle(4).pendant_vertices().empty());
    CHECK(th::star(3).pendant_vertices() == VertexSet::of(4, {1, 2, 3}));
}

TEST_CASE("induced subgraphs") {
    Graph c4 = th::cycle(4);
    auto adj = induced_subgraph(c4, VertexSet::of(4, {0, 1}));
    CHECK(adj.graph.vertex_count() == 2);
    CHECK(adj.graph.edge_count() == 1);

    auto opposite = induced_subgraph(c4, VertexSet::of(4, {0, 2}));
    CHECK(opposite.graph.edge_count() == 0);

    auto none = induced_subgraph(c4, VertexSet(4));
    CHECK(none.graph.vertex_count() == 0);
}

TEST_CASE("structure predicates") {
    Graph k3 = th::complete(3);
    CHECK(is_complete_on(k3, k3.all_vertices()));
    Graph p4 = th::path(4);
    CHECK(is_forest_on(p4, p4.all_vertices()));
    CHECK_FALSE(is_complete_on(p4, p4.all_vertices()));
    Graph c4 = th::cycle(4);
    CHECK_FALSE(is_forest_on(c4, c4.all_vertices()));
    CHECK(is_connected(p4));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("graph invariants on random instances") {
    std::mt19937_64 rng(20240811);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = 1 + rng() % 12;
        Graph g = th::random_graph(n, 40, rng);
        for (std::size_t v = 0; v < n; ++v) {
            int vi = static_cast<int>(v);
            CHECK_FALSE(g.neighbors(vi).contains(vi));
            CHECK(g.closed_neighborhood(vi).size() == g.degree(vi) + 1);
        }
        auto whole = induced_subgraph(g, g.all_vertices());
        CHECK(whole.graph == g);
        VertexSet pend = g.pendant_vertices();
        for (std::size_t v = 0; v < n; ++v)
            CHECK(pend.contains(static_cast<int>(v)) == (g.degree(static_cast<int>(v)) == 1));
    }
}

TEST_CASE("edge list round trip and comments") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 4}});
    std::stringstream ss;
    write_edge_list(ss, g);
    Graph back = read_edge_list(ss);
    CHECK(back == g);

    std::stringstream annotated("# header comment\n3 2 # n m\n0 1\n1 2 # tail\n");
    Graph ann = read_edge_list(annotated);
    CHECK(ann.vertex_count() == 3);
    CHECK(ann.edge_count() == 2);

    std::stringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(missing), input_error);
    std::stringstream oob("2 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(oob), input_error);
}
