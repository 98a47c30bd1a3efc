#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "secdom/generators.hpp"
#include "secdom/recognition.hpp"

using namespace secdom;

namespace {

std::string edge_list_bytes(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

} // namespace

TEST_CASE("identical specs reproduce identical graphs byte for byte") {
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        InstanceSpec a{GraphClass::split, {3, 4, 55}, seed};
        CHECK(edge_list_bytes(generate(a).graph) == edge_list_bytes(generate(a).graph));
        InstanceSpec b{GraphClass::chordal_bisplit, {4, 3}, seed};
        CHECK(edge_list_bytes(generate(b).graph) == edge_list_bytes(generate(b).graph));
        InstanceSpec c{GraphClass::chain, {4, 5}, seed};
        CHECK(edge_list_bytes(generate(c).graph) == edge_list_bytes(generate(c).graph));
    }
}

TEST_CASE("generated instances pass their class verifiers") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto split = generate({GraphClass::split, {1 + seed % 4, seed % 5}, seed});
        REQUIRE(split.split);
        CHECK(verify_split_partition(split.graph, *split.split));
        CHECK(is_connected(split.graph));

        auto bisplit = generate(
            {GraphClass::bisplit, {seed % 4, 1 + seed % 3, 1 + (seed / 3) % 3}, seed});
        REQUIRE(bisplit.bisplit);
        CHECK(verify_bisplit_partition(bisplit.graph, *bisplit.bisplit));
        CHECK(is_connected(bisplit.graph));

        auto cb = generate({GraphClass::chordal_bisplit, {1 + seed % 5, seed % 5}, seed});
        REQUIRE(cb.bisplit);
        CHECK(check_chordal_bisplit(cb.graph, *cb.bisplit));
        CHECK(is_chordal(cb.graph));
        CHECK(is_connected(cb.graph));

        auto chain = generate({GraphClass::chain, {1 + seed % 4, 1 + (seed / 4) % 4}, seed});
        REQUIRE(chain.chain);
        CHECK(verify_chain_partition(chain.graph, *chain.chain));

        auto cbip = generate({GraphClass::chordal_bipartite, {2 + seed % 6, 60}, seed});
        CHECK(is_chordal_bipartite(cbip.graph));
        CHECK(is_connected(cbip.graph));
    }
}

TEST_CASE("parametric families") {
    auto p5 = generate({GraphClass::path, {5}, 0});
    CHECK(p5.graph.edge_count() == 4);
    auto c6 = generate({GraphClass::cycle, {6}, 0});
    CHECK(c6.graph.edge_count() == 6);
    for (std::size_t v = 0; v < 6; ++v) CHECK(c6.graph.degree(static_cast<int>(v)) == 2);
    auto k23 = generate({GraphClass::complete_bipartite, {2, 3}, 0});
    CHECK(k23.graph.edge_count() == 6);
    REQUIRE(k23.chain); // K_{2,3} is a chain graph
    CHECK(k23.chain->x_classes.size() == 1);
}

TEST_CASE("the spec'd chordal-bisplit generator example") {
    auto inst = generate({GraphClass::chordal_bisplit, {4, 3}, 7});
    REQUIRE(inst.bisplit);
    CHECK(check_chordal_bisplit(inst.graph, *inst.bisplit));
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(generate({GraphClass::cycle, {2}, 0}), input_error);
    CHECK_THROWS_AS(generate({GraphClass::chain, {0, 3}, 0}), input_error);
    CHECK_THROWS_AS(generate({GraphClass::bisplit, {2, 0, 1}, 0}), input_error);
    CHECK_THROWS_AS(generate({GraphClass::split, {0, 4}, 0}), input_error);
    CHECK_THROWS_AS(generate({GraphClass::complete_bipartite, {2}, 0}), input_error);
    CHECK_THROWS_AS(generate({GraphClass::chordal_bipartite, {17, 50}, 0}),
                    size_limit_error);
}

TEST_CASE("class names round-trip") {
    for (GraphClass c : {GraphClass::split, GraphClass::bisplit, GraphClass::chain,
                         GraphClass::chordal_bisplit, GraphClass::chordal_bipartite,
                         GraphClass::path, GraphClass::cycle, GraphClass::complete_bipartite})
        CHECK(parse_graph_class(graph_class_name(c)) == c);
    CHECK_FALSE(parse_graph_class("interval"));
}
