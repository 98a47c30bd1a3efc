#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "secdom/generators.hpp"
#include "secdom/solvers.hpp"

using namespace secdom;
namespace th = secdom::testing;

namespace {

// y1=0, four z's 1..4, three x's 5..7 wired to y1 and to the given z pairs
Graph fan_graph(const std::vector<std::pair<int, std::pair<int, int>>>& xz) {
    Graph g(8);
    for (int z = 1; z <= 4; ++z) g.add_edge(0, z);
    for (auto& [x, zz] : xz) {
        g.add_edge(0, x);
        g.add_edge(x, zz.first);
        g.add_edge(x, zz.second);
    }
    return g;
}

BisplitPartition fan_partition() {
    return {VertexSet::of(8, {5, 6, 7}), VertexSet::of(8, {0}),
            VertexSet::of(8, {1, 2, 3, 4})};
}

} // namespace

TEST_CASE("closed form for complete bipartite graphs") {
    CHECK(gamma_s_complete_bipartite(1, 7) == 7);
    CHECK(gamma_s_complete_bipartite(3, 9) == 3);
    CHECK(gamma_s_complete_bipartite(5, 5) == 4);
    CHECK_THROWS_AS(gamma_s_complete_bipartite(4, 2), input_error);
    CHECK_THROWS_AS(gamma_s_complete_bipartite(0, 3), input_error);

    for (std::size_t p = 1; p <= 5; ++p)
        for (std::size_t q = p; q <= 5; ++q)
            CHECK(gamma_s_complete_bipartite(p, q) ==
                  min_secure_dominating_brute(th::complete_bipartite(p, q)).size());
}

TEST_CASE("substructure detection: case 1 triangle") {
    Graph tri = th::complete(3); // y1=0, z=1, x=2
    BisplitPartition p{VertexSet::of(3, {2}), VertexSet::of(3, {0}), VertexSet::of(3, {1})};
    auto rep = detect_y1_substructures(tri, p);
    CHECK(rep.present[0]);
    CHECK(rep.witness[0] == std::vector<int>{1, 2});
    CHECK_FALSE(rep.present[3]);
    CHECK_FALSE(rep.present[4]);
}

TEST_CASE("substructure detection: star has nothing") {
    Graph s5 = th::star(5);
    BisplitPartition p{VertexSet(6), VertexSet::of(6, {0}),
                       VertexSet::of(6, {1, 2, 3, 4, 5})};
    auto rep = detect_y1_substructures(s5, p);
    for (int c = 0; c < 5; ++c) CHECK_FALSE(rep.present[c]);
}

TEST_CASE("substructure detection: case 4 fan") {
    Graph g = fan_graph({{5, {1, 2}}, {6, {2, 3}}, {7, {3, 4}}});
    auto rep = detect_y1_substructures(g, fan_partition());
    CHECK(rep.present[3]);
    CHECK_FALSE(rep.present[4]);
    CHECK(rep.present[1]); // each tooth alone is a case-2 pattern
    CHECK_FALSE(rep.present[0]);
    CHECK(rep.witness[3] == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("substructure detection: case 5 spider") {
    Graph g = fan_graph({{5, {1, 2}}, {6, {2, 3}}, {7, {2, 4}}});
    auto rep = detect_y1_substructures(g, fan_partition());
    CHECK(rep.present[4]);
    CHECK_FALSE(rep.present[3]);
}

TEST_CASE("substructure detection: case 2 and 3 do not trigger removal branches") {
    Graph g(4); // y1=0, z's 1,2, x=3 adjacent to everything
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    g.add_edge(3, 2);
    BisplitPartition p{VertexSet::of(4, {3}), VertexSet::of(4, {0}), VertexSet::of(4, {1, 2})};
    auto rep = detect_y1_substructures(g, p);
    CHECK(rep.present[1]);
    CHECK_FALSE(rep.present[0]);
    auto sol = solve_chordal_bisplit(g, p, {.certify = true});
    CHECK(sol.branch == "base");
    CHECK(sol.set.size() == 2);
    CHECK(sol.oracle_size == 2);
}

TEST_CASE("chordal bisplit solver on stars") {
    for (std::size_t l : {1u, 3u, 6u}) {
        Graph s = th::star(l);
        BisplitPartition p{VertexSet(l + 1), VertexSet::of(l + 1, {0}), VertexSet(l + 1)};
        for (std::size_t z = 1; z <= l; ++z) p.z.insert(static_cast<int>(z));
        auto sol = solve_chordal_bisplit(s, p, {.certify = true});
        CHECK(sol.branch == "pendant-z");
        CHECK(sol.set.size() == l); // gamma_s(K_{1,l}) = l
        CHECK(sol.set.size() == sol.oracle_size);
        CHECK(is_secure_dominating(s, sol.set));
    }
}

TEST_CASE("chordal bisplit solver on the triangle takes the removal branch") {
    Graph tri = th::complete(3);
    BisplitPartition p{VertexSet::of(3, {2}), VertexSet::of(3, {0}), VertexSet::of(3, {1})};
    auto sol = solve_chordal_bisplit(tri, p, {.certify = true});
    CHECK(sol.branch == "remove-x");
    CHECK(sol.set.size() == 1);
    CHECK(sol.oracle_size == 1); // gamma_s(K_3) = 1
}

TEST_CASE("chordal bisplit solver keeps X and Y when no case applies") {
    // y1=0; z's 1,2 each carrying a pendant x (3 on 1, 4 on 2): the double
    // pruning empties G'' down to y1, so S stays X union Y
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {3, 1}, {4, 2}});
    BisplitPartition p{VertexSet::of(5, {3, 4}), VertexSet::of(5, {0}), VertexSet::of(5, {1, 2})};
    auto sol = solve_chordal_bisplit(g, p, {.certify = true});
    CHECK(sol.branch == "base");
    CHECK(sol.raw_size == 3);
    CHECK(is_secure_dominating(g, sol.set));
    CHECK(sol.set.size() == sol.oracle_size);
}

TEST_CASE("chordal bisplit solver: soundness and certified optimality on corpus") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        InstanceSpec spec{GraphClass::chordal_bisplit,
                          {1 + seed % 6, seed % 6}, 9000 + seed};
        auto inst = generate(spec);
        if (inst.graph.vertex_count() > 12) continue;
        auto sol = solve_chordal_bisplit(inst.graph, *inst.bisplit, {.certify = true});
        CHECK(is_secure_dominating(inst.graph, sol.set));
        CHECK(sol.certified);
        CHECK(sol.set.size() == sol.oracle_size);
    }
}

TEST_CASE("chordal bisplit solver class errors") {
    Graph k23 = th::complete_bipartite(2, 3);
    BisplitPartition p{VertexSet(5), VertexSet::of(5, {0, 1}), VertexSet::of(5, {2, 3, 4})};
    CHECK_THROWS_AS(solve_chordal_bisplit(k23, p), class_error);

    // valid chordal-bisplit partition but disconnected graph (isolated x)
    Graph g = Graph::from_edges(3, {{0, 1}});
    BisplitPartition q{VertexSet::of(3, {2}), VertexSet::of(3, {0}), VertexSet::of(3, {1})};
    CHECK_THROWS_AS(solve_chordal_bisplit(g, q), disconnected_error);
}

TEST_CASE("chain solver on K_{2,3} records the gap against the oracle") {
    Graph k23 = th::complete_bipartite(2, 3);
    auto p = recognize_chain(k23);
    REQUIRE(p);
    auto raw = solve_chain(k23, *p);
    CHECK(raw.branch == "base");
    CHECK(raw.raw_size == 4);
    CHECK(is_secure_dominating(k23, raw.set));

    auto certified = solve_chain(k23, *p, {.certify = true});
    CHECK(certified.certified);
    CHECK(certified.oracle_size == 2);
    CHECK(certified.set.size() == 2); // minimality fallback applies
}

TEST_CASE("chain solver degenerate shapes") {
    Graph p4 = th::path(4);
    auto pp = recognize_chain(p4);
    REQUIRE(pp);
    auto sol = solve_chain(p4, *pp);
    CHECK(sol.branch == "degenerate-oracle");
    CHECK(sol.set.size() == 2);
    CHECK(is_secure_dominating(p4, sol.set));

    Graph star = th::complete_bipartite(1, 6);
    auto sp = recognize_chain(star);
    REQUIRE(sp);
    auto ssol = solve_chain(star, *sp);
    CHECK(ssol.branch == "degenerate-complete-bipartite");
    CHECK(ssol.set.size() == 6);
    CHECK(is_secure_dominating(star, ssol.set));

    Graph k22 = th::complete_bipartite(2, 2);
    auto kp = recognize_chain(k22);
    REQUIRE(kp);
    auto ksol = solve_chain(k22, *kp);
    CHECK(ksol.set.size() == 2);
}

TEST_CASE("chain solver on the double star adds both pendant surpluses") {
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
    auto p = recognize_chain(g);
    REQUIRE(p);
    CHECK(p->x_pendants.size() == 3);
    CHECK(p->y_pendants.size() == 3);
    auto sol = solve_chain(g, *p, {.certify = true});
    CHECK(sol.branch == "base+x-pendants+y-pendants");
    CHECK(sol.raw_size == 6); // base 4 plus 2+2 surplus, overlapping base twice
    CHECK(is_secure_dominating(g, sol.set));
    CHECK(sol.set.size() == sol.oracle_size);
}

TEST_CASE("chain solver: soundness and certified optimality on corpus") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        InstanceSpec spec{GraphClass::chain, {1 + seed % 5, 1 + (seed / 5) % 5}, 500 + seed};
        auto inst = generate(spec);
        REQUIRE(inst.chain);
        auto sol = solve_chain(inst.graph, *inst.chain, {.certify = true});
        CHECK(is_secure_dominating(inst.graph, sol.set));
        CHECK(sol.certified);
        CHECK(sol.set.size() == sol.oracle_size);
    }
}

TEST_CASE("chain solver rejects invalid partitions") {
    Graph k23 = th::complete_bipartite(2, 3);
    auto p = recognize_chain(k23);
    REQUIRE(p);
    ChainPartition broken = *p;
    broken.x_pendants.insert(0);
    CHECK_THROWS_AS(solve_chain(k23, broken), input_error);
}

TEST_CASE("solvers are structurally stable under relabeling") {
    std::mt19937_64 rng(321);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        InstanceSpec spec{GraphClass::chordal_bisplit, {2 + seed % 4, 1 + seed % 4},
                          3100 + seed};
        auto inst = generate(spec);
        std::size_t n = inst.graph.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : inst.graph.edges()) h.add_edge(perm[u], perm[v]);
        BisplitPartition hp{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (int v : inst.bisplit->x) hp.x.insert(perm[v]);
        for (int v : inst.bisplit->y) hp.y.insert(perm[v]);
        for (int v : inst.bisplit->z) hp.z.insert(perm[v]);
        auto a = solve_chordal_bisplit(inst.graph, *inst.bisplit, {.certify = true});
        auto b = solve_chordal_bisplit(h, hp, {.certify = true});
        CHECK(a.set.size() == b.set.size());
        CHECK(is_secure_dominating(h, b.set));
    }
}

TEST_CASE("solvers stay fast at a few hundred vertices") {
    // coarse polynomial-behavior evidence; the crosscheck report carries data
    InstanceSpec big_chain{GraphClass::chain, {180, 220}, 11};
    auto ci = generate(big_chain);
    auto cs = solve_chain(ci.graph, *ci.chain);
    CHECK(is_secure_dominating(ci.graph, cs.set));

    InstanceSpec big_cb{GraphClass::chordal_bisplit, {150, 250}, 12};
    auto bi = generate(big_cb);
    auto bs = solve_chordal_bisplit(bi.graph, *bi.bisplit);
    CHECK(is_secure_dominating(bi.graph, bs.set));
}
