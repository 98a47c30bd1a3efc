#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "secdom/recognition.hpp"

namespace secdom {

enum class GraphClass {
    split,
    bisplit,
    chain,
    chordal_bisplit,
    chordal_bipartite,
    path,
    cycle,
    complete_bipartite,
};

inline const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::split: return "split";
        case GraphClass::bisplit: return "bisplit";
        case GraphClass::chain: return "chain";
        case GraphClass::chordal_bisplit: return "chordal-bisplit";
        case GraphClass::chordal_bipartite: return "chordal-bipartite";
        case GraphClass::path: return "path";
        case GraphClass::cycle: return "cycle";
        case GraphClass::complete_bipartite: return "complete-bipartite";
    }
    return "?";
}

inline std::optional<GraphClass> parse_graph_class(const std::string& s) {
    for (GraphClass c : {GraphClass::split, GraphClass::bisplit, GraphClass::chain,
                         GraphClass::chordal_bisplit, GraphClass::chordal_bipartite,
                         GraphClass::path, GraphClass::cycle, GraphClass::complete_bipartite})
        if (s == graph_class_name(c)) return c;
    return std::nullopt;
}

// Identical spec (class, parameters, seed) reproduces the same graph
// byte-for-byte; every random draw below goes through Rng, whose output
// sequence is fixed by the standard.
struct InstanceSpec {
    GraphClass cls = GraphClass::path;
    std::vector<std::size_t> params;
    std::uint64_t seed = 0;
};

namespace detail {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::size_t below(std::size_t k) {
        // rejection keeps the draw exact and the byte stream reproducible
        if (k == 0) throw input_error("Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return static_cast<std::size_t>(x % k);
    }

    bool chance(std::size_t pct) { return below(100) < pct; }

private:
    std::mt19937_64 eng_;
};

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

struct GeneratedInstance {
    InstanceSpec spec;
    Graph graph;
    std::optional<SplitPartition> split;
    std::optional<BisplitPartition> bisplit;
    std::optional<ChainPartition> chain;
    // bipartition (X, Y) for the bipartite classes, X holding vertex 0
    std::optional<std::pair<VertexSet, VertexSet>> sides;
};

namespace detail {

inline std::size_t param(const InstanceSpec& spec, std::size_t i, const char* name) {
    if (i >= spec.params.size())
        throw input_error(std::string("generator: missing parameter '") + name + "' for " +
                          graph_class_name(spec.cls));
    return spec.params[i];
}

inline std::size_t param_or(const InstanceSpec& spec, std::size_t i, std::size_t fallback) {
    return i < spec.params.size() ? spec.params[i] : fallback;
}

inline GeneratedInstance gen_split(const InstanceSpec& spec) {
    std::size_t a = param(spec, 0, "clique size"), b = param(spec, 1, "independent size");
    std::size_t pct = param_or(spec, 2, 50);
    if (a == 0 && b > 1) throw input_error("split generator: empty clique disconnects I");
    Rng rng(spec.seed);
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = i + 1; j < a; ++j)
            g.add_edge(static_cast<int>(i), static_cast<int>(j));
    for (std::size_t i = 0; a > 0 && i < b; ++i) {
        int v = static_cast<int>(a + i);
        int anchor = static_cast<int>(rng.below(a));
        g.add_edge(v, anchor);
        for (std::size_t k = 0; k < a; ++k)
            if (static_cast<int>(k) != anchor && rng.chance(pct))
                g.add_edge(v, static_cast<int>(k));
    }
    GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt, std::nullopt,
                          std::nullopt};
    SplitPartition p{VertexSet(a + b), VertexSet(a + b)};
    for (std::size_t i = 0; i < a; ++i) p.clique.insert(static_cast<int>(i));
    for (std::size_t i = a; i < a + b; ++i) p.independent.insert(static_cast<int>(i));
    out.split = p;
    return out;
}

inline GeneratedInstance gen_bisplit(const InstanceSpec& spec) {
    std::size_t xs = param(spec, 0, "x size"), ys = param(spec, 1, "y size");
    std::size_t zs = param(spec, 2, "z size");
    std::size_t pct = param_or(spec, 3, 35);
    if (ys < 1 || zs < 1) throw input_error("bisplit generator needs nonempty biclique sides");
    Rng rng(spec.seed);
    std::size_t n = xs + ys + zs;
    Graph g(n);
    auto yid = [&](std::size_t i) { return static_cast<int>(xs + i); };
    auto zid = [&](std::size_t i) { return static_cast<int>(xs + ys + i); };
    for (std::size_t i = 0; i < ys; ++i)
        for (std::size_t j = 0; j < zs; ++j) g.add_edge(yid(i), zid(j));
    for (std::size_t i = 0; i < xs; ++i) {
        int v = static_cast<int>(i);
        std::size_t anchor = rng.below(ys + zs);
        g.add_edge(v, static_cast<int>(xs + anchor));
        for (std::size_t k = 0; k < ys + zs; ++k)
            if (k != anchor && rng.chance(pct)) g.add_edge(v, static_cast<int>(xs + k));
    }
    GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt, std::nullopt,
                          std::nullopt};
    BisplitPartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (std::size_t i = 0; i < xs; ++i) p.x.insert(static_cast<int>(i));
    for (std::size_t i = 0; i < ys; ++i) p.y.insert(yid(i));
    for (std::size_t i = 0; i < zs; ++i) p.z.insert(zid(i));
    out.bisplit = p;
    return out;
}

inline GeneratedInstance gen_chain(const InstanceSpec& spec) {
    std::size_t nx = param(spec, 0, "x size"), ny = param(spec, 1, "y size");
    if (nx < 1 || ny < 1) throw input_error("chain generator needs nonempty sides");
    Rng rng(spec.seed);
    std::vector<std::size_t> deg(nx);
    for (auto& d : deg) d = 1 + rng.below(ny);
    std::sort(deg.begin(), deg.end());
    deg.back() = ny; // the top vertex sees all of Y, keeping the graph connected
    Graph g(nx + ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < deg[i]; ++j)
            g.add_edge(static_cast<int>(i), static_cast<int>(nx + j));
    GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt, std::nullopt,
                          std::nullopt};
    out.chain = recognize_chain(out.graph); // nested prefixes by construction
    VertexSet sx(nx + ny), sy(nx + ny);
    for (std::size_t i = 0; i < nx; ++i) sx.insert(static_cast<int>(i));
    for (std::size_t i = 0; i < ny; ++i) sy.insert(static_cast<int>(nx + i));
    out.sides = {sx, sy};
    return out;
}

// Per the chordal characterization: a K_{1,l} biclique centered at vertex 0,
// X vertices either pendant or wired to the center plus z's chosen in
// distinct forest components.
inline GeneratedInstance gen_chordal_bisplit(const InstanceSpec& spec) {
    std::size_t l = param(spec, 0, "leaf count l"), t = param(spec, 1, "x count");
    if (l < 1) throw input_error("chordal-bisplit generator needs l >= 1");
    Rng rng(spec.seed);
    std::size_t n = 1 + l + t;
    int y1 = 0;
    auto zid = [&](std::size_t i) { return static_cast<int>(1 + i); };
    auto xid = [&](std::size_t i) { return static_cast<int>(1 + l + i); };
    Graph g(n);
    for (std::size_t i = 0; i < l; ++i) g.add_edge(y1, zid(i));
    DisjointSets forest(n); // components of the X-Z forest
    for (std::size_t i = 0; i < t; ++i) {
        int x = xid(i);
        if (rng.chance(40)) {
            // pendant x: hangs off the center or one z
            if (rng.chance(50)) g.add_edge(x, y1);
            else {
                int z = zid(rng.below(l));
                g.add_edge(x, z);
                forest.unite(x, z);
            }
            continue;
        }
        g.add_edge(x, y1);
        std::size_t want = 1 + rng.below(std::min<std::size_t>(3, l));
        std::size_t got = 0;
        for (std::size_t tries = 0; tries < 4 * l && got < want; ++tries) {
            int z = zid(rng.below(l));
            if (forest.unite(x, z)) {
                g.add_edge(x, z);
                ++got;
            }
        }
        // got may fall short of want when components run out; degree >= 1 either way
    }
    GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt, std::nullopt,
                          std::nullopt};
    BisplitPartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
    p.y.insert(y1);
    for (std::size_t i = 0; i < l; ++i) p.z.insert(zid(i));
    for (std::size_t i = 0; i < t; ++i) p.x.insert(xid(i));
    if (!check_chordal_bisplit(out.graph, p))
        throw input_error("chordal-bisplit generator produced an off-class instance");
    out.bisplit = p;
    return out;
}

inline GeneratedInstance gen_chordal_bipartite(const InstanceSpec& spec) {
    std::size_t n = param(spec, 0, "vertex count");
    std::size_t pct = param_or(spec, 1, 50);
    if (n < 2) throw input_error("chordal-bipartite generator needs n >= 2");
    if (n > detail::kChordalBipartiteCap)
        throw size_limit_error("chordal-bipartite generator capped at n <= 16");
    Rng rng(spec.seed);
    for (int tries = 0; tries < 20000; ++tries) {
        std::size_t a = 1 + rng.below(n - 1), b = n - a;
        Graph g(n);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                if (rng.chance(pct)) g.add_edge(static_cast<int>(i), static_cast<int>(a + j));
        if (!is_connected(g) || !is_chordal_bipartite(g)) continue;
        GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt, std::nullopt,
                              std::nullopt};
        VertexSet sx(n), sy(n);
        for (std::size_t i = 0; i < a; ++i) sx.insert(static_cast<int>(i));
        for (std::size_t i = a; i < n; ++i) sy.insert(static_cast<int>(i));
        out.sides = {sx, sy};
        return out;
    }
    throw input_error("chordal-bipartite rejection sampling exhausted its budget");
}

} // namespace detail

// Builds the instance for a spec; the result carries the class partition the
// generator constructed (the spec and its seed pin the graph exactly).
inline GeneratedInstance generate(const InstanceSpec& spec) {
    switch (spec.cls) {
        case GraphClass::split: return detail::gen_split(spec);
        case GraphClass::bisplit: return detail::gen_bisplit(spec);
        case GraphClass::chain: return detail::gen_chain(spec);
        case GraphClass::chordal_bisplit: return detail::gen_chordal_bisplit(spec);
        case GraphClass::chordal_bipartite: return detail::gen_chordal_bipartite(spec);
        case GraphClass::path: {
            std::size_t n = detail::param(spec, 0, "n");
            Graph g(n);
            for (std::size_t v = 0; v + 1 < n; ++v)
                g.add_edge(static_cast<int>(v), static_cast<int>(v + 1));
            return {spec, std::move(g), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        }
        case GraphClass::cycle: {
            std::size_t n = detail::param(spec, 0, "n");
            if (n < 3) throw input_error("cycle generator needs n >= 3");
            Graph g(n);
            for (std::size_t v = 0; v < n; ++v)
                g.add_edge(static_cast<int>(v), static_cast<int>((v + 1) % n));
            return {spec, std::move(g), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        }
        case GraphClass::complete_bipartite: {
            std::size_t p = detail::param(spec, 0, "p"), q = detail::param(spec, 1, "q");
            if (p < 1 || q < 1) throw input_error("complete-bipartite needs p, q >= 1");
            Graph g(p + q);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j)
                    g.add_edge(static_cast<int>(i), static_cast<int>(p + j));
            GeneratedInstance out{spec, std::move(g), std::nullopt, std::nullopt,
                                  std::nullopt, std::nullopt};
            VertexSet sx(p + q), sy(p + q);
            for (std::size_t i = 0; i < p; ++i) sx.insert(static_cast<int>(i));
            for (std::size_t i = p; i < p + q; ++i) sy.insert(static_cast<int>(i));
            out.sides = {sx, sy};
            out.chain = recognize_chain(out.graph);
            return out;
        }
    }
    throw input_error("unknown graph class");
}

} // namespace secdom
