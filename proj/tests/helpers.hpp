#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom::testing {

inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        g.add_edge(static_cast<int>(v), static_cast<int>(v + 1));
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    g.add_edge(static_cast<int>(n - 1), 0);
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

// center 0, leaves 1..q
inline Graph star(std::size_t q) {
    Graph g(q + 1);
    for (std::size_t v = 1; v <= q; ++v) g.add_edge(0, static_cast<int>(v));
    return g;
}

inline Graph complete_bipartite(std::size_t p, std::size_t q) {
    Graph g(p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            g.add_edge(static_cast<int>(i), static_cast<int>(p + j));
    return g;
}

// graph on n vertices from an edge-presence bitmask over pairs (u,v), u < v
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

inline std::uint64_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline Graph random_graph(std::size_t n, unsigned edge_pct, std::mt19937_64& rng) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng() % 100 < edge_pct) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

} // namespace secdom::testing
