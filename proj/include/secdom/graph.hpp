#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "secdom/errors.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

// Undirected simple graph on vertices 0..n-1. Adjacency is kept as one
// bitset row per vertex; rows stay symmetric and irreflexive. Instances
// are treated as immutable once built (generators mutate only during
// construction), so concurrent reads are safe.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

    // Duplicate edges are collapsed; self-loops and out-of-range endpoints reject.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v)) return;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    VertexSet closed_neighborhood(int v) const {
        check_vertex(v);
        VertexSet s = adj_[v];
        s.insert(v);
        return s;
    }

    std::size_t degree(int v) const { return neighbors(v).size(); }

    // Exactly the degree-1 vertices.
    VertexSet pendant_vertices() const {
        VertexSet s(n_);
        for (std::size_t v = 0; v < n_; ++v)
            if (adj_[v].size() == 1) s.insert(static_cast<int>(v));
        return s;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (std::size_t u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range for n=" +
                              std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;    // parent vertex -> new id, -1 if dropped
    std::vector<int> to_parent; // new id -> parent vertex, ascending
};

// Subgraph induced by S, relabelled to 0..|S|-1 preserving vertex order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_sub.assign(g.vertex_count(), -1);
    for (int v : s) {
        out.to_sub[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    out.graph = Graph(out.to_parent.size());
    for (int v : s)
        for (int w : (g.neighbors(v) & s))
            if (v < w) out.graph.add_edge(out.to_sub[v], out.to_sub[w]);
    return out;
}

// All pairs within S adjacent.
inline bool is_complete_on(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        VertexSet missing = s - g.neighbors(v);
        missing.erase(v);
        if (!missing.empty()) return false;
    }
    return true;
}

// No pair within S adjacent.
inline bool is_independent_on(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<int> stack{0};
    seen.insert(0);
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : (g.neighbors(v) - seen)) {
            seen.insert(w);
            ++count;
            stack.push_back(w);
        }
    }
    return count == n;
}

// The subgraph induced by S is acyclic.
inline bool is_forest_on(const Graph& g, const VertexSet& s) {
    auto sub = induced_subgraph(g, s);
    std::size_t n = sub.graph.vertex_count();
    // a forest has fewer edges than vertices in every component; global check via DFS
    std::vector<int> parent(n, -2);
    for (std::size_t root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{static_cast<int>(root)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sub.graph.neighbors(v)) {
                if (w == parent[v]) continue;
                if (parent[w] != -2) return false;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// 2-coloring; returns the side containing vertex 0 of each component first
// (color 0 for the smallest unvisited vertex). Empty result when not bipartite.
inline bool bipartition(const Graph& g, VertexSet& side_a, VertexSet& side_b) {
    std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    side_a = VertexSet(n);
    side_b = VertexSet(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{static_cast<int>(root)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        (color[v] == 0 ? side_a : side_b).insert(static_cast<int>(v));
    return true;
}

// --- edge-list text format -------------------------------------------------
//
// First line "n m", then m lines "u v" (0-based). Anything after '#' on a
// line is a comment. This is the canonical on-disk format for the CLI.

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<long long> numbers;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long x;
        while (ls >> x) numbers.push_back(x);
    }
    if (numbers.size() < 2) throw input_error("edge list: missing 'n m' header");
    long long n = numbers[0], m = numbers[1];
    if (n < 0 || m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m))
        throw input_error("edge list: expected " + std::to_string(m) + " edges");
    Graph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge list: endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_edge_list(in);
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

} // namespace secdom
