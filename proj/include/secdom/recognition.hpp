#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom {

// --- split graphs ------------------------------------------------------------

struct SplitPartition {
    VertexSet clique;      // K
    VertexSet independent; // I
};

inline bool verify_split_partition(const Graph& g, const SplitPartition& p) {
    if (p.clique.universe() != g.vertex_count() ||
        p.independent.universe() != g.vertex_count())
        return false;
    if (p.clique.intersects(p.independent)) return false;
    if ((p.clique | p.independent) != g.all_vertices()) return false;
    return is_complete_on(g, p.clique) && is_independent_on(g, p.independent);
}

// Degree-sequence recognition: sort by non-increasing degree, cut at the
// largest h with d_h >= h-1, verify the prefix is a clique and the suffix
// independent. For split graphs this prefix is always a valid clique side.
inline std::optional<SplitPartition> recognize_split(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) h = i + 1;
    SplitPartition p{VertexSet(n), VertexSet(n)};
    for (std::size_t i = 0; i < n; ++i)
        (i < h ? p.clique : p.independent).insert(order[i]);
    if (!verify_split_partition(g, p)) return std::nullopt;
    return p;
}

// Canonical split partition with an inclusion-minimal clique side: every
// clique vertex with no independent-side neighbor is moved over, smallest id
// first. The doubling reduction's size equivalence is sensitive to the
// partition choice, and this is the choice that behaves.
inline SplitPartition minimal_clique_partition(const Graph& g, SplitPartition p) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : p.clique) {
            if (!g.neighbors(v).intersects(p.independent)) {
                p.clique.erase(v);
                p.independent.insert(v);
                moved = true;
                break;
            }
        }
    }
    return p;
}

// --- bisplit graphs ----------------------------------------------------------

struct BisplitPartition {
    VertexSet x; // stable
    VertexSet y; // stable, one biclique side
    VertexSet z; // stable, other biclique side
};

// Three pairwise-disjoint stable sets covering V, with Y x Z a full biclique.
inline bool verify_bisplit_partition(const Graph& g, const BisplitPartition& p) {
    std::size_t n = g.vertex_count();
    if (p.x.universe() != n || p.y.universe() != n || p.z.universe() != n) return false;
    if (p.x.intersects(p.y) || p.x.intersects(p.z) || p.y.intersects(p.z)) return false;
    if ((p.x | p.y | p.z) != g.all_vertices()) return false;
    if (!is_independent_on(g, p.x) || !is_independent_on(g, p.y) ||
        !is_independent_on(g, p.z))
        return false;
    for (int y : p.y)
        if (!p.z.is_subset_of(g.neighbors(y))) return false;
    return true;
}

namespace detail {

constexpr std::size_t kBisplitRecognitionCap = 20;

enum class Part : char { unset, x, y, z };

inline bool bisplit_dfs(const Graph& g, std::vector<Part>& part, std::size_t v,
                        BisplitPartition& out) {
    std::size_t n = g.vertex_count();
    if (v == n) {
        BisplitPartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (std::size_t i = 0; i < n; ++i) {
            if (part[i] == Part::x) p.x.insert(static_cast<int>(i));
            if (part[i] == Part::y) p.y.insert(static_cast<int>(i));
            if (part[i] == Part::z) p.z.insert(static_cast<int>(i));
        }
        if (p.y.empty() || p.z.empty()) return false;
        out = p;
        return true;
    }
    int vi = static_cast<int>(v);
    for (Part choice : {Part::x, Part::y, Part::z}) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) {
            int ui = static_cast<int>(u);
            bool adj = g.adjacent(ui, vi);
            if (part[u] == choice && adj) ok = false; // each part stable
            if (choice == Part::y && part[u] == Part::z && !adj) ok = false;
            if (choice == Part::z && part[u] == Part::y && !adj) ok = false;
        }
        if (!ok) continue;
        part[v] = choice;
        if (bisplit_dfs(g, part, v + 1, out)) return true;
        part[v] = Part::unset;
    }
    return false;
}

} // namespace detail

// Exact search, capped at n <= 20; callers with larger graphs must supply a
// declared partition and use the verifier. Prefers a partition with a real
// (nonempty) biclique; falls back to a bipartition with Z empty, so a valid
// partition is returned whenever one exists under the definitional verifier.
inline std::optional<BisplitPartition> recognize_bisplit(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n > detail::kBisplitRecognitionCap)
        throw size_limit_error("bisplit recognition capped at n <= 20; "
                               "supply a declared partition instead");
    std::vector<detail::Part> part(n, detail::Part::unset);
    BisplitPartition found{VertexSet(n), VertexSet(n), VertexSet(n)};
    if (g.edge_count() > 0 && detail::bisplit_dfs(g, part, 0, found)) return found;
    VertexSet a, b;
    if (!bipartition(g, a, b)) return std::nullopt;
    return BisplitPartition{a, b, VertexSet(n)};
}

// --- chain graphs ------------------------------------------------------------

struct ChainPartition {
    VertexSet x_side, y_side;
    std::vector<int> x_order;                 // neighborhoods ascending
    std::vector<int> y_order;                 // neighborhoods descending
    std::vector<std::vector<int>> x_classes;  // X_1..X_k, equal-neighborhood classes
    std::vector<std::vector<int>> y_classes;  // Y_1..Y_k, Y_i = N(X_i) \ earlier
    VertexSet x_pendants;                     // X_1' subset of X_1
    VertexSet y_pendants;                     // Y_k' subset of Y_k
};

inline bool verify_chain_partition(const Graph& g, const ChainPartition& p) {
    std::size_t n = g.vertex_count();
    if (p.x_side.universe() != n || p.y_side.universe() != n) return false;
    if (p.x_side.intersects(p.y_side) || (p.x_side | p.y_side) != g.all_vertices())
        return false;
    if (!is_independent_on(g, p.x_side) || !is_independent_on(g, p.y_side)) return false;
    if (p.x_order.size() != p.x_side.size() || p.y_order.size() != p.y_side.size())
        return false;
    for (std::size_t i = 0; i + 1 < p.x_order.size(); ++i)
        if (!g.neighbors(p.x_order[i]).is_subset_of(g.neighbors(p.x_order[i + 1])))
            return false;
    for (std::size_t i = 0; i + 1 < p.y_order.size(); ++i)
        if (!g.neighbors(p.y_order[i + 1]).is_subset_of(g.neighbors(p.y_order[i])))
            return false;
    if (p.x_classes.size() != p.y_classes.size()) return false;
    // classes partition the sides and agree with Y_i = N(X_i) \ union of earlier
    VertexSet seen_x(n), covered_y(n);
    for (std::size_t i = 0; i < p.x_classes.size(); ++i) {
        if (p.x_classes[i].empty() || p.y_classes[i].empty()) return false;
        const VertexSet& nx = g.neighbors(p.x_classes[i][0]);
        for (int x : p.x_classes[i]) {
            if (!p.x_side.contains(x) || seen_x.contains(x)) return false;
            seen_x.insert(x);
            if (g.neighbors(x) != nx) return false;
        }
        VertexSet yi = nx - covered_y;
        if (yi != VertexSet::from_vertices(n, p.y_classes[i])) return false;
        covered_y |= yi;
    }
    if (seen_x != p.x_side || covered_y != p.y_side) return false;
    VertexSet pend = g.pendant_vertices();
    if (p.x_pendants != (pend & p.x_side) || p.y_pendants != (pend & p.y_side))
        return false;
    VertexSet allowed = VertexSet::from_vertices(n, p.x_classes.front()) |
                        VertexSet::from_vertices(n, p.y_classes.back());
    return (pend - allowed).empty();
}

// Valid partition iff G is a connected chain graph with n >= 2. The X side is
// the one containing vertex 0; vertices with equal neighborhoods are ordered
// by id.
inline std::optional<ChainPartition> recognize_chain(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (!is_connected(g)) throw disconnected_error("chain recognition requires a connected graph");
    if (n < 2) return std::nullopt; // no bipartition with two nonempty sides
    VertexSet a, b;
    if (!bipartition(g, a, b)) return std::nullopt;
    ChainPartition p;
    p.x_side = a; // the side of vertex 0
    p.y_side = b;
    p.x_order = p.x_side.to_vector();
    p.y_order = p.y_side.to_vector();
    std::sort(p.x_order.begin(), p.x_order.end(), [&](int u, int v) {
        auto du = g.degree(u), dv = g.degree(v);
        return du != dv ? du < dv : u < v;
    });
    std::sort(p.y_order.begin(), p.y_order.end(), [&](int u, int v) {
        auto du = g.degree(u), dv = g.degree(v);
        return du != dv ? du > dv : u < v;
    });
    for (std::size_t i = 0; i + 1 < p.x_order.size(); ++i)
        if (!g.neighbors(p.x_order[i]).is_subset_of(g.neighbors(p.x_order[i + 1])))
            return std::nullopt;
    for (std::size_t i = 0; i + 1 < p.y_order.size(); ++i)
        if (!g.neighbors(p.y_order[i + 1]).is_subset_of(g.neighbors(p.y_order[i])))
            return std::nullopt;
    // equivalence classes of equal neighborhoods, by increasing neighborhood
    for (int x : p.x_order) {
        if (p.x_classes.empty() ||
            g.neighbors(p.x_classes.back()[0]) != g.neighbors(x))
            p.x_classes.emplace_back();
        p.x_classes.back().push_back(x);
    }
    VertexSet covered(n);
    for (const auto& xc : p.x_classes) {
        VertexSet yi = g.neighbors(xc[0]) - covered;
        if (yi.empty()) return std::nullopt;
        covered |= yi;
        p.y_classes.push_back(yi.to_vector());
    }
    if (covered != p.y_side) return std::nullopt;
    if (p.x_classes.size() != p.y_classes.size()) return std::nullopt;
    VertexSet pend = g.pendant_vertices();
    p.x_pendants = pend & p.x_side;
    p.y_pendants = pend & p.y_side;
    if (!verify_chain_partition(g, p)) return std::nullopt;
    return p;
}

// --- chordal / chordal bipartite ---------------------------------------------

// Maximum-cardinality search plus the zero-fill-in check of the resulting
// candidate perfect elimination ordering.
inline bool is_chordal(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n <= 2) return true;
    std::vector<int> weight(n, 0), pos(n, -1);
    std::vector<int> picked;
    picked.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        int best = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (pos[v] == -1 && (best == -1 || weight[v] > weight[best]))
                best = static_cast<int>(v);
        pos[best] = static_cast<int>(step);
        picked.push_back(best);
        for (int u : g.neighbors(best))
            if (pos[u] == -1) ++weight[u];
    }
    // elimination order = reverse of MCS pick order; check each vertex's later
    // neighbors hang off the earliest of them
    std::vector<int> elim_index(n);
    for (std::size_t i = 0; i < n; ++i) elim_index[picked[i]] = static_cast<int>(n - 1 - i);
    for (std::size_t v = 0; v < n; ++v) {
        int vi = static_cast<int>(v);
        int follower = -1;
        VertexSet later(n);
        for (int u : g.neighbors(vi)) {
            if (elim_index[u] <= elim_index[vi]) continue;
            later.insert(u);
            if (follower == -1 || elim_index[u] < elim_index[follower]) follower = u;
        }
        if (follower == -1) continue;
        later.erase(follower);
        if (!later.is_subset_of(g.neighbors(follower))) return false;
    }
    return true;
}

namespace detail {

constexpr std::size_t kChordalBipartiteCap = 16;

// DFS over induced paths rooted at the minimum cycle vertex; closing an
// induced path of >= min_len vertices back to the root is an induced cycle.
inline bool has_long_induced_cycle(const Graph& g, std::size_t min_len) {
    std::size_t n = g.vertex_count();
    std::vector<int> path;
    VertexSet on_path(n);
    bool found = false;

    auto extend = [&](auto&& self, int tail) -> void {
        if (found) return;
        int root = path.front();
        for (int w : g.neighbors(tail)) {
            if (w <= root || on_path.contains(w)) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(w, path[i])) { chord = true; break; }
            if (chord) continue;
            if (path.size() >= 2 && g.adjacent(w, root)) {
                if (path.size() + 1 >= min_len) { found = true; return; }
                continue; // closes a short cycle; w cannot extend an induced path
            }
            path.push_back(w);
            on_path.insert(w);
            self(self, w);
            on_path.erase(w);
            path.pop_back();
            if (found) return;
        }
    };

    for (std::size_t s = 0; s < n && !found; ++s) {
        path.assign(1, static_cast<int>(s));
        on_path = VertexSet(n);
        on_path.insert(static_cast<int>(s));
        extend(extend, static_cast<int>(s));
    }
    return found;
}

} // namespace detail

// Bipartite with no induced cycle of length >= 6. Exhaustive cycle search,
// capped at n <= 16.
inline bool is_chordal_bipartite(const Graph& g) {
    if (g.vertex_count() > detail::kChordalBipartiteCap)
        throw size_limit_error("chordal-bipartite check capped at n <= 16");
    VertexSet a, b;
    if (!bipartition(g, a, b)) return false;
    return !detail::has_long_induced_cycle(g, 6);
}

// The three-part characterization of chordal bisplit graphs: the biclique is
// a star K_{1,l} with l > 0, every X vertex of degree >= 2 is adjacent to its
// center, and Z together with X induces a forest.
inline bool check_chordal_bisplit(const Graph& g, const BisplitPartition& p) {
    if (!verify_bisplit_partition(g, p))
        throw precondition_error("check_chordal_bisplit: invalid bisplit partition");
    if (p.y.size() != 1 || p.z.empty()) return false;
    int y1 = p.y.first();
    for (int x : p.x)
        if (g.degree(x) >= 2 && !g.adjacent(x, y1)) return false;
    return is_forest_on(g, p.z | p.x);
}

namespace detail {

inline bool chordal_bisplit_dfs(const Graph& g, int y1, const std::vector<int>& cand,
                                std::size_t i, VertexSet& z, VertexSet& x,
                                BisplitPartition& out) {
    std::size_t n = g.vertex_count();
    if (i == cand.size()) {
        if (z.empty()) return false;
        BisplitPartition p{x, VertexSet(n), z};
        p.y.insert(y1);
        if (!verify_bisplit_partition(g, p) || !check_chordal_bisplit(g, p)) return false;
        out = p;
        return true;
    }
    int v = cand[i];
    if (!g.neighbors(v).intersects(z)) {
        z.insert(v);
        if (chordal_bisplit_dfs(g, y1, cand, i + 1, z, x, out)) return true;
        z.erase(v);
    }
    if (!g.neighbors(v).intersects(x)) {
        x.insert(v);
        if (chordal_bisplit_dfs(g, y1, cand, i + 1, z, x, out)) return true;
        x.erase(v);
    }
    return false;
}

} // namespace detail

// Searches for a bisplit partition satisfying check_chordal_bisplit, trying
// every vertex as the star center. Same cap as bisplit recognition.
inline std::optional<BisplitPartition> recognize_chordal_bisplit(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n > detail::kBisplitRecognitionCap)
        throw size_limit_error("chordal-bisplit recognition capped at n <= 20");
    for (std::size_t y1 = 0; y1 < n; ++y1) {
        int y = static_cast<int>(y1);
        // Z must lie inside N(y1); everything else is forced into X
        VertexSet forced_x = g.all_vertices() - g.closed_neighborhood(y);
        if (!is_independent_on(g, forced_x)) continue;
        VertexSet z(n), x = forced_x;
        std::vector<int> cand = g.neighbors(y).to_vector();
        BisplitPartition out{VertexSet(n), VertexSet(n), VertexSet(n)};
        if (detail::chordal_bisplit_dfs(g, y, cand, 0, z, x, out)) return out;
    }
    return std::nullopt;
}

// --- convexity witnesses -----------------------------------------------------

enum class SplitSide { clique, independent };
enum class WitnessShape { star, comb };

// Auxiliary tree over one side of a split partition. A star is a root plus
// the rest of the side as leaves; a comb is a spine path plus pendant teeth,
// possibly several per spine vertex.
struct ConvexityWitness {
    SplitSide side = SplitSide::clique;
    WitnessShape shape = WitnessShape::star;
    int root = -1;                           // star only
    std::vector<int> spine;                  // comb only
    std::vector<std::pair<int, int>> teeth;  // comb only: (tooth, spine vertex)
};

namespace detail {

// Tree edges of the witness over side_vertices; throws on malformed input.
inline std::vector<std::pair<int, int>> witness_tree_edges(const ConvexityWitness& w,
                                                           const VertexSet& side_vertices) {
    std::vector<std::pair<int, int>> edges;
    if (w.shape == WitnessShape::star) {
        if (w.root < 0 || !side_vertices.contains(w.root))
            throw input_error("star witness: root not on the declared side");
        for (int v : side_vertices)
            if (v != w.root) edges.emplace_back(w.root, v);
        return edges;
    }
    VertexSet seen(side_vertices.universe());
    for (int v : w.spine) {
        if (!side_vertices.contains(v) || seen.contains(v))
            throw input_error("comb witness: bad spine vertex");
        seen.insert(v);
    }
    for (auto [tooth, at] : w.teeth) {
        if (!side_vertices.contains(tooth) || seen.contains(tooth))
            throw input_error("comb witness: bad tooth");
        if (std::find(w.spine.begin(), w.spine.end(), at) == w.spine.end())
            throw input_error("comb witness: tooth attached outside the spine");
        seen.insert(tooth);
        edges.emplace_back(tooth, at);
    }
    if (seen != side_vertices)
        throw input_error("comb witness: does not span the declared side");
    for (std::size_t i = 0; i + 1 < w.spine.size(); ++i)
        edges.emplace_back(w.spine[i], w.spine[i + 1]);
    return edges;
}

} // namespace detail

// True iff every opposite-side vertex's neighborhood on the witness side
// induces a connected subgraph of the witness tree.
inline bool check_pi_convexity(const Graph& g, const SplitPartition& p,
                               const ConvexityWitness& w) {
    if (!verify_split_partition(g, p))
        throw input_error("check_pi_convexity: invalid split partition");
    std::size_t n = g.vertex_count();
    const VertexSet& side = (w.side == SplitSide::clique) ? p.clique : p.independent;
    const VertexSet& opposite = (w.side == SplitSide::clique) ? p.independent : p.clique;
    auto edges = detail::witness_tree_edges(w, side);
    std::vector<VertexSet> tree_adj(n, VertexSet(n));
    for (auto [u, v] : edges) {
        tree_adj[u].insert(v);
        tree_adj[v].insert(u);
    }
    for (int u : opposite) {
        VertexSet s = g.neighbors(u) & side;
        if (s.size() <= 1) continue;
        VertexSet reached(n);
        std::vector<int> stack{s.first()};
        reached.insert(s.first());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int t : (tree_adj[v] & s))
                if (!reached.contains(t)) {
                    reached.insert(t);
                    stack.push_back(t);
                }
        }
        if (reached != s) return false;
    }
    return true;
}

// A star rooted at r works iff r lies in every opposite-side neighborhood of
// size >= 2 (star subtrees are exactly singleton leaf sets and root-containing
// sets). Returns the smallest viable root.
inline std::optional<ConvexityWitness> find_star_witness(const Graph& g,
                                                         const SplitPartition& p,
                                                         SplitSide side) {
    if (!verify_split_partition(g, p))
        throw input_error("find_star_witness: invalid split partition");
    const VertexSet& side_set = (side == SplitSide::clique) ? p.clique : p.independent;
    const VertexSet& opposite = (side == SplitSide::clique) ? p.independent : p.clique;
    VertexSet candidates = side_set;
    for (int u : opposite) {
        VertexSet s = g.neighbors(u) & side_set;
        if (s.size() >= 2) candidates &= s;
    }
    if (candidates.empty()) return std::nullopt;
    ConvexityWitness w;
    w.side = side;
    w.shape = WitnessShape::star;
    w.root = candidates.first();
    return w;
}

} // namespace secdom
