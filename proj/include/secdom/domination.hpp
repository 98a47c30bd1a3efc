#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom {

// Every vertex outside D has a neighbor in D.
inline bool is_dominating(const Graph& g, const VertexSet& d) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int vi = static_cast<int>(v);
        if (!d.contains(vi) && !g.neighbors(vi).intersects(d)) return false;
    }
    return true;
}

// External private neighbors of v with respect to D:
// vertices outside D whose only D-neighbor is v.
inline VertexSet epn(const Graph& g, int v, const VertexSet& d) {
    if (!d.contains(v)) throw precondition_error("epn: vertex not in D");
    VertexSet out(g.vertex_count());
    for (int u : g.neighbors(v)) {
        if (d.contains(u)) continue;
        VertexSet dn = g.neighbors(u) & d;
        if (dn.size() == 1) out.insert(u); // that one neighbor is necessarily v
    }
    return out;
}

// Members of S adjacent to u whose swap with u leaves a dominating set.
inline VertexSet defenders(const Graph& g, int u, const VertexSet& s) {
    if (s.contains(u)) throw precondition_error("defenders: vertex already in S");
    VertexSet out(g.vertex_count());
    for (int v : (g.neighbors(u) & s)) {
        VertexSet swapped = s;
        swapped.erase(v);
        swapped.insert(u);
        if (is_dominating(g, swapped)) out.insert(v);
    }
    return out;
}

// One defender per vertex outside S, each witnessing that the swap keeps
// domination. Reduction proofs reason about specific defenders, so the
// verifier returns the full assignment rather than a bare boolean.
struct DefenseCertificate {
    std::vector<int> defender; // defender[u] = chosen v in S, or -1 for u in S
};

namespace detail {

// Vertices whose only closed-neighborhood hit in S is v, per v in S.
// crit[v] ⊆ N[u] is exactly the condition for the u<->v swap to preserve
// domination, which gives the verifier its cubic bound.
inline std::vector<VertexSet> critical_sets(const Graph& g, const VertexSet& s) {
    std::size_t n = g.vertex_count();
    std::vector<VertexSet> crit(n, VertexSet(n));
    for (std::size_t w = 0; w < n; ++w) {
        int wi = static_cast<int>(w);
        VertexSet hit = g.neighbors(wi) & s;
        if (s.contains(wi)) hit.insert(wi);
        if (hit.size() == 1) crit[hit.first()].insert(wi);
    }
    return crit;
}

} // namespace detail

// Present with a full certificate iff S dominates G and every outside vertex
// has a defender. Ties go to the lowest defender id. O(n^3) worst case.
inline std::optional<DefenseCertificate> is_secure_dominating(const Graph& g,
                                                              const VertexSet& s) {
    std::size_t n = g.vertex_count();
    if (!is_dominating(g, s)) return std::nullopt;
    auto crit = detail::critical_sets(g, s);
    DefenseCertificate cert;
    cert.defender.assign(n, -1);
    for (std::size_t u = 0; u < n; ++u) {
        int ui = static_cast<int>(u);
        if (s.contains(ui)) continue;
        VertexSet closed = g.closed_neighborhood(ui);
        int chosen = -1;
        for (int v : (g.neighbors(ui) & s)) {
            if (crit[v].is_subset_of(closed)) { chosen = v; break; }
        }
        if (chosen == -1) return std::nullopt;
        cert.defender[u] = chosen;
    }
    return cert;
}

namespace detail {

constexpr std::size_t kOracleCap = 24;

// Mask-based re-implementations of the two verifiers for the subset
// enumeration below; n <= 24 so one word suffices.
struct MaskGraph {
    std::size_t n;
    std::uint32_t full;
    std::vector<std::uint32_t> closed; // N[v]
    std::vector<std::uint32_t> open;   // N(v)

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), full(0) {
        if (n > kOracleCap)
            throw size_limit_error("brute-force oracle capped at n <= 24, got n=" +
                                   std::to_string(n));
        closed.assign(n, 0);
        open.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            for (int w : g.neighbors(static_cast<int>(v)))
                open[v] |= std::uint32_t{1} << w;
            closed[v] = open[v] | (std::uint32_t{1} << v);
            full |= std::uint32_t{1} << v;
        }
    }

    bool dominating(std::uint32_t s) const {
        for (std::size_t v = 0; v < n; ++v)
            if (!(closed[v] & s)) return false;
        return true;
    }

    bool secure_dominating(std::uint32_t s) const {
        std::uint32_t crit[kOracleCap];
        for (std::size_t v = 0; v < n; ++v) crit[v] = 0;
        for (std::size_t w = 0; w < n; ++w) {
            std::uint32_t hit = closed[w] & s;
            if (!hit) return false; // not even dominating
            if ((hit & (hit - 1)) == 0)
                crit[std::countr_zero(hit)] |= std::uint32_t{1} << w;
        }
        std::uint32_t outside = full & ~s;
        while (outside) {
            int u = std::countr_zero(outside);
            outside &= outside - 1;
            std::uint32_t candidates = open[u] & s;
            bool defended = false;
            while (candidates) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if ((crit[v] & ~closed[u]) == 0) { defended = true; break; }
            }
            if (!defended) return false;
        }
        return true;
    }
};

template <typename Accept>
inline VertexSet enumerate_min(const Graph& g, const MaskGraph& mg, Accept accept) {
    std::size_t n = mg.n;
    if (n == 0) return VertexSet(0);
    // nondecreasing cardinality, lexicographic within each: the first hit is
    // the lexicographically least minimum witness
    std::vector<int> idx;
    for (std::size_t k = 0; k <= n; ++k) {
        idx.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= std::uint32_t{1} << i;
            if (accept(mask)) {
                VertexSet out(n);
                for (int i : idx) out.insert(i);
                return out;
            }
            // next k-combination in lexicographic order
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(n - k + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return g.all_vertices(); // unreachable: V always satisfies both verifiers
}

} // namespace detail

// Minimum dominating set, exact. Deterministic: lexicographically least
// witness of minimum cardinality. Hard cap n <= 24.
inline VertexSet min_dominating_brute(const Graph& g) {
    detail::MaskGraph mg(g);
    return detail::enumerate_min(g, mg, [&](std::uint32_t s) { return mg.dominating(s); });
}

// Minimum secure dominating set, exact; same determinism contract and cap.
inline VertexSet min_secure_dominating_brute(const Graph& g) {
    detail::MaskGraph mg(g);
    return detail::enumerate_min(g, mg, [&](std::uint32_t s) { return mg.secure_dominating(s); });
}

// Verified secure dominating set with no optimality claim: greedy max-coverage
// domination, then absorb unsecured vertices until the verifier accepts.
// Terminates because V itself is always accepted.
inline VertexSet greedy_secure_dominating(const Graph& g) {
    std::size_t n = g.vertex_count();
    VertexSet s(n);
    VertexSet covered(n);
    while (covered.size() < n) {
        int best = -1;
        std::size_t best_gain = 0;
        for (std::size_t v = 0; v < n; ++v) {
            int vi = static_cast<int>(v);
            if (s.contains(vi)) continue;
            std::size_t gain = (g.closed_neighborhood(vi) - covered).size();
            if (gain > best_gain) { best_gain = gain; best = vi; }
        }
        if (best == -1) break;
        s.insert(best);
        covered |= g.closed_neighborhood(best);
    }
    while (!is_secure_dominating(g, s)) {
        int added = -1;
        for (std::size_t u = 0; u < n; ++u) {
            int ui = static_cast<int>(u);
            if (s.contains(ui)) continue;
            if (defenders(g, ui, s).empty()) { s.insert(ui); added = ui; break; }
        }
        if (added == -1) s = g.all_vertices(); // cannot happen; keeps the loop finite
    }
    return s;
}

} // namespace secdom
