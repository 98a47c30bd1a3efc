#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "secdom/generators.hpp"
#include "secdom/reductions.hpp"
#include "secdom/solvers.hpp"

namespace secdom {

struct CrossCheckBudget {
    std::size_t instances = 200;  // seeded instances per sub-corpus
    std::uint64_t seed = 1;
    double time_budget_ms = 30 * 60 * 1000.0;
};

struct CrossCheckRow {
    std::string instance; // reproducible instance description
    std::size_t n = 0, m = 0;
    std::map<std::string, long long> values;
    std::map<std::string, std::string> verdicts;
    double wall_ms = 0; // informational; excluded from the determinism contract
};

struct CrossCheckReport {
    int schema = 1;
    std::string suite;
    CrossCheckBudget budget;
    std::vector<CrossCheckRow> rows;
    long long equality_hits = 0;
    long long equality_misses = 0;
    long long claim_violations = 0;
    long long verifier_failures = 0;
    long long solver_oracle_gaps = 0;
    bool complete = true;

    void tally(const CrossCheckRow& row) {
        rows.push_back(row);
        for (auto& [k, v] : row.verdicts) {
            if (v == "hit") ++equality_hits;
            if (v == "miss") ++equality_misses;
            if (v == "claim-violation") ++claim_violations;
            if (v == "verifier-failure") ++verifier_failures;
            if (v == "gap") ++solver_oracle_gaps;
        }
    }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(double budget_ms) : budget_ms_(budget_ms) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }
    bool exhausted() const { return elapsed_ms() > budget_ms_; }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
    double budget_ms_;
};

inline std::string spec_label(const InstanceSpec& spec) {
    std::ostringstream os;
    os << graph_class_name(spec.cls) << '[';
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        os << (i ? "," : "") << spec.params[i];
    os << ";seed=" << spec.seed << ']';
    return os.str();
}

// connected graphs on n vertices in edge-mask order, filtered by a predicate
template <typename Fn>
void for_each_small_graph(std::size_t max_n, const SuiteTimer& timer, Fn fn) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t gm = 0; gm < graphs; ++gm) {
            if (timer.exhausted()) return;
            Graph g(n);
            std::size_t bit = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v, ++bit)
                    if ((gm >> bit) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
            if (!is_connected(g)) continue;
            std::ostringstream label;
            label << "enum[n=" << n << ",mask=" << gm << ']';
            fn(std::move(g), label.str());
        }
    }
}

inline bool prop1_holds(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!is_complete_on(g, epn(g, v, s))) return false;
    return true;
}

// Equality row shared by the four reduction kinds: both sides computed by the
// exact oracles, Prop-1 checked on both optima.
inline CrossCheckRow equality_row(const std::string& label, const Graph& source,
                                  const Reduction& r, std::size_t scale,
                                  std::size_t shift, bool secure_source) {
    CrossCheckRow row;
    row.instance = label;
    row.n = source.vertex_count();
    row.m = source.edge_count();
    auto t0 = std::chrono::steady_clock::now();
    VertexSet src = secure_source ? min_secure_dominating_brute(source)
                                  : min_dominating_brute(source);
    VertexSet tgt = min_secure_dominating_brute(r.target);
    row.values["source_opt"] = static_cast<long long>(src.size());
    row.values["target_opt"] = static_cast<long long>(tgt.size());
    row.values["target_n"] = static_cast<long long>(r.target.vertex_count());
    row.values["target_m"] = static_cast<long long>(r.target.edge_count());
    row.verdicts["equality"] =
        (tgt.size() == scale * src.size() + shift) ? "hit" : "miss";
    row.verdicts["prop1"] = prop1_holds(r.target, tgt) ? "ok" : "verifier-failure";
    bool partition_ok = r.target_split ? verify_split_partition(r.target, *r.target_split)
                                       : verify_bisplit_partition(r.target, *r.target_bisplit);
    row.verdicts["target_partition"] = partition_ok ? "ok" : "verifier-failure";
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return row;
}

inline void add_lift_verdicts(CrossCheckRow& row, const Reduction& r,
                              const VertexSet& src_opt, const VertexSet& tgt_opt) {
    try {
        auto fwd = lift_solution(r, LiftDirection::forward, src_opt);
        row.verdicts["forward_lift"] = "ok";
        row.values["forward_size"] = static_cast<long long>(fwd.set.size());
    } catch (const claim_violation_error&) {
        row.verdicts["forward_lift"] = "claim-violation";
    }
    try {
        auto back = lift_solution(r, LiftDirection::backward, tgt_opt);
        row.verdicts["backward_lift"] = "ok";
        row.values["backward_size"] = static_cast<long long>(back.set.size());
    } catch (const claim_violation_error&) {
        row.verdicts["backward_lift"] = "claim-violation";
    }
}

} // namespace detail

// --- suites -------------------------------------------------------------------

// gamma_s(K_{p,q}) closed form against the oracle, 1 <= p <= q <= 5.
inline CrossCheckReport crosscheck_kpq(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "kpq";
    rep.budget = budget;
    for (std::size_t p = 1; p <= 5; ++p)
        for (std::size_t q = p; q <= 5; ++q) {
            Graph g = generate({GraphClass::complete_bipartite, {p, q}, 0}).graph;
            CrossCheckRow row;
            std::ostringstream os;
            os << "K[" << p << ',' << q << ']';
            row.instance = os.str();
            row.n = g.vertex_count();
            row.m = g.edge_count();
            std::size_t oracle = min_secure_dominating_brute(g).size();
            std::size_t closed = gamma_s_complete_bipartite(p, q);
            row.values["closed_form"] = static_cast<long long>(closed);
            row.values["oracle"] = static_cast<long long>(oracle);
            row.verdicts["equality"] = (closed == oracle) ? "hit" : "miss";
            rep.tally(row);
        }
    return rep;
}

// gamma_s(G*) = gamma(G) + 1 over exhaustive small connected split graphs plus
// a seeded corpus, with the convexity-witness structure checks alongside.
inline CrossCheckReport crosscheck_split_equality(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "split-equality";
    rep.budget = budget;
    detail::SuiteTimer timer(budget.time_budget_ms);

    auto run_one = [&](const Graph& g, const SplitPartition& p, const std::string& label) {
        Reduction r = split_dd_to_sdd(g, p);
        CrossCheckRow row = detail::equality_row(label, g, r, 1, 1, false);
        bool counts = r.target.vertex_count() == g.vertex_count() + 2 &&
                      r.target.edge_count() == g.edge_count() + g.vertex_count() + 1;
        row.verdicts["count_formulas"] = counts ? "hit" : "miss";
        auto star_k = find_star_witness(r.target, *r.target_split, SplitSide::clique);
        row.verdicts["star_on_clique"] =
            (star_k && check_pi_convexity(r.target, *r.target_split, *star_k))
                ? "ok"
                : "verifier-failure";
        if (auto star_i = find_star_witness(g, p, SplitSide::independent)) {
            // the source star survives with the pendant y as one more leaf
            row.verdicts["star_on_independent"] =
                check_pi_convexity(r.target, *r.target_split, *star_i)
                    ? "ok"
                    : "verifier-failure";
        }
        detail::add_lift_verdicts(row, r, min_dominating_brute(g),
                                  min_secure_dominating_brute(r.target));
        rep.tally(row);
    };

    detail::for_each_small_graph(6, timer, [&](Graph g, const std::string& label) {
        if (auto p = recognize_split(g)) run_one(g, *p, label);
    });
    for (std::size_t i = 0; i < budget.instances && !timer.exhausted(); ++i) {
        InstanceSpec spec{GraphClass::split,
                          {1 + i % 4, 1 + (i / 4) % 4, 30 + (i * 7) % 60},
                          budget.seed + i};
        auto inst = generate(spec);
        if (inst.graph.vertex_count() > 8) continue;
        run_one(inst.graph, *inst.split, detail::spec_label(spec));
    }
    rep.complete = !timer.exhausted();
    return rep;
}

// gamma_s(G*) = gamma(G) + 2 on seeded bisplit instances with |V(G*)| <= 14.
inline CrossCheckReport crosscheck_bisplit_equality(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "bisplit-equality";
    rep.budget = budget;
    detail::SuiteTimer timer(budget.time_budget_ms);
    for (std::size_t i = 0; i < budget.instances && !timer.exhausted(); ++i) {
        InstanceSpec spec{GraphClass::bisplit,
                          {i % 5, 1 + i % 3, 1 + (i / 3) % 3, 25 + (i * 11) % 50},
                          budget.seed + i};
        auto inst = generate(spec);
        if (inst.graph.vertex_count() + 4 > 14) continue;
        Reduction r = bisplit_dd_to_sdd(inst.graph, *inst.bisplit);
        CrossCheckRow row =
            detail::equality_row(detail::spec_label(spec), inst.graph, r, 1, 2, false);
        bool counts =
            r.target.vertex_count() == inst.graph.vertex_count() + 4 &&
            r.target.edge_count() == inst.graph.edge_count() + inst.graph.vertex_count() + 3;
        row.verdicts["count_formulas"] = counts ? "hit" : "miss";
        detail::add_lift_verdicts(row, r, min_dominating_brute(inst.graph),
                                  min_secure_dominating_brute(r.target));
        rep.tally(row);
    }
    rep.complete = !timer.exhausted();
    return rep;
}

// The two doubling constructions. Split sources use the inclusion-minimal
// clique side (the equality is partition-sensitive); chordal bipartite sources
// are checked under both orientations and the row records each.
inline CrossCheckReport crosscheck_doubling(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "doubling";
    rep.budget = budget;
    detail::SuiteTimer timer(budget.time_budget_ms);

    detail::for_each_small_graph(5, timer, [&](Graph g, const std::string& label) {
        auto p = recognize_split(g);
        if (!p) return;
        SplitPartition mp = minimal_clique_partition(g, *p);
        Reduction r = split_sdd_to_bisplit_sdd(g, mp);
        CrossCheckRow row = detail::equality_row("split-" + label, g, r, 2, 2, true);
        std::size_t cs = mp.clique.size();
        std::size_t cross = g.edge_count() - cs * (cs - 1) / 2;
        row.verdicts["count_formulas"] =
            (r.target.vertex_count() == 2 * g.vertex_count() + 4 &&
             r.target.edge_count() == 2 * cross + (cs + 1) * (cs + 1) + 2)
                ? "hit"
                : "miss";
        detail::add_lift_verdicts(row, r, min_secure_dominating_brute(g),
                                  min_secure_dominating_brute(r.target));
        rep.tally(row);
    });

    detail::for_each_small_graph(6, timer, [&](Graph g, const std::string& label) {
        VertexSet a, b;
        if (!bipartition(g, a, b) || b.empty()) return;
        if (!is_chordal_bipartite(g)) return;
        Reduction r = cbip_sdd_to_cbip_bisplit_sdd(g, a, b);
        CrossCheckRow row = detail::equality_row("cbip-" + label, g, r, 2, 2, true);
        std::size_t p = a.size();
        row.verdicts["count_formulas"] =
            (r.target.vertex_count() == 2 * g.vertex_count() + 4 &&
             r.target.edge_count() == 2 * g.edge_count() + (p + 1) * (p + 1) + 2)
                ? "hit"
                : "miss";
        row.verdicts["target_chordal_bipartite"] =
            (r.target.vertex_count() <= 16 && is_chordal_bipartite(r.target))
                ? "ok"
                : (r.target.vertex_count() > 16 ? "skipped" : "verifier-failure");
        Reduction r2 = cbip_sdd_to_cbip_bisplit_sdd(g, b, a);
        std::size_t src = min_secure_dominating_brute(g).size();
        std::size_t t2 = min_secure_dominating_brute(r2.target).size();
        row.values["target_opt_flipped"] = static_cast<long long>(t2);
        row.verdicts["equality_flipped"] = (t2 == 2 * src + 2) ? "hit" : "miss";
        detail::add_lift_verdicts(row, r, min_secure_dominating_brute(g),
                                  min_secure_dominating_brute(r.target));
        rep.tally(row);
    });
    rep.complete = !timer.exhausted();
    return rep;
}

// Solver soundness plus the optimality audit against the oracle.
inline CrossCheckReport crosscheck_solvers(const std::string& which,
                                           const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = which; // "chain" or "chordal-bisplit"
    rep.budget = budget;
    detail::SuiteTimer timer(budget.time_budget_ms);
    for (std::size_t i = 0; i < budget.instances && !timer.exhausted(); ++i) {
        CrossCheckRow row;
        SolveOutcome sol;
        Graph g;
        if (which == "chain") {
            InstanceSpec spec{GraphClass::chain, {1 + i % 5, 1 + (i / 5) % 5},
                              budget.seed + i};
            auto inst = generate(spec);
            if (inst.graph.vertex_count() > 10) continue;
            g = inst.graph;
            row.instance = detail::spec_label(spec);
            sol = solve_chain(g, *inst.chain);
        } else {
            InstanceSpec spec{GraphClass::chordal_bisplit, {1 + i % 6, (i / 6) % 6},
                              budget.seed + i};
            auto inst = generate(spec);
            if (inst.graph.vertex_count() > 12) continue;
            g = inst.graph;
            row.instance = detail::spec_label(spec);
            sol = solve_chordal_bisplit(g, *inst.bisplit);
        }
        row.n = g.vertex_count();
        row.m = g.edge_count();
        std::size_t oracle_size = min_secure_dominating_brute(g).size();
        // certification replaces the answer by the oracle optimum when smaller
        std::size_t certified_size = std::min(sol.set.size(), oracle_size);
        row.values["raw_branch_size"] = static_cast<long long>(sol.raw_size);
        row.values["solver_size"] = static_cast<long long>(sol.set.size());
        row.values["oracle_size"] = static_cast<long long>(oracle_size);
        row.verdicts["branch"] = sol.branch;
        bool sound = static_cast<bool>(is_secure_dominating(g, sol.set));
        row.verdicts["sound"] = sound ? "ok" : "verifier-failure";
        row.verdicts["certified_optimal"] =
            (certified_size == oracle_size) ? "ok" : "verifier-failure";
        if (sol.raw_size != oracle_size) row.verdicts["raw_vs_oracle"] = "gap";
        if (sol.set.size() != oracle_size) row.verdicts["solver_vs_oracle"] = "gap";
        if (sound) row.verdicts["prop1"] =
            detail::prop1_holds(g, sol.set) ? "ok" : "verifier-failure";
        rep.tally(row);
    }
    rep.complete = !timer.exhausted();
    return rep;
}

// Algorithm wrapper sanity: exact plug-in stays optimal, greedy plug-in stays
// verified.
inline CrossCheckReport crosscheck_approx(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "approx";
    rep.budget = budget;
    detail::SuiteTimer timer(budget.time_budget_ms);
    Approximator oracle_approx = [](const Graph& g) {
        return min_secure_dominating_brute(g);
    };
    Approximator greedy_approx = [](const Graph& g) { return greedy_secure_dominating(g); };
    auto run_one = [&](const Graph& g, const SplitPartition& mp, const std::string& label) {
        CrossCheckRow row;
        row.instance = label;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        std::size_t opt = min_secure_dominating_brute(g).size();
        row.values["oracle"] = static_cast<long long>(opt);
        try {
            auto exact = approx_msd_split(g, mp, oracle_approx);
            row.values["exact_plugin"] = static_cast<long long>(exact.set.size());
            row.verdicts["exact_plugin_optimal"] =
                (exact.set.size() == opt) ? "hit" : "miss";
            row.verdicts["exact_branch"] = exact.branch;
        } catch (const claim_violation_error&) {
            row.verdicts["exact_plugin_optimal"] = "claim-violation";
        }
        try {
            auto greedy = approx_msd_split(g, mp, greedy_approx);
            row.values["greedy_plugin"] = static_cast<long long>(greedy.set.size());
            row.verdicts["greedy_plugin_verified"] =
                is_secure_dominating(g, greedy.set) ? "ok" : "verifier-failure";
        } catch (const claim_violation_error&) {
            row.verdicts["greedy_plugin_verified"] = "claim-violation";
        }
        rep.tally(row);
    };
    detail::for_each_small_graph(5, timer, [&](Graph g, const std::string& label) {
        auto p = recognize_split(g);
        if (!p) return;
        run_one(g, minimal_clique_partition(g, *p), label);
    });
    for (std::size_t i = 0; i < budget.instances && !timer.exhausted(); ++i) {
        InstanceSpec spec{GraphClass::split,
                          {1 + i % 4, 1 + (i / 4) % 4, 30 + (i * 7) % 60},
                          budget.seed + i};
        auto inst = generate(spec);
        if (inst.graph.vertex_count() > 8) continue;
        run_one(inst.graph, minimal_clique_partition(inst.graph, *inst.split),
                detail::spec_label(spec));
    }
    rep.complete = !timer.exhausted();
    return rep;
}

// Empirical scaling of the secure-domination verifier on dense random
// instances; the summary records the log-log slope.
inline CrossCheckReport crosscheck_verifier_scaling(const CrossCheckBudget& budget) {
    CrossCheckReport rep;
    rep.suite = "verifier-scaling";
    rep.budget = budget;
    std::vector<double> log_n, log_t;
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
        detail::Rng rng(budget.seed + n);
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.chance(50)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if (rng.chance(50)) s.insert(static_cast<int>(v));
        // repeat until the sample is long enough to time reliably
        std::size_t reps = 0;
        auto t0 = std::chrono::steady_clock::now();
        double elapsed = 0;
        do {
            volatile bool ok = static_cast<bool>(is_secure_dominating(g, s));
            (void)ok;
            ++reps;
            elapsed = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        } while (elapsed < 40.0);
        double per_call = elapsed / static_cast<double>(reps);
        CrossCheckRow row;
        row.instance = "dense[n=" + std::to_string(n) + "]";
        row.n = n;
        row.m = g.edge_count();
        row.values["reps"] = static_cast<long long>(reps);
        row.values["per_call_us"] = static_cast<long long>(per_call * 1000.0);
        row.wall_ms = elapsed;
        rep.tally(row);
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(per_call));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        mx += log_n[i];
        my += log_t[i];
    }
    mx /= log_n.size();
    my /= log_t.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        num += (log_n[i] - mx) * (log_t[i] - my);
        den += (log_n[i] - mx) * (log_n[i] - mx);
    }
    double slope = num / den;
    CrossCheckRow summary;
    summary.instance = "loglog-fit";
    summary.values["slope_milli"] = static_cast<long long>(slope * 1000.0);
    summary.verdicts["cubic_bound"] = (slope <= 3.3) ? "hit" : "miss";
    rep.tally(summary);
    return rep;
}

inline CrossCheckReport crosscheck(const std::string& suite, const CrossCheckBudget& budget) {
    if (suite == "kpq") return crosscheck_kpq(budget);
    if (suite == "split-equality") return crosscheck_split_equality(budget);
    if (suite == "bisplit-equality") return crosscheck_bisplit_equality(budget);
    if (suite == "doubling") return crosscheck_doubling(budget);
    if (suite == "chain" || suite == "chordal-bisplit")
        return crosscheck_solvers(suite, budget);
    if (suite == "approx") return crosscheck_approx(budget);
    if (suite == "verifier-scaling") return crosscheck_verifier_scaling(budget);
    throw input_error("unknown crosscheck suite: " + suite);
}

inline const std::vector<std::string>& crosscheck_suites() {
    static const std::vector<std::string> names{
        "kpq",  "split-equality", "bisplit-equality",
        "doubling", "chain",      "chordal-bisplit",
        "approx",   "verifier-scaling"};
    return names;
}

// --- serialization -------------------------------------------------------------

inline nlohmann::json to_json(const CrossCheckReport& rep) {
    nlohmann::json j;
    j["schema"] = rep.schema;
    j["suite"] = rep.suite;
    j["budget"] = {{"instances", rep.budget.instances},
                   {"seed", rep.budget.seed},
                   {"time_budget_ms", rep.budget.time_budget_ms}};
    j["summary"] = {{"equality_hits", rep.equality_hits},
                    {"equality_misses", rep.equality_misses},
                    {"claim_violations", rep.claim_violations},
                    {"verifier_failures", rep.verifier_failures},
                    {"solver_oracle_gaps", rep.solver_oracle_gaps},
                    {"complete", rep.complete}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json r{{"instance", row.instance}, {"n", row.n}, {"m", row.m}};
        r["values"] = row.values;
        r["verdicts"] = row.verdicts;
        r["wall_ms"] = row.wall_ms;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

// Long-format CSV, fixed header; see docs/report-format.md.
inline void write_csv(std::ostream& out, const CrossCheckReport& rep) {
    out << "suite,instance,n,m,key,value\n";
    auto cell = [](const std::string& s) {
        if (s.find(',') == std::string::npos) return s;
        return '"' + s + '"';
    };
    for (const auto& row : rep.rows) {
        for (const auto& [k, v] : row.values)
            out << rep.suite << ',' << cell(row.instance) << ',' << row.n << ',' << row.m
                << ',' << k << ',' << v << '\n';
        for (const auto& [k, v] : row.verdicts)
            out << rep.suite << ',' << cell(row.instance) << ',' << row.n << ',' << row.m
                << ',' << k << ',' << v << '\n';
    }
}

} // namespace secdom
