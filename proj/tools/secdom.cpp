// secdom: secure-domination toolkit CLI.
//
// Subcommands: gen, recognize, verify, solve, reduce, crosscheck.
// Graphs travel as edge-list text files ("n m" header, one "u v" line per
// edge, '#' comments). Results are JSON on stdout unless --out is given.
// Exit codes: 0 ok, 1 usage/input error, 2 verification failure found,
// 3 claim violation found.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secdom/crosscheck.hpp"
#include "secdom/domination.hpp"
#include "secdom/generators.hpp"
#include "secdom/graph.hpp"
#include "secdom/recognition.hpp"
#include "secdom/reductions.hpp"
#include "secdom/solvers.hpp"

using nlohmann::json;
using namespace secdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitClaimViolation = 3;

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

// "K:0,1;I:2,3" style named vertex lists
std::map<std::string, std::vector<int>> parse_partition(const std::string& text) {
    std::map<std::string, std::vector<int>> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw input_error("partition format is NAME:v1,v2;NAME:v3,...");
        out[part.substr(0, colon)] = parse_int_list(part.substr(colon + 1));
    }
    return out;
}

json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

json partition_to_json(const SplitPartition& p) {
    return {{"K", p.clique.to_vector()}, {"I", p.independent.to_vector()}};
}

json partition_to_json(const BisplitPartition& p) {
    return {{"X", p.x.to_vector()}, {"Y", p.y.to_vector()}, {"Z", p.z.to_vector()}};
}

json partition_to_json(const ChainPartition& p) {
    json j;
    j["X"] = p.x_side.to_vector();
    j["Y"] = p.y_side.to_vector();
    j["x_order"] = p.x_order;
    j["y_order"] = p.y_order;
    j["x_classes"] = p.x_classes;
    j["y_classes"] = p.y_classes;
    j["x_pendants"] = p.x_pendants.to_vector();
    j["y_pendants"] = p.y_pendants.to_vector();
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot open " + out_path + " for writing");
    out << j.dump(2) << "\n";
}

SplitPartition split_partition_from_spec(const Graph& g, const std::string& text) {
    if (text.empty()) {
        auto p = recognize_split(g);
        if (!p) throw class_error("input graph is not a split graph");
        return *p;
    }
    auto named = parse_partition(text);
    SplitPartition p{VertexSet::from_vertices(g.vertex_count(), named["K"]),
                     VertexSet::from_vertices(g.vertex_count(), named["I"])};
    if (!verify_split_partition(g, p)) throw input_error("declared split partition is invalid");
    return p;
}

BisplitPartition bisplit_partition_from_spec(const Graph& g, const std::string& text) {
    if (text.empty()) {
        auto p = recognize_bisplit(g);
        if (!p) throw class_error("input graph is not a bisplit graph");
        return *p;
    }
    auto named = parse_partition(text);
    BisplitPartition p{VertexSet::from_vertices(g.vertex_count(), named["X"]),
                       VertexSet::from_vertices(g.vertex_count(), named["Y"]),
                       VertexSet::from_vertices(g.vertex_count(), named["Z"])};
    if (!verify_bisplit_partition(g, p))
        throw input_error("declared bisplit partition is invalid");
    return p;
}

int cmd_gen(const std::string& cls_name, const std::string& params_csv,
            std::uint64_t seed, const std::string& out_path,
            const std::string& sidecar_path) {
    auto cls = parse_graph_class(cls_name);
    if (!cls) throw input_error("unknown graph class: " + cls_name);
    InstanceSpec spec;
    spec.cls = *cls;
    for (int v : parse_int_list(params_csv)) spec.params.push_back(static_cast<std::size_t>(v));
    spec.seed = seed;
    auto inst = generate(spec);
    if (out_path.empty()) {
        write_edge_list(std::cout, inst.graph);
    } else {
        write_edge_list_file(out_path, inst.graph);
    }
    if (!sidecar_path.empty()) {
        json j{{"schema", 1},
               {"class", graph_class_name(spec.cls)},
               {"params", spec.params},
               {"seed", spec.seed},
               {"n", inst.graph.vertex_count()},
               {"m", inst.graph.edge_count()}};
        if (inst.split) j["partition"] = partition_to_json(*inst.split);
        if (inst.bisplit) j["partition"] = partition_to_json(*inst.bisplit);
        if (inst.chain) j["partition"] = partition_to_json(*inst.chain);
        if (inst.sides)
            j["sides"] = {{"X", inst.sides->first.to_vector()},
                          {"Y", inst.sides->second.to_vector()}};
        emit(j, sidecar_path);
    }
    return kExitOk;
}

int cmd_recognize(const std::string& file, const std::string& cls,
                  const std::string& out_path) {
    Graph g = read_edge_list_file(file);
    json j{{"class", cls}};
    if (cls == "split") {
        auto p = recognize_split(g);
        j["member"] = static_cast<bool>(p);
        if (p) j["partition"] = partition_to_json(*p);
    } else if (cls == "bisplit") {
        auto p = recognize_bisplit(g);
        j["member"] = static_cast<bool>(p);
        if (p) j["partition"] = partition_to_json(*p);
    } else if (cls == "chain") {
        auto p = recognize_chain(g);
        j["member"] = static_cast<bool>(p);
        if (p) j["partition"] = partition_to_json(*p);
    } else if (cls == "chordal") {
        j["member"] = is_chordal(g);
    } else if (cls == "chordal-bipartite") {
        j["member"] = is_chordal_bipartite(g);
    } else if (cls == "chordal-bisplit") {
        auto p = recognize_chordal_bisplit(g);
        j["member"] = static_cast<bool>(p);
        if (p) j["partition"] = partition_to_json(*p);
    } else {
        throw input_error("unknown class for recognize: " + cls);
    }
    emit(j, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& set_csv, bool secure,
               const std::string& out_path) {
    Graph g = read_edge_list_file(file);
    VertexSet s = VertexSet::from_vertices(g.vertex_count(), parse_int_list(set_csv));
    json j;
    bool dominating = is_dominating(g, s);
    j["dominating"] = dominating;
    bool ok = dominating;
    if (secure) {
        auto cert = is_secure_dominating(g, s);
        j["secure"] = static_cast<bool>(cert);
        ok = static_cast<bool>(cert);
        if (cert) {
            json cj = json::object();
            for (std::size_t u = 0; u < g.vertex_count(); ++u)
                if (cert->defender[u] >= 0)
                    cj[std::to_string(u)] = cert->defender[u];
            j["certificate"] = cj;
        }
    }
    emit(j, out_path);
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_solve(const std::string& file, bool exact, bool domination, bool chain,
              bool chordal_bisplit, bool certify, const std::string& partition,
              const std::string& out_path) {
    Graph g = read_edge_list_file(file);
    json j;
    if (exact) {
        VertexSet s = domination ? min_dominating_brute(g) : min_secure_dominating_brute(g);
        j["size"] = s.size();
        j["set"] = set_to_json(s);
    } else if (chain) {
        auto p = recognize_chain(g);
        if (!p) throw class_error("input graph is not a connected chain graph");
        auto sol = solve_chain(g, *p, {.certify = certify});
        j["size"] = sol.set.size();
        j["set"] = set_to_json(sol.set);
        j["branch_taken"] = sol.branch;
        j["cases_detected"] = json::array();
        if (sol.certified) {
            j["certified"] = true;
            j["oracle_size"] = sol.oracle_size;
        }
    } else if (chordal_bisplit) {
        BisplitPartition p{VertexSet(0), VertexSet(0), VertexSet(0)};
        if (partition.empty()) {
            auto rec = recognize_chordal_bisplit(g);
            if (!rec) throw class_error("input graph is not chordal bisplit");
            p = *rec;
        } else {
            p = bisplit_partition_from_spec(g, partition);
        }
        auto sol = solve_chordal_bisplit(g, p, {.certify = certify});
        j["size"] = sol.set.size();
        j["set"] = set_to_json(sol.set);
        j["branch_taken"] = sol.branch;
        json cases = json::array();
        for (int c = 0; c < 5; ++c)
            if (sol.cases.present[c]) cases.push_back(c + 1);
        j["cases_detected"] = cases;
        if (sol.certified) {
            j["certified"] = true;
            j["oracle_size"] = sol.oracle_size;
        }
    } else {
        throw input_error("choose one of --exact, --chain, --chordal-bisplit");
    }
    emit(j, out_path);
    return kExitOk;
}

int cmd_reduce(const std::string& file, const std::string& kind,
               const std::string& partition, const std::string& out_path,
               std::string sidecar_path) {
    Graph g = read_edge_list_file(file);
    std::optional<Reduction> r;
    if (kind == "split-dd") {
        r = split_dd_to_sdd(g, split_partition_from_spec(g, partition));
    } else if (kind == "bisplit-dd") {
        r = bisplit_dd_to_sdd(g, bisplit_partition_from_spec(g, partition));
    } else if (kind == "split-sdd") {
        // the equality is partition-sensitive; default to the minimal clique side
        SplitPartition p = split_partition_from_spec(g, partition);
        if (partition.empty()) p = minimal_clique_partition(g, p);
        r = split_sdd_to_bisplit_sdd(g, p);
    } else if (kind == "cbip-sdd") {
        VertexSet a(g.vertex_count()), b(g.vertex_count());
        if (partition.empty()) {
            if (!bipartition(g, a, b)) throw class_error("input graph is not bipartite");
        } else {
            auto named = parse_partition(partition);
            a = VertexSet::from_vertices(g.vertex_count(), named["X"]);
            b = VertexSet::from_vertices(g.vertex_count(), named["Y"]);
        }
        r = cbip_sdd_to_cbip_bisplit_sdd(g, a, b);
    } else {
        throw input_error("unknown reduction kind: " + kind);
    }

    if (out_path.empty()) {
        write_edge_list(std::cout, r->target);
    } else {
        write_edge_list_file(out_path, r->target);
        if (sidecar_path.empty()) sidecar_path = out_path + ".json";
    }
    json j{{"schema", 1},
           {"kind", reduction_kind_name(r->kind)},
           {"param_map", {{"a", r->param_map.scale}, {"b", r->param_map.shift}}},
           {"source_n", r->source.vertex_count()},
           {"target_n", r->target.vertex_count()},
           {"target_m", r->target.edge_count()}};
    json prov = json::array();
    for (const auto& pv : r->provenance) {
        json p;
        switch (pv.role) {
            case Provenance::Role::original:
                p = {{"role", "original"}, {"source", pv.source_vertex}};
                break;
            case Provenance::Role::mirror:
                p = {{"role", "mirror"}, {"source", pv.source_vertex}};
                break;
            case Provenance::Role::gadget:
                p = {{"role", "gadget"}, {"name", pv.gadget}};
                break;
        }
        prov.push_back(std::move(p));
    }
    j["provenance"] = prov;
    if (r->target_split) j["partition"] = partition_to_json(*r->target_split);
    if (r->target_bisplit) j["partition"] = partition_to_json(*r->target_bisplit);
    if (r->kind == ReductionKind::split_dd_to_sdd) {
        json ws = json::array();
        for (const auto& w : split_dd_witnesses(*r))
            ws.push_back({{"side", w.side == SplitSide::clique ? "K" : "I"},
                          {"shape", "star"},
                          {"root", w.root}});
        j["witnesses"] = ws;
    }
    emit(j, sidecar_path);
    return kExitOk;
}

int cmd_crosscheck(const std::string& suite, std::size_t instances, std::uint64_t seed,
                   double time_budget_ms, const std::string& out_dir,
                   const std::string& format) {
    CrossCheckBudget budget;
    budget.instances = instances;
    budget.seed = seed;
    budget.time_budget_ms = time_budget_ms;
    std::vector<std::string> suites;
    if (suite == "all")
        suites = crosscheck_suites();
    else
        suites.push_back(suite);

    long long verifier_failures = 0, claim_issues = 0;
    for (const auto& name : suites) {
        CrossCheckReport rep = crosscheck(name, budget);
        verifier_failures += rep.verifier_failures;
        claim_issues += rep.claim_violations + rep.equality_misses;
        json j = to_json(rep);
        if (out_dir.empty()) {
            if (format == "csv")
                write_csv(std::cout, rep);
            else
                std::cout << j.dump(2) << "\n";
        } else {
            std::filesystem::create_directories(out_dir);
            if (format == "csv" || format == "both") {
                std::ofstream csv(out_dir + "/" + name + ".csv");
                write_csv(csv, rep);
            }
            if (format == "json" || format == "both") {
                std::ofstream jf(out_dir + "/" + name + ".json");
                jf << j.dump(2) << "\n";
            }
        }
        std::cerr << "suite " << name << ": rows=" << rep.rows.size()
                  << " hits=" << rep.equality_hits << " misses=" << rep.equality_misses
                  << " claim_violations=" << rep.claim_violations
                  << " verifier_failures=" << rep.verifier_failures
                  << (rep.complete ? "" : " [INCOMPLETE]") << "\n";
    }
    if (verifier_failures > 0) return kExitVerificationFailure;
    if (claim_issues > 0) return kExitClaimViolation;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure-domination toolkit"};
    app.require_subcommand(1);

    std::string out_path, format = "json";
    std::uint64_t seed = 1;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a class instance");
    std::string gen_class, gen_params, gen_sidecar;
    gen->add_option("--class", gen_class, "graph class")->required();
    gen->add_option("--params", gen_params, "comma-separated size parameters");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output edge-list path (stdout if absent)");
    gen->add_option("--sidecar", gen_sidecar, "write JSON sidecar with the partition");

    // recognize
    auto* rec = app.add_subcommand("recognize", "class membership with certificates");
    std::string rec_file, rec_class;
    rec->add_option("file", rec_file, "edge-list file")->required();
    rec->add_option("--class", rec_class,
                    "split|bisplit|chain|chordal|chordal-bipartite|chordal-bisplit")
        ->required();
    rec->add_option("--out", out_path, "output JSON path");

    // verify
    auto* ver = app.add_subcommand("verify", "check a vertex set");
    std::string ver_file, ver_set;
    bool ver_secure = false;
    ver->add_option("file", ver_file)->required();
    ver->add_option("--set", ver_set, "comma-separated vertex ids")->required();
    ver->add_flag("--secure", ver_secure, "also check secure domination");
    ver->add_option("--out", out_path, "output JSON path");

    // solve
    auto* sol = app.add_subcommand("solve", "compute a (secure) dominating set");
    std::string sol_file, sol_partition;
    bool sol_exact = false, sol_dom = false, sol_sec = false;
    bool sol_chain = false, sol_cb = false, sol_certify = false;
    sol->add_option("file", sol_file)->required();
    sol->add_flag("--exact", sol_exact, "exact oracle (n <= 24)");
    sol->add_flag("--domination", sol_dom, "with --exact: plain domination");
    sol->add_flag("--secure", sol_sec, "with --exact: secure domination (default)");
    sol->add_flag("--chain", sol_chain, "chain-graph algorithm");
    sol->add_flag("--chordal-bisplit", sol_cb, "chordal-bisplit algorithm");
    sol->add_flag("--certify", sol_certify, "cross-check against the oracle (n <= 24)");
    sol->add_option("--partition", sol_partition, "declared partition (X:..;Y:..;Z:..)");
    sol->add_option("--out", out_path, "output JSON path");

    // reduce
    auto* red = app.add_subcommand("reduce", "construct a reduction target");
    std::string red_file, red_kind, red_partition, red_sidecar;
    red->add_option("file", red_file)->required();
    red->add_option("--kind", red_kind, "split-dd|bisplit-dd|cbip-sdd|split-sdd")->required();
    red->add_option("--partition", red_partition, "declared source partition");
    red->add_option("--out", out_path, "target edge-list path (stdout if absent)");
    red->add_option("--sidecar", red_sidecar, "JSON sidecar path (default <out>.json)");

    // crosscheck
    auto* cc = app.add_subcommand("crosscheck", "run validation suites");
    std::string cc_suite = "all", cc_out;
    std::size_t cc_instances = 200;
    double cc_budget_ms = 30 * 60 * 1000.0;
    cc->add_option("--suite", cc_suite,
                   "kpq|split-equality|bisplit-equality|doubling|chain|"
                   "chordal-bisplit|approx|verifier-scaling|all");
    cc->add_option("--instances", cc_instances, "seeded instances per corpus");
    cc->add_option("--seed", seed, "corpus seed");
    cc->add_option("--time-budget-ms", cc_budget_ms, "wall budget per suite");
    cc->add_option("--out", cc_out, "report directory (stdout if absent)");
    cc->add_option("--format", format, "json|csv|both");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(gen_class, gen_params, seed, out_path, gen_sidecar);
        if (*rec) return cmd_recognize(rec_file, rec_class, out_path);
        if (*ver) return cmd_verify(ver_file, ver_set, ver_secure, out_path);
        if (*sol)
            return cmd_solve(sol_file, sol_exact, sol_dom, sol_chain, sol_cb, sol_certify,
                             sol_partition, out_path);
        if (*red) return cmd_reduce(red_file, red_kind, red_partition, out_path, red_sidecar);
        if (*cc)
            return cmd_crosscheck(cc_suite, cc_instances, seed, cc_budget_ms, cc_out, format);
    } catch (const claim_violation_error& e) {
        std::cerr << "claim violation: " << e.what() << "\n";
        return kExitClaimViolation;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
