#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "secdom/graph.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

#ifndef SECDOM_CLI_PATH
#error "SECDOM_CLI_PATH must point at the built CLI"
#endif

const std::string cli = SECDOM_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "secdom_cli_out.txt";
    std::string cmd = cli + " " + args + " > " + tmp.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return {code, ss.str()};
}

fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "secdom_cli_tests";
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("gen then recognize round trip") {
    fs::path g = work_dir() / "k23.txt";
    auto gen = run("gen --class complete-bipartite --params 2,3 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    secdom::Graph graph = secdom::read_edge_list_file(g.string());
    CHECK(graph.vertex_count() == 5);
    CHECK(graph.edge_count() == 6);

    auto rec = run("recognize " + g.string() + " --class chain");
    REQUIRE(rec.exit_code == 0);
    json j = json::parse(rec.out);
    CHECK(j["member"] == true);
    CHECK(j["partition"]["X"].size() == 2);
}

TEST_CASE("gen is deterministic across invocations") {
    fs::path a = work_dir() / "a.txt", b = work_dir() / "b.txt";
    run("gen --class split --params 3,4,50 --seed 99 --out " + a.string());
    run("gen --class split --params 3,4,50 --seed 99 --out " + b.string());
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(sa.str().empty());
}

TEST_CASE("verify reports verdicts and exit codes") {
    fs::path g = work_dir() / "p4.txt";
    run("gen --class path --params 4 --out " + g.string());

    auto good = run("verify " + g.string() + " --set 1,2 --secure");
    CHECK(good.exit_code == 0);
    json jg = json::parse(good.out);
    CHECK(jg["dominating"] == true);
    CHECK(jg["secure"] == true);
    CHECK(jg["certificate"]["0"] == 1);

    auto bad = run("verify " + g.string() + " --set 1 --secure");
    CHECK(bad.exit_code == 2); // verification failure found
    json jb = json::parse(bad.out);
    CHECK(jb["dominating"] == false);
}

TEST_CASE("solve subcommands") {
    fs::path g = work_dir() / "star.txt";
    run("gen --class complete-bipartite --params 1,5 --out " + g.string());

    auto exact = run("solve " + g.string() + " --exact --secure");
    REQUIRE(exact.exit_code == 0);
    CHECK(json::parse(exact.out)["size"] == 5);

    auto dom = run("solve " + g.string() + " --exact --domination");
    CHECK(json::parse(dom.out)["size"] == 1);

    auto chain = run("solve " + g.string() + " --chain --certify");
    json jc = json::parse(chain.out);
    CHECK(jc["size"] == 5);
    CHECK(jc["branch_taken"] == "degenerate-complete-bipartite");

    fs::path cb = work_dir() / "cb.txt";
    run("gen --class chordal-bisplit --params 4,3 --seed 7 --out " + cb.string());
    auto cbs = run("solve " + cb.string() + " --chordal-bisplit --certify");
    REQUIRE(cbs.exit_code == 0);
    json jcb = json::parse(cbs.out);
    CHECK(jcb["certified"] == true);
    CHECK(jcb["size"] == jcb["oracle_size"]);
}

TEST_CASE("reduce writes a target and a sidecar") {
    fs::path g = work_dir() / "src.txt", t = work_dir() / "target.txt";
    run("gen --class path --params 3 --out " + g.string());
    auto red = run("reduce " + g.string() + " --kind split-dd --out " + t.string());
    REQUIRE(red.exit_code == 0);
    secdom::Graph target = secdom::read_edge_list_file(t.string());
    CHECK(target.vertex_count() == 5); // |V|+2
    CHECK(target.edge_count() == 2 + 3 + 1);

    std::ifstream sf(t.string() + ".json");
    REQUIRE(sf.good());
    json sidecar = json::parse(sf);
    CHECK(sidecar["kind"] == "split-dd");
    CHECK(sidecar["param_map"]["a"] == 1);
    CHECK(sidecar["param_map"]["b"] == 1);
    CHECK(sidecar["provenance"].size() == 5);
    CHECK(sidecar["provenance"][3]["role"] == "gadget");
}

TEST_CASE("crosscheck writes reports and reflects findings in exit codes") {
    fs::path dir = work_dir() / "reports";
    auto ok = run("crosscheck --suite kpq --out " + dir.string() + " --format both");
    CHECK(ok.exit_code == 0);
    std::ifstream jf(dir / "kpq.json");
    REQUIRE(jf.good());
    json rep = json::parse(jf);
    CHECK(rep["schema"] == 1);
    CHECK(rep["summary"]["equality_misses"] == 0);
    CHECK(rep["rows"].size() == 15);
    std::ifstream cf(dir / "kpq.csv");
    std::string header;
    std::getline(cf, header);
    CHECK(header == "suite,instance,n,m,key,value");
}

TEST_CASE("input errors exit with code 1") {
    auto missing = run("recognize /nonexistent.txt --class split");
    CHECK(missing.exit_code == 1);
    fs::path g = work_dir() / "c4.txt";
    run("gen --class cycle --params 4 --out " + g.string());
    auto bad_class = run("recognize " + g.string() + " --class widget");
    CHECK(bad_class.exit_code == 1);
}
