#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "iso/io.hpp"

// End-to-end checks of the built binary: exit codes are a stable contract
// (0 ok, 1 input, 2 budget, 3 diagnostic, 4 verification failure).

namespace {

const std::string cli = ISOGRAPH_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
};

int counter = 0;

std::string temp_path(const std::string& suffix) {
    return "/tmp/isograph_cli_test_" + std::to_string(counter++) + suffix;
}

RunResult run(const std::string& args) {
    std::string out_path = temp_path(".out");
    std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(status), buffer.str()};
}

std::string write_temp(const std::string& content, const std::string& suffix) {
    std::string path = temp_path(suffix);
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("exact subcommand values and exit codes") {
    std::string c5 = write_temp("p 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", ".gr");

    RunResult ii = run("exact -i " + c5 + " --mode ii");
    CHECK(ii.exit_code == 0);
    CHECK(ii.out.find("value: 2") != std::string::npos);
    CHECK(ii.out.find("witness: 0 2") != std::string::npos);
    CHECK(ii.out.find("verified: pass") != std::string::npos);

    std::string loop = write_temp("p 2 1\n0 0\n", ".gr");
    CHECK(run("exact -i " + loop + " --mode ii").exit_code == 1);

    std::string k2 = write_temp("p 2 1\n0 1\n", ".gr");
    RunResult absent = run("exact -i " + k2 + " --mode disjoint --k 3");
    CHECK(absent.exit_code == 0);
    CHECK(absent.out.find("absent (proven)") != std::string::npos);

    RunResult gt = run("exact -i " + k2 + " --mode gt");
    CHECK(gt.exit_code == 0);
    CHECK(gt.out.find("value: 2") != std::string::npos);

    std::remove(c5.c_str());
    std::remove(loop.c_str());
    std::remove(k2.c_str());
}

TEST_CASE("exact json report is a single structured object") {
    std::string c5 = write_temp("p 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", ".gr");
    RunResult r = run("exact -i " + c5 + " --mode ii --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == 2);
    CHECK(j["witness"] == nlohmann::json::array({0, 2}));
    CHECK(j["verified"] == true);
    CHECK(j["instance"]["n"] == 5);
    CHECK(j["budget"]["hit"] == false);
    std::remove(c5.c_str());
}

TEST_CASE("budget exhaustion exits 2") {
    std::string m3 = temp_path(".gr");
    RunResult gen = run("gen --family mr --r 3 -o " + m3);
    REQUIRE(gen.exit_code == 0);
    RunResult r = run("exact -i " + m3 + " --mode ii --budget 10");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("budget exceeded") != std::string::npos);
    std::remove(m3.c_str());
}

TEST_CASE("bound subcommand with methods and diagnostics") {
    std::string j6 = temp_path(".gr");
    std::string trace_path = temp_path(".trace");
    RunResult gen = run("gen --family jewel --m 6 -o " + j6);
    REQUIRE(gen.exit_code == 0);
    RunResult sweep = run("bound -i " + j6 + " --method sweep --trace " + trace_path);
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.out.find("size: 6") != std::string::npos);
    CHECK(sweep.out.find("bound: 6") != std::string::npos);
    std::ifstream trace(trace_path);
    CHECK(trace.good());

    std::string c5 = write_temp("p 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", ".gr");
    CHECK(run("bound -i " + c5 + " --method bipartite").exit_code == 3);

    std::string k4 = write_temp("p 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", ".gr");
    CHECK(run("bound -i " + k4 + " --method sweep").exit_code == 3);
    RunResult grundy = run("bound -i " + k4 + " --method grundy");
    CHECK(grundy.exit_code == 0);
    CHECK(grundy.out.find("size: 1") != std::string::npos);
    CHECK(grundy.out.find("bound: 12/7") != std::string::npos);

    RunResult autopick = run("bound -i " + k4 + " --method auto");
    CHECK(autopick.exit_code == 0);

    std::string tree = temp_path(".gr");
    REQUIRE(run("gen --family tree --n 30 --seed 4 -o " + tree).exit_code == 0);
    RunResult layers = run("bound -i " + tree + " --method bipartite --json");
    CHECK(layers.exit_code == 0);
    auto parsed = nlohmann::json::parse(layers.out);
    CHECK(parsed["size"].get<int>() <= 10);  // floor(30/3)
    CHECK(parsed["verified"] == true);
    std::remove(tree.c_str());

    std::remove(j6.c_str());
    std::remove(trace_path.c_str());
    std::remove(c5.c_str());
    std::remove(k4.c_str());
}

TEST_CASE("partition and verify subcommands") {
    std::string c6 = write_temp("p 6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n", ".gr");
    RunResult part = run("partition -i " + c6);
    CHECK(part.exit_code == 0);
    CHECK(part.out.find("0 3") != std::string::npos);

    std::string good = write_temp("0\n2\n", ".set");
    std::string c5 = write_temp("p 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", ".gr");
    CHECK(run("verify -i " + c5 + " --set " + good + " --claim both").exit_code == 0);

    std::string bad = write_temp("0\n1\n", ".set");
    CHECK(run("verify -i " + c5 + " --set " + bad + " --claim independent").exit_code == 4);

    std::string parts = write_temp("0 3\n1 4\n2 5\n", ".parts");
    CHECK(run("verify -i " + c6 + " --partition-file " + parts + " --claim partition --k 3")
              .exit_code == 0);

    std::string out_of_range = write_temp("99\n", ".set");
    CHECK(run("verify -i " + c5 + " --set " + out_of_range + " --claim both").exit_code == 1);

    for (const auto& p : {c6, good, c5, bad, parts, out_of_range}) std::remove(p.c_str());
}

TEST_CASE("gen and reduce round-trip through files") {
    std::string t1 = temp_path(".gr"), t2 = temp_path(".gr"), tj = temp_path(".gr");
    RunResult gen = run("gen --family tree --n 10 --seed 42 -o " + t1);
    REQUIRE(gen.exit_code == 0);
    iso::Graph g = iso::load_edge_list(t1);
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 9);

    RunResult again = run("gen --family tree --n 10 --seed 42 -o " + t2);
    REQUIRE(again.exit_code == 0);
    std::ifstream a(t1), b(t2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());

    RunResult reduce = run("reduce --gadget J -i " + t1 + " -o " + tj);
    REQUIRE(reduce.exit_code == 0);
    iso::Graph jg = iso::load_edge_list(tj);
    CHECK(jg.order() == 4 * 10 + 2 * 9);
    std::ifstream map(tj + ".map");
    CHECK(map.good());

    CHECK(run("gen --family mr --r 1").exit_code == 1);

    std::remove(t1.c_str());
    std::remove(t2.c_str());
    std::remove(tj.c_str());
    std::remove((tj + ".map").c_str());
}

TEST_CASE("bench runs checks and reports per-instance lines") {
    RunResult r = run("bench --family tree --count 4 --seed 9 --n-min 4 --n-max 10"
                      " --checks thm3,thm4,lemma1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("i=0") != std::string::npos);
    CHECK(r.out.find("summary thm3: pass=4") != std::string::npos);

    RunResult j = run("bench --family gnp --count 3 --seed 2 --n-min 5 --n-max 8 --p 0.4"
                      " --checks lemma10 --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["summary"]["lemma10"]["pass"] == 3);
}
