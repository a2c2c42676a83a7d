// Command-line front end: instance generation, gadget reduction, exact
// solving, constructive bounds, witness verification, and batch checking.
//
// Exit codes (stable contract for scripting):
//   0 success / all checks pass
//   1 input or usage error
//   2 node budget exhausted
//   3 algorithm diagnostic (stall, method precondition not met)
//   4 verification failure

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iso/iso.hpp"

using nlohmann::json;
using namespace iso;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case errc::budget_exceeded:
            return 2;
        case errc::algorithm_stalled:
        case errc::not_bipartite:
        case errc::not_three_colorable:
        case errc::disconnected:
        case errc::too_small:
        case errc::bound_violated:
            return 3;
        default:
            return 1;
    }
}

json witness_json(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

std::string witness_text(const VertexSet& s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

/// One run report; the JSON object and the text form carry the same fields.
struct Report {
    json j = json::object();
    bool json_mode = false;
    std::vector<std::pair<std::string, std::string>> lines;

    void field(const std::string& key, const json& value, const std::string& text) {
        j[key] = value;
        lines.emplace_back(key, text);
    }

    void instance(const Graph& g, const std::string& source) {
        j["instance"] = {{"n", g.order()}, {"m", g.edge_count()}, {"source", source}};
        lines.emplace_back("instance", source + " n=" + std::to_string(g.order()) + " m=" +
                                           std::to_string(g.edge_count()));
    }

    void emit(std::ostream& os, double ms) const {
        json out = j;
        out["time_ms"] = ms;
        if (json_mode) {
            os << out.dump(2) << "\n";
            return;
        }
        for (const auto& [key, text] : lines) os << key << ": " << text << "\n";
        os << "time_ms: " << ms << "\n";
    }
};

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::string family;
    int n = 0;
    int r = 0;
    int m = 0;
    double p = 0.5;
    std::string sizes;
    std::uint64_t seed = 0;
    bool allow_disconnected = false;
    std::string output;
};

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

int run_gen(const GenArgs& args) {
    Graph g;
    KnownValues known;
    if (args.family == "mr") {
        std::tie(g, known) = gen_M(args.r);
    } else if (args.family == "jewel") {
        std::tie(g, known) = gen_jewel(args.m);
    } else {
        GenParams params;
        params.n = args.n;
        params.p = args.p;
        params.part_sizes = parse_sizes(args.sizes);
        params.connected = !args.allow_disconnected;
        g = gen_random(family_from_name(args.family), params, args.seed);
    }
    std::ostringstream body;
    body << "# family " << args.family;
    if (args.family != "mr" && args.family != "jewel") body << " seed " << args.seed;
    body << "\n";
    if (known.iota_independent) body << "# iota_independent " << *known.iota_independent << "\n";
    if (known.iota) body << "# iota " << *known.iota << "\n";
    if (known.witness) body << "# witness " << witness_text(*known.witness) << "\n";
    body << serialize_edge_list(g);
    if (args.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.output);
        if (!out) throw Error(errc::parse_error, "cannot write " + args.output);
        out << body.str();
        std::cerr << "wrote " << args.output << " (n=" << g.order() << " m=" << g.edge_count()
                  << ")\n";
    }
    return 0;
}

// ------------------------------------------------------------- reduce ----

int run_reduce(const std::string& gadget, const std::string& input, const std::string& output,
               std::string map_path, int vertex) {
    Graph g = load_edge_list(input);
    Graph out_graph;
    std::ostringstream map_text;
    if (gadget == "J") {
        auto [jg, map] = build_J(g);
        out_graph = jg;
        map_text << "# image of " << input << " under the pair-and-trio gadget\n";
        map_text << "# base vertices keep their ids\n";
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            map_text << "e " << edges[i].first << " " << edges[i].second << " "
                     << map.pair_ids[i].first << " " << map.pair_ids[i].second << "\n";
        for (int w = 0; w < g.order(); ++w)
            map_text << "v " << w << " " << map.trio_ids[w][0] << " " << map.trio_ids[w][1] << " "
                     << map.trio_ids[w][2] << "\n";
    } else if (gadget == "p2corona") {
        auto [cg, known] = gen_p2_corona(g);
        out_graph = cg;
    } else if (gadget == "O") {
        out_graph = operation_O(g, vertex);
    } else {
        throw Error(errc::bad_parameter, "unknown gadget '" + gadget + "'");
    }

    std::string serialized = serialize_edge_list(out_graph);
    if (output.empty()) {
        std::cout << serialized;
    } else {
        std::ofstream out(output);
        if (!out) throw Error(errc::parse_error, "cannot write " + output);
        out << serialized;
    }
    if (gadget == "J") {
        if (map_path.empty()) map_path = (output.empty() ? input : output) + ".map";
        std::ofstream mapf(map_path);
        if (!mapf) throw Error(errc::parse_error, "cannot write " + map_path);
        mapf << map_text.str();
        std::cerr << "wrote map " << map_path << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- exact ----

int run_exact(const std::string& input, const std::string& mode, int k, bool partition,
              std::uint64_t budget, bool json_mode) {
    auto start = Clock::now();
    Graph g = load_edge_list(input);
    Report report;
    report.json_mode = json_mode;
    report.field("command", "exact", "exact");
    report.field("mode", mode, mode);
    report.instance(g, input);

    ExactOptions opt;
    opt.node_budget = budget;
    try {
        if (mode == "disjoint") {
            auto sets = disjoint_independent_isolating_sets(g, k, partition, opt);
            if (sets) {
                bool ok = true;
                json jsets = json::array();
                std::string text;
                for (const auto& s : *sets) {
                    ok = ok && is_independent_isolating(g, s);
                    jsets.push_back(witness_json(s));
                    text += "\n  " + witness_text(s);
                }
                report.field("result", "present", "present");
                report.field("sets", jsets, text);
                report.field("verified", ok, ok ? "pass" : "fail");
                report.emit(std::cout, elapsed_ms(start));
                return ok ? 0 : 4;
            }
            report.field("result", "absent (proven)", "absent (proven)");
            report.emit(std::cout, elapsed_ms(start));
            return 0;
        }

        ExactResult result;
        bool independent_claim = false;
        if (mode == "ii") {
            result = iota_independent(g, opt);
            independent_claim = true;
        } else if (mode == "i") {
            result = iota(g, opt);
        } else if (mode == "gt") {
            result = total_domination_number(g, opt);
        } else {
            throw Error(errc::bad_parameter, "unknown mode '" + mode + "'");
        }

        bool ok;
        if (mode == "gt") {
            VertexSet covered(g.order());
            for (int v = result.witness.next(0); v >= 0; v = result.witness.next(v + 1))
                covered |= g.neighbor_set(v);
            ok = covered == VertexSet::full(g.order());
        } else {
            ok = is_isolating(g, result.witness) &&
                 (!independent_claim || is_independent(g, result.witness));
        }
        report.field("value", result.value, std::to_string(result.value));
        report.field("witness", witness_json(result.witness), witness_text(result.witness));
        report.field("verified", ok, ok ? "pass" : "fail");
        report.field("budget",
                     json{{"limit", budget}, {"used", result.nodes_explored}, {"hit", false}},
                     std::to_string(result.nodes_explored) + "/" + std::to_string(budget));
        report.emit(std::cout, elapsed_ms(start));
        return ok ? 0 : 4;
    } catch (const BudgetError& e) {
        report.field("result", "budget exceeded", "budget exceeded");
        report.field("budget", json{{"limit", budget}, {"used", e.nodes}, {"hit", true}},
                     std::to_string(e.nodes) + "/" + std::to_string(budget) + " (hit)");
        report.field("proven_lower_bound", e.lower_bound_proven,
                     std::to_string(e.lower_bound_proven));
        if (e.upper_bound)
            report.field("upper_bound", *e.upper_bound, std::to_string(*e.upper_bound));
        report.emit(std::cout, elapsed_ms(start));
        return 2;
    }
}

// -------------------------------------------------------------- bound ----

int run_bound(const std::string& input, std::string method, const std::string& trace_path,
              bool json_mode) {
    auto start = Clock::now();
    Graph g = load_edge_list(input);
    Report report;
    report.json_mode = json_mode;
    report.field("command", "bound", "bound");
    report.instance(g, input);

    if (method == "auto") {
        if (g.order() >= 3 && is_connected(g) && bipartition(g))
            method = "bipartite";
        else if (g.order() >= 3 && is_connected(g) && find_k_coloring(g, 3))
            method = "sweep";
        else
            method = "grundy";
    }
    report.field("method", method, method);

    try {
        Certificate cert;
        std::optional<SweepResult> swept;
        if (method == "bipartite") {
            cert = bipartite_bound(g);
        } else if (method == "sweep") {
            auto c3 = find_k_coloring(g, 3);
            if (!c3) throw Error(errc::not_three_colorable, "chromatic number exceeds 3");
            c3->k = 3;
            swept = eliminate_bad_edges(g, *c3, true);
            cert.sets.assign(swept->sets.begin(), swept->sets.end());
            cert.witness = swept->sets[0];
            for (const auto& s : swept->sets)
                if (s.count() < cert.witness.count()) cert.witness = s;
            cert.bound = Rational(g.order() + 1, 3);
            cert.method = "rotation-sweep";
            cert.verified = is_independent_isolating(g, cert.witness) &&
                            cert.bound.admits(cert.witness.count());
        } else if (method == "grundy") {
            KColorBoundResult result = k_colorable_bound(g);
            cert = result.certificate;
            bool claims = verify_claim_bounds(g, result.stats);
            report.field("k", result.k, std::to_string(result.k));
            report.field("claims_verified", claims, claims ? "pass" : "fail");
        } else {
            throw Error(errc::bad_parameter, "unknown method '" + method + "'");
        }

        if (!trace_path.empty() && swept) {
            std::ofstream out(trace_path);
            if (!out) throw Error(errc::parse_error, "cannot write " + trace_path);
            out << format_trace(swept->steps);
        }

        bool ok = is_independent_isolating(g, cert.witness);
        report.field("size", cert.witness.count(), std::to_string(cert.witness.count()));
        report.field("witness", witness_json(cert.witness), witness_text(cert.witness));
        report.field("bound", cert.bound.str(), cert.bound.str());
        report.field("algorithm", cert.method, cert.method);
        report.field("verified", ok && cert.verified, ok && cert.verified ? "pass" : "fail");
        report.emit(std::cout, elapsed_ms(start));
        return ok && cert.verified ? 0 : 4;
    } catch (const StallError& e) {
        std::string where = trace_path.empty() ? "(use --trace to save it)" : trace_path;
        if (!trace_path.empty()) {
            std::ofstream out(trace_path);
            out << e.trace;
        }
        report.field("error", e.what(), e.what());
        report.field("trace", where, where);
        report.emit(std::cout, elapsed_ms(start));
        return 3;
    }
}

// ---------------------------------------------------------- partition ----

int run_partition(const std::string& input, bool json_mode) {
    auto start = Clock::now();
    Graph g = load_edge_list(input);
    Report report;
    report.json_mode = json_mode;
    report.field("command", "partition", "partition");
    report.instance(g, input);
    auto parts = bipartite_partition3(g);
    bool ok = true;
    json jsets = json::array();
    std::string text;
    for (const auto& p : parts) {
        ok = ok && is_independent_isolating(g, p);
        jsets.push_back(witness_json(p));
        text += "\n  " + witness_text(p);
    }
    report.field("sets", jsets, text);
    report.field("verified", ok, ok ? "pass" : "fail");
    report.emit(std::cout, elapsed_ms(start));
    return ok ? 0 : 4;
}

// ------------------------------------------------------------- verify ----

int run_verify(const std::string& input, const std::string& set_path,
               const std::string& partition_path, const std::string& claim, int k,
               bool json_mode) {
    auto start = Clock::now();
    Graph g = load_edge_list(input);
    Report report;
    report.json_mode = json_mode;
    report.field("command", "verify", "verify");
    report.instance(g, input);
    report.field("claim", claim, claim);

    bool pass = true;
    if (claim == "partition") {
        if (partition_path.empty())
            throw Error(errc::bad_parameter, "claim 'partition' needs --partition-file");
        std::ifstream in(partition_path);
        if (!in) throw Error(errc::parse_error, "cannot open " + partition_path);
        auto sets = parse_partition(in, g.order(), partition_path);
        if (k > 0 && static_cast<int>(sets.size()) != k) pass = false;
        VertexSet all(g.order());
        json detail = json::array();
        for (const auto& s : sets) {
            bool indep = is_independent(g, s);
            bool isol = is_isolating(g, s);
            bool disjoint = !all.intersects(s);
            all |= s;
            detail.push_back({{"independent", indep}, {"isolating", isol}, {"disjoint", disjoint}});
            pass = pass && indep && isol && disjoint;
        }
        pass = pass && all == VertexSet::full(g.order());
        report.field("sets", detail, std::to_string(sets.size()) + " sets");
    } else {
        if (set_path.empty()) throw Error(errc::bad_parameter, "need --set");
        std::ifstream in(set_path);
        if (!in) throw Error(errc::parse_error, "cannot open " + set_path);
        VertexSet s = parse_vertex_set(in, g.order(), set_path);
        report.field("set", witness_json(s), witness_text(s));
        bool indep = is_independent(g, s);
        bool isol = is_isolating(g, s);
        if (claim == "independent")
            pass = indep;
        else if (claim == "isolating")
            pass = isol;
        else if (claim == "both")
            pass = indep && isol;
        else
            throw Error(errc::bad_parameter, "unknown claim '" + claim + "'");
        report.field("independent", indep, indep ? "yes" : "no");
        report.field("isolating", isol, isol ? "yes" : "no");
    }
    report.field("verdict", pass ? "pass" : "fail", pass ? "pass" : "fail");
    report.emit(std::cout, elapsed_ms(start));
    return pass ? 0 : 4;
}

// -------------------------------------------------------------- bench ----

struct BenchArgs {
    std::string family;
    int count = 10;
    std::uint64_t seed = 0;
    int n_min = 3;
    int n_max = 20;
    double p = 0.3;
    int k = 4;
    std::string checks;
    bool json_mode = false;
};

struct CheckOutcome {
    int pass = 0;
    int fail = 0;
    int stall = 0;
};

int run_bench(const BenchArgs& args) {
    auto start = Clock::now();
    std::vector<std::string> checks;
    {
        std::stringstream ss(args.checks);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) checks.push_back(tok);
        }
    }
    if (checks.empty()) throw Error(errc::bad_parameter, "no checks given");
    GraphFamily family = family_from_name(args.family);

    std::map<std::string, CheckOutcome> outcomes;
    json instances = json::array();

    for (int i = 0; i < args.count; ++i) {
        SplitMix64 rng(SplitMix64::derive(args.seed, static_cast<std::uint64_t>(i)));
        GenParams params;
        params.p = args.p;
        int span = std::max(1, args.n_max - args.n_min + 1);
        int n = args.n_min + rng.below_int(span);
        params.n = n;
        if (family == GraphFamily::bipartite) {
            int a = 1 + rng.below_int(std::max(1, n - 1));
            params.part_sizes = {a, std::max(1, n - a)};
        } else if (family == GraphFamily::kpartite) {
            params.part_sizes.assign(args.k, 1);
            for (int rest = n - args.k; rest > 0; --rest)
                params.part_sizes[rng.below_int(args.k)]++;
        }
        Graph g = gen_random(family, params, rng.next());

        std::ostringstream line;
        line << "i=" << i << " n=" << g.order() << " m=" << g.edge_count();
        json inst = {{"i", i}, {"n", g.order()}, {"m", g.edge_count()}};

        for (const auto& check : checks) {
            std::string verdict = "pass";
            try {
                bool ok = true;
                if (check == "lemma1") {
                    auto [x, y] = two_disjoint(g);
                    ok = !x.intersects(y) && is_independent_dominating(g, x) &&
                         is_independent_isolating(g, y);
                } else if (check == "thm2") {
                    ok = 2 * iota_independent(g).value <= total_domination_number(g).value;
                } else if (check == "thm3" || check == "thm4") {
                    auto parts = bipartite_partition3(g);
                    VertexSet all(g.order());
                    int smallest = g.order();
                    for (const auto& part : parts) {
                        ok = ok && is_independent_isolating(g, part) && !all.intersects(part);
                        all |= part;
                        smallest = std::min(smallest, part.count());
                    }
                    ok = ok && all == VertexSet::full(g.order());
                    if (check == "thm4") ok = ok && 3 * smallest <= g.order();
                } else if (check == "thm5") {
                    auto c3 = find_k_coloring(g, 3);
                    if (!c3) throw Error(errc::not_three_colorable, "needs a 3-colorable graph");
                    c3->k = 3;
                    SweepResult result = eliminate_bad_edges(g, *c3, true);
                    int smallest = g.order();
                    for (const auto& s : result.sets) {
                        ok = ok && is_independent_isolating(g, s);
                        smallest = std::min(smallest, s.count());
                    }
                    ok = ok && 3 * smallest <= g.order() + 1;
                } else if (check == "thm9") {
                    KColorBoundResult r = k_colorable_bound(g);
                    ok = r.certificate.verified && verify_claim_bounds(g, r.stats);
                } else if (check == "lemma10") {
                    int x = rng.below_int(g.order());
                    ok = iota_independent(operation_O(g, x)).value ==
                         iota_independent(g).value + 1;
                } else if (check == "lemma11") {
                    ok = disjoint_independent_isolating_sets(g, 4, true).has_value();
                } else {
                    throw Error(errc::bad_parameter, "unknown check '" + check + "'");
                }
                verdict = ok ? "pass" : "fail";
            } catch (const StallError&) {
                verdict = "stall";
            } catch (const Error& e) {
                if (e.code() == errc::bad_parameter) throw;
                verdict = "error";
            }
            if (verdict == "pass")
                ++outcomes[check].pass;
            else if (verdict == "stall")
                ++outcomes[check].stall;
            else
                ++outcomes[check].fail;
            line << " " << check << "=" << verdict;
            inst[check] = verdict;
        }
        if (args.json_mode)
            instances.push_back(inst);
        else
            std::cout << line.str() << "\n";
    }

    bool any_fail = false, any_stall = false;
    json summary = json::object();
    for (const auto& [check, o] : outcomes) {
        summary[check] = {{"pass", o.pass}, {"fail", o.fail}, {"stall", o.stall}};
        if (!args.json_mode)
            std::cout << "summary " << check << ": pass=" << o.pass << " fail=" << o.fail
                      << " stall=" << o.stall << "\n";
        any_fail = any_fail || o.fail > 0;
        any_stall = any_stall || o.stall > 0;
    }
    if (args.json_mode) {
        json out = {{"command", "bench"},    {"family", args.family}, {"count", args.count},
                    {"seed", args.seed},     {"instances", instances}, {"summary", summary},
                    {"time_ms", elapsed_ms(start)}};
        std::cout << out.dump(2) << "\n";
    }
    if (any_stall) return 3;
    return any_fail ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isolating-set toolkit: generators, exact solvers, bounds, verification"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", gen_args.family,
                    "tree|bipartite|kpartite|gnp|triangulated_polygon|mr|jewel")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--r", gen_args.r, "clique parameter for mr");
    gen->add_option("--m", gen_args.m, "chain parameter for jewel");
    gen->add_option("--p", gen_args.p, "edge probability");
    gen->add_option("--sizes", gen_args.sizes, "comma-separated part sizes");
    gen->add_option("--seed", gen_args.seed, "64-bit seed");
    gen->add_flag("--allow-disconnected", gen_args.allow_disconnected,
                  "skip the connectivity resampling");
    gen->add_option("-o,--output", gen_args.output, "output file (default stdout)");

    std::string reduce_gadget = "J", reduce_in, reduce_out, reduce_map;
    int reduce_vertex = 0;
    auto* reduce = app.add_subcommand("reduce", "apply a gadget construction");
    reduce->add_option("--gadget", reduce_gadget, "J|p2corona|O");
    reduce->add_option("-i,--input", reduce_in, "edge-list input")->required();
    reduce->add_option("-o,--output", reduce_out, "output file (default stdout)");
    reduce->add_option("--map", reduce_map, "sidecar map file for gadget J");
    reduce->add_option("--vertex", reduce_vertex, "target vertex for gadget O");

    std::string exact_in, exact_mode = "ii";
    int exact_k = 3;
    bool exact_partition = false, exact_json = false;
    std::uint64_t exact_budget = 100'000'000;
    auto* exact = app.add_subcommand("exact", "exact values with canonical witnesses");
    exact->add_option("-i,--input", exact_in, "edge-list input")->required();
    exact->add_option("--mode", exact_mode, "ii|i|gt|disjoint");
    exact->add_option("--k", exact_k, "number of disjoint sets");
    exact->add_flag("--partition", exact_partition, "require the sets to cover V");
    exact->add_option("--budget", exact_budget, "search node budget");
    exact->add_flag("--json", exact_json, "emit a JSON report");

    std::string bound_in, bound_method = "auto", bound_trace;
    bool bound_json = false;
    auto* bound = app.add_subcommand("bound", "constructive upper bounds");
    bound->add_option("-i,--input", bound_in, "edge-list input")->required();
    bound->add_option("--method", bound_method, "bipartite|sweep|grundy|auto");
    bound->add_option("--trace", bound_trace, "write the sweep trace to this file");
    bound->add_flag("--json", bound_json, "emit a JSON report");

    std::string part_in;
    bool part_json = false;
    auto* partition = app.add_subcommand("partition", "three-way bipartite partition");
    partition->add_option("-i,--input", part_in, "edge-list input")->required();
    partition->add_flag("--json", part_json, "emit a JSON report");

    std::string verify_in, verify_set, verify_partition, verify_claim = "both";
    int verify_k = 0;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "check a claimed set or partition");
    verify->add_option("-i,--input", verify_in, "edge-list input")->required();
    verify->add_option("--set", verify_set, "set file, one id per line");
    verify->add_option("--partition-file", verify_partition, "partition file, one set per line");
    verify->add_option("--claim", verify_claim, "independent|isolating|both|partition");
    verify->add_option("--k", verify_k, "expected number of parts");
    verify->add_flag("--json", verify_json, "emit a JSON report");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "batch invariant checks on seeded instances");
    bench->add_option("--family", bench_args.family, "instance family")->required();
    bench->add_option("--count", bench_args.count, "instances to run");
    bench->add_option("--seed", bench_args.seed, "master seed");
    bench->add_option("--n-min", bench_args.n_min, "minimum order");
    bench->add_option("--n-max", bench_args.n_max, "maximum order");
    bench->add_option("--p", bench_args.p, "edge probability");
    bench->add_option("--k", bench_args.k, "parts for kpartite");
    bench->add_option("--checks", bench_args.checks, "comma-separated check names")->required();
    bench->add_flag("--json", bench_args.json_mode, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(gen)) return run_gen(gen_args);
        if (app.got_subcommand(reduce))
            return run_reduce(reduce_gadget, reduce_in, reduce_out, reduce_map, reduce_vertex);
        if (app.got_subcommand(exact))
            return run_exact(exact_in, exact_mode, exact_k, exact_partition, exact_budget,
                             exact_json);
        if (app.got_subcommand(bound))
            return run_bound(bound_in, bound_method, bound_trace, bound_json);
        if (app.got_subcommand(partition)) return run_partition(part_in, part_json);
        if (app.got_subcommand(verify))
            return run_verify(verify_in, verify_set, verify_partition, verify_claim, verify_k,
                              verify_json);
        if (app.got_subcommand(bench)) return run_bench(bench_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
