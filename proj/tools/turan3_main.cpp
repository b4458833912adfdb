// Command-line front end for the turan3 shared library. All engine work goes
// through the C API in turan3.h; this file only parses arguments, shuttles
// JSON, and formats output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan3.h"

namespace {

using nlohmann::json;

struct CString {
    char* ptr = nullptr;
    ~CString() { t3_string_free(ptr); }
};

struct Graph {
    t3_graph* ptr = nullptr;
    ~Graph() { t3_graph_free(ptr); }
};

int die(t3_status st) {
    std::cerr << "turan3: " << t3_last_error() << "\n";
    return st == T3_ERR_INVALID_ARGUMENT || st == T3_ERR_PARSE || st == T3_ERR_LIMIT ? 2 : 1;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_search(const std::string& forbid, const std::string& require, bool connected,
               bool second_order, int n, int jobs, int max_n, const std::string& emit,
               const std::string& cache_path, bool no_cache) {
    json req;
    req["n"] = n;
    req["forbid"] = split_csv(forbid);
    req["require"] = split_csv(require);
    req["connected"] = connected;
    req["second_order"] = second_order;
    req["jobs"] = jobs;
    req["max_n"] = max_n;
    req["cache"] = !no_cache;
    if (!cache_path.empty()) req["cache_path"] = cache_path;

    CString result;
    if (t3_status st = t3_search_run(req.dump().c_str(), &result.ptr); st != T3_OK)
        return die(st);
    json res = json::parse(result.ptr);

    if (res.at("max_edges").is_null()) {
        std::cout << "infeasible: no graph on " << n << " vertices satisfies the constraints\n";
    } else {
        std::cout << "max_edges = " << res.at("max_edges").get<int>() << "\n";
        std::cout << "extremal classes: " << res.at("extremal").size() << "\n";
        for (const auto& g : res.at("extremal")) {
            std::cout << "  n=" << g.at("n").get<int>() << " edges=";
            std::cout << g.at("edges").dump() << "\n";
        }
    }
    std::cout << "nodes=" << res.at("nodes_explored").get<std::uint64_t>()
              << " elapsed_ms=" << res.at("elapsed_ms").get<long long>() << "\n";
    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out) {
            std::cerr << "turan3: cannot write " << emit << "\n";
            return 1;
        }
        out << res.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Turán-number search and verification for 3-uniform hypergraphs"};
    app.require_subcommand(1);

    std::string forbid, require, emit, cache_path;
    bool connected = false, second = false, no_cache = false;
    int n = 0, jobs = 1, max_n = 10, m = -1, s = -1;

    auto add_search_flags = [&](CLI::App* cmd, bool with_require, bool with_second) {
        cmd->add_option("--n", n, "vertex count")->required();
        cmd->add_option("--forbid", forbid, "comma-separated forbidden patterns")->required();
        if (with_require) cmd->add_option("--require", require, "required patterns (contain some)");
        if (with_require) cmd->add_flag("--connected", connected, "restrict to connected graphs");
        if (with_second) cmd->add_flag("--second-order", second, "exclude subgraphs of the unique extremal graph");
        cmd->add_option("--emit-extremal", emit, "write the result JSON here");
        cmd->add_option("--jobs", jobs, "worker threads");
        cmd->add_option("--max-n", max_n, "soft vertex-count limit");
        cmd->add_option("--cache", cache_path, "results store path (default TURAN_CACHE or ./turan_cache.jsonl)");
        cmd->add_flag("--no-cache", no_cache, "skip the results store");
    };

    CLI::App* turan = app.add_subcommand("turan", "compute an (optionally conditional) Turán number");
    add_search_flags(turan, true, true);

    CLI::App* cond = app.add_subcommand("conditional", "Turán number over graphs containing a required pattern");
    add_search_flags(cond, true, false);

    CLI::App* second_cmd = app.add_subcommand("second-order", "optimum among graphs not embeddable into the unique extremal graph");
    add_search_flags(second_cmd, false, false);

    std::string kind, out_path, file, facts = "all", theorem = "main";
    CLI::App* construct = app.add_subcommand("construct", "build a stock hypergraph and write it as .h3 text");
    construct->add_option("--kind", kind, "complete|full_star|cover|h_cp|h_pm|hilton_milner|connected_cp_extremal")->required();
    construct->add_option("--n", n, "vertex count")->required();
    construct->add_option("--m", m, "cover set size (cover only)");
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* check = app.add_subcommand("check", "test a .h3 file against forbidden patterns");
    check->add_option("--file", file, ".h3 input")->required();
    check->add_option("--forbid", forbid, "comma-separated patterns")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the configuration-fact verifiers");
    verify->add_option("--facts", facts, "all|cross|pusto|disjoint|exclusions|konig|lemmas|identities");
    verify->add_option("--s", s, "frame size override");

    CLI::App* report = app.add_subcommand("report", "tabulate cached search results");
    report->add_option("--theorem", theorem, "main|cycle|second|connected|hm|conjectures");
    report->add_option("--max-n", max_n, "largest vertex count in the table");
    report->add_option("--jobs", jobs, "worker threads");
    report->add_option("--cache", cache_path, "results store path");
    report->add_option("--json", emit, "also write the table as JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (turan->parsed() || cond->parsed() || second_cmd->parsed()) {
        if (cond->parsed() && require.empty()) {
            std::cerr << "turan3: conditional requires --require\n";
            return 2;
        }
        if (second_cmd->parsed()) second = true;
        return run_search(forbid, require, connected, second, n, jobs, max_n, emit, cache_path,
                          no_cache);
    }

    if (construct->parsed()) {
        Graph g;
        if (t3_status st = t3_construct(kind.c_str(), n, m, &g.ptr); st != T3_OK) return die(st);
        CString text;
        if (t3_status st = t3_graph_encode(g.ptr, &text.ptr); st != T3_OK) return die(st);
        if (out_path.empty()) {
            std::cout << text.ptr;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "turan3: cannot write " << out_path << "\n";
                return 1;
            }
            out << text.ptr;
        }
        return 0;
    }

    if (check->parsed()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "turan3: cannot read " << file << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        Graph g;
        if (t3_status st = t3_graph_decode(buf.str().c_str(), &g.ptr); st != T3_OK)
            return die(st);
        CString witness;
        if (t3_status st = t3_check_free(g.ptr, forbid.c_str(), &witness.ptr); st != T3_OK)
            return die(st);
        if (!witness.ptr) {
            std::cout << "FREE\n";
            return 0;
        }
        std::cout << "CONTAINS " << witness.ptr << "\n";
        return 1;
    }

    if (verify->parsed()) {
        CString rep;
        if (t3_status st = t3_verify_run(facts.c_str(), s, &rep.ptr); st != T3_OK) return die(st);
        json reports = json::parse(rep.ptr);
        bool all_ok = true;
        for (const auto& r : reports) {
            bool ok = r.at("failed").empty();
            all_ok = all_ok && ok;
            std::cout << (ok ? "PASS " : "FAIL ") << r.at("check").get<std::string>() << ": "
                      << r.at("passed").get<int>() << "/" << r.at("instances").get<int>()
                      << " instances\n";
        }
        std::cout << reports.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }

    if (report->parsed()) {
        CString table;
        if (t3_status st = t3_report_run(theorem.c_str(), max_n, cache_path.c_str(), jobs,
                                         &table.ptr);
            st != T3_OK)
            return die(st);
        json t = json::parse(table.ptr);
        std::cout << t.at("text").get<std::string>();
        if (!emit.empty()) {
            std::ofstream out(emit);
            if (!out) {
                std::cerr << "turan3: cannot write " << emit << "\n";
                return 1;
            }
            out << table.ptr << "\n";
        }
        return 0;
    }

    return 2;
}
