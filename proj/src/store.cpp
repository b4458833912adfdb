#include "turan3/store.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

namespace turan3 {

using nlohmann::json;

namespace {

json graph_to_json(int n, const std::vector<Triple>& edges) {
    json out;
    out["n"] = n;
    json es = json::array();
    for (const Triple& t : edges) es.push_back({t[0], t[1], t[2]});
    out["edges"] = std::move(es);
    return out;
}

Hypergraph graph_from_json(const json& j) {
    std::vector<Triple> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    return Hypergraph::make(j.at("n").get<int>(), std::move(edges));
}

}  // namespace

SearchProblem ProblemSummary::to_problem() const {
    SearchProblem p;
    p.n = n;
    for (const std::string& f : forbid) p.forbidden.push_back(build_pattern(f));
    for (const std::string& r : require_names) p.required.push_back(build_pattern(r));
    p.connected = connected;
    p.exclude_subgraph_of = exclude;
    p.max_n = 14;
    return p;
}

std::string result_to_json(const ProblemSummary& p, const SearchResult& r) {
    json out;
    json prob;
    prob["n"] = p.n;
    prob["forbid"] = p.forbid;
    prob["require"] = p.require_names;
    prob["connected"] = p.connected;
    prob["second_order"] = p.second_order;
    if (p.exclude) prob["exclude"] = graph_to_json(p.exclude->vertex_count(), p.exclude->edges());
    out["problem"] = std::move(prob);
    if (r.max_edges)
        out["max_edges"] = *r.max_edges;
    else
        out["max_edges"] = nullptr;
    json ext = json::array();
    for (const CanonicalForm& cf : r.extremal) ext.push_back(graph_to_json(cf.n, cf.edges));
    out["extremal"] = std::move(ext);
    out["nodes_explored"] = r.nodes_explored;
    out["elapsed_ms"] = r.elapsed.count();
    out["engine_version"] = kEngineVersion;
    return out.dump();
}

std::pair<ProblemSummary, SearchResult> result_from_json(const std::string& text) {
    json j = json::parse(text);
    ProblemSummary p;
    const json& prob = j.at("problem");
    p.n = prob.at("n").get<int>();
    p.forbid = prob.at("forbid").get<std::vector<std::string>>();
    p.require_names = prob.at("require").get<std::vector<std::string>>();
    p.connected = prob.at("connected").get<bool>();
    p.second_order = prob.at("second_order").get<bool>();
    if (prob.contains("exclude")) p.exclude = graph_from_json(prob.at("exclude"));

    SearchResult r;
    if (!j.at("max_edges").is_null()) r.max_edges = j.at("max_edges").get<int>();
    for (const auto& g : j.at("extremal")) {
        Hypergraph h = graph_from_json(g);
        r.extremal.push_back(CanonicalForm{h.vertex_count(), h.edges()});
    }
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
    return {std::move(p), std::move(r)};
}

ResultsStore::ResultsStore(std::filesystem::path path) : path_(std::move(path)) { load(); }

std::filesystem::path ResultsStore::default_path() {
    if (const char* env = std::getenv("TURAN_CACHE")) return env;
    return "turan_cache.jsonl";
}

void ResultsStore::load() {
    std::ifstream in(path_);
    if (!in) return;  // nothing cached yet
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            std::string fp = j.at("fingerprint").get<std::string>();
            auto [summary, result] = result_from_json(line);
            if (!certify(result, summary.to_problem())) {
                std::cerr << "turan3: cache " << path_.string() << " line " << lineno
                          << " fails certification, dropped\n";
                continue;
            }
            entries_.emplace(std::move(fp), std::make_pair(std::move(summary), std::move(result)));
        } catch (const std::exception& e) {
            std::cerr << "turan3: cache " << path_.string() << " line " << lineno
                      << " skipped: " << e.what() << "\n";
        }
    }
}

std::optional<SearchResult> ResultsStore::lookup(const std::string& fingerprint) {
    auto it = entries_.find(fingerprint);
    if (it == entries_.end()) return std::nullopt;
    return it->second.second;
}

void ResultsStore::record(const std::string& fingerprint, const SearchProblem& p,
                          const SearchResult& r) {
    if (entries_.count(fingerprint)) return;  // idempotent
    ProblemSummary summary;
    summary.n = p.n;
    for (const Pattern& f : p.forbidden) summary.forbid.push_back(f.name);
    for (const Pattern& q : p.required) summary.require_names.push_back(q.name);
    summary.connected = p.connected;
    summary.second_order = p.exclude_subgraph_of.has_value();
    summary.exclude = p.exclude_subgraph_of;

    json j = json::parse(result_to_json(summary, r));
    j["fingerprint"] = fingerprint;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open results store " + path_.string());
    out << j.dump() << '\n';
    if (!out) throw Error("write to results store " + path_.string() + " failed");
    entries_.emplace(fingerprint, std::make_pair(std::move(summary), r));
}

}  // namespace turan3
