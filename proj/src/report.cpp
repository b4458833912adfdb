#include "turan3/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "turan3/constructions.hpp"

namespace turan3 {

using nlohmann::json;

std::string ReportTable::rendered() const {
    std::vector<size_t> width(columns.size());
    for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    out << title << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < width.size(); ++c) {
            std::string cell = c < cells.size() ? cells[c] : "";
            out << cell << std::string(width[c] - cell.size() + 2, ' ');
        }
        out << '\n';
    };
    line(columns);
    std::vector<std::string> rule;
    for (size_t c = 0; c < width.size(); ++c) rule.push_back(std::string(width[c], '-'));
    line(rule);
    for (const auto& row : rows) line(row);
    return out.str();
}

std::string ReportTable::to_json() const {
    json j;
    j["title"] = title;
    j["columns"] = columns;
    j["rows"] = rows;
    j["text"] = rendered();
    return j.dump(2);
}

std::string describe_graph(const CanonicalForm& cf) {
    int n = cf.n;
    auto matches = [&](const Hypergraph& h) {
        return h.vertex_count() == n && canonical_form(h) == cf;
    };
    auto padded = [&](const Hypergraph& h) {
        return Hypergraph::make(n, h.edges());  // same edges, isolated vertices added
    };
    if (matches(complete(n))) return "complete(" + std::to_string(n) + ")";
    if (n >= 1 && matches(full_star(n))) return "full_star(" + std::to_string(n) + ")";
    for (int k = 3; k < n; ++k)
        if (matches(padded(complete(k))))
            return "complete(" + std::to_string(k) + ") + " + std::to_string(n - k) +
                   " isolated";
    for (int k = 3; k + 6 <= n; ++k)
        if (matches(disjoint_union(complete(6), complete(k))))
            return "complete(6) + complete(" + std::to_string(k) + ")";
    if (n >= 6 && matches(hilton_milner(n))) return "hilton_milner(" + std::to_string(n) + ")";
    if (n >= 7) {
        if (matches(h_cp(n))) return "h_cp(" + std::to_string(n) + ")";
        if (matches(h_pm(n))) return "h_pm(" + std::to_string(n) + ")";
        if (matches(connected_cp_extremal(n)))
            return "connected_cp_extremal(" + std::to_string(n) + ")";
    }
    return std::to_string(cf.edges.size()) + " edges (no stock construction)";
}

namespace {

std::string fmt_result(const SearchResult& r) {
    if (!r.max_edges) return "infeasible";
    return std::to_string(*r.max_edges);
}

std::string extremal_names(const SearchResult& r) {
    std::string out;
    for (size_t i = 0; i < r.extremal.size(); ++i) {
        if (i) out += "; ";
        out += describe_graph(r.extremal[i]);
    }
    return out.empty() ? "-" : out;
}

std::vector<std::string> audit_cells(const SearchResult& r) {
    return {std::to_string(r.nodes_explored), std::to_string(r.elapsed.count())};
}

SearchOptions opts_for(ResultsStore& store, int jobs) {
    SearchOptions o;
    o.memo = &store;
    o.jobs = jobs;
    o.max_n = 14;
    return o;
}

}  // namespace

ReportTable report_theorem(const std::string& name, int max_n, ResultsStore& store, int jobs) {
    SearchOptions opts = opts_for(store, jobs);
    ReportTable t;
    auto append = [&](std::vector<std::string> head, const SearchResult& r) {
        for (std::string& cell : audit_cells(r)) head.push_back(std::move(cell));
        t.rows.push_back(std::move(head));
    };

    if (name == "main") {
        t.title = "ex_3(n; P3_3): path-free maximum and extremal family";
        t.columns = {"n", "ex", "|Ex|", "extremal", "nodes", "ms"};
        for (int n = 3; n <= max_n; ++n) {
            SearchResult r = turan(n, {build_pattern("P3_3")}, opts);
            append({std::to_string(n), fmt_result(r), std::to_string(r.extremal.size()),
                    extremal_names(r)},
                   r);
        }
    } else if (name == "cycle") {
        t.title = "ex_3(n; C3_3): triangle-free maximum and extremal family";
        t.columns = {"n", "ex", "|Ex|", "extremal", "nodes", "ms"};
        for (int n = 6; n <= max_n; ++n) {
            SearchResult r = turan(n, {build_pattern("C3_3")}, opts);
            append({std::to_string(n), fmt_result(r), std::to_string(r.extremal.size()),
                    extremal_names(r)},
                   r);
        }
    } else if (name == "second") {
        t.title = "ex_3(n; P3_3 | C3_3): path-free graphs containing a triangle";
        t.columns = {"n", "ex", "20+ex_3(n-6;P3_3)", "|Ex|", "extremal", "nodes", "ms"};
        for (int n = 6; n <= max_n; ++n) {
            SearchResult r =
                conditional_turan(n, {build_pattern("P3_3")}, {build_pattern("C3_3")}, false, opts);
            SearchResult small = turan(n - 6, {build_pattern("P3_3")}, opts);
            std::string identity =
                small.max_edges ? std::to_string(20 + *small.max_edges) : "-";
            append({std::to_string(n), fmt_result(r), identity,
                    std::to_string(r.extremal.size()), extremal_names(r)},
                   r);
        }
    } else if (name == "connected") {
        t.title = "connected ex_3(n; P3_3 | C3_3) against 3n-8";
        t.columns = {"n", "ex(connected)", "3n-8", "|Ex|", "extremal", "nodes", "ms"};
        for (int n = 7; n <= max_n; ++n) {
            SearchResult r =
                conditional_turan(n, {build_pattern("P3_3")}, {build_pattern("C3_3")}, true, opts);
            append({std::to_string(n), fmt_result(r), std::to_string(3 * n - 8),
                    std::to_string(r.extremal.size()), extremal_names(r)},
                   r);
        }
    } else if (name == "hm") {
        t.title = "intersecting families: ex_3(n; M2) and the non-star optimum against 3n-8";
        t.columns = {"n", "ex", "non-star ex", "3n-8", "nodes", "ms"};
        for (int n = 7; n <= max_n; ++n) {
            SearchResult base = turan(n, {build_pattern("M2")}, opts);
            SearchResult nonstar = second_order(n, {build_pattern("M2")}, opts);
            append({std::to_string(n), fmt_result(base), fmt_result(nonstar),
                    std::to_string(3 * n - 8)},
                   nonstar);
        }
    } else if (name == "conjectures") {
        t.title =
            "small-n conditional values beside their construction lower bounds "
            "(computed, not asserted equal)";
        t.columns = {"n",     "ex(P3_3|M2)", "C(n-4,2)+4", "ex(C3_3|M2)",
                     "C(n-2,2)+1", "nodes",       "ms"};
        for (int n = 6; n <= std::min(max_n, 8); ++n) {
            SearchResult pm =
                conditional_turan(n, {build_pattern("P3_3")}, {build_pattern("M2")}, false, opts);
            SearchResult cm =
                conditional_turan(n, {build_pattern("C3_3")}, {build_pattern("M2")}, false, opts);
            std::vector<std::string> row = {
                std::to_string(n), fmt_result(pm), std::to_string(binomial(n - 4, 2) + 4),
                fmt_result(cm), std::to_string(binomial(n - 2, 2) + 1)};
            row.push_back(std::to_string(pm.nodes_explored + cm.nodes_explored));
            row.push_back(std::to_string(pm.elapsed.count() + cm.elapsed.count()));
            t.rows.push_back(std::move(row));
        }
    } else {
        throw Error("unknown report \"" + name +
                    "\" (expected main, cycle, second, connected, hm, or conjectures)");
    }
    return t;
}

namespace {

json embedding_json(const Embedding& e) {
    json j = json::array();
    for (int v : e.map) j.push_back(v);
    return j;
}

json instance_json(const CheckInstance& inst) {
    json j;
    j["label"] = inst.label;
    if (inst.exempt) j["exempt"] = true;
    if (!inst.note.empty()) j["note"] = inst.note;
    if (inst.witness) j["witness"] = embedding_json(*inst.witness);
    j["passed"] = inst.passed;
    return j;
}

}  // namespace

std::string verify_report_to_json(const VerifyReport& rep) {
    json j;
    j["check"] = rep.check;
    j["instances"] = rep.instances;
    j["passed"] = rep.passed;
    j["exempt"] = rep.exempt;
    if (!rep.note.empty()) j["note"] = rep.note;
    json failed = json::array();
    for (const CheckInstance& inst : rep.failures) failed.push_back(instance_json(inst));
    j["failed"] = std::move(failed);
    return j.dump();
}

std::string lemma_report_to_json(const LemmaReport& rep) {
    json j;
    j["check"] = "lemmas";
    j["s"] = rep.s;
    j["instances"] = rep.bounds.size();
    int passed = 0;
    json rows = json::array();
    json failed = json::array();
    for (const LemmaBound& b : rep.bounds) {
        json row;
        row["name"] = b.name;
        row["max_found"] = b.max_found;
        row["bound"] = b.bound;
        row["in_scope"] = b.in_scope;
        row["passed"] = b.ok;
        row["nodes"] = b.nodes;
        if (b.in_scope && !b.ok) failed.push_back(row);
        if (!b.in_scope || b.ok) ++passed;
        rows.push_back(std::move(row));
    }
    j["passed"] = passed;
    j["bounds"] = std::move(rows);
    j["failed"] = std::move(failed);
    return j.dump();
}

std::string run_verify_json(const std::string& checks, int s) {
    json out = json::array();
    bool all = checks == "all";
    auto want = [&](const char* name) { return all || checks == name; };
    bool matched = false;
    if (want("cross")) {
        out.push_back(json::parse(verify_report_to_json(verify_cross_edges(s > 0 ? s : 2))));
        matched = true;
    }
    if (want("pusto")) {
        out.push_back(json::parse(verify_report_to_json(verify_fact_pusto(s >= 4 ? s : 4))));
        matched = true;
    }
    if (want("disjoint")) {
        out.push_back(json::parse(verify_report_to_json(verify_fact_disjoint(s > 0 ? s : 2))));
        matched = true;
    }
    if (want("exclusions")) {
        out.push_back(json::parse(verify_report_to_json(verify_exclusions())));
        matched = true;
    }
    if (want("konig")) {
        out.push_back(json::parse(verify_report_to_json(verify_konig_range(s > 0 ? s : 5))));
        matched = true;
    }
    if (want("lemmas")) {
        if (s > 0) {
            out.push_back(json::parse(lemma_report_to_json(verify_lemma_bounds(s))));
        } else {
            for (int ls = 1; ls <= 3; ++ls)
                out.push_back(json::parse(lemma_report_to_json(verify_lemma_bounds(ls))));
        }
        matched = true;
    }
    if (want("identities")) {
        out.push_back(json::parse(verify_report_to_json(verify_counting_identities())));
        matched = true;
    }
    if (!matched)
        throw Error("unknown verify check \"" + checks +
                    "\" (expected all, cross, pusto, disjoint, exclusions, konig, lemmas, or "
                    "identities)");
    return out.dump(2);
}

std::string run_search_json(const std::string& problem_json) {
    json req = json::parse(problem_json);
    int n = req.at("n").get<int>();
    std::vector<Pattern> forbidden, required;
    for (const std::string& name : req.at("forbid").get<std::vector<std::string>>())
        forbidden.push_back(build_pattern(name));
    if (req.contains("require"))
        for (const std::string& name : req.at("require").get<std::vector<std::string>>())
            required.push_back(build_pattern(name));
    bool connected = req.value("connected", false);
    bool second = req.value("second_order", false);
    SearchOptions opts;
    opts.jobs = req.value("jobs", 1);
    opts.max_n = req.value("max_n", 10);
    std::optional<ResultsStore> store;
    if (req.value("cache", true)) {
        std::string path = req.value("cache_path", std::string());
        store.emplace(path.empty() ? ResultsStore::default_path() : std::filesystem::path(path));
        opts.memo = &*store;
    }
    if (second && (connected || !required.empty()))
        throw Error("second-order search does not combine with require/connected");

    ProblemSummary summary;
    summary.n = n;
    for (const Pattern& f : forbidden) summary.forbid.push_back(f.name);
    for (const Pattern& r : required) summary.require_names.push_back(r.name);
    summary.connected = connected;
    summary.second_order = second;

    SearchResult r;
    if (second)
        r = second_order(n, forbidden, opts);
    else if (!required.empty())
        r = conditional_turan(n, forbidden, required, connected, opts);
    else if (connected)
        throw Error("--connected requires a --require family");
    else
        r = turan(n, forbidden, opts);
    return result_to_json(summary, r);
}

}  // namespace turan3
