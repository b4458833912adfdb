#pragma once

#include <string>
#include <vector>

#include "turan3/store.hpp"
#include "turan3/verify.hpp"

namespace turan3 {

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string rendered() const;  // aligned plain text
    std::string to_json() const;
};

/// Assembles one of the result tables, running and caching searches as
/// needed. Names: main, cycle, second, connected, hm, conjectures.
ReportTable report_theorem(const std::string& name, int max_n, ResultsStore& store, int jobs);

/// Human-readable tag for an extremal graph: the matching stock construction
/// when one fits, otherwise a size note.
std::string describe_graph(const CanonicalForm& cf);

/// JSON-string front ends backing the C API.
std::string run_search_json(const std::string& problem_json);
std::string run_verify_json(const std::string& checks, int s);
std::string verify_report_to_json(const VerifyReport& rep);
std::string lemma_report_to_json(const LemmaReport& rep);

}  // namespace turan3
