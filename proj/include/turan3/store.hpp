#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "turan3/search.hpp"

namespace turan3 {

/// What a stored line needs to reproduce and re-check a search.
struct ProblemSummary {
    int n = 0;
    std::vector<std::string> forbid;
    std::vector<std::string> require_names;
    bool connected = false;
    bool second_order = false;
    std::optional<Hypergraph> exclude;  // present for second-order entries

    SearchProblem to_problem() const;
};

/// Result serialization in the engine's public JSON schema.
std::string result_to_json(const ProblemSummary& p, const SearchResult& r);
std::pair<ProblemSummary, SearchResult> result_from_json(const std::string& text);

/// Append-only JSON-lines cache of search results keyed by problem
/// fingerprint. Corrupt lines are skipped with a warning; entries that fail
/// certification against their recorded problem are dropped on load.
class ResultsStore : public SearchMemo {
public:
    explicit ResultsStore(std::filesystem::path path);

    /// TURAN_CACHE overrides the default ./turan_cache.jsonl.
    static std::filesystem::path default_path();

    std::optional<SearchResult> lookup(const std::string& fingerprint) override;
    void record(const std::string& fingerprint, const SearchProblem& p,
                const SearchResult& r) override;

    size_t size() const { return entries_.size(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::map<std::string, std::pair<ProblemSummary, SearchResult>> entries_;

    void load();
};

}  // namespace turan3
