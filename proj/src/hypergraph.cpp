#include "turan3/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace turan3 {

Triple sorted_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

VertexSet VertexSet::of(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return VertexSet{std::move(members)};
}

Hypergraph Hypergraph::make(int n, std::vector<Triple> edges) {
    if (n < 0) throw Error("vertex count must be non-negative");
    for (Triple& t : edges) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw Error("repeated vertex in edge {" + std::to_string(t[0]) + "," +
                        std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
        if (t[0] < 0 || t[2] >= n)
            throw Error("vertex out of range in edge {" + std::to_string(t[0]) + "," +
                        std::to_string(t[1]) + "," + std::to_string(t[2]) + "} (n=" +
                        std::to_string(n) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("duplicate edge in edge list");
    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    h.build_index();
    return h;
}

void Hypergraph::build_index() {
    incidence_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        for (int v : edges_[i]) incidence_[v].push_back(i);
}

const std::vector<int>& Hypergraph::edges_at(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
    return incidence_[v];
}

bool Hypergraph::has_edge(const Triple& t) const {
    return std::binary_search(edges_.begin(), edges_.end(), t);
}

int Hypergraph::degree(int v) const {
    return static_cast<int>(edges_at(v).size());
}

bool Hypergraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Triple& t : edges_) {
        int r = find(t[0]);
        parent[find(t[1])] = r;
        r = find(t[0]);
        parent[find(t[2])] = r;
    }
    int root = find(0);
    for (int v = 1; v < n_; ++v)
        if (find(v) != root) return false;
    return true;
}

Hypergraph Hypergraph::induced(const VertexSet& s) const {
    std::vector<int> relabel(n_, -1);
    for (int i = 0; i < static_cast<int>(s.members.size()); ++i) {
        int v = s.members[i];
        if (v < 0 || v >= n_)
            throw Error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
        relabel[v] = i;
    }
    std::vector<Triple> kept;
    for (const Triple& t : edges_) {
        if (relabel[t[0]] >= 0 && relabel[t[1]] >= 0 && relabel[t[2]] >= 0)
            kept.push_back(sorted_triple(relabel[t[0]], relabel[t[1]], relabel[t[2]]));
    }
    return make(static_cast<int>(s.members.size()), std::move(kept));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    int shift = a.vertex_count();
    std::vector<Triple> edges = a.edges();
    for (const Triple& t : b.edges())
        edges.push_back(Triple{t[0] + shift, t[1] + shift, t[2] + shift});
    return Hypergraph::make(shift + b.vertex_count(), std::move(edges));
}

std::string encode(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Triple& t : h.edges())
        out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

namespace {

bool parse_ints(const std::string& line, std::vector<long>& out) {
    std::istringstream in(line);
    long x;
    out.clear();
    while (in >> x) out.push_back(x);
    if (!in.eof()) return false;  // non-numeric garbage
    return true;
}

}  // namespace

Hypergraph decode(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Triple> edges;
    std::vector<long> nums;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (n < 0 || static_cast<long>(edges.size()) < m)
                throw ParseError(lineno, "blank line inside hypergraph body");
            continue;  // trailing blank lines are tolerated
        }
        if (!parse_ints(line, nums)) throw ParseError(lineno, "malformed token in \"" + line + "\"");
        if (n < 0) {
            if (nums.size() != 2) throw ParseError(lineno, "header must be \"n m\"");
            n = nums[0];
            m = nums[1];
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            continue;
        }
        if (nums.size() != 3) throw ParseError(lineno, "edge line must have three vertices");
        if (static_cast<long>(edges.size()) >= m) throw ParseError(lineno, "more than m edge lines");
        if (!(nums[0] < nums[1] && nums[1] < nums[2]))
            throw ParseError(lineno, "edge vertices must be strictly increasing");
        if (nums[0] < 0 || nums[2] >= n) throw ParseError(lineno, "vertex out of range");
        Triple t{static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2])};
        if (!edges.empty() && !(edges.back() < t))
            throw ParseError(lineno, "edge lines out of lexicographic order");
        edges.push_back(t);
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header line");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno == 0 ? 1 : lineno,
                         "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Hypergraph::make(static_cast<int>(n), std::move(edges));
}

}  // namespace turan3
