#include "degseq/enumerate.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "degseq/sweep.hpp"

namespace degseq {

namespace {

// All canonical extensions of one canonical parent by a single new vertex.
// A child is kept iff deleting the last vertex of its canonical form leads
// back to this parent, so across parents every isomorphism class is produced
// exactly once; duplicates within a parent are removed locally.
std::vector<Graph> extend_parent(const Graph& parent) {
    const int n = parent.vertex_count() + 1;
    const DegreeSequence parent_seq = degree_sequence_of(parent);
    std::vector<Graph> out;
    for (VertexSet mask = 0; mask <= full_set(n - 1); ++mask) {
        Graph child(n);
        for (int u = 0; u < n - 1; ++u)
            for (int v = u + 1; v < n - 1; ++v)
                if (parent.has_edge(u, v)) child.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u)
            if (mask & vertex_bit(u)) child.add_edge(u, n - 1);
        Graph canon = canonical_form(child);
        Graph deleted = induced_subgraph(canon, full_set(n - 1));
        if (degree_sequence_of(deleted) != parent_seq) continue;
        if (canonical_form(deleted) != parent) continue;
        out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Graph> next_level(const std::vector<Graph>& parents, int threads, bool serial) {
    auto expand = [&](std::size_t i) { return extend_parent(parents[i]); };
    std::vector<std::vector<Graph>> chunks =
        serial ? serial_map<std::vector<Graph>>(parents.size(), expand)
               : parallel_map<std::vector<Graph>>(parents.size(), threads, expand);
    std::vector<Graph> level;
    for (auto& chunk : chunks)
        level.insert(level.end(), chunk.begin(), chunk.end());
    std::sort(level.begin(), level.end());
    return level;
}

}  // namespace

std::vector<Graph> all_graphs(int n, int threads, bool serial) {
    if (n < 0 || n > kMaxAllGraphsN)
        throw std::invalid_argument("all_graphs: vertex count must be in [0, 9]");
    std::vector<Graph> level = {Graph(0)};
    for (int size = 1; size <= n; ++size) level = next_level(level, threads, serial);
    return level;
}

std::vector<DegreeSequence> all_graphical_sequences(int n) {
    if (n < 0 || n > kMaxSequenceEnumN)
        throw std::invalid_argument("all_graphical_sequences: length must be in [0, 10]");
    std::vector<DegreeSequence> out;
    std::vector<int> terms(n);
    // Nonincreasing sequences with entries in [0, n-1], descending lex order.
    auto rec = [&](auto&& self, int i, int max_term) -> void {
        if (i == n) {
            DegreeSequence d{std::vector<int>(terms)};
            if (is_graphical(d)) out.push_back(std::move(d));
            return;
        }
        for (int t = max_term; t >= 0; --t) {
            terms[i] = t;
            self(self, i + 1, t);
        }
    };
    rec(rec, 0, n - 1);
    return out;
}

Universe Universe::build(int max_n, int threads, bool serial) {
    if (max_n < 0 || max_n > kMaxAllGraphsN)
        throw std::invalid_argument("Universe::build: max_n must be in [0, 9]");
    Universe u;
    u.max_n = max_n;
    u.graphs_by_n.resize(max_n + 1);
    u.graphs_by_n[0] = {Graph(0)};
    for (int n = 1; n <= max_n; ++n)
        u.graphs_by_n[n] = next_level(u.graphs_by_n[n - 1], threads, serial);
    u.sequences_by_n.resize(max_n + 1);
    u.catalog_by_n.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        u.sequences_by_n[n] = all_graphical_sequences(n);
        for (const Graph& g : u.graphs_by_n[n])
            u.catalog_by_n[n][degree_sequence_of(g)].push_back(g);
    }
    return u;
}

Universe Universe::from_graphs(std::vector<Graph> graphs, int max_n) {
    if (max_n < 0) throw std::invalid_argument("Universe::from_graphs: negative max_n");
    Universe u;
    u.max_n = max_n;
    u.graphs_by_n.resize(max_n + 1);
    for (Graph& g : graphs) {
        if (g.vertex_count() > max_n) continue;
        u.graphs_by_n[g.vertex_count()].push_back(canonical_form(g));
    }
    for (int n = 0; n <= max_n; ++n) {
        auto& level = u.graphs_by_n[n];
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        if (level.empty())
            throw std::invalid_argument(
                "Universe::from_graphs: no graphs supplied for vertex count " + std::to_string(n));
    }
    u.sequences_by_n.resize(max_n + 1);
    u.catalog_by_n.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        u.sequences_by_n[n] = all_graphical_sequences(n);
        for (const Graph& g : u.graphs_by_n[n])
            u.catalog_by_n[n][degree_sequence_of(g)].push_back(g);
    }
    return u;
}

std::span<const Graph> Universe::realizations(const DegreeSequence& d) const {
    const int n = d.length();
    if (n < 0 || n > max_n) throw std::out_of_range("Universe::realizations: length out of range");
    auto it = catalog_by_n[n].find(d);
    if (it == catalog_by_n[n].end()) return {};
    return it->second;
}

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace degseq
