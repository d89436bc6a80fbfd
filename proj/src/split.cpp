#include "degseq/split.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degseq {

namespace {

bool is_clique(const Graph& g, VertexSet s) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((s & vertex_bit(v)) && (s & ~vertex_bit(v) & ~g.neighbors(v)) != 0) return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((s & vertex_bit(v)) && (g.neighbors(v) & s) != 0) return false;
    return true;
}

// Last 1-based index with d_i >= i-1 (0 for the empty sequence).
int hammer_simeone_m(const std::vector<int>& d) {
    int m = 0;
    for (int i = 1; i <= static_cast<int>(d.size()); ++i)
        if (d[i - 1] >= i - 1) m = i;
    return m;
}

std::vector<int> set_to_indices(VertexSet s, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (s & vertex_bit(v)) out.push_back(v);
    return out;
}

}  // namespace

bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
    if ((p.clique_side & p.independent_side) != 0) return false;
    if ((p.clique_side | p.independent_side) != g.vertices()) return false;
    return is_clique(g, p.clique_side) && is_independent(g, p.independent_side);
}

bool is_split_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = g.degree(order[i]);
    const int m = hammer_simeone_m(d);
    SplitPartition p;
    for (int i = 0; i < n; ++i)
        (i < m ? p.clique_side : p.independent_side) |= vertex_bit(order[i]);
    return is_valid_split_partition(g, p);
}

bool is_split_graph_by_forbidden(const Graph& g) {
    return !has_induced(g, matching(2)) && !has_induced(g, cycle(4)) &&
           !has_induced(g, cycle(5));
}

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<VertexSet> best;
    std::vector<int> best_indices;
    const VertexSet all = g.vertices();
    for (VertexSet a = 0;; ++a) {
        if (is_clique(g, a) && is_independent(g, all & ~a)) {
            auto indices = set_to_indices(a, n);
            bool take = !best || set_size(a) > set_size(*best) ||
                        (set_size(a) == set_size(*best) &&
                         std::lexicographical_compare(indices.begin(), indices.end(),
                                                      best_indices.begin(), best_indices.end()));
            if (take) {
                best = a;
                best_indices = std::move(indices);
            }
        }
        if (a == all) break;
    }
    if (!best) return std::nullopt;
    return SplitPartition{*best, all & ~*best};
}

bool is_split_sequence(const DegreeSequence& d) {
    if (!is_graphical(d)) throw std::invalid_argument("is_split_sequence: not graphical");
    const auto& terms = d.terms();
    const int n = d.length();
    const int m = hammer_simeone_m(terms);
    long long lhs = 0;
    for (int i = 0; i < m; ++i) lhs += terms[i];
    long long rhs = static_cast<long long>(m) * (m - 1);
    for (int i = m; i < n; ++i) rhs += std::min(terms[i], m);
    return lhs == rhs;
}

Graph compose(const CompositionSpec& spec) {
    const Graph& s = spec.split_part;
    const Graph& h = spec.attached;
    if (!is_valid_split_partition(s, spec.partition))
        throw std::invalid_argument("compose: partition is not a split partition of S");
    Graph out = disjoint_union(s, h);
    const int ns = s.vertex_count();
    for (int a = 0; a < ns; ++a) {
        if (!(spec.partition.clique_side & vertex_bit(a))) continue;
        for (int v = 0; v < h.vertex_count(); ++v) out.add_edge(a, ns + v);
    }
    return out;
}

std::string composition_str(const CompositionSpec& spec) {
    std::ostringstream out;
    out << to_graph6(spec.split_part) << '|';
    auto indices = set_to_indices(spec.partition.clique_side, spec.split_part.vertex_count());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ',';
        out << indices[i];
    }
    out << '|';
    if (spec.attached_family)
        out << family_str(*spec.attached_family);
    else
        out << to_graph6(spec.attached);
    return out.str();
}

std::optional<CompositionSpec> decompose_around_cycle(const Graph& g, int cycle_len) {
    const int n = g.vertex_count();
    const int k = cycle_len;
    if (k < 3 || k > n) return std::nullopt;
    std::optional<CompositionSpec> found;
    for_each_k_subset(n, k, [&](VertexSet c) {
        if (!induces_chordless_cycle(g, c)) return false;
        VertexSet complete_to_c = 0, anti_to_c = 0;
        for (int v = 0; v < n; ++v) {
            if (c & vertex_bit(v)) continue;
            int links = std::popcount(g.neighbors(v) & c);
            if (links == k)
                complete_to_c |= vertex_bit(v);
            else if (links == 0)
                anti_to_c |= vertex_bit(v);
            else
                return false;  // mixed attachment, not a half join
        }
        if (!is_clique(g, complete_to_c) || !is_independent(g, anti_to_c)) return false;
        VertexSet exterior = g.vertices() & ~c;
        Graph s = induced_subgraph(g, exterior);
        SplitPartition p;
        int pos = 0;
        for (int v = 0; v < n; ++v) {
            if (!(exterior & vertex_bit(v))) continue;
            ((complete_to_c & vertex_bit(v)) ? p.clique_side : p.independent_side) |=
                vertex_bit(pos);
            ++pos;
        }
        found = CompositionSpec{std::move(s), p, cycle(k), GraphFamily{GraphFamily::Kind::cycle, k, 0}};
        return true;
    });
    return found;
}

std::optional<CompositionSpec> match_split_compose_cycle_over(std::span<const Graph> realizations,
                                                              const DegreeSequence& d,
                                                              int cycle_len) {
    const int n = d.length();
    const int k = cycle_len;
    if (k > n) return std::nullopt;
    // Degree arithmetic pre-filter: the cycle vertices all end up with degree
    // 2 + |A|, so d needs at least k equal entries of that value.
    bool plausible = false;
    for (int a = 0; a + k <= n && !plausible; ++a)
        plausible = std::count(d.terms().begin(), d.terms().end(), 2 + a) >= k;
    if (!plausible) return std::nullopt;
    for (const Graph& g : realizations)
        if (auto spec = decompose_around_cycle(g, k)) return spec;
    return std::nullopt;
}

std::optional<CompositionSpec> match_split_compose_cycle(const DegreeSequence& d, int cycle_len,
                                                         int max_length) {
    if (cycle_len < 3)
        throw std::invalid_argument("match_split_compose_cycle: cycle length must be at least 3");
    if (!is_graphical(d))
        throw std::invalid_argument("match_split_compose_cycle: not graphical");
    auto realizations = enumerate_realizations(d, max_length);
    return match_split_compose_cycle_over(realizations, d, cycle_len);
}

}  // namespace degseq
