#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degseq {

constexpr int kMaxVertices = 32;

// Vertex sets are bitmasks over vertex indices 0..n-1.
using VertexSet = std::uint32_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

// Simple undirected graph on at most 32 vertices. Adjacency is one bitset
// per vertex, so neighborhood queries are single word operations and graphs
// have plain value semantics (copy, compare, use as map keys).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return full_set(n_); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexSet neighbors(int v) const;
    int degree(int v) const { return std::popcount(neighbors(v)); }
    std::vector<int> degrees_sorted_desc() const;

    auto operator<=>(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Standard families. Path(n) has n vertices and n-1 edges; Matching(k) is
// k disjoint edges on 2k vertices, so Matching(2) is the two-edge matching.
struct GraphFamily {
    enum class Kind { cycle, path, complete, complete_bipartite, matching, empty };
    Kind kind = Kind::empty;
    int a = 0;
    int b = 0;

    auto operator<=>(const GraphFamily&) const = default;
};

Graph construct(const GraphFamily& family);
std::string family_str(const GraphFamily& family);
std::optional<GraphFamily> parse_family(std::string_view text);

// Shorthands for the families used throughout.
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph matching(int k);
Graph empty_graph(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Vertices of xs relabeled 0..|xs|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet xs);

// Merge u and v into one vertex whose neighborhood is the union of theirs.
// The merged vertex sits at position min(u,v); indices above max(u,v) shift
// down by one. Adjacency of u and v is not required.
Graph contract_pair(const Graph& g, int u, int v);

// Remove edge uv and append a new vertex adjacent to exactly u and v.
Graph subdivide_edge(const Graph& g, int u, int v);

// Induced subgraph isomorphism: does some vertex subset of g induce a copy
// of h? find_induced returns the injective map h-vertex -> g-vertex.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);
bool has_induced(const Graph& g, const Graph& h);

// Perfect-elimination-ordering search. Cross-checked against has_hole_geq
// in the tests.
bool is_chordal(const Graph& g);

// True iff g has an induced (chordless) cycle on at least n vertices, n >= 4.
bool has_hole_geq(const Graph& g, int n);

// Does s induce a chordless cycle (2-regular and connected within s)?
bool induces_chordless_cycle(const Graph& g, VertexSet s);

// Canonical representative of the isomorphism class: minimal adjacency code
// over vertex orderings compatible with an iterated degree refinement.
// canonical_form(g1) == canonical_form(g2) iff g1 and g2 are isomorphic.
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g1, const Graph& g2);

// graph6 text format (n <= 62 header byte, then the upper triangle
// column-major, six bits per printable byte offset 63).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

std::string to_dot(const Graph& g);

// Enumerate k-subsets of {0..n-1} in increasing mask order. fn returns true
// to stop early; the function reports whether it was stopped.
template <typename Fn>
bool for_each_k_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return false;
    if (k == 0) return fn(VertexSet{0});
    VertexSet s = full_set(k);
    const VertexSet limit = full_set(n);
    while (s <= limit) {
        if (fn(s)) return true;
        // Gosper's hack: next mask with the same popcount.
        VertexSet c = s & -s;
        VertexSet r = s + c;
        if (r == 0) break;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return false;
}

}  // namespace degseq
