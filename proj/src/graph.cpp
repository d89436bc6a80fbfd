#include "degseq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace degseq {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count must be in [0, 32]");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vertex_bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~vertex_bit(v);
    adj_[v] &= ~vertex_bit(u);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::degrees_sorted_desc() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph matching(int k) {
    if (k < 0) throw std::invalid_argument("matching: negative edge count");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph construct(const GraphFamily& family) {
    using Kind = GraphFamily::Kind;
    switch (family.kind) {
        case Kind::cycle: return cycle(family.a);
        case Kind::path: return path(family.a);
        case Kind::complete: return complete(family.a);
        case Kind::complete_bipartite: return complete_bipartite(family.a, family.b);
        case Kind::matching: return matching(family.a);
        case Kind::empty: return empty_graph(family.a);
    }
    throw std::logic_error("construct: unknown family");
}

std::string family_str(const GraphFamily& family) {
    using Kind = GraphFamily::Kind;
    switch (family.kind) {
        case Kind::cycle: return "C" + std::to_string(family.a);
        case Kind::path: return "P" + std::to_string(family.a);
        case Kind::complete: return "K" + std::to_string(family.a);
        case Kind::complete_bipartite:
            return "K" + std::to_string(family.a) + "," + std::to_string(family.b);
        case Kind::matching: return "M" + std::to_string(family.a);
        case Kind::empty: return "E" + std::to_string(family.a);
    }
    return "?";
}

std::optional<GraphFamily> parse_family(std::string_view text) {
    if (text.empty()) return std::nullopt;
    using Kind = GraphFamily::Kind;
    char tag = text[0];
    std::string_view rest = text.substr(1);
    auto parse_int = [](std::string_view s, int& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && p == s.data() + s.size();
    };
    GraphFamily f;
    auto comma = rest.find(',');
    if (tag == 'K' && comma != std::string_view::npos) {
        f.kind = Kind::complete_bipartite;
        if (!parse_int(rest.substr(0, comma), f.a)) return std::nullopt;
        if (!parse_int(rest.substr(comma + 1), f.b)) return std::nullopt;
        return f;
    }
    switch (tag) {
        case 'C': f.kind = Kind::cycle; break;
        case 'P': f.kind = Kind::path; break;
        case 'K': f.kind = Kind::complete; break;
        case 'M': f.kind = Kind::matching; break;
        case 'E': f.kind = Kind::empty; break;
        default: return std::nullopt;
    }
    if (!parse_int(rest, f.a)) return std::nullopt;
    return f;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > kMaxVertices)
        throw std::invalid_argument("disjoint_union: combined size exceeds 32 vertices");
    Graph out(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = u + 1; v < n1; ++v)
            if (g1.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = u + 1; v < n2; ++v)
            if (g2.has_edge(u, v)) out.add_edge(n1 + u, n1 + v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet xs) {
    if ((xs & ~g.vertices()) != 0)
        throw std::invalid_argument("induced_subgraph: vertex set not contained in graph");
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (xs & vertex_bit(v)) verts.push_back(v);
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph contract_pair(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("contract_pair: vertices must be distinct");
    const int keep = std::min(u, v), drop = std::max(u, v);
    const int n = g.vertex_count();
    if (drop >= n || keep < 0) throw std::out_of_range("contract_pair: vertex out of range");
    auto relabel = [&](int w) { return w < drop ? w : w - 1; };
    Graph out(n - 1);
    for (int a = 0; a < n; ++a) {
        if (a == drop) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == drop || !g.has_edge(a, b)) continue;
            out.add_edge(relabel(a), relabel(b));
        }
    }
    // Fold the dropped vertex's neighborhood into the kept one.
    VertexSet nb = g.neighbors(drop) & ~vertex_bit(keep);
    for (int w = 0; w < n; ++w)
        if ((nb & vertex_bit(w)) && w != drop) out.add_edge(relabel(keep), relabel(w));
    return out;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: uv is not an edge");
    const int n = g.vertex_count();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("subdivide_edge: graph is full");
    Graph out(n + 1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(a, b)) out.add_edge(a, b);
    out.remove_edge(u, v);
    out.add_edge(u, n);
    out.add_edge(v, n);
    return out;
}

namespace {

// Backtracking over injective maps h -> g, extending the vertex with the
// fewest remaining candidates first. Adjacency must be preserved and
// reflected (induced embedding).
struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> map;   // h vertex -> g vertex or -1
    VertexSet used = 0;

    bool candidate_ok(int hv, int gu) const {
        if (used & vertex_bit(gu)) return false;
        if (g.degree(gu) < h.degree(hv)) return false;
        for (int hw = 0; hw < h.vertex_count(); ++hw) {
            if (map[hw] < 0) continue;
            if (h.has_edge(hv, hw) != g.has_edge(gu, map[hw])) return false;
        }
        return true;
    }

    bool extend(int placed) {
        if (placed == h.vertex_count()) return true;
        int best = -1, best_count = kMaxVertices + 1;
        for (int hv = 0; hv < h.vertex_count(); ++hv) {
            if (map[hv] >= 0) continue;
            int count = 0;
            for (int gu = 0; gu < g.vertex_count(); ++gu)
                if (candidate_ok(hv, gu)) ++count;
            if (count < best_count) {
                best_count = count;
                best = hv;
                if (count == 0) return false;
            }
        }
        for (int gu = 0; gu < g.vertex_count(); ++gu) {
            if (!candidate_ok(best, gu)) continue;
            map[best] = gu;
            used |= vertex_bit(gu);
            if (extend(placed + 1)) return true;
            map[best] = -1;
            used &= ~vertex_bit(gu);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
    if (h.vertex_count() > g.vertex_count()) return std::nullopt;
    InducedSearch search{g, h, std::vector<int>(h.vertex_count(), -1)};
    if (!search.extend(0)) return std::nullopt;
    return search.map;
}

bool has_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

bool is_chordal(const Graph& g) {
    VertexSet alive = g.vertices();
    while (alive) {
        int simplicial = -1;
        for (int v = 0; v < g.vertex_count() && simplicial < 0; ++v) {
            if (!(alive & vertex_bit(v))) continue;
            VertexSet nb = g.neighbors(v) & alive;
            bool clique = true;
            for (int u = 0; u < g.vertex_count() && clique; ++u) {
                if (!(nb & vertex_bit(u))) continue;
                if ((nb & ~vertex_bit(u) & ~g.neighbors(u)) != 0) clique = false;
            }
            if (clique) simplicial = v;
        }
        if (simplicial < 0) return false;
        alive &= ~vertex_bit(simplicial);
    }
    return true;
}

bool has_hole_geq(const Graph& g, int n) {
    if (n < 4) throw std::invalid_argument("has_hole_geq: threshold must be at least 4");
    for (int k = n; k <= g.vertex_count(); ++k)
        if (has_induced(g, cycle(k))) return true;
    return false;
}

bool induces_chordless_cycle(const Graph& g, VertexSet s) {
    if (set_size(s) < 3 || (s & ~g.vertices()) != 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((s & vertex_bit(v)) && std::popcount(g.neighbors(v) & s) != 2) return false;
    int start = std::countr_zero(s);
    VertexSet seen = vertex_bit(start), frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (frontier & vertex_bit(v)) next |= g.neighbors(v) & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

namespace {

// Iterated refinement of an initial degree partition. Colors are ranked by
// isomorphism-invariant keys only, so isomorphic graphs get matching class
// layouts. Color 0 is the largest degree.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    {
        std::vector<int> degrees;
        for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
        std::vector<int> distinct = degrees;
        std::sort(distinct.begin(), distinct.end(), std::greater<>());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(),
                                                         degrees[v], std::greater<>()) -
                                        distinct.begin());
    }
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    while (true) {
        using Key = std::pair<int, std::vector<int>>;
        std::vector<Key> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            keys[v] = {color[v], std::move(nb)};
        }
        std::vector<Key> distinct = keys;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (static_cast<int>(distinct.size()) == classes) break;
        classes = static_cast<int>(distinct.size());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                                        distinct.begin());
    }
    return color;
}

// Minimize the column-major upper-triangle adjacency code over all vertex
// orderings that respect the refined color classes. Column k of a candidate
// ordering is compared against the best-so-far as soon as position k is
// placed, which prunes most of the class-permutation space.
struct CanonSearch {
    const Graph& g;
    int n = 0;
    std::vector<int> slot_color{};                  // color required at each position
    std::vector<std::vector<int>> class_members{};  // color -> vertices (ascending)
    std::vector<int> perm{};                        // position -> original vertex
    std::vector<char> used{};
    std::vector<std::uint32_t> cur{}, best{};
    bool have_best = false;

    void run() {
        perm.assign(n, -1);
        used.assign(n, 0);
        cur.assign(n, 0);
        place(0, false);
    }

    void place(int k, bool strictly_less) {
        if (k == n) {
            // The strictly_less flag can be stale once best has been replaced
            // by a completion deeper in this subtree, so compare outright.
            if (!have_best || cur < best) best = cur;
            have_best = true;
            return;
        }
        for (int v : class_members[slot_color[k]]) {
            if (used[v]) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < k; ++i) col = (col << 1) | (g.has_edge(perm[i], v) ? 1u : 0u);
            bool next_less = strictly_less;
            if (!strictly_less && have_best) {
                if (col > best[k]) continue;
                if (col < best[k]) next_less = true;
            }
            perm[k] = v;
            used[v] = 1;
            cur[k] = col;
            place(k + 1, next_less);
            used[v] = 0;
            perm[k] = -1;
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return g;
    std::vector<int> color = refined_colors(g);
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    CanonSearch search{g, n};
    search.class_members.resize(classes);
    for (int v = 0; v < n; ++v) search.class_members[color[v]].push_back(v);
    for (int c = 0; c < classes; ++c)
        search.slot_color.insert(search.slot_color.end(), search.class_members[c].size(), c);
    search.run();
    Graph out(n);
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i)
            if (search.best[k] & (std::uint32_t{1} << (k - 1 - i))) out.add_edge(i, k);
    return out;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.degrees_sorted_desc() != g2.degrees_sorted_desc()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bits = 0, acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph6: vertex count out of supported range [0, 32]");
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: wrong length for declared vertex count");
    Graph g(n);
    int bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            int byte = static_cast<unsigned char>(text[1 + bit_index / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: byte out of range");
            if ((byte >> (5 - bit_index % 6)) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits must be zero.
    for (; bit_index < 6 * nbytes; ++bit_index) {
        int byte = static_cast<unsigned char>(text[1 + bit_index / 6]) - 63;
        if ((byte >> (5 - bit_index % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace degseq
