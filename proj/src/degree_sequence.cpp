#include "degseq/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_)
        if (t < 0) throw std::invalid_argument("DegreeSequence: negative term");
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::vector<int> terms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        int value = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || p == text.data() + pos)
            throw std::invalid_argument("DegreeSequence::parse: expected integer");
        pos = static_cast<std::size_t>(p - text.data());
        terms.push_back(value);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',') throw std::invalid_argument("DegreeSequence::parse: expected ','");
            ++pos;
            skip_ws();
            if (pos == text.size())
                throw std::invalid_argument("DegreeSequence::parse: trailing ','");
        }
    }
    return DegreeSequence(std::move(terms));
}

int DegreeSequence::sum() const { return std::accumulate(terms_.begin(), terms_.end(), 0); }

std::string DegreeSequence::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ',';
        out << terms_[i];
    }
    return out.str();
}

DegreeSequence degree_sequence_of(const Graph& g) {
    return DegreeSequence(g.degrees_sorted_desc());
}

namespace {

// Erdos-Gallai over an already nonincreasing span.
bool erdos_gallai(std::span<const int> d) {
    const int n = static_cast<int>(d.size());
    long long sum = 0;
    for (int t : d) sum += t;
    if (sum % 2 != 0) return false;
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (prefix > rhs) return false;
    }
    return true;
}

}  // namespace

bool is_graphical(const DegreeSequence& d) { return erdos_gallai(d.terms()); }

Graph realize_one(const DegreeSequence& d) {
    if (!is_graphical(d)) throw std::invalid_argument("realize_one: sequence is not graphical");
    const int n = d.length();
    Graph g(n);
    // (residual degree, vertex), re-sorted each round.
    std::vector<std::pair<int, int>> rem;
    for (int v = 0; v < n; ++v) rem.emplace_back(d.terms()[v], v);
    for (int round = 0; round < n; ++round) {
        std::stable_sort(rem.begin(), rem.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        auto [need, v] = rem.front();
        rem.erase(rem.begin());
        if (need == 0) continue;
        if (need > static_cast<int>(rem.size()))
            throw std::logic_error("realize_one: construction failed on a graphical input");
        for (int i = 0; i < need; ++i) {
            g.add_edge(v, rem[i].second);
            rem[i].first -= 1;
            if (rem[i].first < 0)
                throw std::logic_error("realize_one: construction failed on a graphical input");
        }
    }
    return g;
}

namespace {

// Backtracking enumeration of labeled realizations in target-degree order.
// Vertex v picks its neighbors among v+1..n-1; the residual sequence is
// pruned with Erdos-Gallai, and interchangeable later vertices (equal
// residual, equal adjacency to 0..v) may only be picked as a prefix of
// their run. Isomorph rejection happens afterwards via canonical forms.
struct RealizationEnum {
    int n;
    std::vector<int> residual;
    std::vector<VertexSet> lower;  // adjacency to vertices < current v
    Graph work;
    std::vector<Graph> out;

    void run(const DegreeSequence& d) {
        n = d.length();
        residual = d.terms();
        lower.assign(n, 0);
        work = Graph(n);
        if (!erdos_gallai(residual)) return;
        fill_vertex(0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    bool residual_graphical(int from) const {
        std::vector<int> tail(residual.begin() + from, residual.end());
        std::sort(tail.begin(), tail.end(), std::greater<>());
        return erdos_gallai(tail);
    }

    void fill_vertex(int v) {
        if (v == n) {
            out.push_back(canonical_form(work));
            return;
        }
        choose(v, v + 1, residual[v]);
    }

    void choose(int v, int w, int need) {
        if (need == 0) {
            if (residual_graphical(v + 1)) fill_vertex(v + 1);
            return;
        }
        if (w >= n || n - w < need) return;
        // Take w: forbidden when w-1 is an interchangeable twin left unpicked.
        if (residual[w] > 0) {
            bool twin_skipped =
                w - 1 > v && residual[w - 1] == residual[w] && lower[w - 1] == lower[w];
            if (!twin_skipped) {
                work.add_edge(v, w);
                residual[v] -= 1;
                residual[w] -= 1;
                lower[w] |= vertex_bit(v);
                choose(v, w + 1, need - 1);
                lower[w] &= ~vertex_bit(v);
                residual[w] += 1;
                residual[v] += 1;
                work.remove_edge(v, w);
            }
        }
        choose(v, w + 1, need);
    }
};

}  // namespace

std::vector<Graph> enumerate_realizations(const DegreeSequence& d, int max_length) {
    if (d.length() > max_length)
        throw std::invalid_argument("enumerate_realizations: sequence longer than the bound");
    RealizationEnum state;
    state.run(d);
    return std::move(state.out);
}

DegreeSequence complement_sequence(const DegreeSequence& d) {
    if (!is_graphical(d))
        throw std::invalid_argument("complement_sequence: sequence is not graphical");
    const int n = d.length();
    std::vector<int> terms;
    terms.reserve(n);
    for (int t : d.terms()) terms.push_back(n - 1 - t);
    return DegreeSequence(std::move(terms));
}

bool PrecedesWitness::validate(const DegreeSequence& d1, const DegreeSequence& d2) const {
    if (degree_sequence_of(inner) != d1 || degree_sequence_of(outer) != d2) return false;
    if (static_cast<int>(embedding.size()) != inner.vertex_count()) return false;
    VertexSet seen = 0;
    for (int img : embedding) {
        if (img < 0 || img >= outer.vertex_count()) return false;
        if (seen & vertex_bit(img)) return false;
        seen |= vertex_bit(img);
    }
    for (int u = 0; u < inner.vertex_count(); ++u)
        for (int v = u + 1; v < inner.vertex_count(); ++v)
            if (inner.has_edge(u, v) != outer.has_edge(embedding[u], embedding[v])) return false;
    return true;
}

std::optional<PrecedesWitness> precedes_witness_over(std::span<const Graph> outer_realizations,
                                                     const DegreeSequence& d1) {
    const int k = d1.length();
    for (const Graph& outer : outer_realizations) {
        const int n = outer.vertex_count();
        if (k > n) continue;
        std::optional<PrecedesWitness> found;
        for_each_k_subset(n, k, [&](VertexSet s) {
            std::vector<int> degs;
            degs.reserve(k);
            for (int v = 0; v < n; ++v)
                if (s & vertex_bit(v)) degs.push_back(std::popcount(outer.neighbors(v) & s));
            std::sort(degs.begin(), degs.end(), std::greater<>());
            if (degs != d1.terms()) return false;
            PrecedesWitness w{induced_subgraph(outer, s), outer, {}};
            for (int v = 0; v < n; ++v)
                if (s & vertex_bit(v)) w.embedding.push_back(v);
            found = std::move(w);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<PrecedesWitness> precedes_witness(const DegreeSequence& d1,
                                                const DegreeSequence& d2, int max_length) {
    if (!is_graphical(d1) || !is_graphical(d2))
        throw std::invalid_argument("precedes: both sequences must be graphical");
    if (d1.length() > d2.length()) return std::nullopt;
    auto realizations = enumerate_realizations(d2, max_length);
    return precedes_witness_over(realizations, d1);
}

bool precedes(const DegreeSequence& d1, const DegreeSequence& d2, int max_length) {
    return precedes_witness(d1, d2, max_length).has_value();
}

bool excludes_graph_over(std::span<const Graph> realizations, const Graph& h) {
    return !precedes_witness_over(realizations, degree_sequence_of(h)).has_value();
}

bool excludes_graph(const DegreeSequence& d, const Graph& h, int max_length) {
    return !precedes_witness(degree_sequence_of(h), d, max_length).has_value();
}

ForciblyResult forcibly_holds_over(std::span<const Graph> realizations,
                                   const std::function<bool(const Graph&)>& property) {
    ForciblyResult result;
    for (const Graph& g : realizations) {
        ++result.realizations_checked;
        if (!property(g)) {
            result.counterexample = g;
            return result;
        }
    }
    result.holds = true;
    return result;
}

ForciblyResult forcibly_holds(const DegreeSequence& d,
                              const std::function<bool(const Graph&)>& property,
                              int max_length) {
    if (!is_graphical(d))
        throw std::invalid_argument("forcibly_holds: sequence is not graphical");
    auto realizations = enumerate_realizations(d, max_length);
    return forcibly_holds_over(realizations, property);
}

}  // namespace degseq
