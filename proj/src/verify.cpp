#include "degseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "degseq/sweep.hpp"

namespace degseq {

std::optional<Mutant> parse_mutant(std::string_view name) {
    if (name.empty() || name == "none") return Mutant::none;
    if (name == "compose-join-b") return Mutant::compose_join_b;
    if (name == "drop-cycle-class") return Mutant::drop_cycle_class;
    if (name == "skip-hypothesis") return Mutant::skip_hypothesis;
    if (name == "loose-split") return Mutant::loose_split_equality;
    return std::nullopt;
}

std::string mutant_str(Mutant m) {
    switch (m) {
        case Mutant::none: return "none";
        case Mutant::compose_join_b: return "compose-join-b";
        case Mutant::drop_cycle_class: return "drop-cycle-class";
        case Mutant::skip_hypothesis: return "skip-hypothesis";
        case Mutant::loose_split_equality: return "loose-split";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ItemOutcome {
    std::uint64_t instances = 0;
    std::vector<Counterexample> ces;
};

template <typename Fn>
VerificationReport run_sweep(std::string claim, std::string universe, std::size_t count,
                             const VerifyOptions& opt, Fn&& per_item) {
    auto start = Clock::now();
    std::vector<ItemOutcome> outcomes =
        opt.serial ? serial_map<ItemOutcome>(count, per_item)
                   : parallel_map<ItemOutcome>(count, opt.threads, per_item);
    VerificationReport report;
    report.claim = std::move(claim);
    report.universe = std::move(universe);
    for (auto& o : outcomes) {
        report.instances += o.instances;
        report.counterexamples.insert(report.counterexamples.end(),
                                      std::make_move_iterator(o.ces.begin()),
                                      std::make_move_iterator(o.ces.end()));
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.elapsed_seconds = seconds_since(start);
    return report;
}

const Universe& ensure_universe(const VerifyOptions& opt, int needed,
                                std::optional<Universe>& storage) {
    if (opt.universe && opt.universe->max_n >= needed) return *opt.universe;
    storage = Universe::build(needed, opt.threads, opt.serial);
    return *storage;
}

struct SequenceItems {
    std::vector<const DegreeSequence*> seqs;
    std::vector<std::span<const Graph>> reals;
};

SequenceItems sequence_items(const Universe& u, int max_n) {
    SequenceItems items;
    for (int n = 0; n <= max_n; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) {
            items.seqs.push_back(&d);
            items.reals.push_back(u.realizations(d));
        }
    return items;
}

std::string seq_label(const DegreeSequence& d) { return d.length() ? d.str() : "()"; }

// Mutant loose_split_equality: the Erdos-Gallai equality at the split index
// weakened to an inequality, which classifies everything graphical as split.
bool split_sequence_check(const DegreeSequence& d, Mutant mutant) {
    if (mutant != Mutant::loose_split_equality) return is_split_sequence(d);
    const auto& terms = d.terms();
    const int n = d.length();
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (terms[i - 1] >= i - 1) m = i;
    long long lhs = 0;
    for (int i = 0; i < m; ++i) lhs += terms[i];
    long long rhs = static_cast<long long>(m) * (m - 1);
    for (int i = m; i < n; ++i) rhs += std::min(terms[i], m);
    return lhs <= rhs;
}

// Mutant compose_join_b: join the attached graph to the independent side.
Graph compose_checked(const CompositionSpec& spec, Mutant mutant) {
    if (mutant != Mutant::compose_join_b) return compose(spec);
    Graph out = disjoint_union(spec.split_part, spec.attached);
    const int ns = spec.split_part.vertex_count();
    for (int a = 0; a < ns; ++a) {
        if (!(spec.partition.independent_side & vertex_bit(a))) continue;
        for (int v = 0; v < spec.attached.vertex_count(); ++v) out.add_edge(a, ns + v);
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

VerificationReport verify_prop_split(const VerifyOptions& opt) {
    const int max_n = opt.max_vertices;
    if (max_n > 8) throw std::invalid_argument("verify_prop_split: max_vertices must be <= 8");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, max_n, storage);
    std::vector<const Graph*> graphs;
    for (int n = 0; n <= max_n; ++n)
        for (const Graph& g : u.graphs_by_n[n]) graphs.push_back(&g);
    SequenceItems items = sequence_items(u, max_n);
    const std::size_t graph_count = graphs.size();
    const Mutant mutant = opt.mutant;

    auto per_item = [&](std::size_t i) {
        ItemOutcome out;
        out.instances = 1;
        if (i < graph_count) {
            const Graph& g = *graphs[i];
            const bool by_partition = find_split_partition(g).has_value();
            const bool by_threshold = is_split_graph(g);
            const bool by_forbidden = is_split_graph_by_forbidden(g);
            const bool by_holes = !has_induced(g, matching(2)) && !has_hole_geq(g, 4);
            const bool by_degree = split_sequence_check(degree_sequence_of(g), mutant);
            if (by_partition != by_threshold || by_partition != by_forbidden ||
                by_partition != by_holes || by_partition != by_degree)
                out.ces.push_back(
                    {to_graph6(g), "split recognizers disagree: partition=" + bool_str(by_partition) +
                                       " threshold=" + bool_str(by_threshold) +
                                       " forbidden=" + bool_str(by_forbidden) +
                                       " holes=" + bool_str(by_holes) +
                                       " degree=" + bool_str(by_degree)});
        } else {
            const DegreeSequence& d = *items.seqs[i - graph_count];
            auto reals = items.reals[i - graph_count];
            const bool seq_split = split_sequence_check(d, mutant);
            const bool excl_three = excludes_graph_over(reals, matching(2)) &&
                                    excludes_graph_over(reals, cycle(4)) &&
                                    excludes_graph_over(reals, cycle(5));
            bool excl_cycles = excludes_graph_over(reals, matching(2));
            for (int k = 4; k <= d.length() && excl_cycles; ++k)
                excl_cycles = excludes_graph_over(reals, cycle(k));
            if (seq_split != excl_three || seq_split != excl_cycles)
                out.ces.push_back({seq_label(d),
                                   "split sequence tests disagree: degree=" + bool_str(seq_split) +
                                       " excludes-M2-C4-C5=" + bool_str(excl_three) +
                                       " excludes-M2-and-holes=" + bool_str(excl_cycles)});
            if (seq_split)
                for (const Graph& g : reals)
                    if (!is_split_graph(g))
                        out.ces.push_back(
                            {seq_label(d), "split sequence has a non-split realization " + to_graph6(g)});
        }
        return out;
    };
    return run_sweep("prop1",
                     "all graphs and graphical sequences on <= " + std::to_string(max_n) +
                         " vertices",
                     graph_count + items.seqs.size(), opt, per_item);
}

VerificationReport verify_lemma_s_or_h(int s_bound, int h_bound, const VerifyOptions& opt) {
    if (s_bound < 0 || s_bound > 4 || h_bound < 0 || h_bound > 5)
        throw std::invalid_argument("verify_lemma_s_or_h: exhaustive bounds are |S| <= 4, |H| <= 5");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, std::max(s_bound, h_bound), storage);

    struct SplitWithPartition {
        const Graph* s;
        SplitPartition partition;
    };
    std::vector<SplitWithPartition> hosts;
    for (int n = 0; n <= s_bound; ++n)
        for (const Graph& g : u.graphs_by_n[n]) {
            if (!is_split_graph(g)) continue;
            const VertexSet all = g.vertices();
            for (VertexSet a = 0;; ++a) {
                SplitPartition p{a, all & ~a};
                if (is_valid_split_partition(g, p)) hosts.push_back({&g, p});
                if (a == all) break;
            }
        }
    std::vector<const Graph*> attachments;
    for (int n = 0; n <= h_bound; ++n)
        for (const Graph& g : u.graphs_by_n[n]) attachments.push_back(&g);
    const Mutant mutant = opt.mutant;

    auto per_item = [&](std::size_t i) {
        ItemOutcome out;
        const auto& host = hosts[i];
        for (const Graph* h : attachments) {
            CompositionSpec spec{*host.s, host.partition, *h, std::nullopt};
            const Graph composed = compose_checked(spec, mutant);
            for (int n = 4; n <= composed.vertex_count(); ++n) {
                ++out.instances;
                const bool in_composition = has_induced(composed, cycle(n));
                const bool in_parts = has_induced(*host.s, cycle(n)) || has_induced(*h, cycle(n));
                if (in_composition != in_parts)
                    out.ces.push_back({composition_str(spec),
                                       "C" + std::to_string(n) + " containment mismatch: composed=" +
                                           bool_str(in_composition) + " parts=" + bool_str(in_parts)});
            }
        }
        return out;
    };
    return run_sweep("lemma3",
                     "split graphs |S| <= " + std::to_string(s_bound) + " with every partition, H <= " +
                         std::to_string(h_bound) + " vertices, all cycle lengths",
                     hosts.size(), opt, per_item);
}

VerificationReport verify_lemma_half_join(const VerifyOptions& opt, std::vector<int> cycle_lens) {
    const int max_n = opt.max_vertices;
    if (max_n > 9) throw std::invalid_argument("verify_lemma_half_join: max_vertices must be <= 9");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, max_n, storage);
    if (cycle_lens.empty())
        for (int k = 5; k <= max_n; ++k) cycle_lens.push_back(k);
    std::vector<int> usable, skipped;
    for (int k : cycle_lens) {
        if (k < 5) throw std::invalid_argument("verify_lemma_half_join: cycle length must be >= 5");
        (k <= max_n ? usable : skipped).push_back(k);
    }
    SequenceItems items = sequence_items(u, max_n);
    const Mutant mutant = opt.mutant;

    auto per_item = [&](std::size_t i) {
        ItemOutcome out;
        const DegreeSequence& d = *items.seqs[i];
        auto reals = items.reals[i];
        for (int k : usable) {
            if (k > d.length()) continue;
            // Hypothesis: d excludes C_{k-1}. The mutant drops the filter.
            if (mutant != Mutant::skip_hypothesis && !excludes_graph_over(reals, cycle(k - 1)))
                continue;
            for (const Graph& g : reals) {
                const int n = g.vertex_count();
                for_each_k_subset(n, k, [&](VertexSet c) {
                    if (!induces_chordless_cycle(g, c)) return false;
                    ++out.instances;
                    const std::string item = seq_label(d) + " / " + to_graph6(g);
                    VertexSet complete_side = 0, independent_side = 0;
                    for (int v = 0; v < n; ++v) {
                        if (c & vertex_bit(v)) continue;
                        const int links = std::popcount(g.neighbors(v) & c);
                        if (links == k)
                            complete_side |= vertex_bit(v);
                        else if (links == 0)
                            independent_side |= vertex_bit(v);
                        else
                            out.ces.push_back(
                                {item, "vertex " + std::to_string(v) +
                                           " is neither complete nor anticomplete to an induced C" +
                                           std::to_string(k)});
                    }
                    if ((complete_side | independent_side | c) != g.vertices()) return false;
                    bool clique_ok = true;
                    for (int a = 0; a < n && clique_ok; ++a)
                        if ((complete_side & vertex_bit(a)) &&
                            (complete_side & ~vertex_bit(a) & ~g.neighbors(a)) != 0)
                            clique_ok = false;
                    if (!clique_ok)
                        out.ces.push_back({item, "complete side of the half join is not a clique"});
                    bool independent_ok = true;
                    for (int b = 0; b < n && independent_ok; ++b)
                        if ((independent_side & vertex_bit(b)) &&
                            (g.neighbors(b) & independent_side) != 0)
                            independent_ok = false;
                    if (!independent_ok)
                        out.ces.push_back(
                            {item, "anticomplete side of the half join is not independent"});
                    // Rebuild the composition with vertices reordered as
                    // (exterior ascending, cycle ascending) and compare.
                    const VertexSet exterior = g.vertices() & ~c;
                    Graph s_part = induced_subgraph(g, exterior);
                    SplitPartition p;
                    int pos = 0;
                    for (int v = 0; v < n; ++v) {
                        if (!(exterior & vertex_bit(v))) continue;
                        ((complete_side & vertex_bit(v)) ? p.clique_side : p.independent_side) |=
                            vertex_bit(pos);
                        ++pos;
                    }
                    if (!is_valid_split_partition(s_part, p)) return false;  // reported above
                    Graph rebuilt = compose({s_part, p, induced_subgraph(g, c), std::nullopt});
                    std::vector<int> order;
                    for (int v = 0; v < n; ++v)
                        if (exterior & vertex_bit(v)) order.push_back(v);
                    for (int v = 0; v < n; ++v)
                        if (c & vertex_bit(v)) order.push_back(v);
                    Graph expected(n);
                    for (int a = 0; a < n; ++a)
                        for (int b = a + 1; b < n; ++b)
                            if (g.has_edge(order[a], order[b])) expected.add_edge(a, b);
                    if (rebuilt != expected)
                        out.ces.push_back({item, "graph is not the half join rebuilt from its parts"});
                    return false;
                });
            }
        }
        return out;
    };
    auto report = run_sweep(
        "lemma4", "graphical sequences of length <= " + std::to_string(max_n) + ", induced cycles",
        items.seqs.size(), opt, per_item);
    for (int k : skipped)
        report.notes.push_back("skipped k=" + std::to_string(k) +
                               ": cycle exceeds the vertex bound, not checkable");
    std::string ks;
    for (int k : usable) ks += (ks.empty() ? "" : ",") + std::to_string(k);
    report.universe += ", k in {" + ks + "}";
    return report;
}

namespace {

VerificationReport theorem_sweep(const std::string& claim, const std::string& what,
                                 const VerifyOptions& opt, ExclusionQuery query, int n) {
    const int max_n = opt.max_vertices;
    const int cap = opt.allow_slow ? 9 : 8;
    if (max_n > cap)
        throw std::invalid_argument(claim + ": max_vertices must be <= " + std::to_string(cap));
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, max_n, storage);
    SequenceItems items = sequence_items(u, max_n);
    const Mutant mutant = opt.mutant;

    auto per_item = [&, query, n](std::size_t i) {
        ItemOutcome out;
        out.instances = 1;
        const DegreeSequence& d = *items.seqs[i];
        auto reals = items.reals[i];
        if (reals.empty()) {
            out.ces.push_back({seq_label(d), "graphical sequence has no realization in the catalog"});
            return out;
        }
        Classification cls;
        switch (query) {
            case ExclusionQuery::cycle_n:
            case ExclusionQuery::square: cls = classify_exclusion_over(d, n, reals); break;
            case ExclusionQuery::matching: cls = classify_matching_over(d, reals); break;
            case ExclusionQuery::c4_and_c5: cls = classify_c4_c5_over(d, reals); break;
            case ExclusionQuery::m2_and_c4: cls = classify_m2_c4_over(d, reals); break;
        }
        if (query == ExclusionQuery::m2_and_c4) cls.split_sequence = split_sequence_check(d, mutant);
        bool hit = cls.structural_hit();
        if (mutant == Mutant::drop_cycle_class) {
            Classification trimmed = cls;
            trimmed.witness_b.reset();
            hit = trimmed.structural_hit();
        }
        if (cls.excludes != hit) {
            std::string classes;
            for (const auto& name : cls.class_names()) classes += " " + name;
            out.ces.push_back({seq_label(d), "excludes=" + bool_str(cls.excludes) +
                                                 " but structural classes are{" + classes + " }"});
        }
        if (!cls.witnesses_valid())
            out.ces.push_back({seq_label(d), "a classification witness failed revalidation"});
        return out;
    };
    return run_sweep(claim,
                     what + " over graphical sequences of length <= " + std::to_string(max_n),
                     items.seqs.size(), opt, per_item);
}

}  // namespace

VerificationReport verify_theorem_cycle(int n, const VerifyOptions& opt) {
    if (n < 4) throw std::invalid_argument("verify_theorem_cycle: n must be >= 4");
    return theorem_sweep("thm-n:" + std::to_string(n), "excluding C" + std::to_string(n), opt,
                         n == 4 ? ExclusionQuery::square : ExclusionQuery::cycle_n, n);
}

VerificationReport verify_theorem_matching(const VerifyOptions& opt) {
    return theorem_sweep("thm-m2", "excluding the two-edge matching", opt,
                         ExclusionQuery::matching, 0);
}

VerificationReport verify_cor_c4_c5(const VerifyOptions& opt) {
    return theorem_sweep("cor-c4c5", "excluding C4 and C5", opt, ExclusionQuery::c4_and_c5, 0);
}

VerificationReport verify_cor_m2_c4(const VerifyOptions& opt) {
    return theorem_sweep("cor-m2c4", "excluding M2 and C4", opt, ExclusionQuery::m2_and_c4, 0);
}

VerificationReport verify_prop9_graphs(const VerifyOptions& opt) {
    const int max_n = opt.max_vertices;
    if (max_n > 8) throw std::invalid_argument("verify_prop9_graphs: max_vertices must be <= 8");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, max_n, storage);
    std::vector<const Graph*> graphs;
    for (int n = 0; n <= max_n; ++n)
        for (const Graph& g : u.graphs_by_n[n]) graphs.push_back(&g);

    auto per_item = [&](std::size_t i) {
        ItemOutcome out;
        out.instances = 1;
        const Graph& g = *graphs[i];
        const bool excludes_both = !has_induced(g, matching(2)) && !has_induced(g, cycle(4));
        const M2C4Structure st = graph_m2_c4_structure(g);
        const bool structured = st.kind != M2C4StructureKind::neither;
        if (excludes_both != structured)
            out.ces.push_back({to_graph6(g), "excludes {M2,C4}=" + bool_str(excludes_both) +
                                                 " but split/pentagon structure=" +
                                                 bool_str(structured)});
        if (st.kind == M2C4StructureKind::split &&
            !is_valid_split_partition(g, *st.partition))
            out.ces.push_back({to_graph6(g), "split witness failed revalidation"});
        if (st.kind == M2C4StructureKind::split_compose_c5 &&
            !is_isomorphic(compose(*st.spec), g))
            out.ces.push_back({to_graph6(g), "pentagon composition witness failed revalidation"});
        return out;
    };
    return run_sweep("prop9", "all graphs on <= " + std::to_string(max_n) + " vertices",
                     graphs.size(), opt, per_item);
}

VerificationReport verify_enumeration_counts(const VerifyOptions& opt) {
    const int max_n = opt.max_vertices;
    if (max_n > kMaxAllGraphsN)
        throw std::invalid_argument("verify_enumeration_counts: max_vertices must be <= 9");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, max_n, storage);
    auto start = Clock::now();
    VerificationReport report;
    report.claim = "enumeration";
    report.universe = "graph and sequence universes for n <= " + std::to_string(max_n);
    // Pinned regression values: unlabeled graph and graphical sequence counts.
    const std::vector<std::uint64_t> graph_counts = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
    const std::vector<std::uint64_t> sequence_counts = {1,   1,    2,    4,    11,  31,
                                                        102, 342,  1213, 4361, 16016};
    for (int n = 0; n <= max_n; ++n) {
        ++report.instances;
        if (u.graphs_by_n[n].size() != graph_counts[n])
            report.counterexamples.push_back(
                {"n=" + std::to_string(n),
                 "graph count " + std::to_string(u.graphs_by_n[n].size()) + " != pinned " +
                     std::to_string(graph_counts[n])});
        if (u.sequences_by_n[n].size() != sequence_counts[n])
            report.counterexamples.push_back(
                {"n=" + std::to_string(n),
                 "sequence count " + std::to_string(u.sequences_by_n[n].size()) + " != pinned " +
                     std::to_string(sequence_counts[n])});
        // Degree sequences of the graph universe, deduplicated, must equal
        // the Erdos-Gallai enumeration, and every graph must be canonical.
        std::vector<DegreeSequence> from_graphs;
        for (const Graph& g : u.graphs_by_n[n]) {
            from_graphs.push_back(degree_sequence_of(g));
            if (canonical_form(g) != g)
                report.counterexamples.push_back(
                    {to_graph6(g), "universe graph is not its own canonical form"});
            ++report.instances;
        }
        std::sort(from_graphs.begin(), from_graphs.end(), std::greater<>());
        from_graphs.erase(std::unique(from_graphs.begin(), from_graphs.end()), from_graphs.end());
        std::vector<DegreeSequence> listed = u.sequences_by_n[n];
        std::sort(listed.begin(), listed.end(), std::greater<>());
        if (from_graphs != listed)
            report.counterexamples.push_back(
                {"n=" + std::to_string(n),
                 "degree sequences of the graph universe do not match the sequence universe"});
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.elapsed_seconds = seconds_since(start);
    return report;
}

GadgetPair gadget_contract_subdivide(const Graph& g, VertexSet cycle_set, int x, int y, int z,
                                     int v) {
    const int n = g.vertex_count();
    if ((cycle_set & ~g.vertices()) != 0)
        throw std::invalid_argument("gadget_contract_subdivide: cycle set outside the graph");
    if (set_size(cycle_set) < 5)
        throw std::invalid_argument("gadget_contract_subdivide: cycle needs at least 5 vertices");
    if (!induces_chordless_cycle(g, cycle_set))
        throw std::invalid_argument(
            "gadget_contract_subdivide: set does not induce a chordless cycle");
    auto on_cycle = [&](int w) { return w >= 0 && w < n && (cycle_set & vertex_bit(w)); };
    if (x < 0 || x >= n || on_cycle(x))
        throw std::invalid_argument("gadget_contract_subdivide: x must lie outside the cycle");
    if (!on_cycle(y)) throw std::invalid_argument("gadget_contract_subdivide: y must lie on the cycle");
    if (!on_cycle(z)) throw std::invalid_argument("gadget_contract_subdivide: z must lie on the cycle");
    if (!on_cycle(v)) throw std::invalid_argument("gadget_contract_subdivide: v must lie on the cycle");
    if (!g.has_edge(x, y))
        throw std::invalid_argument("gadget_contract_subdivide: x must be adjacent to y");
    if (g.has_edge(x, z))
        throw std::invalid_argument("gadget_contract_subdivide: x must not be adjacent to z");
    if (v == y) throw std::invalid_argument("gadget_contract_subdivide: v must differ from y");
    if (!g.has_edge(v, z))
        throw std::invalid_argument("gadget_contract_subdivide: v must be a cycle neighbor of z");

    const VertexSet kset = cycle_set | vertex_bit(x);
    std::vector<int> pos(n, -1);
    int next = 0;
    for (int w = 0; w < n; ++w)
        if (kset & vertex_bit(w)) pos[w] = next++;
    Graph k_graph = induced_subgraph(g, kset);
    const int drop = std::max(pos[v], pos[z]);
    auto shift = [&](int w) { return w < drop ? w : w - 1; };
    Graph contracted = contract_pair(k_graph, pos[v], pos[z]);
    Graph k_prime = subdivide_edge(contracted, shift(pos[x]), shift(pos[y]));
    if (degree_sequence_of(k_graph) != degree_sequence_of(k_prime))
        throw std::logic_error("gadget_contract_subdivide: degree sequence not preserved");
    const VertexSet rest = k_prime.vertices() & ~vertex_bit(shift(pos[x])) &
                           ~vertex_bit(k_prime.vertex_count() - 1);
    if (!is_isomorphic(induced_subgraph(k_prime, rest), cycle(set_size(cycle_set) - 1)))
        throw std::logic_error("gadget_contract_subdivide: residue is not the shorter cycle");
    return {std::move(k_graph), std::move(k_prime)};
}

Graph gadget_rewire(const Graph& g, int c1, int c3, int x, int y) {
    if (c1 == c3 || c1 == x || c1 == y || c3 == x || c3 == y || x == y)
        throw std::invalid_argument("gadget_rewire: the four vertices must be distinct");
    if (g.has_edge(c1, c3)) throw std::invalid_argument("gadget_rewire: c1c3 must be a non-edge");
    if (!g.has_edge(c3, x)) throw std::invalid_argument("gadget_rewire: c3x must be an edge");
    if (g.has_edge(x, y)) throw std::invalid_argument("gadget_rewire: xy must be a non-edge");
    if (!g.has_edge(y, c1)) throw std::invalid_argument("gadget_rewire: yc1 must be an edge");
    Graph out = g;
    out.add_edge(c1, c3);
    out.remove_edge(c3, x);
    out.add_edge(x, y);
    out.remove_edge(y, c1);
    if (degree_sequence_of(out) != degree_sequence_of(g))
        throw std::logic_error("gadget_rewire: degree sequence not preserved");
    return out;
}

std::pair<DegreeSequence, DegreeSequence> gadget_matching_pair(int k) {
    if (k < 5) throw std::invalid_argument("gadget_matching_pair: k must be at least 5");
    return {degree_sequence_of(disjoint_union(cycle(k), path(2))),
            degree_sequence_of(disjoint_union(cycle(k - 1), path(3)))};
}

VerificationReport verify_gadgets(const VerifyOptions& opt) {
    auto start = Clock::now();
    VerificationReport report;
    report.claim = "gadgets";
    report.universe = std::to_string(opt.gadget_trials) +
                      " random configurations per surgery plus fixed identities";
    auto fail = [&](const std::string& item, const std::string& detail) {
        report.counterexamples.push_back({item, detail});
    };

    // Worked examples: a pendant vertex on C5 and on C6.
    for (int k : {5, 6}) {
        Graph g = cycle(k);
        g = disjoint_union(g, empty_graph(1));
        g.add_edge(0, k);  // x = k, adjacent to y = 0 only
        ++report.instances;
        try {
            GadgetPair pair = gadget_contract_subdivide(g, full_set(k), k, 0, 2, 3);
            std::vector<int> expect = {3, 1};
            for (int i = 0; i < k - 1; ++i) expect.push_back(2);
            if (degree_sequence_of(pair.k_graph) != DegreeSequence(expect))
                fail("pendant on C" + std::to_string(k), "unexpected degree sequence for K");
        } catch (const std::exception& e) {
            fail("pendant on C" + std::to_string(k), e.what());
        }
    }
    // Worked rewire: two nonadjacent vertices complete to the cycle.
    for (int k : {5, 6}) {
        Graph g = cycle(k);
        g = disjoint_union(g, empty_graph(2));
        for (int i = 0; i < k; ++i) {
            g.add_edge(i, k);
            g.add_edge(i, k + 1);
        }
        ++report.instances;
        try {
            Graph rewired = gadget_rewire(g, 0, 2, k, k + 1);
            const VertexSet shorter = full_set(k) & ~vertex_bit(1);
            if (!induces_chordless_cycle(rewired, shorter))
                fail("C" + std::to_string(k) + " plus two complete vertices",
                     "rewire did not open the shorter cycle");
        } catch (const std::exception& e) {
            fail("C" + std::to_string(k) + " plus two complete vertices", e.what());
        }
    }

    std::mt19937 rng(opt.gadget_seed);
    auto rand_below = [&rng](int m) { return static_cast<int>(rng() % static_cast<unsigned>(m)); };

    // Randomized contract+subdivide configurations: a cycle plus a few
    // attachment vertices, x mixed on the cycle.
    std::uint64_t done = 0, attempts = 0;
    while (done < opt.gadget_trials && attempts < opt.gadget_trials * 200) {
        ++attempts;
        const int k = 5 + rand_below(4);
        const int extras = 1 + rand_below(3);
        Graph g(k + extras);
        for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
        for (int e = k; e < k + extras; ++e)
            for (int w = 0; w < e; ++w)
                if (rng() & 1u) g.add_edge(e, w);
        int x = -1;
        for (int e = k; e < k + extras && x < 0; ++e) {
            const int links = std::popcount(g.neighbors(e) & full_set(k));
            if (links >= 1 && links <= k - 1) x = e;
        }
        if (x < 0) continue;
        std::vector<int> nbrs, nonnbrs;
        for (int i = 0; i < k; ++i)
            (g.has_edge(x, i) ? nbrs : nonnbrs).push_back(i);
        const int y = nbrs[rand_below(static_cast<int>(nbrs.size()))];
        const int z = nonnbrs[rand_below(static_cast<int>(nonnbrs.size()))];
        const int v = (z + 1) % k != y ? (z + 1) % k : (z + k - 1) % k;
        ++report.instances;
        ++done;
        try {
            gadget_contract_subdivide(g, full_set(k), x, y, z, v);
        } catch (const std::exception& e) {
            fail("random contract+subdivide " + to_graph6(g), e.what());
        }
    }
    if (done < opt.gadget_trials)
        report.notes.push_back("contract+subdivide: only " + std::to_string(done) +
                               " valid configurations sampled");

    // Randomized rewires in the lemma configuration, with optional noise
    // vertices attached arbitrarily.
    done = 0;
    attempts = 0;
    while (done < opt.gadget_trials && attempts < opt.gadget_trials * 200) {
        ++attempts;
        const int k = 5 + rand_below(4);
        const int extras = rand_below(3);
        Graph g(k + 2 + extras);
        for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
        for (int i = 0; i < k; ++i) {
            g.add_edge(i, k);
            g.add_edge(i, k + 1);
        }
        for (int e = k + 2; e < k + 2 + extras; ++e)
            for (int w = 0; w < e; ++w)
                if (rng() & 1u) g.add_edge(e, w);
        ++report.instances;
        ++done;
        try {
            Graph rewired = gadget_rewire(g, 0, 2, k, k + 1);
            const VertexSet shorter = full_set(k) & ~vertex_bit(1);
            if (!induces_chordless_cycle(rewired, shorter))
                fail("random rewire " + to_graph6(g), "rewire did not open the shorter cycle");
        } catch (const std::exception& e) {
            fail("random rewire " + to_graph6(g), e.what());
        }
    }

    // D(C_k u P2) = D(C_{k-1} u P3) for k in 5..10.
    for (int k = 5; k <= 10; ++k) {
        ++report.instances;
        auto [lhs, rhs] = gadget_matching_pair(k);
        if (lhs != rhs)
            fail("k=" + std::to_string(k),
                 "degree sequences differ: " + lhs.str() + " vs " + rhs.str());
    }
    // D(C_{n+k}) = D(C_n u C_k) whenever both cycles exist.
    for (int n = 4; n + 3 <= 10; ++n)
        for (int k = 3; n + k <= 10; ++k) {
            ++report.instances;
            if (degree_sequence_of(cycle(n + k)) !=
                degree_sequence_of(disjoint_union(cycle(n), cycle(k))))
                fail("n=" + std::to_string(n) + ",k=" + std::to_string(k),
                     "cycle union degree identity failed");
        }

    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.elapsed_seconds = seconds_since(start);
    return report;
}

ExclusionPoset build_exclusion_poset(const VerifyOptions& opt) {
    if (opt.max_vertices > 7)
        throw std::invalid_argument("build_exclusion_poset: max_vertices must be <= 7");
    std::optional<Universe> storage;
    const Universe& u = ensure_universe(opt, opt.max_vertices, storage);
    ExclusionPoset poset;
    for (int n = 0; n <= opt.max_vertices; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) poset.nodes.push_back(d);
    const int count = static_cast<int>(poset.nodes.size());
    auto start = Clock::now();

    // Induced degree sequences over every realization, per node.
    auto induced_sets = [&](std::size_t j) {
        std::vector<DegreeSequence> set;
        for (const Graph& g : u.realizations(poset.nodes[j])) {
            const int n = g.vertex_count();
            for (VertexSet s = 0;; ++s) {
                std::vector<int> degs;
                for (int v = 0; v < n; ++v)
                    if (s & vertex_bit(v)) degs.push_back(std::popcount(g.neighbors(v) & s));
                set.push_back(DegreeSequence(std::move(degs)));
                if (s == g.vertices()) break;
            }
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };
    std::vector<std::vector<DegreeSequence>> subs =
        opt.serial ? serial_map<std::vector<DegreeSequence>>(poset.nodes.size(), induced_sets)
                   : parallel_map<std::vector<DegreeSequence>>(poset.nodes.size(), opt.threads,
                                                               induced_sets);

    VerificationReport& report = poset.report;
    report.claim = "poset";
    report.universe =
        "graphical sequences of length <= " + std::to_string(opt.max_vertices) + ", all pairs";
    auto rel = [&](int i, int j) {
        return std::binary_search(subs[j].begin(), subs[j].end(), poset.nodes[i]);
    };
    const int words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> above(count, std::vector<std::uint64_t>(words, 0));
    for (int j = 0; j < count; ++j) {
        if (!rel(j, j))
            report.counterexamples.push_back({seq_label(poset.nodes[j]), "relation is not reflexive"});
        for (int i = 0; i < count; ++i) {
            ++report.instances;
            if (i != j && rel(i, j)) {
                poset.relation.emplace_back(i, j);
                below[j][i / 64] |= std::uint64_t{1} << (i % 64);
                above[i][j / 64] |= std::uint64_t{1} << (j % 64);
            }
        }
    }
    for (auto [i, j] : poset.relation) {
        // Antisymmetry and transitivity of the computed relation.
        if (below[i][j / 64] >> (j % 64) & 1)
            report.counterexamples.push_back({seq_label(poset.nodes[i]) + " / " +
                                                  seq_label(poset.nodes[j]),
                                              "relation is not antisymmetric"});
        for (int w = 0; w < words; ++w)
            if (below[i][w] & ~below[j][w]) {
                report.counterexamples.push_back({seq_label(poset.nodes[i]) + " / " +
                                                      seq_label(poset.nodes[j]),
                                                  "relation is not transitive"});
                break;
            }
    }
    for (auto [i, j] : poset.relation) {
        // Cover iff nothing sits strictly between i and j.
        bool covered = false;
        for (int w = 0; w < words && !covered; ++w)
            if (above[i][w] & below[j][w]) covered = true;
        if (!covered) poset.covers.emplace_back(i, j);
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.elapsed_seconds = seconds_since(start);
    return poset;
}

std::string poset_dot(const ExclusionPoset& poset) {
    std::ostringstream out;
    out << "digraph exclusion {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << seq_label(poset.nodes[i]) << "\"];\n";
    for (auto [i, j] : poset.covers) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string poset_csv(const ExclusionPoset& poset) {
    std::ostringstream out;
    out << "from,to\n";
    for (auto [i, j] : poset.covers)
        out << '"' << seq_label(poset.nodes[i]) << "\",\"" << seq_label(poset.nodes[j]) << "\"\n";
    return out.str();
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "claim " << report.claim << ": " << (report.ok() ? "OK" : "FAIL")
        << "; universe: " << report.universe << "; instances: " << report.instances
        << "; counterexamples: " << report.counterexamples.size() << "; elapsed: ";
    out.precision(2);
    out << std::fixed << report.elapsed_seconds << "s\n";
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    for (const auto& ce : report.counterexamples)
        out << "  counterexample: " << ce.item << " -- " << ce.detail << "\n";
    return out.str();
}

std::string reports_json_text(const std::vector<VerificationReport>& reports) {
    nlohmann::json doc;
    doc["claims"] = nlohmann::json::array();
    bool ok = true;
    for (const auto& report : reports) {
        nlohmann::json claim;
        claim["claim"] = report.claim;
        claim["universe"] = report.universe;
        claim["instances"] = report.instances;
        claim["notes"] = report.notes;
        claim["counterexamples"] = nlohmann::json::array();
        for (const auto& ce : report.counterexamples)
            claim["counterexamples"].push_back({{"item", ce.item}, {"detail", ce.detail}});
        doc["claims"].push_back(std::move(claim));
        ok = ok && report.ok();
    }
    doc["ok"] = ok;
    return doc.dump(2) + "\n";
}

bool known_claim(std::string_view name) {
    if (name == "all" || name == "enumeration" || name == "prop1" || name == "lemma3" ||
        name == "lemma4" || name == "thm-m2" || name == "cor-c4c5" || name == "cor-m2c4" ||
        name == "prop9" || name == "gadgets")
        return true;
    if (name.substr(0, 6) == "thm-n:") {
        int n = 0;
        auto rest = name.substr(6);
        for (char c : rest)
            if (c < '0' || c > '9') return false;
        return !rest.empty() && (n = std::stoi(std::string(rest))) >= 4;
    }
    return false;
}

std::vector<VerificationReport> run_claims(const std::vector<std::string>& claims,
                                           const VerifyOptions& opt) {
    std::vector<std::string> expanded;
    for (const auto& name : claims) {
        if (!known_claim(name)) throw std::invalid_argument("unknown claim: " + name);
        if (name == "all") {
            for (const char* c : {"enumeration", "prop1", "lemma3", "lemma4", "thm-n:4", "thm-n:5",
                                  "thm-m2", "cor-c4c5", "cor-m2c4", "prop9", "gadgets"})
                expanded.push_back(c);
        } else {
            expanded.push_back(name);
        }
    }
    const int universe_max = std::min(opt.max_vertices, kMaxAllGraphsN);
    std::optional<Universe> storage;
    VerifyOptions shared = opt;
    shared.universe = &ensure_universe(opt, universe_max, storage);
    shared.max_vertices = universe_max;

    std::vector<VerificationReport> reports;
    for (const auto& name : expanded) {
        VerifyOptions local = shared;
        if (name == "enumeration") {
            reports.push_back(verify_enumeration_counts(local));
        } else if (name == "prop1") {
            local.max_vertices = std::min(local.max_vertices, 8);
            reports.push_back(verify_prop_split(local));
        } else if (name == "lemma3") {
            reports.push_back(verify_lemma_s_or_h(std::min(local.max_vertices, 4),
                                                  std::min(local.max_vertices, 5), local));
        } else if (name == "lemma4") {
            reports.push_back(verify_lemma_half_join(local));
        } else if (name == "thm-m2") {
            local.max_vertices = std::min(local.max_vertices, local.allow_slow ? 9 : 8);
            reports.push_back(verify_theorem_matching(local));
        } else if (name == "cor-c4c5") {
            local.max_vertices = std::min(local.max_vertices, local.allow_slow ? 9 : 8);
            reports.push_back(verify_cor_c4_c5(local));
        } else if (name == "cor-m2c4") {
            local.max_vertices = std::min(local.max_vertices, local.allow_slow ? 9 : 8);
            reports.push_back(verify_cor_m2_c4(local));
        } else if (name == "prop9") {
            local.max_vertices = std::min(local.max_vertices, 8);
            reports.push_back(verify_prop9_graphs(local));
        } else if (name == "gadgets") {
            reports.push_back(verify_gadgets(local));
        } else {
            const int n = std::stoi(name.substr(6));
            local.max_vertices = std::min(local.max_vertices, local.allow_slow ? 9 : 8);
            reports.push_back(verify_theorem_cycle(n, local));
        }
    }
    return reports;
}

}  // namespace degseq
