#pragma once

#include <optional>
#include <span>
#include <string>

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"

namespace degseq {

// A bipartition of a graph's vertex set into a clique and an independent set.
struct SplitPartition {
    VertexSet clique_side = 0;
    VertexSet independent_side = 0;

    auto operator<=>(const SplitPartition&) const = default;
};

bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

// Hammer-Simeone: build the threshold partition (the m top-degree vertices,
// m the last index with d_i >= i-1) and test it.
bool is_split_graph(const Graph& g);

// Independent oracle: no induced two-edge matching, C4, or C5.
bool is_split_graph_by_forbidden(const Graph& g);

// Exhaustive partition search. Among valid partitions, the clique side is
// maximum size, ties broken by lexicographically least index list.
std::optional<SplitPartition> find_split_partition(const Graph& g);

// Erdos-Gallai equality at k = max{i : d_i >= i-1}. Equivalent to every
// realization of d being split.
bool is_split_sequence(const DegreeSequence& d);

// (S, A, B) o H: disjoint union of the split graph and H, plus every edge
// between the clique side and H.
struct CompositionSpec {
    Graph split_part;
    SplitPartition partition;
    Graph attached;
    // Set when the attached graph is a named family (for serialization).
    std::optional<GraphFamily> attached_family;
};

Graph compose(const CompositionSpec& spec);

// "graph6 of S | A indices | H" textual form.
std::string composition_str(const CompositionSpec& spec);

// Search for a witness that d is the degree sequence of some split graph
// composed with a k-cycle. Scans realizations in canonical order and takes
// the first decomposition found, so the result is deterministic.
std::optional<CompositionSpec> match_split_compose_cycle(const DegreeSequence& d, int cycle_len,
                                                         int max_length = kDefaultEnumBound);
std::optional<CompositionSpec> match_split_compose_cycle_over(
    std::span<const Graph> realizations, const DegreeSequence& d, int cycle_len);

// Decompose one concrete graph as (S, A, B) o C_k if possible.
std::optional<CompositionSpec> decompose_around_cycle(const Graph& g, int cycle_len);

}  // namespace degseq
