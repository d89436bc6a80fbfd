#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"

namespace degseq {

constexpr int kMaxAllGraphsN = 9;
constexpr int kMaxSequenceEnumN = 10;

// One representative per isomorphism class of graphs on n vertices, in
// sorted order. Generated by canonical augmentation from the (n-1)-vertex
// level; set serial=true to force the single-threaded reference path.
std::vector<Graph> all_graphs(int n, int threads = 0, bool serial = false);

// Every graphical nonincreasing sequence of length n with entries in
// [0, n-1], in lexicographically descending order.
std::vector<DegreeSequence> all_graphical_sequences(int n);

// The exhaustive universes the verifier sweeps over: all graphs per vertex
// count, all graphical sequences per length, and the realization catalog
// (graphs grouped by degree sequence).
struct Universe {
    int max_n = 0;
    std::vector<std::vector<Graph>> graphs_by_n;
    std::vector<std::vector<DegreeSequence>> sequences_by_n;
    std::vector<std::map<DegreeSequence, std::vector<Graph>>> catalog_by_n;

    static Universe build(int max_n, int threads = 0, bool serial = false);

    // Alternative universe source: externally generated graph6 lines. The
    // graphs are canonicalized, deduplicated, and grouped by vertex count;
    // every level 0..max_n must be nonempty.
    static Universe from_graphs(std::vector<Graph> graphs, int max_n);

    std::span<const Graph> realizations(const DegreeSequence& d) const;
};

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs);
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace degseq
