#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

// Realization enumeration and everything built on it is desk scale; longer
// sequences are rejected rather than attempted.
constexpr int kDefaultEnumBound = 10;

// A nonincreasing sequence of nonnegative integers. Construction sorts, so
// any multiset of candidate degrees is accepted; whether it is graphical is
// a separate question.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> terms);

    // Comma-separated integers, whitespace tolerated, any order.
    static DegreeSequence parse(std::string_view text);

    const std::vector<int>& terms() const { return terms_; }
    int length() const { return static_cast<int>(terms_.size()); }
    int sum() const;
    std::string str() const;

    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<int> terms_;
};

DegreeSequence degree_sequence_of(const Graph& g);

// Erdos-Gallai test: even sum and every prefix inequality.
bool is_graphical(const DegreeSequence& d);

// Havel-Hakimi construction of a single realization.
Graph realize_one(const DegreeSequence& d);

// One representative per isomorphism class of graphs realizing d, in sorted
// canonical order. Empty iff d is not graphical.
std::vector<Graph> enumerate_realizations(const DegreeSequence& d,
                                          int max_length = kDefaultEnumBound);

// The multiset {n-1-d_i}; realizations of the output are exactly the
// complements of realizations of d.
DegreeSequence complement_sequence(const DegreeSequence& d);

// Certificate for d1 precedes d2: inner realizes d1, outer realizes d2, and
// embedding[i] is the outer vertex hosting inner vertex i.
struct PrecedesWitness {
    Graph inner;
    Graph outer;
    std::vector<int> embedding;

    bool validate(const DegreeSequence& d1, const DegreeSequence& d2) const;
};

// The exclusion preorder: some realization of d2 contains some realization
// of d1 as an induced subgraph.
bool precedes(const DegreeSequence& d1, const DegreeSequence& d2,
              int max_length = kDefaultEnumBound);
std::optional<PrecedesWitness> precedes_witness(const DegreeSequence& d1,
                                                const DegreeSequence& d2,
                                                int max_length = kDefaultEnumBound);

// d excludes h iff D(h) does not precede d.
bool excludes_graph(const DegreeSequence& d, const Graph& h,
                    int max_length = kDefaultEnumBound);

struct ForciblyResult {
    bool holds = false;
    std::optional<Graph> counterexample;
    std::uint64_t realizations_checked = 0;
};

// Does every realization of d satisfy the predicate?
ForciblyResult forcibly_holds(const DegreeSequence& d,
                              const std::function<bool(const Graph&)>& property,
                              int max_length = kDefaultEnumBound);

// Variants over a caller-supplied realization list, for sweeps that already
// hold the full universe and must not re-enumerate per query.
std::optional<PrecedesWitness> precedes_witness_over(std::span<const Graph> outer_realizations,
                                                     const DegreeSequence& d1);
bool excludes_graph_over(std::span<const Graph> realizations, const Graph& h);
ForciblyResult forcibly_holds_over(std::span<const Graph> realizations,
                                   const std::function<bool(const Graph&)>& property);

}  // namespace degseq
