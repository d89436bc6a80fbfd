#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/split.hpp"

namespace degseq {

enum class ExclusionQuery { cycle_n, square, matching, c4_and_c5, m2_and_c4 };

std::string query_str(ExclusionQuery q, int n);

// Result of classifying a degree sequence against one of the exclusion
// structure theorems. `excludes` is always the brute-force ground truth over
// the realization space; the structural class fields are computed
// independently, so excludes == structural_hit() is exactly the theorem.
struct Classification {
    ExclusionQuery query = ExclusionQuery::square;
    int cycle_len = 0;  // n for cycle_n (4 for square); unused otherwise
    DegreeSequence sequence;

    bool excludes = false;
    bool forcibly = false;        // forcibly-chordal / -antichordal / no hole >= n
    bool split_sequence = false;  // the D(SPLIT) class, m2_and_c4 only
    std::optional<CompositionSpec> witness_a;  // SPLIT o C_{n+1} (C5 for matching/m2_and_c4)
    std::optional<CompositionSpec> witness_b;  // SPLIT o C_{n+2} (K33 for matching, C6 for c4_and_c5)
    std::optional<PrecedesWitness> containment;  // why excludes is false, when it is
    std::uint64_t realizations_checked = 0;

    bool structural_hit() const;
    bool theorem_agrees() const { return excludes == structural_hit(); }
    std::vector<std::string> class_names() const;

    // Re-check every stored witness from scratch.
    bool witnesses_valid() const;
};

Classification classify_exclusion(const DegreeSequence& d, int n,
                                  int max_length = kDefaultEnumBound);
Classification classify_square(const DegreeSequence& d, int max_length = kDefaultEnumBound);
Classification classify_matching(const DegreeSequence& d, int max_length = kDefaultEnumBound);
Classification classify_c4_c5(const DegreeSequence& d, int max_length = kDefaultEnumBound);
Classification classify_m2_c4(const DegreeSequence& d, int max_length = kDefaultEnumBound);

// Catalog-backed variants; `realizations` must be the full realization list
// of d (one per isomorphism class).
Classification classify_exclusion_over(const DegreeSequence& d, int n,
                                       std::span<const Graph> realizations);
Classification classify_matching_over(const DegreeSequence& d,
                                      std::span<const Graph> realizations);
Classification classify_c4_c5_over(const DegreeSequence& d, std::span<const Graph> realizations);
Classification classify_m2_c4_over(const DegreeSequence& d, std::span<const Graph> realizations);

// Graph-level structure for excluding {M2, C4}: split, or a split graph
// composed with a pentagon, or neither.
enum class M2C4StructureKind { split, split_compose_c5, neither };

struct M2C4Structure {
    M2C4StructureKind kind = M2C4StructureKind::neither;
    std::optional<SplitPartition> partition;  // when split
    std::optional<CompositionSpec> spec;      // when split_compose_c5
};

M2C4Structure graph_m2_c4_structure(const Graph& g);

}  // namespace degseq
