#include "degseq/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace degseq {

std::string query_str(ExclusionQuery q, int n) {
    switch (q) {
        case ExclusionQuery::cycle_n: return "C" + std::to_string(n);
        case ExclusionQuery::square: return "C4";
        case ExclusionQuery::matching: return "M2";
        case ExclusionQuery::c4_and_c5: return "C4C5";
        case ExclusionQuery::m2_and_c4: return "M2C4";
    }
    return "?";
}

bool Classification::structural_hit() const {
    switch (query) {
        case ExclusionQuery::cycle_n:
        case ExclusionQuery::square:
        case ExclusionQuery::matching:
            return forcibly || witness_a.has_value() || witness_b.has_value();
        case ExclusionQuery::c4_and_c5:
            return forcibly || witness_b.has_value();
        case ExclusionQuery::m2_and_c4:
            return split_sequence || witness_a.has_value();
    }
    return false;
}

std::vector<std::string> Classification::class_names() const {
    std::vector<std::string> names;
    const bool is_matching = query == ExclusionQuery::matching;
    if (forcibly) {
        if (is_matching)
            names.push_back("forcibly-antichordal");
        else if (cycle_len == 4 || query == ExclusionQuery::c4_and_c5)
            names.push_back("forcibly-chordal");
        else
            names.push_back("forcibly-no-hole-geq-" + std::to_string(cycle_len));
    }
    if (split_sequence) names.push_back("split");
    if (witness_a) {
        int k = is_matching || query == ExclusionQuery::m2_and_c4 ? 5 : cycle_len + 1;
        names.push_back("split-compose-C" + std::to_string(k));
    }
    if (witness_b) {
        if (is_matching)
            names.push_back("split-compose-K33");
        else
            names.push_back("split-compose-C" +
                            std::to_string(query == ExclusionQuery::c4_and_c5 ? 6 : cycle_len + 2));
    }
    return names;
}

namespace {

bool composition_matches(const CompositionSpec& spec, const DegreeSequence& d) {
    if (!is_valid_split_partition(spec.split_part, spec.partition)) return false;
    if (spec.attached_family &&
        !is_isomorphic(spec.attached, construct(*spec.attached_family)))
        return false;
    return degree_sequence_of(compose(spec)) == d;
}

// Excluded graphs whose containment could have defeated `excludes`.
std::vector<Graph> query_targets(ExclusionQuery q, int n) {
    switch (q) {
        case ExclusionQuery::cycle_n:
        case ExclusionQuery::square: return {cycle(n)};
        case ExclusionQuery::matching: return {matching(2)};
        case ExclusionQuery::c4_and_c5: return {cycle(4), cycle(5)};
        case ExclusionQuery::m2_and_c4: return {matching(2), cycle(4)};
    }
    return {};
}

}  // namespace

bool Classification::witnesses_valid() const {
    if (witness_a && !composition_matches(*witness_a, sequence)) return false;
    if (witness_b && !composition_matches(*witness_b, sequence)) return false;
    if (containment) {
        bool target_ok = false;
        for (const Graph& t : query_targets(query, cycle_len))
            if (degree_sequence_of(containment->inner) == degree_sequence_of(t)) target_ok = true;
        if (!target_ok) return false;
        if (!containment->validate(degree_sequence_of(containment->inner), sequence)) return false;
    }
    return true;
}

Classification classify_exclusion_over(const DegreeSequence& d, int n,
                                       std::span<const Graph> realizations) {
    if (n < 4) throw std::invalid_argument("classify_exclusion: n must be at least 4");
    Classification c;
    c.query = n == 4 ? ExclusionQuery::square : ExclusionQuery::cycle_n;
    c.cycle_len = n;
    c.sequence = d;
    c.containment = precedes_witness_over(realizations, degree_sequence_of(cycle(n)));
    c.excludes = !c.containment.has_value();
    auto forcibly = forcibly_holds_over(
        realizations, [n](const Graph& g) { return !has_hole_geq(g, n); });
    c.forcibly = forcibly.holds;
    c.realizations_checked = realizations.size();
    c.witness_a = match_split_compose_cycle_over(realizations, d, n + 1);
    c.witness_b = match_split_compose_cycle_over(realizations, d, n + 2);
    return c;
}

namespace {

std::vector<Graph> complement_realizations(std::span<const Graph> realizations) {
    std::vector<Graph> out;
    out.reserve(realizations.size());
    for (const Graph& g : realizations) out.push_back(canonical_form(complement(g)));
    std::sort(out.begin(), out.end());
    return out;
}

CompositionSpec complement_spec(const CompositionSpec& dual, Graph attached, GraphFamily family) {
    CompositionSpec out;
    out.split_part = complement(dual.split_part);
    out.partition = SplitPartition{dual.partition.independent_side, dual.partition.clique_side};
    out.attached = std::move(attached);
    out.attached_family = family;
    return out;
}

}  // namespace

Classification classify_matching_over(const DegreeSequence& d,
                                      std::span<const Graph> realizations) {
    Classification c;
    c.query = ExclusionQuery::matching;
    c.sequence = d;
    c.containment = precedes_witness_over(realizations, degree_sequence_of(matching(2)));
    c.excludes = !c.containment.has_value();
    // Complements of the realizations of d are exactly the realizations of
    // the complement sequence, so the square classification transfers: the
    // pentagon is self-complementary and the hexagon's complement shares its
    // degree sequence with K_{3,3}.
    auto dual_reals = complement_realizations(realizations);
    Classification dual = classify_exclusion_over(complement_sequence(d), 4, dual_reals);
    c.forcibly = dual.forcibly;
    if (dual.witness_a)
        c.witness_a = complement_spec(*dual.witness_a, cycle(5),
                                      GraphFamily{GraphFamily::Kind::cycle, 5, 0});
    if (dual.witness_b)
        c.witness_b = complement_spec(*dual.witness_b, complete_bipartite(3, 3),
                                      GraphFamily{GraphFamily::Kind::complete_bipartite, 3, 3});
    c.realizations_checked = dual.realizations_checked;
    return c;
}

Classification classify_c4_c5_over(const DegreeSequence& d,
                                   std::span<const Graph> realizations) {
    Classification c;
    c.query = ExclusionQuery::c4_and_c5;
    c.sequence = d;
    for (int n : {4, 5}) {
        if (c.containment) break;
        c.containment = precedes_witness_over(realizations, degree_sequence_of(cycle(n)));
    }
    c.excludes = !c.containment.has_value();
    auto forcibly = forcibly_holds_over(realizations, is_chordal);
    c.forcibly = forcibly.holds;
    c.realizations_checked = realizations.size();
    c.witness_b = match_split_compose_cycle_over(realizations, d, 6);
    return c;
}

Classification classify_m2_c4_over(const DegreeSequence& d,
                                   std::span<const Graph> realizations) {
    Classification c;
    c.query = ExclusionQuery::m2_and_c4;
    c.sequence = d;
    c.containment = precedes_witness_over(realizations, degree_sequence_of(matching(2)));
    if (!c.containment)
        c.containment = precedes_witness_over(realizations, degree_sequence_of(cycle(4)));
    c.excludes = !c.containment.has_value();
    c.split_sequence = is_split_sequence(d);
    c.realizations_checked = realizations.size();
    c.witness_a = match_split_compose_cycle_over(realizations, d, 5);
    return c;
}

namespace {

std::vector<Graph> checked_realizations(const DegreeSequence& d, int max_length,
                                        const char* op) {
    if (!is_graphical(d)) throw std::invalid_argument(std::string(op) + ": not graphical");
    return enumerate_realizations(d, max_length);
}

}  // namespace

Classification classify_exclusion(const DegreeSequence& d, int n, int max_length) {
    auto reals = checked_realizations(d, max_length, "classify_exclusion");
    return classify_exclusion_over(d, n, reals);
}

Classification classify_square(const DegreeSequence& d, int max_length) {
    return classify_exclusion(d, 4, max_length);
}

Classification classify_matching(const DegreeSequence& d, int max_length) {
    auto reals = checked_realizations(d, max_length, "classify_matching");
    return classify_matching_over(d, reals);
}

Classification classify_c4_c5(const DegreeSequence& d, int max_length) {
    auto reals = checked_realizations(d, max_length, "classify_c4_c5");
    return classify_c4_c5_over(d, reals);
}

Classification classify_m2_c4(const DegreeSequence& d, int max_length) {
    auto reals = checked_realizations(d, max_length, "classify_m2_c4");
    return classify_m2_c4_over(d, reals);
}

M2C4Structure graph_m2_c4_structure(const Graph& g) {
    M2C4Structure out;
    if (auto partition = find_split_partition(g)) {
        out.kind = M2C4StructureKind::split;
        out.partition = partition;
        return out;
    }
    if (auto spec = decompose_around_cycle(g, 5)) {
        out.kind = M2C4StructureKind::split_compose_c5;
        out.spec = spec;
        return out;
    }
    return out;
}

}  // namespace degseq
