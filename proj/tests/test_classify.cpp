#include <doctest.h>

#include <algorithm>

#include "degseq/classify.hpp"
#include "degseq/enumerate.hpp"

using namespace degseq;

namespace {

bool has_class(const Classification& cls, const std::string& name) {
    auto names = cls.class_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

TEST_CASE("classifying against the square") {
    auto edge = classify_square(DegreeSequence({1, 1}));
    CHECK(edge.excludes);
    CHECK(has_class(edge, "forcibly-chordal"));

    auto k4 = classify_square(DegreeSequence({3, 3, 3, 3}));
    CHECK(k4.excludes);
    CHECK(has_class(k4, "forcibly-chordal"));

    auto wheel = classify_square(DegreeSequence({5, 3, 3, 3, 3, 3}));
    CHECK(wheel.excludes);
    CHECK(has_class(wheel, "split-compose-C5"));
    CHECK(wheel.witnesses_valid());

    auto square = classify_square(DegreeSequence({2, 2, 2, 2}));
    CHECK(!square.excludes);
    CHECK(!square.structural_hit());
    REQUIRE(square.containment.has_value());
    CHECK(is_isomorphic(square.containment->inner, cycle(4)));

    auto pentagon = classify_square(DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(pentagon.excludes);
    CHECK(has_class(pentagon, "split-compose-C5"));
    CHECK(!pentagon.forcibly);

    auto hexagon = classify_square(DegreeSequence({2, 2, 2, 2, 2, 2}));
    CHECK(hexagon.excludes);
    CHECK(has_class(hexagon, "split-compose-C6"));
    CHECK(!has_class(hexagon, "forcibly-chordal"));
    CHECK(hexagon.theorem_agrees());
}

TEST_CASE("classifying against longer cycles") {
    auto hex_vs_c5 = classify_exclusion(DegreeSequence({2, 2, 2, 2, 2, 2}), 5);
    CHECK(hex_vs_c5.excludes);
    CHECK(has_class(hex_vs_c5, "split-compose-C6"));
    CHECK(!hex_vs_c5.forcibly);

    // (2^8) does not exclude C5: a pentagon plus a triangle realizes it.
    auto oct = classify_exclusion(DegreeSequence({2, 2, 2, 2, 2, 2, 2, 2}), 5);
    CHECK(!oct.excludes);
    CHECK(!oct.structural_hit());
    CHECK(oct.theorem_agrees());

    CHECK_THROWS_AS(classify_exclusion(DegreeSequence({2, 2, 2}), 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_square(DegreeSequence({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("classifying against the two-edge matching") {
    auto m2 = classify_matching(DegreeSequence({1, 1, 1, 1}));
    CHECK(!m2.excludes);
    CHECK(m2.theorem_agrees());

    auto pentagon = classify_matching(DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(pentagon.excludes);
    CHECK(has_class(pentagon, "split-compose-C5"));
    CHECK(pentagon.witnesses_valid());

    auto cubic = classify_matching(DegreeSequence({3, 3, 3, 3, 3, 3}));
    CHECK(cubic.excludes);
    CHECK(has_class(cubic, "split-compose-K33"));
    CHECK(!has_class(cubic, "forcibly-antichordal"));
    CHECK(cubic.witnesses_valid());
    REQUIRE(cubic.witness_b.has_value());
    CHECK(is_isomorphic(cubic.witness_b->attached, complete_bipartite(3, 3)));
}

TEST_CASE("matching classification mirrors the square on complements, to 7") {
    Universe u = Universe::build(7);
    for (int n = 0; n <= 7; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) {
            auto reals = u.realizations(d);
            auto direct = classify_matching_over(d, reals);
            std::vector<Graph> co_reals;
            for (const Graph& g : reals) co_reals.push_back(canonical_form(complement(g)));
            std::sort(co_reals.begin(), co_reals.end());
            auto dual = classify_exclusion_over(complement_sequence(d), 4, co_reals);
            CHECK(direct.excludes == dual.excludes);
            CHECK(direct.forcibly == dual.forcibly);
            CHECK(direct.witness_a.has_value() == dual.witness_a.has_value());
            CHECK(direct.witness_b.has_value() == dual.witness_b.has_value());
        }
}

TEST_CASE("the square case is the n=4 instance of the general theorem") {
    Universe u = Universe::build(6);
    for (int n = 0; n <= 6; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) {
            auto cls = classify_exclusion_over(d, 4, u.realizations(d));
            // "No hole on >= 4 vertices" is exactly chordality.
            CHECK(cls.forcibly == forcibly_holds(d, is_chordal).holds);
        }
}

TEST_CASE("classifying the corollary pairs") {
    auto pentagon = classify_c4_c5(DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(!pentagon.excludes);  // C5 realizes it
    CHECK(pentagon.theorem_agrees());

    auto hexagon = classify_c4_c5(DegreeSequence({2, 2, 2, 2, 2, 2}));
    CHECK(hexagon.excludes);
    CHECK(has_class(hexagon, "split-compose-C6"));

    auto triangle = classify_c4_c5(DegreeSequence({2, 2, 2}));
    CHECK(triangle.excludes);
    CHECK(has_class(triangle, "forcibly-chordal"));

    auto tri_m2c4 = classify_m2_c4(DegreeSequence({2, 2, 2}));
    CHECK(tri_m2c4.excludes);
    CHECK(has_class(tri_m2c4, "split"));

    auto pent_m2c4 = classify_m2_c4(DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(pent_m2c4.excludes);
    CHECK(has_class(pent_m2c4, "split-compose-C5"));

    auto matching_m2c4 = classify_m2_c4(DegreeSequence({1, 1, 1, 1}));
    CHECK(!matching_m2c4.excludes);
    CHECK(matching_m2c4.theorem_agrees());
}

TEST_CASE("all five classifications agree with brute force up to 6") {
    Universe u = Universe::build(6);
    for (int n = 0; n <= 6; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) {
            auto reals = u.realizations(d);
            for (int cn : {4, 5}) {
                auto cls = classify_exclusion_over(d, cn, reals);
                CHECK(cls.theorem_agrees());
                CHECK(cls.witnesses_valid());
            }
            CHECK(classify_matching_over(d, reals).theorem_agrees());
            CHECK(classify_c4_c5_over(d, reals).theorem_agrees());
            CHECK(classify_m2_c4_over(d, reals).theorem_agrees());
        }
}

TEST_CASE("graph-level M2/C4 structure") {
    auto k5 = graph_m2_c4_structure(complete(5));
    CHECK(k5.kind == M2C4StructureKind::split);
    REQUIRE(k5.partition.has_value());
    CHECK(is_valid_split_partition(complete(5), *k5.partition));

    CompositionSpec wheel_spec{complete(1), {vertex_bit(0), 0}, cycle(5), std::nullopt};
    Graph wheel = compose(wheel_spec);
    auto wheel_structure = graph_m2_c4_structure(wheel);
    CHECK(wheel_structure.kind == M2C4StructureKind::split_compose_c5);
    REQUIRE(wheel_structure.spec.has_value());
    CHECK(wheel_structure.spec->split_part.vertex_count() == 1);
    CHECK(is_isomorphic(compose(*wheel_structure.spec), wheel));

    CHECK(graph_m2_c4_structure(cycle(4)).kind == M2C4StructureKind::neither);
    CHECK(graph_m2_c4_structure(matching(2)).kind == M2C4StructureKind::neither);
}
