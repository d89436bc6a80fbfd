#include <doctest.h>

#include <algorithm>
#include <random>

#include "degseq/enumerate.hpp"
#include "degseq/split.hpp"

using namespace degseq;

namespace {

// A random split graph built directly from a partition, with the partition
// returned alongside.
std::pair<Graph, SplitPartition> random_split(std::mt19937& rng, int max_side) {
    const int a = static_cast<int>(rng() % (max_side + 1));
    const int b = static_cast<int>(rng() % (max_side + 1));
    Graph g(a + b);
    SplitPartition p;
    for (int i = 0; i < a; ++i) {
        p.clique_side |= vertex_bit(i);
        for (int j = i + 1; j < a; ++j) g.add_edge(i, j);
    }
    for (int i = a; i < a + b; ++i) p.independent_side |= vertex_bit(i);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j)
            if (rng() & 1u) g.add_edge(i, j);
    return {g, p};
}

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("split graph recognition") {
    CHECK(is_split_graph(complete(4)));
    CHECK(!is_split_graph(cycle(4)));
    CHECK(!is_split_graph(cycle(5)));
    CHECK(is_split_graph(path(3)));
    CHECK(is_split_graph(empty_graph(0)));
    CHECK(!is_split_graph(matching(2)));

    CHECK(is_split_graph_by_forbidden(complete(4)));
    CHECK(!is_split_graph_by_forbidden(cycle(5)));
}

TEST_CASE("all recognizers agree on every graph up to 6 vertices") {
    Universe u = Universe::build(6);
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : u.graphs_by_n[n]) {
            const bool split = is_split_graph(g);
            CHECK(split == is_split_graph_by_forbidden(g));
            CHECK(split == find_split_partition(g).has_value());
            CHECK(split == is_split_sequence(degree_sequence_of(g)));
        }
}

TEST_CASE("split partitions") {
    auto k3 = find_split_partition(complete(3));
    REQUIRE(k3.has_value());
    CHECK(k3->clique_side == full_set(3));
    CHECK(k3->independent_side == 0);

    auto p3 = find_split_partition(path(3));
    REQUIRE(p3.has_value());
    CHECK(is_valid_split_partition(path(3), *p3));
    CHECK(set_size(p3->clique_side) == 2);
    // Ties break to the lexicographically least clique side: {0, 1}.
    CHECK(p3->clique_side == 0b011);

    CHECK(!find_split_partition(cycle(6)).has_value());

    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto [g, p] = random_split(rng, 4);
        CHECK(is_valid_split_partition(g, p));
        auto found = find_split_partition(g);
        REQUIRE(found.has_value());
        CHECK(is_valid_split_partition(g, *found));
    }
}

TEST_CASE("split sequences") {
    CHECK(is_split_sequence(DegreeSequence({2, 2, 2})));
    CHECK(!is_split_sequence(DegreeSequence({2, 2, 2, 2})));
    CHECK(!is_split_sequence(DegreeSequence({1, 1, 1, 1})));
    CHECK(is_split_sequence(DegreeSequence{}));
    CHECK_THROWS_AS(is_split_sequence(DegreeSequence({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("composition") {
    // An empty split graph leaves H unchanged.
    CompositionSpec trivial{empty_graph(0), {}, cycle(5), GraphFamily{GraphFamily::Kind::cycle, 5, 0}};
    CHECK(compose(trivial) == cycle(5));
    CHECK(degree_sequence_of(compose(trivial)) == DegreeSequence({2, 2, 2, 2, 2}));

    // A single clique vertex joined to a pentagon is the 5-wheel.
    CompositionSpec wheel{complete(1), {vertex_bit(0), 0}, cycle(5), std::nullopt};
    CHECK(degree_sequence_of(compose(wheel)) == DegreeSequence({5, 3, 3, 3, 3, 3}));

    // An edge with one end in each side, joined to a hexagon.
    CompositionSpec edge_spec{path(2), {vertex_bit(0), vertex_bit(1)}, cycle(6), std::nullopt};
    CHECK(degree_sequence_of(compose(edge_spec)) ==
          DegreeSequence({7, 3, 3, 3, 3, 3, 3, 1}));

    // Partitions must actually split S: the ends of a path are no clique,
    // and the vertices of a matching are no independent set.
    CompositionSpec bad{path(3), {0b101, 0b010}, cycle(5), std::nullopt};
    CHECK_THROWS_AS(compose(bad), std::invalid_argument);
    CompositionSpec bad2{matching(2), {0, full_set(4)}, cycle(5), std::nullopt};
    CHECK_THROWS_AS(compose(bad2), std::invalid_argument);
}

TEST_CASE("composition degree arithmetic on random specs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto [s, p] = random_split(rng, 3);
        Graph h = random_graph(static_cast<int>(rng() % 6), rng);
        if (s.vertex_count() + h.vertex_count() > kMaxVertices) continue;
        CompositionSpec spec{s, p, h, std::nullopt};
        Graph composed = compose(spec);
        std::vector<int> predicted;
        for (int v = 0; v < s.vertex_count(); ++v)
            predicted.push_back(s.degree(v) +
                                ((p.clique_side & vertex_bit(v)) ? h.vertex_count() : 0));
        const int a = set_size(p.clique_side);
        for (int v = 0; v < h.vertex_count(); ++v) predicted.push_back(h.degree(v) + a);
        CHECK(degree_sequence_of(composed) == DegreeSequence(predicted));
    }
}

TEST_CASE("composition serialization") {
    CompositionSpec wheel{complete(1), {vertex_bit(0), 0}, cycle(5),
                          GraphFamily{GraphFamily::Kind::cycle, 5, 0}};
    CHECK(composition_str(wheel) == "@|0|C5");
    CompositionSpec no_family{complete(1), {vertex_bit(0), 0}, cycle(5), std::nullopt};
    CHECK(composition_str(no_family) == "@|0|" + to_graph6(cycle(5)));
}

TEST_CASE("matching a split-compose-cycle shape") {
    auto empty_s = match_split_compose_cycle(DegreeSequence({2, 2, 2, 2, 2}), 5);
    REQUIRE(empty_s.has_value());
    CHECK(empty_s->split_part.vertex_count() == 0);
    CHECK(degree_sequence_of(compose(*empty_s)) == DegreeSequence({2, 2, 2, 2, 2}));

    auto wheel = match_split_compose_cycle(DegreeSequence({5, 3, 3, 3, 3, 3}), 5);
    REQUIRE(wheel.has_value());
    CHECK(wheel->split_part.vertex_count() == 1);
    CHECK(set_size(wheel->partition.clique_side) == 1);
    CHECK(degree_sequence_of(compose(*wheel)) == DegreeSequence({5, 3, 3, 3, 3, 3}));

    CHECK(!match_split_compose_cycle(DegreeSequence({2, 2, 2, 2}), 5).has_value());
    CHECK(!match_split_compose_cycle(DegreeSequence({2, 2, 2, 2, 2, 2}), 5).has_value());
    CHECK_THROWS_AS(match_split_compose_cycle(DegreeSequence({2, 2, 2}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(match_split_compose_cycle(DegreeSequence({1, 1, 1}), 5),
                    std::invalid_argument);
}

TEST_CASE("match round trip on random composed specs") {
    std::mt19937 rng(47);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        auto [s, p] = random_split(rng, 2);
        const int k = 5 + static_cast<int>(rng() % 3);
        if (s.vertex_count() + k > 9) continue;
        CompositionSpec spec{s, p, cycle(k), GraphFamily{GraphFamily::Kind::cycle, k, 0}};
        DegreeSequence d = degree_sequence_of(compose(spec));
        auto found = match_split_compose_cycle(d, k);
        REQUIRE(found.has_value());
        CHECK(degree_sequence_of(compose(*found)) == d);
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("decompose_around_cycle on a concrete graph") {
    // The 5-wheel decomposes around its rim.
    CompositionSpec wheel{complete(1), {vertex_bit(0), 0}, cycle(5), std::nullopt};
    Graph g = compose(wheel);
    auto spec = decompose_around_cycle(g, 5);
    REQUIRE(spec.has_value());
    CHECK(is_isomorphic(compose(*spec), g));
    CHECK(!decompose_around_cycle(cycle(4), 5).has_value());
    CHECK(!decompose_around_cycle(complete(6), 5).has_value());
}
