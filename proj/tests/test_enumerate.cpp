#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "degseq/enumerate.hpp"

using namespace degseq;

namespace {

std::vector<Graph> all_labeled_canonical(int n) {
    std::vector<Graph> out;
    const int bits = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask >> bit & 1) g.add_edge(i, j);
        out.push_back(canonical_form(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("graph universe counts match the published sequence") {
    const std::vector<std::size_t> want = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n < static_cast<int>(want.size()); ++n)
        CHECK(all_graphs(n).size() == want[n]);
    CHECK_THROWS_AS(all_graphs(10), std::invalid_argument);
}

TEST_CASE("graph universe equals the labeled brute force to 5") {
    for (int n = 0; n <= 5; ++n) CHECK(all_graphs(n) == all_labeled_canonical(n));
}

TEST_CASE("graph universe is canonical, sorted, and thread independent") {
    auto parallel = all_graphs(6, 2);
    auto serial = all_graphs(6, 1, true);
    CHECK(parallel == serial);
    for (std::size_t i = 0; i < parallel.size(); ++i) {
        CHECK(canonical_form(parallel[i]) == parallel[i]);
        if (i) CHECK(parallel[i - 1] < parallel[i]);
    }
}

TEST_CASE("graphical sequence universe") {
    auto two = all_graphical_sequences(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == DegreeSequence({1, 1}));
    CHECK(two[1] == DegreeSequence({0, 0}));

    auto three = all_graphical_sequences(3);
    REQUIRE(three.size() == 4);
    CHECK(three[0] == DegreeSequence({2, 2, 2}));
    CHECK(three[1] == DegreeSequence({2, 1, 1}));
    CHECK(three[2] == DegreeSequence({1, 1, 0}));
    CHECK(three[3] == DegreeSequence({0, 0, 0}));

    const std::vector<std::size_t> want = {1, 1, 2, 4, 11, 31, 102, 342};
    for (int n = 0; n < static_cast<int>(want.size()); ++n)
        CHECK(all_graphical_sequences(n).size() == want[n]);
    CHECK_THROWS_AS(all_graphical_sequences(11), std::invalid_argument);

    // Descending lexicographic order throughout.
    for (int n = 0; n <= 6; ++n) {
        auto seqs = all_graphical_sequences(n);
        for (std::size_t i = 1; i < seqs.size(); ++i) CHECK(seqs[i] < seqs[i - 1]);
    }
}

TEST_CASE("sequence universe equals deduplicated graph degrees") {
    Universe u = Universe::build(6);
    for (int n = 0; n <= 6; ++n) {
        std::vector<DegreeSequence> from_graphs;
        for (const Graph& g : u.graphs_by_n[n]) from_graphs.push_back(degree_sequence_of(g));
        std::sort(from_graphs.begin(), from_graphs.end(), std::greater<>());
        from_graphs.erase(std::unique(from_graphs.begin(), from_graphs.end()), from_graphs.end());
        CHECK(from_graphs == u.sequences_by_n[n]);
    }
}

TEST_CASE("the realization catalog indexes the graph universe") {
    Universe u = Universe::build(5);
    CHECK(u.realizations(DegreeSequence({2, 2, 2, 2, 2})).size() == 1);
    // The path and the triangle-plus-edge both realize (2,2,2,1,1).
    CHECK(u.realizations(DegreeSequence({2, 2, 2, 1, 1})).size() == 2);
    for (int n = 0; n <= 5; ++n)
        for (const DegreeSequence& d : u.sequences_by_n[n]) {
            auto span = u.realizations(d);
            CHECK(!span.empty());
            CHECK(std::vector<Graph>(span.begin(), span.end()) == enumerate_realizations(d));
        }
    CHECK_THROWS_AS(u.realizations(DegreeSequence(std::vector<int>(9, 0))), std::out_of_range);
}

TEST_CASE("graph6 line files round trip") {
    auto graphs = all_graphs(5);
    std::stringstream buffer;
    write_graph6_lines(buffer, graphs);
    auto back = read_graph6_lines(buffer);
    CHECK(back == graphs);

    std::stringstream with_blanks("D~{\n\nDQc\n");
    CHECK(read_graph6_lines(with_blanks).size() == 2);
}

TEST_CASE("externally supplied universes") {
    auto graphs = all_graphs(4);
    auto smaller = all_graphs(3);
    std::vector<Graph> pool = graphs;
    pool.insert(pool.end(), smaller.begin(), smaller.end());
    for (int n = 0; n <= 2; ++n)
        for (const Graph& g : all_graphs(n)) pool.push_back(g);
    // Duplicates and arbitrary labelings are tolerated.
    pool.push_back(cycle(4));
    pool.push_back(cycle(3));
    Universe external = Universe::from_graphs(pool, 4);
    Universe built = Universe::build(4);
    CHECK(external.graphs_by_n == built.graphs_by_n);
    CHECK(external.sequences_by_n == built.sequences_by_n);

    CHECK_THROWS_AS(Universe::from_graphs({cycle(3)}, 3), std::invalid_argument);
}
