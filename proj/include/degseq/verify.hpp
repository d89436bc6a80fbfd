#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/classify.hpp"
#include "degseq/enumerate.hpp"

namespace degseq {

// Deliberately broken variants, selectable at run time, that demonstrate the
// harness catches real errors. Each produces at least one counterexample
// when verifying everything at max_vertices = 7. See the README for the
// catalog.
enum class Mutant {
    none,
    compose_join_b,        // lemma 3 sweep joins H to the independent side
    drop_cycle_class,      // theorem sweeps ignore the second composition class
    skip_hypothesis,       // lemma 4 sweep drops the "excludes C_{k-1}" filter
    loose_split_equality,  // split sequence test accepts strict inequality
};

std::optional<Mutant> parse_mutant(std::string_view name);
std::string mutant_str(Mutant m);

struct Counterexample {
    std::string item;    // universe element: degree sequence or graph6
    std::string detail;  // which check failed and how

    auto operator<=>(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string claim;
    std::string universe;
    std::uint64_t instances = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;  // text output only, never in structured reports

    bool ok() const { return counterexamples.empty(); }
};

std::string report_text(const VerificationReport& report);

// Structured form of a batch of reports. Deterministic for a fixed input:
// no timing, keys sorted, claims in run order.
std::string reports_json_text(const std::vector<VerificationReport>& reports);

struct VerifyOptions {
    int max_vertices = 7;
    int threads = 0;      // 0 = all available
    bool serial = false;  // force the serial reference sweep
    bool allow_slow = false;  // unlocks max_vertices = 9 for theorem sweeps
    Mutant mutant = Mutant::none;
    const Universe* universe = nullptr;  // optional prebuilt or external universe
    std::uint64_t gadget_trials = 1000;
    std::uint32_t gadget_seed = 0x5eed;
};

// Split graphs: partition search, forbidden subgraphs, threshold partition
// and degree equality all agree on every graph; split sequences are exactly
// those excluding M2 and all cycles on >= 4 vertices, and are forcibly split.
VerificationReport verify_prop_split(const VerifyOptions& opt);

// C_n inside a composition forces C_n inside one of the two parts.
VerificationReport verify_lemma_s_or_h(int s_bound, int h_bound, const VerifyOptions& opt);

// Every realization of a C_{k-1}-excluding sequence decomposes around each
// induced k-cycle as a half join.
VerificationReport verify_lemma_half_join(const VerifyOptions& opt,
                                          std::vector<int> cycle_lens = {});

// Brute-force exclusion agrees with the structural classes.
VerificationReport verify_theorem_cycle(int n, const VerifyOptions& opt);
VerificationReport verify_theorem_matching(const VerifyOptions& opt);
VerificationReport verify_cor_c4_c5(const VerifyOptions& opt);
VerificationReport verify_cor_m2_c4(const VerifyOptions& opt);
VerificationReport verify_prop9_graphs(const VerifyOptions& opt);

// Universe sizes against their published values, plus graph/sequence
// cross-consistency.
VerificationReport verify_enumeration_counts(const VerifyOptions& opt);

// Degree-preserving surgeries: randomized configurations plus the fixed
// worked examples, the C_k u P2 / C_{k-1} u P3 identity, and the cycle
// disjoint-union identity.
VerificationReport verify_gadgets(const VerifyOptions& opt);

// Claim names: enumeration, prop1, lemma3, lemma4, thm-n:<n>, thm-m2,
// cor-c4c5, cor-m2c4, prop9, gadgets, or all.
std::vector<VerificationReport> run_claims(const std::vector<std::string>& claims,
                                           const VerifyOptions& opt);
bool known_claim(std::string_view name);

// The proof surgeries as first-class operations. Precondition violations
// throw with the failed condition named; the degree-sequence guarantees are
// re-checked internally.
struct GadgetPair {
    Graph k_graph;   // G[C + x]
    Graph k_prime;   // contract {v,z}, then subdivide xy with a fresh vertex
};

GadgetPair gadget_contract_subdivide(const Graph& g, VertexSet cycle_set, int x, int y, int z,
                                     int v);

// G + c1c3 - c3x + xy - yc1. The four touched pairs must have the stated
// edge/non-edge states.
Graph gadget_rewire(const Graph& g, int c1, int c3, int x, int y);

// D(C_k u P2) and D(C_{k-1} u P3); the two are equal for every k >= 5.
std::pair<DegreeSequence, DegreeSequence> gadget_matching_pair(int k);

// The exclusion preorder on all graphical sequences of length <= max
// (a partial order: mutual precedence forces equality), with its transitive
// reduction. Reflexivity, antisymmetry and transitivity are re-checked and
// violations reported.
struct ExclusionPoset {
    std::vector<DegreeSequence> nodes;
    std::vector<std::pair<int, int>> relation;  // i precedes j, i != j
    std::vector<std::pair<int, int>> covers;    // transitive reduction
    VerificationReport report;
};

ExclusionPoset build_exclusion_poset(const VerifyOptions& opt);
std::string poset_dot(const ExclusionPoset& poset);
std::string poset_csv(const ExclusionPoset& poset);

}  // namespace degseq
