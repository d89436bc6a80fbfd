// Acceptance suite: replays every headline result over its full stated
// universe and prints one verdict line per criterion. Exits nonzero if any
// criterion fails.
//
// The mutation criterion drives the real CLI; point DEGSEQ_CLI at the built
// binary (ctest wires this automatically).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "degseq/verify.hpp"

using namespace degseq;

namespace {

int failures = 0;

void verdict(int number, bool pass, const std::string& description, const std::string& detail) {
    std::printf("criterion %2d: %s  %s (%s)\n", number, pass ? "PASS" : "FAIL",
                description.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string summary(const VerificationReport& r) {
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, "%llu instances, %zu counterexamples, %.1fs",
                  static_cast<unsigned long long>(r.instances), r.counterexamples.size(),
                  r.elapsed_seconds);
    return buffer;
}

void print_counterexamples(const VerificationReport& r) {
    for (const auto& ce : r.counterexamples)
        std::printf("    counterexample: %s -- %s\n", ce.item.c_str(), ce.detail.c_str());
}

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    const char* cli = std::getenv("DEGSEQ_CLI");
    if (!cli) return result;
    const std::string command = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

}  // namespace

int main() {
    std::printf("building the shared universe (all graphs on <= 8 vertices)...\n");
    auto t0 = std::chrono::steady_clock::now();
    Universe universe = Universe::build(8);
    std::printf("universe ready in %.1fs\n\n",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

    VerifyOptions base;
    base.universe = &universe;

    {  // 1: excluding the square, lengths <= 8, with the runtime targets.
        VerifyOptions opt = base;
        opt.max_vertices = 7;
        auto at7 = verify_theorem_cycle(4, opt);
        opt.max_vertices = 8;
        auto at8 = verify_theorem_cycle(4, opt);
        print_counterexamples(at7);
        print_counterexamples(at8);
        verdict(1, at7.ok() && at8.ok() && at7.elapsed_seconds <= 30.0 &&
                       at8.elapsed_seconds <= 600.0,
                "excludes-C4 structure theorem, exhaustive to length 8",
                summary(at8) + "; length<=7 in " + std::to_string(at7.elapsed_seconds) + "s");
    }

    {  // 2: the general theorem at n = 5, lengths <= 8.
        VerifyOptions opt = base;
        opt.max_vertices = 8;
        auto report = verify_theorem_cycle(5, opt);
        print_counterexamples(report);
        verdict(2, report.ok(), "excludes-C5 structure theorem, exhaustive to length 8",
                summary(report));
    }

    {  // 3: split recognizer agreement plus pinned universe counts, n <= 8.
        VerifyOptions opt = base;
        opt.max_vertices = 8;
        auto split_report = verify_prop_split(opt);
        auto count_report = verify_enumeration_counts(opt);
        print_counterexamples(split_report);
        print_counterexamples(count_report);
        verdict(3, split_report.ok() && count_report.ok(),
                "split recognizers three-way agreement and pinned universe counts, n <= 8",
                summary(split_report) + "; counts " + summary(count_report));
    }

    {  // 4: composition cycle containment, |S| <= 4, |H| <= 5.
        VerifyOptions opt = base;
        auto report = verify_lemma_s_or_h(4, 5, opt);
        print_counterexamples(report);
        verdict(4, report.ok(), "cycle containment passes through compositions, |S|<=4, |H|<=5",
                summary(report));
    }

    {  // 5: half-join decomposition, length <= 7 with k=5 and <= 8 with k in {5,6}.
        VerifyOptions opt = base;
        opt.max_vertices = 7;
        auto at7 = verify_lemma_half_join(opt, {5});
        opt.max_vertices = 8;
        auto at8 = verify_lemma_half_join(opt, {5, 6});
        print_counterexamples(at7);
        print_counterexamples(at8);
        verdict(5, at7.ok() && at8.ok(),
                "half-join decomposition around induced cycles, k in {5,6} to length 8",
                summary(at7) + "; " + summary(at8));
    }

    {  // 6: degree-preserving surgeries, randomized plus fixed identities.
        VerifyOptions opt = base;
        opt.gadget_trials = 1000;
        auto report = verify_gadgets(opt);
        print_counterexamples(report);
        verdict(6, report.ok(),
                "surgeries preserve degrees: 1000 random configs each, pair and union identities",
                summary(report));
    }

    {  // 7: matching exclusion via complement duality, lengths <= 7, plus the
        // worked class-map cases.
        VerifyOptions opt = base;
        opt.max_vertices = 7;
        auto report = verify_theorem_matching(opt);
        print_counterexamples(report);
        auto pentagon = classify_matching(DegreeSequence({2, 2, 2, 2, 2}));
        auto cubic = classify_matching(DegreeSequence({3, 3, 3, 3, 3, 3}));
        auto names_of = [](const Classification& c) {
            std::string out;
            for (const auto& name : c.class_names()) out += name + " ";
            return out;
        };
        const bool pentagon_ok = pentagon.excludes && pentagon.witness_a.has_value() &&
                                 pentagon.witnesses_valid() &&
                                 names_of(pentagon).find("split-compose-C5") != std::string::npos;
        const bool cubic_ok = cubic.excludes && cubic.witness_b.has_value() &&
                              cubic.witnesses_valid() &&
                              names_of(cubic).find("split-compose-K33") != std::string::npos;
        verdict(7, report.ok() && pentagon_ok && cubic_ok,
                "excludes-M2 theorem via complementation, exhaustive to length 7",
                summary(report) + "; pentagon -> " + names_of(pentagon) + "; cubic -> " +
                    names_of(cubic));
    }

    {  // 8: the graph-level pentagon/split structure, n <= 8.
        VerifyOptions opt = base;
        opt.max_vertices = 8;
        auto report = verify_prop9_graphs(opt);
        print_counterexamples(report);
        verdict(8, report.ok(), "graph-level M2/C4 exclusion structure, all graphs on <= 8",
                summary(report));
    }

    {  // 9: each documented mutant is caught by the CLI with a serialized
        // counterexample.
        bool all_caught = true;
        std::string detail;
        for (const char* mutant :
             {"compose-join-b", "drop-cycle-class", "skip-hypothesis", "loose-split"}) {
            auto run = run_cli(std::string("--json verify --claim all --max-vertices 7 --mutant ") +
                               mutant);
            bool caught = run.status == 1;
            std::size_t serialized = 0;
            if (caught) {
                try {
                    auto doc = nlohmann::json::parse(run.output);
                    for (const auto& claim : doc["claims"])
                        serialized += claim["counterexamples"].size();
                } catch (...) {
                    caught = false;
                }
            }
            caught = caught && serialized > 0;
            all_caught = all_caught && caught;
            detail += std::string(mutant) + (caught ? " caught(" : " MISSED(") +
                      std::to_string(serialized) + ") ";
        }
        if (!std::getenv("DEGSEQ_CLI")) detail = "DEGSEQ_CLI not set; " + detail;
        verdict(9, all_caught, "all four documented mutants caught through the CLI", detail);
    }

    {  // 10: byte-identical structured reports across thread counts.
        VerifyOptions one = base;
        one.max_vertices = 7;
        one.threads = 1;
        VerifyOptions two = one;
        two.threads = 2;
        VerifyOptions serial = one;
        serial.serial = true;
        const std::string json_one = reports_json_text(run_claims({"all"}, one));
        const std::string json_two = reports_json_text(run_claims({"all"}, two));
        const std::string json_serial = reports_json_text(run_claims({"all"}, serial));
        verdict(10, json_one == json_two && json_one == json_serial,
                "structured verification reports are byte-identical across thread counts",
                std::to_string(json_one.size()) + " bytes compared");
    }

    std::printf("\n%s\n", failures == 0 ? "acceptance: all criteria passed"
                                        : "acceptance: some criteria FAILED");
    return failures == 0 ? 0 : 1;
}
