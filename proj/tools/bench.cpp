// Benchmark: the OpenMP sweeps against the serial reference implementation.
// Both paths must produce byte-identical structured reports; the program
// exits nonzero if they ever disagree.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degseq/sweep.hpp"
#include "degseq/verify.hpp"

namespace {

using namespace degseq;
using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark"};
    int max_vertices = 8;
    int threads = 0;
    app.add_option("--max-vertices", max_vertices, "universe bound")->check(CLI::Range(0, 9));
    app.add_option("--threads", threads, "parallel worker threads (0 = all cores)");
    CLI11_PARSE(app, argc, argv);

    threads = resolve_threads(threads);
    std::printf("benchmark with %d thread(s) against the serial reference, max n = %d\n\n",
                threads, max_vertices);
    std::printf("%-28s %10s %10s %8s\n", "task", "serial", "parallel", "speedup");

    bool all_match = true;
    Universe serial_universe, parallel_universe;
    {
        double ts = time_of([&] { serial_universe = Universe::build(max_vertices, 1, true); });
        double tp = time_of([&] { parallel_universe = Universe::build(max_vertices, threads); });
        bool same = serial_universe.graphs_by_n == parallel_universe.graphs_by_n;
        all_match = all_match && same;
        std::printf("%-28s %9.3fs %9.3fs %7.2fx%s\n", "graph universe", ts, tp, ts / tp,
                    same ? "" : "  MISMATCH");
    }

    const std::vector<std::string> tasks = {"prop1", "thm-n:4", "thm-n:5", "lemma4", "prop9"};
    for (const auto& claim : tasks) {
        VerifyOptions serial_opt;
        serial_opt.max_vertices = max_vertices;
        serial_opt.serial = true;
        serial_opt.universe = &serial_universe;
        VerifyOptions parallel_opt = serial_opt;
        parallel_opt.serial = false;
        parallel_opt.threads = threads;
        parallel_opt.universe = &parallel_universe;

        std::string serial_json, parallel_json;
        double ts = time_of([&] { serial_json = reports_json_text(run_claims({claim}, serial_opt)); });
        double tp =
            time_of([&] { parallel_json = reports_json_text(run_claims({claim}, parallel_opt)); });
        bool same = serial_json == parallel_json;
        all_match = all_match && same;
        std::printf("%-28s %9.3fs %9.3fs %7.2fx%s\n", claim.c_str(), ts, tp, ts / tp,
                    same ? "" : "  MISMATCH");
    }

    std::printf("\nstructured reports %s across implementations\n",
                all_match ? "identical" : "DIFFER");
    return all_match ? 0 : 1;
}
