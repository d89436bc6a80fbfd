// Command-line front end: graphicality checks, realization enumeration, the
// exclusion preorder, structure classification, composition, exhaustive
// verification, and the exclusion poset.
//
// Exit codes: 0 success, 1 verification found counterexamples, 2 usage or
// input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/verify.hpp"

namespace {

using nlohmann::json;
using namespace degseq;

struct Options {
    bool as_json = false;
    int threads = 0;
};

std::string seq_display(const DegreeSequence& d) { return d.length() ? d.str() : "()"; }

json composition_json(const CompositionSpec& spec) {
    json out;
    out["s"] = to_graph6(spec.split_part);
    out["a"] = json::array();
    for (int v = 0; v < spec.split_part.vertex_count(); ++v)
        if (spec.partition.clique_side & vertex_bit(v)) out["a"].push_back(v);
    out["h"] = spec.attached_family ? family_str(*spec.attached_family) : to_graph6(spec.attached);
    return out;
}

json witness_json(const PrecedesWitness& w) {
    return json{{"inner", to_graph6(w.inner)},
                {"outer", to_graph6(w.outer)},
                {"embedding", w.embedding}};
}

void print_witness_text(const PrecedesWitness& w) {
    std::cout << "witness inner: " << to_graph6(w.inner) << "\n";
    std::cout << "witness outer: " << to_graph6(w.outer) << "\n";
    std::cout << "embedding:";
    for (std::size_t i = 0; i < w.embedding.size(); ++i)
        std::cout << " " << i << "->" << w.embedding[i];
    std::cout << "\n";
}

int cmd_check(const std::string& seq_text, const Options& opt) {
    DegreeSequence d = DegreeSequence::parse(seq_text);
    bool ok = is_graphical(d);
    if (opt.as_json)
        std::cout << json{{"sequence", d.str()}, {"graphical", ok}}.dump(2) << "\n";
    else
        std::cout << (ok ? "graphical" : "not graphical") << "\n";
    return 0;
}

int cmd_degrees(const std::string& g6, const Options& opt) {
    DegreeSequence d = degree_sequence_of(from_graph6(g6));
    if (opt.as_json)
        std::cout << json{{"graph", g6}, {"sequence", d.str()}}.dump(2) << "\n";
    else
        std::cout << seq_display(d) << "\n";
    return 0;
}

int cmd_realize(const std::string& seq_text, const Options& opt) {
    DegreeSequence d = DegreeSequence::parse(seq_text);
    Graph g = realize_one(d);
    if (opt.as_json)
        std::cout << json{{"sequence", d.str()}, {"graph", to_graph6(g)}}.dump(2) << "\n";
    else
        std::cout << to_graph6(g) << "\n";
    return 0;
}

int cmd_realizations(const std::string& seq_text, const Options& opt) {
    DegreeSequence d = DegreeSequence::parse(seq_text);
    if (!is_graphical(d)) throw std::invalid_argument("sequence is not graphical");
    auto graphs = enumerate_realizations(d);
    if (opt.as_json) {
        json out{{"sequence", d.str()}, {"count", graphs.size()}};
        out["graphs"] = json::array();
        for (const Graph& g : graphs) out["graphs"].push_back(to_graph6(g));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Graph& g : graphs) std::cout << to_graph6(g) << "\n";
    }
    return 0;
}

int cmd_precedes(const std::string& t1, const std::string& t2, const Options& opt) {
    DegreeSequence d1 = DegreeSequence::parse(t1), d2 = DegreeSequence::parse(t2);
    auto witness = precedes_witness(d1, d2);
    if (opt.as_json) {
        json out{{"d1", d1.str()}, {"d2", d2.str()}, {"precedes", witness.has_value()}};
        out["witness"] = witness ? witness_json(*witness) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (witness ? "true" : "false") << "\n";
        if (witness) print_witness_text(*witness);
    }
    return 0;
}

int cmd_classify(const std::string& what, const std::string& seq_text, const Options& opt) {
    DegreeSequence d = DegreeSequence::parse(seq_text);
    if (!is_graphical(d)) throw std::invalid_argument("sequence is not graphical");
    Classification cls;
    if (what == "C4")
        cls = classify_square(d);
    else if (what == "M2")
        cls = classify_matching(d);
    else if (what == "C4C5")
        cls = classify_c4_c5(d);
    else if (what == "M2C4")
        cls = classify_m2_c4(d);
    else if (what.rfind("Cn:", 0) == 0)
        cls = classify_exclusion(d, std::stoi(what.substr(3)));
    else
        throw CLI::ValidationError("--exclude must be one of C4, M2, Cn:<n>, C4C5, M2C4");
    if (!cls.witnesses_valid()) throw std::logic_error("classification witness failed revalidation");

    if (opt.as_json) {
        json out;
        out["sequence"] = d.str();
        out["query"] = query_str(cls.query, cls.cycle_len);
        out["excludes"] = cls.excludes;
        out["classes"] = cls.class_names();
        out["witnesses"] = json::object();
        if (cls.witness_a)
            out["witnesses"][cls.query == ExclusionQuery::matching ||
                                     cls.query == ExclusionQuery::m2_and_c4
                                 ? "split-compose-C5"
                                 : "split-compose-C" + std::to_string(cls.cycle_len + 1)] =
                composition_json(*cls.witness_a);
        if (cls.witness_b)
            out["witnesses"][cls.query == ExclusionQuery::matching
                                 ? "split-compose-K33"
                                 : "split-compose-C" +
                                       std::to_string(cls.query == ExclusionQuery::c4_and_c5
                                                          ? 6
                                                          : cls.cycle_len + 2)] =
                composition_json(*cls.witness_b);
        out["containment"] = cls.containment ? witness_json(*cls.containment) : json(nullptr);
        out["realizations_checked"] = cls.realizations_checked;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "sequence: " << seq_display(d) << "\n";
    std::cout << "query: excludes " << query_str(cls.query, cls.cycle_len) << "\n";
    std::cout << "excludes: " << (cls.excludes ? "true" : "false") << "\n";
    std::cout << "classes:";
    for (const auto& name : cls.class_names()) std::cout << " " << name;
    std::cout << "\n";
    if (cls.witness_a) std::cout << "witness a: " << composition_str(*cls.witness_a) << "\n";
    if (cls.witness_b) std::cout << "witness b: " << composition_str(*cls.witness_b) << "\n";
    if (cls.containment) print_witness_text(*cls.containment);
    std::cout << "realizations checked: " << cls.realizations_checked << "\n";
    return 0;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size() || v < 0) throw std::invalid_argument("bad vertex index: " + token);
        out.push_back(v);
    }
    return out;
}

int cmd_compose(const std::string& split_g6, const std::string& a_indices, int cycle_len,
                const std::string& h_text, const Options& opt) {
    CompositionSpec spec;
    spec.split_part = from_graph6(split_g6);
    for (int v : parse_index_list(a_indices)) {
        if (v >= spec.split_part.vertex_count())
            throw std::invalid_argument("clique side index out of range");
        spec.partition.clique_side |= vertex_bit(v);
    }
    spec.partition.independent_side = spec.split_part.vertices() & ~spec.partition.clique_side;
    if (cycle_len > 0 && !h_text.empty())
        throw CLI::ValidationError("--cycle and --attach are mutually exclusive");
    if (cycle_len > 0) {
        spec.attached = cycle(cycle_len);
        spec.attached_family = GraphFamily{GraphFamily::Kind::cycle, cycle_len, 0};
    } else if (!h_text.empty()) {
        if (auto family = parse_family(h_text)) {
            spec.attached = construct(*family);
            spec.attached_family = family;
        } else {
            spec.attached = from_graph6(h_text);
        }
    } else {
        throw CLI::ValidationError("one of --cycle or --attach is required");
    }
    Graph composed = compose(spec);
    if (opt.as_json) {
        json out;
        out["spec"] = composition_json(spec);
        out["graph"] = to_graph6(composed);
        out["sequence"] = degree_sequence_of(composed).str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_graph6(composed) << "\n";
        std::cout << degree_sequence_of(composed).str() << "\n";
    }
    return 0;
}

int cmd_graphs(int n, const std::string& output, const Options& opt) {
    auto graphs = all_graphs(n, opt.threads);
    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw std::invalid_argument("cannot open output file: " + output);
        write_graph6_lines(file, graphs);
        if (!opt.as_json) std::cout << graphs.size() << " graphs written\n";
    } else {
        write_graph6_lines(std::cout, graphs);
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& claims, const VerifyOptions& vopt,
               const std::string& universe_path, const Options& opt) {
    VerifyOptions local = vopt;
    local.threads = opt.threads;
    std::optional<Universe> external;
    if (!universe_path.empty()) {
        std::ifstream file(universe_path);
        if (!file) throw std::invalid_argument("cannot open universe file: " + universe_path);
        external = Universe::from_graphs(read_graph6_lines(file), local.max_vertices);
        local.universe = &*external;
    }
    auto reports = run_claims(claims.empty() ? std::vector<std::string>{"all"} : claims, local);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (opt.as_json) {
        std::cout << reports_json_text(reports);
    } else {
        for (const auto& r : reports) std::cout << report_text(r);
        std::cout << (ok ? "verification OK" : "verification FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_poset(int max_vertices, const std::string& dot_path, const std::string& csv_path,
              const Options& opt) {
    VerifyOptions vopt;
    vopt.max_vertices = max_vertices;
    vopt.threads = opt.threads;
    ExclusionPoset poset = build_exclusion_poset(vopt);
    if (!dot_path.empty()) {
        std::ofstream file(dot_path);
        if (!file) throw std::invalid_argument("cannot open dot file: " + dot_path);
        file << poset_dot(poset);
    }
    if (!csv_path.empty()) {
        std::ofstream file(csv_path);
        if (!file) throw std::invalid_argument("cannot open csv file: " + csv_path);
        file << poset_csv(poset);
    }
    if (opt.as_json) {
        json out;
        out["nodes"] = json::array();
        for (const auto& d : poset.nodes) out["nodes"].push_back(seq_display(d));
        out["relation_pairs"] = poset.relation.size();
        out["covers"] = json::array();
        for (auto [i, j] : poset.covers)
            out["covers"].push_back({seq_display(poset.nodes[i]), seq_display(poset.nodes[j])});
        out["ok"] = poset.report.ok();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "nodes: " << poset.nodes.size() << "\n";
        std::cout << "relation pairs: " << poset.relation.size() << "\n";
        std::cout << "cover edges: " << poset.covers.size() << "\n";
        std::cout << report_text(poset.report);
    }
    return poset.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence exclusion toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable JSON output");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    std::string seq_text, seq_text2, g6_text;
    auto* check = app.add_subcommand("check", "test whether a sequence is graphical");
    check->add_option("sequence", seq_text, "comma-separated degrees")->required();

    auto* degrees = app.add_subcommand("degrees", "degree sequence of a graph6 graph");
    degrees->add_option("graph", g6_text, "graph6 string")->required();

    auto* realize = app.add_subcommand("realize", "construct one realization");
    realize->add_option("sequence", seq_text, "comma-separated degrees")->required();

    auto* realizations = app.add_subcommand("realizations", "all realizations up to isomorphism");
    realizations->add_option("sequence", seq_text, "comma-separated degrees")->required();

    auto* precedes_cmd = app.add_subcommand("precedes", "decide the exclusion preorder d1 <= d2");
    precedes_cmd->add_option("d1", seq_text, "inner sequence")->required();
    precedes_cmd->add_option("d2", seq_text2, "outer sequence")->required();

    std::string exclude_what;
    auto* classify = app.add_subcommand("classify", "structural exclusion classification");
    classify->add_option("--exclude", exclude_what, "C4, M2, Cn:<n>, C4C5, or M2C4")->required();
    classify->add_option("sequence", seq_text, "comma-separated degrees")->required();

    std::string a_indices, h_text;
    int cycle_len = 0;
    auto* compose_cmd = app.add_subcommand("compose", "split composition (S,A,B) o H");
    compose_cmd->add_option("--split", g6_text, "graph6 of the split graph S")->required();
    compose_cmd->add_option("--a", a_indices, "comma-separated clique side indices");
    compose_cmd->add_option("--cycle", cycle_len, "attach a cycle of this length");
    compose_cmd->add_option("--attach", h_text, "attach this graph (family name or graph6)");

    int graphs_n = 0;
    std::string output_path;
    auto* graphs_cmd = app.add_subcommand("graphs", "all graphs on n vertices as graph6 lines");
    graphs_cmd->add_option("n", graphs_n, "vertex count")->required();
    graphs_cmd->add_option("--output", output_path, "write to a file instead of stdout");

    std::vector<std::string> claims;
    std::string mutant_name, universe_path;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "replay the exhaustive verification claims");
    verify->add_option("--claim", claims,
                       "prop1, lemma3, lemma4, thm-n:<n>, thm-m2, cor-c4c5, cor-m2c4, prop9, "
                       "enumeration, gadgets, or all");
    verify->add_option("--max-vertices", vopt.max_vertices, "universe bound")
        ->check(CLI::Range(0, 9));
    verify->add_flag("--serial", vopt.serial, "force the serial reference sweep");
    verify->add_flag("--allow-slow", vopt.allow_slow, "permit max-vertices 9 theorem sweeps");
    verify->add_option("--mutant", mutant_name,
                       "run a documented broken variant: compose-join-b, drop-cycle-class, "
                       "skip-hypothesis, loose-split");
    verify->add_option("--universe", universe_path, "graph6 file replacing the generated universe");
    verify->add_option("--trials", vopt.gadget_trials, "random gadget configurations");
    verify->add_option("--seed", vopt.gadget_seed, "gadget RNG seed");

    int poset_max = 5;
    std::string dot_path, csv_path;
    auto* poset = app.add_subcommand("poset", "exclusion order on all sequences up to a bound");
    poset->add_option("--max-vertices", poset_max, "sequence length bound")->check(CLI::Range(0, 7));
    poset->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
    poset->add_option("--csv", csv_path, "write the cover relation as CSV");

    // Global flags may trail the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(seq_text, opt);
        if (*degrees) return cmd_degrees(g6_text, opt);
        if (*realize) return cmd_realize(seq_text, opt);
        if (*realizations) return cmd_realizations(seq_text, opt);
        if (*precedes_cmd) return cmd_precedes(seq_text, seq_text2, opt);
        if (*classify) return cmd_classify(exclude_what, seq_text, opt);
        if (*compose_cmd) return cmd_compose(g6_text, a_indices, cycle_len, h_text, opt);
        if (*graphs_cmd) return cmd_graphs(graphs_n, output_path, opt);
        if (*verify) {
            if (auto m = parse_mutant(mutant_name))
                vopt.mutant = *m;
            else
                throw std::invalid_argument("unknown mutant: " + mutant_name);
            for (const auto& c : claims)
                if (!known_claim(c)) throw std::invalid_argument("unknown claim: " + c);
            return cmd_verify(claims, vopt, universe_path, opt);
        }
        if (*poset) return cmd_poset(poset_max, dot_path, csv_path, opt);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
