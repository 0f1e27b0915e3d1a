#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cayspec/canonical.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/gcm.hpp"
#include "cayspec/graph6.hpp"
#include "cayspec/integrality.hpp"
#include "cayspec/oracle.hpp"
#include "cayspec/report_json.hpp"
#include "cayspec/scan.hpp"
#include "cayspec/tgraph.hpp"
#include "cayspec/version.hpp"

namespace {

using namespace cayspec;

constexpr int kExitIntegral = 0;
constexpr int kExitNonIntegral = 1;
constexpr int kExitError = 2;
constexpr int kExitCapacity = 3;

int env_jobs() {
    if (const char* env = std::getenv("CAYSPEC_JOBS"); env && *env) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0; // resolve to available parallelism later
}

// one graph source per invocation: file, graph6 literal, or a named family
struct GraphInput {
    std::string edge_list_path;
    std::string graph6_text;
    int cycle = 0;
    int star = 0;
    int complete = 0;
    std::vector<int> kmulti;

    void attach(CLI::App* cmd) {
        auto* grp = cmd->add_option_group("input", "graph source (exactly one)");
        grp->add_option("--edge-list", edge_list_path,
                        "edge-list file (\"n m\" header then \"i j\" lines); - for stdin");
        grp->add_option("--graph6", graph6_text, "graph6 string");
        grp->add_option("--cycle", cycle, "cycle C_m")->check(CLI::Range(3, 1 << 20));
        grp->add_option("--star", star, "star K_{1,n-1} on n vertices")->check(CLI::Range(2, 1 << 20));
        grp->add_option("--complete", complete, "complete graph K_n")->check(CLI::Range(1, 1 << 20));
        grp->add_option("--kmulti", kmulti, "complete multipartite part sizes a,b,...")
            ->delimiter(',');
        grp->require_option(1);
    }

    TGraph resolve() const {
        if (!edge_list_path.empty()) {
            std::string text;
            if (edge_list_path == "-") {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else {
                std::ifstream in(edge_list_path);
                if (!in) throw std::invalid_argument("cannot open " + edge_list_path);
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            return parse_edge_list(text);
        }
        if (!graph6_text.empty()) return parse_graph6(graph6_text);
        if (cycle) return cycle_graph(cycle);
        if (star) return star_graph(star);
        if (complete) return complete_graph(complete);
        return complete_multipartite(kmulti);
    }
};

json graph_json(const TGraph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    json j{{"n", g.n()}, {"edges", edges}, {"graph6", emit_graph6(g)}};
    j["canonical_key"] = g.n() <= 8 ? json(canonical_key(g)) : json(nullptr);
    return j;
}

json document(const std::string& command) {
    return json{{"schema_version", kReportSchemaVersion},
                {"tool_version", kVersion},
                {"command", command}};
}

void print_spectrum_text(const SpectrumReport& rep) {
    std::cout << "blocks (alpha, f_alpha, integer roots, remainder):\n";
    for (const auto& b : rep.per_partition) {
        std::cout << "  " << b.alpha.to_string() << "  f=" << b.dim << "  roots{";
        bool first = true;
        for (auto [r, m] : b.integer_roots) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << r << ":" << m;
        }
        std::cout << "}  remainder " << b.remainder.to_string() << "\n";
    }
    if (rep.integral) {
        std::cout << "spectrum (eigenvalue : multiplicity):\n";
        for (auto it = rep.spectrum.rbegin(); it != rep.spectrum.rend(); ++it)
            std::cout << "  " << it->first << " : " << it->second << "\n";
    } else {
        std::cout << "witness: alpha=" << rep.witness->alpha.to_string() << "  factor "
                  << rep.witness->factor.to_string() << "\n";
    }
}

int verdict_exit(bool integral) { return integral ? kExitIntegral : kExitNonIntegral; }

// ---- check ----

int cmd_check(const GraphInput& input, bool want_spectrum, bool force_full, int jobs,
              bool as_json) {
    TGraph g = input.resolve();
    PipelineOptions opts;
    opts.force_full = force_full || want_spectrum;
    opts.jobs = jobs;
    Verdict v = is_integral(g.n(), g.transpositions(), opts);

    if (as_json) {
        json doc = document("check");
        doc["graph"] = graph_json(g);
        doc["verdict"] = to_json(v);
        if (!want_spectrum) doc["verdict"]["spectrum_report"] = nullptr;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graph: n=" << g.n() << " edges=" << g.edge_count() << " ("
                  << emit_graph6(g) << ")\n";
        if (v.isolated > 0)
            std::cout << "isolated vertices stripped: " << v.isolated << " (verdict unchanged)\n";
        std::cout << "verdict: " << (v.integral ? "INTEGRAL" : "NON-INTEGRAL") << "\n";
        std::cout << "path: " << to_string(v.path) << "\n";
        std::cout << "detail: " << v.detail << "\n";
        if (want_spectrum && v.spectrum) print_spectrum_text(*v.spectrum);
    }
    return verdict_exit(v.integral);
}

// ---- spectrum ----

int cmd_spectrum(const GraphInput& input, int jobs, bool as_json) {
    TGraph g = input.resolve();
    auto rep = cayley_spectrum(g.n(), g.transpositions(), jobs);
    if (as_json) {
        json doc = document("spectrum");
        doc["graph"] = graph_json(g);
        doc["spectrum_report"] = to_json(rep);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "Cay(S_" << g.n() << ", T) with |T|=" << g.edge_count() << ": "
                  << (rep.integral ? "INTEGRAL" : "NON-INTEGRAL") << "\n";
        print_spectrum_text(rep);
    }
    return verdict_exit(rep.integral);
}

// ---- gcm ----

int cmd_gcm(const GraphInput& input, bool as_json) {
    TGraph g = input.resolve();
    auto tree = gcm_decompose(g);
    auto lap = is_laplacian_integral(g);
    bool p4free = is_p4_free(g);
    if (as_json) {
        json doc = document("gcm");
        doc["graph"] = graph_json(g);
        doc["gcm"] = tree ? to_json(*tree) : json(nullptr);
        doc["p4_free"] = p4free;
        doc["laplacian_integral"] = lap.integral;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graph: n=" << g.n() << " edges=" << g.edge_count() << "\n";
        if (tree) {
            std::cout << "generalized complete multipartite: yes, type " << tree->type_number
                      << "\n";
            std::cout << "decomposition: " << tree->root.to_string() << "\n";
            if (tree->isolated) std::cout << "isolated vertices: " << tree->isolated << "\n";
        } else {
            std::cout << "generalized complete multipartite: no\n";
        }
        std::cout << "P4-free: " << (p4free ? "yes" : "no") << "\n";
        std::cout << "Laplacian integral: " << (lap.integral ? "yes" : "no") << "\n";
    }
    return tree ? kExitIntegral : kExitNonIntegral;
}

// ---- scan ----

int cmd_scan(int vertices, bool force, bool force_full, int jobs, bool no_cache,
             const std::string& cache, bool as_json) {
    if (vertices > 6 && !force)
        throw CapacityError("scan on " + std::to_string(vertices) +
                            " vertices is slow; rerun with --force");
    if (vertices > 6)
        std::cerr << "warning: enumerating 2^21 labeled graphs and checking 853 classes; "
                     "expect minutes\n";
    ScanOptions opts;
    opts.vertices = vertices;
    opts.force_full = force_full;
    opts.jobs = jobs;
    opts.no_cache = no_cache;
    opts.cache_path = cache;
    auto sum = run_scan(opts);

    if (as_json) {
        json doc = document("scan");
        doc["vertices"] = sum.vertices;
        doc["classes"] = sum.classes;
        doc["computed"] = sum.computed;
        doc["cached"] = sum.cached;
        json recs = json::array();
        for (const auto& r : sum.records) recs.push_back(to_json(r));
        doc["records"] = recs;
        json dis = json::array();
        for (const auto& r : sum.disagreements) dis.push_back(to_json(r));
        doc["disagreements"] = dis;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "scan: connected graphs on " << sum.vertices << " vertices\n";
        std::cout << "classes: " << sum.classes << " (computed " << sum.computed << ", cached "
                  << sum.cached << ")\n";
        int agree = sum.classes - static_cast<int>(sum.disagreements.size());
        std::cout << "cayley-integral <=> gcm-present agreement: " << agree << "/" << sum.classes
                  << "\n";
        if (!sum.disagreements.empty()) {
            std::cout << "DISAGREEMENTS (candidate conjecture counterexamples):\n";
            for (const auto& r : sum.disagreements)
                std::cout << "  " << to_json(r).dump() << "\n";
        }
        if (!no_cache)
            std::cout << "cache: " << (cache.empty() ? default_cache_path() : cache) << "\n";
    }
    return sum.disagreements.empty() ? kExitIntegral : kExitNonIntegral;
}

// ---- families ----

struct FamilyRow {
    std::string name;
    TGraph graph;
    bool expected_integral;
};

std::vector<FamilyRow> family_rows() {
    std::vector<FamilyRow> rows;
    // cycles: integral exactly for m = 3, 4
    for (int m = 3; m <= 7; ++m)
        rows.push_back({"C" + std::to_string(m), cycle_graph(m), m == 3 || m == 4});
    // connected cubic graphs on <= 6 vertices: K4 and K_{3,3} integral, prism not
    rows.push_back({"K4", complete_graph(4), true});
    rows.push_back({"K_{3,3}", complete_multipartite({3, 3}), true});
    rows.push_back({"prism C3xK2",
                    TGraph::from_edge_list(
                        6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}}),
                    false});
    // unicyclic (k=1)
    rows.push_back({"K3", complete_graph(3), true});
    rows.push_back({"K_{2,2}", complete_multipartite({2, 2}), true});
    rows.push_back({"(K2 u K1)*K1", join(complete_graph(1), add_isolated(complete_graph(2), 1)), true});
    // bicyclic (k=2)
    rows.push_back({"K_{2,3}", complete_multipartite({3, 2}), true});
    rows.push_back({"K2*(2K1)", join(complete_graph(2), add_isolated(TGraph(1), 1)), true});
    rows.push_back({"(2K2)*K1",
                    join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2))),
                    true});
    rows.push_back({"(K_{1,2} u K1)*K1",
                    join(complete_graph(1), add_isolated(star_graph(3), 1)), true});
    // the bicyclic classification excludes the ladder P3 x K2 (the cited
    // product is read as the Cartesian product; the paper's symbol choice is
    // ambiguous and the direct product of K_{1,2} and K2 would be disconnected)
    rows.push_back({"ladder P3xK2",
                    TGraph::from_edge_list(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}}),
                    false});
    // tricyclic (k=3)
    rows.push_back({"(3K2)*K1",
                    join(complete_graph(1),
                         disjoint_union(complete_graph(2),
                                        disjoint_union(complete_graph(2), complete_graph(2)))),
                    true});
    rows.push_back({"(K_{1,2} u K2)*K1",
                    join(complete_graph(1), disjoint_union(star_graph(3), complete_graph(2))),
                    true});
    rows.push_back({"K_{2,4}", complete_multipartite({4, 2}), true});
    rows.push_back({"K_{1,3}*K1", join(complete_graph(1), star_graph(4)), true});
    rows.push_back({"(K3 u K1)*K1", join(complete_graph(1), add_isolated(complete_graph(3), 1)), true});
    rows.push_back({"(K_{1,3} u K1)*K1",
                    join(complete_graph(1), add_isolated(star_graph(4), 1)), true});
    return rows;
}

int cmd_families(bool force_full, int jobs, bool as_json) {
    auto rows = family_rows();
    bool all_match = true;
    json results = json::array();
    if (!as_json)
        std::cout << "family regression (expected vs computed):\n";
    for (const auto& row : rows) {
        PipelineOptions opts;
        opts.force_full = force_full;
        opts.jobs = jobs;
        Verdict v = is_integral(row.graph.n(), row.graph.transpositions(), opts);
        bool match = v.integral == row.expected_integral;
        all_match = all_match && match;
        if (as_json) {
            results.push_back(json{{"name", row.name},
                                   {"n", row.graph.n()},
                                   {"expected_integral", row.expected_integral},
                                   {"computed_integral", v.integral},
                                   {"path", to_string(v.path)},
                                   {"match", match}});
        } else {
            std::cout << "  " << (match ? "ok   " : "FAIL ") << row.name << "  n="
                      << row.graph.n() << "  expected "
                      << (row.expected_integral ? "integral" : "non-integral") << ", computed "
                      << (v.integral ? "integral" : "non-integral") << " via "
                      << to_string(v.path) << "\n";
        }
    }
    if (as_json) {
        json doc = document("families");
        doc["rows"] = results;
        doc["all_match"] = all_match;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (all_match ? "all families match" : "MISMATCH detected") << "\n";
    }
    return all_match ? kExitIntegral : kExitNonIntegral;
}

// ---- oracle ----

int cmd_oracle(const GraphInput& input, int trials, std::uint64_t seed, int jobs, bool as_json) {
    TGraph g = input.resolve();
    auto res = brute_force_integrality(g.n(), g.transpositions(), trials, seed);

    bool pipeline_ran = false;
    bool pipeline_integral = false;
    if (g.n() <= kMaxPipelineN) {
        auto rep = cayley_spectrum(g.n(), g.transpositions(), jobs);
        pipeline_ran = true;
        pipeline_integral = rep.integral;
    }
    bool agree = !pipeline_ran || pipeline_integral == res.integral;

    if (as_json) {
        json doc = document("oracle");
        doc["graph"] = graph_json(g);
        doc["oracle"] = json{{"integral", res.integral},
                             {"trials", res.trials},
                             {"seed", res.seed},
                             {"certificate_norm", res.certificate_norm.get_str()}};
        doc["pipeline_integral"] = pipeline_ran ? json(pipeline_integral) : json(nullptr);
        doc["agreement"] = agree;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "oracle: " << (res.integral ? "INTEGRAL" : "NON-INTEGRAL") << " (trials="
                  << res.trials << ", seed=" << res.seed << ")\n";
        if (!res.integral)
            std::cout << "certificate vector norm: " << res.certificate_norm.get_str() << "\n";
        if (pipeline_ran)
            std::cout << "representation pipeline: "
                      << (pipeline_integral ? "INTEGRAL" : "NON-INTEGRAL")
                      << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (!agree) return kExitNonIntegral;
    return verdict_exit(res.integral);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integrality checker for Cayley graphs of S_n generated by transpositions"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    bool as_json = false;
    int jobs = env_jobs();
    app.add_flag("--json", as_json, "emit a single JSON document");
    app.add_option("--jobs", jobs, "worker threads (default: CAYSPEC_JOBS or all cores)");

    // check
    auto* check = app.add_subcommand("check", "staged integrality verdict for Cay(S_n, T)");
    GraphInput check_in;
    check_in.attach(check);
    bool check_spectrum = false, check_force = false;
    check->add_flag("--spectrum", check_spectrum, "include the full spectral report");
    check->add_flag("--force-full", check_force, "always run the representation stage");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "full block spectra via S_n representations");
    GraphInput spec_in;
    spec_in.attach(spectrum);

    // gcm
    auto* gcm = app.add_subcommand("gcm", "generalized complete multipartite decomposition");
    GraphInput gcm_in;
    gcm_in.attach(gcm);

    // scan
    auto* scan = app.add_subcommand("scan", "exhaustive conjecture scan over isomorphism classes");
    int scan_v = 4;
    bool scan_force = false, scan_force_full = false, scan_no_cache = false;
    std::string scan_cache;
    scan->add_option("vertices", scan_v, "vertex count")->required()->check(CLI::Range(1, 7));
    scan->add_flag("--force", scan_force, "allow slow scans (7 vertices)");
    scan->add_flag("--force-full", scan_force_full, "run the representation stage on every class");
    scan->add_flag("--no-cache", scan_no_cache, "bypass the JSONL cache");
    scan->add_option("--cache", scan_cache, "cache path (default: CAYSPEC_CACHE or ./cayspec-scan-cache.jsonl)");

    // families
    auto* families = app.add_subcommand("families", "regression table over the named graph families");
    bool fam_force = false;
    families->add_flag("--force-full", fam_force, "always run the representation stage");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "annihilating-product brute-force check on n! vertices");
    GraphInput oracle_in;
    oracle_in.attach(oracle);
    int trials = 3;
    std::uint64_t seed = 1;
    oracle->add_option("--trials", trials, "random probe vectors")->check(CLI::Range(1, 64));
    oracle->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed())
            return cmd_check(check_in, check_spectrum, check_force, jobs, as_json);
        if (spectrum->parsed()) return cmd_spectrum(spec_in, jobs, as_json);
        if (gcm->parsed()) return cmd_gcm(gcm_in, as_json);
        if (scan->parsed())
            return cmd_scan(scan_v, scan_force, scan_force_full, jobs, scan_no_cache, scan_cache,
                            as_json);
        if (families->parsed()) return cmd_families(fam_force, jobs, as_json);
        if (oracle->parsed()) return cmd_oracle(oracle_in, trials, seed, jobs, as_json);
    } catch (const CapacityError& ex) {
        std::cerr << "capacity: " << ex.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
