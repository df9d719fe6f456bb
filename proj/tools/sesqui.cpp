#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sesqui/acceptance.hpp"
#include "sesqui/certify.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/json_io.hpp"
#include "sesqui/representation.hpp"
#include "sesqui/search.hpp"
#include "sesqui/spectra.hpp"
#include "sesqui/steiner.hpp"

namespace {

using sesqui::json;

struct GlobalOptions {
    unsigned seed = 0;
    long long budget = 10'000'000;
    double tolerance = 1e-8;
    std::string out_dir;
    bool no_timestamp = false;
};

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

json parse_stdin() {
    try {
        return json::parse(read_stdin());
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("malformed JSON on standard input: ") + e.what());
    }
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

// `rep` subcommands accept either a bare representation object or any object
// carrying one under "representation" (such as `rep find` output).
sesqui::IntegralRepresentation representation_from_stdin() {
    json j = parse_stdin();
    if (j.contains("representation")) j = j.at("representation");
    return sesqui::representation_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void persist(const GlobalOptions& opts, const json& subject, sesqui::Certificate cert) {
    if (opts.out_dir.empty()) return;
    cert.subject = sesqui::content_hash(subject.dump());
    if (!opts.no_timestamp) cert.timestamp = sesqui::iso8601_now();
    sesqui::write_certificate(opts.out_dir, cert);
}

std::vector<int> parse_length_list(const std::string& arg) {
    std::vector<int> lengths;
    std::stringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        lengths.push_back(std::stoi(item));
    }
    if (lengths.empty()) throw CLI::ValidationError("expected a comma-separated length list");
    return lengths;
}

void emit_graph(const sesqui::Graph& g, const std::string& format) {
    if (format == "json") emit(sesqui::to_json(g));
    else if (format == "dot") std::cout << sesqui::to_dot(g);
    else if (format == "edges") std::cout << sesqui::to_edge_list(g);
    else throw CLI::ValidationError("unknown format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions, classification and integral-representation "
                 "certificates for graphs with smallest eigenvalue >= -3"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions opts;
    app.add_option("--seed", opts.seed, "seed for randomized suites");
    app.add_option("--budget", opts.budget, "node budget for representation search");
    app.add_option("--tolerance", opts.tolerance, "tolerance recorded with floating-point claims");
    app.add_option("--out", opts.out_dir, "directory for certificates keyed by content hash");
    app.add_flag("--no-timestamp", opts.no_timestamp, "omit timestamps from certificates");

    int exit_code = 0;

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a named graph family");
    std::string construct_kind, construct_format = "json";
    std::vector<std::string> construct_args;
    construct->add_option("kind", construct_kind,
                          "multipartite | cycle-complement | cube | cycles")->required();
    construct->add_option("args", construct_args, "family parameters");
    construct->add_option("--format", construct_format, "json | dot | edges");
    construct->callback([&] {
        sesqui::Graph g;
        if (construct_kind == "multipartite") {
            if (construct_args.size() != 2)
                throw CLI::ValidationError("multipartite needs <parts> <part-size>");
            g = sesqui::complete_multipartite(std::stoi(construct_args[0]),
                                              std::stoi(construct_args[1]));
        } else if (construct_kind == "cycle-complement") {
            if (construct_args.size() != 1)
                throw CLI::ValidationError("cycle-complement needs a length list like 4,4");
            g = sesqui::cycle_complement(parse_length_list(construct_args[0]));
        } else if (construct_kind == "cube") {
            if (construct_args.size() != 1) throw CLI::ValidationError("cube needs a dimension");
            g = sesqui::hypercube(std::stoi(construct_args[0]));
        } else if (construct_kind == "cycles") {
            if (construct_args.size() != 1)
                throw CLI::ValidationError("cycles needs a length list like 4,5");
            g = sesqui::disjoint_cycles(parse_length_list(construct_args[0]));
        } else {
            throw CLI::ValidationError("unknown construction: " + construct_kind);
        }
        emit_graph(g, construct_format);
    });

    // ---- gallery ----
    auto* gallery_cmd = app.add_subcommand("gallery", "fixed fixture graphs");
    std::string gallery_name, gallery_format = "json";
    gallery_cmd->add_option("name", gallery_name, "fig1a | fig1b | fig2 | fig3")->required();
    gallery_cmd->add_option("--format", gallery_format, "json | dot | edges");
    gallery_cmd->callback([&] {
        if (gallery_name == "fig3") {
            emit(sesqui::to_json(sesqui::hoffman_gallery("fig3")));
        } else {
            emit_graph(sesqui::gallery(gallery_name), gallery_format);
        }
    });

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "regularity report for a graph on stdin");
    classify->callback([&] {
        json input = parse_stdin();
        auto g = sesqui::graph_from_json(input);
        auto report = sesqui::classify_regularity(g);
        emit(sesqui::to_json(report));
        sesqui::Certificate cert;
        cert.claims.push_back({"graphs", "classify_regularity", "srg",
                               report.srg ? "pass" : "fail",
                               sesqui::to_json(report), 0.0});
        persist(opts, input, cert);
    });

    // ---- spectrum ----
    auto* spectrum = app.add_subcommand("spectrum", "sorted eigenvalues of a graph on stdin");
    spectrum->callback([&] {
        json input = parse_stdin();
        auto g = sesqui::graph_from_json(input);
        auto values = sesqui::eigenvalues_sym(sesqui::adjacency_matrix(g));
        emit(json{{"eigenvalues", values}});
        sesqui::Certificate cert;
        cert.claims.push_back({"spectra", "eigenvalues_sym", "lambda_min", "pass",
                               json{{"lambda_min", values.front()}}, opts.tolerance});
        persist(opts, input, cert);
    });

    // ---- sts ----
    auto* sts = app.add_subcommand("sts", "Steiner triple systems");
    sts->require_subcommand(1);

    auto* sts_construct = sts->add_subcommand("construct", "build an STS(v)");
    int sts_v = 0;
    sts_construct->add_option("v", sts_v, "number of points")->required();
    sts_construct->callback([&] { emit(sesqui::to_json(sesqui::construct_sts(sts_v))); });

    auto* sts_verify = sts->add_subcommand("verify", "check the Steiner property");
    sts_verify->callback([&] {
        json input = parse_stdin();
        auto report = sesqui::verify_sts(sesqui::sts_from_json(input));
        emit(sesqui::to_json(report));
        sesqui::Certificate cert;
        cert.claims.push_back({"steiner", "verify_sts", "steiner_property",
                               report.pass ? "pass" : "fail", sesqui::to_json(report), 0.0});
        persist(opts, input, cert);
        if (!report.pass) exit_code = 1;
    });

    auto* sts_blockgraph = sts->add_subcommand("blockgraph", "block graph of an STS on stdin");
    std::string sts_bg_format = "json";
    sts_blockgraph->add_option("--format", sts_bg_format, "json | dot | edges");
    sts_blockgraph->callback([&] {
        auto sys = sesqui::sts_from_json(parse_stdin());
        emit_graph(sesqui::block_graph(sys), sts_bg_format);
    });

    auto* sts_params = sts->add_subcommand("params", "block-graph parameters by formula");
    int sts_params_v = 0;
    sts_params->add_option("v", sts_params_v, "number of points")->required();
    sts_params->callback([&] {
        auto p = sesqui::sts_srg_params(sts_params_v);
        emit(json{{"v", sts_params_v}, {"n", p.n}, {"k", p.k}, {"a", p.a}, {"c", p.c}});
    });

    // ---- rep ----
    auto* rep = app.add_subcommand("rep", "integral representations");
    rep->require_subcommand(1);

    auto* rep_verify = rep->add_subcommand("verify", "exact check against a graph");
    std::string rep_graph_path;
    long long rep_scale = 1;
    rep_verify->add_option("--graph", rep_graph_path, "graph JSON file")->required();
    rep_verify->add_option("--s", rep_scale, "scale (default 1)");
    rep_verify->callback([&] {
        auto g = sesqui::graph_from_json(parse_file(rep_graph_path));
        auto r = representation_from_stdin();
        auto report = sesqui::verify_integrable(g, r, rep_scale);
        emit(sesqui::to_json(report));
        sesqui::Certificate cert;
        cert.claims.push_back({"lattice_reps", "verify_integrable", "integrable",
                               report.pass ? "pass" : "fail",
                               json{{"s", rep_scale}}, 0.0});
        persist(opts, sesqui::to_json(r), cert);
        if (!report.pass) exit_code = 1;
    });

    auto* rep_find = rep->add_subcommand("find", "search for a norm-3 representation");
    rep_find->callback([&] {
        json input = parse_stdin();
        auto g = sesqui::graph_from_json(input);
        auto outcome = sesqui::find_norm3_representation(g, opts.budget);
        emit(sesqui::to_json(outcome));
        sesqui::Certificate cert;
        cert.claims.push_back({"lattice_reps", "find_norm3_representation", "norm3_representable",
                               sesqui::to_string(outcome.status),
                               json{{"budget", opts.budget}, {"node_count", outcome.node_count}},
                               0.0});
        persist(opts, input, cert);
        if (outcome.status != sesqui::SearchOutcome::Status::Found) exit_code = 1;
    });

    auto* rep_mates = rep->add_subcommand("mates", "shared-support pairs of a representation");
    rep_mates->callback([&] {
        auto r = representation_from_stdin();
        emit(sesqui::to_json(sesqui::detect_mates(r)));
    });

    auto* rep_reconstruct = rep->add_subcommand("reconstruct-sts",
                                                "rebuild the triple system behind a representation");
    std::string reconstruct_graph_path;
    rep_reconstruct->add_option("--graph", reconstruct_graph_path, "graph JSON file")->required();
    rep_reconstruct->callback([&] {
        auto g = sesqui::graph_from_json(parse_file(reconstruct_graph_path));
        auto r = representation_from_stdin();
        emit(sesqui::to_json(sesqui::sts_from_representation(g, r)));
    });

    // ---- hoffman ----
    auto* hoffman = app.add_subcommand("hoffman", "Hoffman graph calculus");
    hoffman->require_subcommand(1);

    hoffman->add_subcommand("special-matrix", "integer special matrix")->callback([&] {
        auto h = sesqui::hoffman_from_json(parse_stdin());
        auto sp = sesqui::special_matrix(h);
        emit(json{{"order", sp.size()}, {"entries", sp}});
    });

    hoffman->add_subcommand("special-graph", "signed graph on the slim vertices")->callback([&] {
        auto h = sesqui::hoffman_from_json(parse_stdin());
        emit(sesqui::to_json(sesqui::special_graph(h)));
    });

    hoffman->add_subcommand("eigen", "smallest eigenvalue of the special matrix")->callback([&] {
        json input = parse_stdin();
        auto h = sesqui::hoffman_from_json(input);
        double lambda = sesqui::hoffman_smallest_eigenvalue(h);
        emit(json{{"lambda_min", lambda}});
        sesqui::Certificate cert;
        cert.claims.push_back({"hoffman", "hoffman_smallest_eigenvalue", "lambda_min", "pass",
                               json{{"lambda_min", lambda}}, opts.tolerance});
        persist(opts, input, cert);
    });

    hoffman->add_subcommand("decompose", "indecomposable factors")->callback([&] {
        auto h = sesqui::hoffman_from_json(parse_stdin());
        auto decomposition = sesqui::decompose(h);
        json factors = json::array();
        for (size_t i = 0; i < decomposition.factors.size(); ++i) {
            json f = sesqui::to_json(decomposition.factors[i]);
            f["slim_vertices"] = decomposition.slim_sets[i];
            f["fat_vertices"] = decomposition.fat_sets[i];
            factors.push_back(f);
        }
        emit(json{{"factors", factors}, {"indecomposable", decomposition.factors.size() == 1}});
    });

    auto* hoffman_vr = hoffman->add_subcommand("verify-reduced",
                                               "check a reduced representation");
    std::string reduced_path;
    long long reduced_t = 3;
    hoffman_vr->add_option("--rep", reduced_path, "reduced representation JSON file")->required();
    hoffman_vr->add_option("--t", reduced_t, "norm (default 3)");
    hoffman_vr->callback([&] {
        json input = parse_stdin();
        auto h = sesqui::hoffman_from_json(input);
        auto psi = sesqui::reduced_from_json(parse_file(reduced_path));
        auto report = sesqui::verify_reduced_representation(h, psi, reduced_t);
        emit(sesqui::to_json(report));
        sesqui::Certificate cert;
        cert.claims.push_back({"hoffman", "verify_reduced_representation", "reduced_representation",
                               report.pass ? "pass" : "fail", json{{"t", reduced_t}}, 0.0});
        persist(opts, input, cert);
        if (!report.pass) exit_code = 1;
    });

    // ---- accept ----
    auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
    std::string accept_filter;
    accept->add_option("--filter", accept_filter, "substring filter on criterion names");
    accept->callback([&] {
        sesqui::acceptance::Options options;
        options.seed = opts.seed;
        options.filter = accept_filter;
        auto results = sesqui::acceptance::run(options);
        emit(sesqui::acceptance::to_json(results));
        for (const auto& result : results)
            std::cerr << (result.pass ? "PASS" : "FAIL") << ' ' << result.name << " ("
                      << result.seconds << "s)\n";
        sesqui::Certificate cert;
        for (const auto& result : results)
            cert.claims.push_back({"cli", "acceptance_suite", result.name,
                                   result.pass ? "pass" : "fail",
                                   json{{"failures", result.failures}}, 0.0});
        persist(opts, json{{"suite", "acceptance"}, {"seed", opts.seed}}, cert);
        if (!sesqui::acceptance::all_passed(results)) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
