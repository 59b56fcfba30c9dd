#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pps/report.hpp"

namespace {

struct CommonArgs {
    std::string input = "-";
    pps::RunConfig config;
    std::string format = "json";
    bool exact_on = false;
    bool exact_off = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", args.input, "input file (graph6 or edge-list), '-' for stdin");
    cmd->add_option("--tol", args.config.tol, "base tolerance (scaled by the matrix norm)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", args.config.kmax, "cap on the pendant path length k (0 = none)");
    cmd->add_flag("--exact", args.exact_on, "force exact certificates on");
    cmd->add_flag("--no-exact", args.exact_off, "disable exact certificates");
    cmd->add_flag("--lemmas", args.config.lemmas,
                  "also run the subdivision-correspondence and bipartite-signing checks");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--jobs", args.config.jobs, "parallel workers")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.config.seed, "seed for sampled checks");
    cmd->add_flag("--force", args.config.force, "process graphs beyond the dense-solve cap");
    cmd->add_option("--dense-cap", args.config.dense_cap, "n + m limit for dense eigensolves");
    cmd->add_option("--exact-cap", args.config.exact_cap,
                    "n + m limit under which exact certificates default on");
    cmd->add_option("--trials", args.config.signing_trials,
                    "sampled (orientation, deletion) pairs for the signing check")
        ->check(CLI::PositiveNumber);
}

pps::RunConfig finalize(CommonArgs& args) {
    if (args.exact_on) args.config.exact = true;
    if (args.exact_off) args.config.exact = false;
    if (args.format == "csv") args.config.format = pps::Format::csv;
    else if (args.format == "text") args.config.format = pps::Format::text;
    else args.config.format = pps::Format::json;
    return args.config;
}

int with_input_stream(const std::string& path, const std::function<int(std::istream&)>& fn) {
    if (path == "-" || path.empty()) return fn(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open input file: " << path << "\n";
        return 2;
    }
    return fn(file);
}

pps::RecipeKind parse_kind(const std::string& name) {
    if (name == "path") return pps::RecipeKind::path;
    if (name == "star") return pps::RecipeKind::star;
    if (name == "spider") return pps::RecipeKind::spider;
    if (name == "broom") return pps::RecipeKind::broom;
    if (name == "caterpillar") return pps::RecipeKind::caterpillar;
    if (name == "random-tree") return pps::RecipeKind::random_tree;
    throw pps::RecipeInvalid("unknown recipe kind: " + name +
                             " (expected path|star|spider|broom|caterpillar|random-tree)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pendant path detection and Laplacian eigenvalue multiplicity verification"};
    app.require_subcommand(1);

    int default_jobs = 1;
    if (const char* env = std::getenv("PENDANT_SPECTRA_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) default_jobs = parsed;
    }

    CommonArgs analyze_args, verify_args, survey_args, export_args;
    analyze_args.config.jobs = verify_args.config.jobs = survey_args.config.jobs = default_jobs;

    CLI::App* analyze = app.add_subcommand("analyze", "pendant profiles and spectra per graph");
    add_common(analyze, analyze_args);

    CLI::App* verify = app.add_subcommand(
        "verify", "check the guaranteed eigenvalue multiplicities per graph");
    add_common(verify, verify_args);

    CLI::App* survey = app.add_subcommand("survey", "tightness statistics over a corpus");
    add_common(survey, survey_args);

    CLI::App* exporter = app.add_subcommand("export", "print graph matrices");
    std::string matrix_kind = "laplacian";
    add_common(exporter, export_args);
    exporter->add_option("--matrix", matrix_kind, "matrix to export")
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless-laplacian", "incidence",
                               "directed-incidence", "subdivision", "signed-subdivision"}));

    CLI::App* gen = app.add_subcommand("gen", "emit generated graphs as graph6 lines");
    std::string gen_kind;
    std::vector<int> gen_params;
    int gen_count = 1;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "path|star|spider|broom|caterpillar|random-tree")
        ->required();
    gen->add_option("params", gen_params, "recipe parameters");
    gen->add_option("--count", gen_count, "number of graphs")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "seed for random-tree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            const pps::RunConfig config = finalize(analyze_args);
            return with_input_stream(analyze_args.input, [&](std::istream& in) {
                return pps::run_analyze(in, std::cout, std::cerr, config);
            });
        }
        if (verify->parsed()) {
            const pps::RunConfig config = finalize(verify_args);
            return with_input_stream(verify_args.input, [&](std::istream& in) {
                return pps::run_verify(in, std::cout, std::cerr, config);
            });
        }
        if (survey->parsed()) {
            const pps::RunConfig config = finalize(survey_args);
            return with_input_stream(survey_args.input, [&](std::istream& in) {
                return pps::run_survey(in, std::cout, std::cerr, config);
            });
        }
        if (exporter->parsed()) {
            const pps::RunConfig config = finalize(export_args);
            return with_input_stream(export_args.input, [&](std::istream& in) {
                return pps::run_export(in, std::cout, std::cerr, config, matrix_kind);
            });
        }
        if (gen->parsed()) {
            pps::GeneratorRecipe recipe{parse_kind(gen_kind), gen_params, gen_seed};
            return pps::run_gen(recipe, gen_count, std::cout);
        }
    } catch (const pps::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
