#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pps/graph.hpp"
#include "pps/verify.hpp"

namespace pps {

enum class Format { json, csv, text };

/// Batch-run configuration shared by the CLI subcommands.
struct RunConfig {
    double tol = 1e-8;
    int kmax = 0;
    std::optional<bool> exact;  // unset: exact on iff n + m <= exact_cap
    bool lemmas = false;
    Format format = Format::json;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool force = false;           // process graphs beyond dense_cap anyway
    int dense_cap = 2000;         // n + m limit for dense eigensolves
    int exact_cap = 256;          // n + m limit for default-on exact checks
    int signing_trials = 32;      // sampled (orientation, deletion) pairs
};

struct InputItem {
    std::size_t line_no;
    std::string graph6_text;
    Graph graph;
};

struct InputError {
    std::size_t line_no;
    std::string message;
};

struct InputBatch {
    std::vector<InputItem> items;
    std::vector<InputError> errors;
};

/// Reads a whole stream of graphs. A first significant line of the form
/// "<int> <int>" selects edge-list blocks; anything else selects one graph6
/// line per graph. '#' starts a comment in both modes. Parse failures are
/// collected per line, not thrown.
InputBatch read_graphs(std::istream& in);

// Subcommand drivers. Reports go to `out`, diagnostics to `err`; the return
// value is the process exit code (0 ok, 1 verification failure, 2 parse
// errors). Parallel and serial runs emit byte-identical reports.
int run_analyze(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config);
int run_verify(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config);
int run_survey(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config);
int run_export(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config,
               const std::string& matrix);
int run_gen(const GeneratorRecipe& recipe, int count, std::ostream& out);

/// Renders one survey summary in the chosen format (exposed for tests).
std::string render_survey(const TightnessSummary& summary, Format format);

} // namespace pps
