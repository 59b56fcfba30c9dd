#include "pps/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pps/graph6.hpp"
#include "pps/matrices.hpp"

namespace pps {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Runs fn(i) for i = 0..count-1 on `jobs` workers; results keep input order,
// so output bytes do not depend on the job count.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn fn) {
    std::vector<Result> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int j = 0; j < spawn; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool looks_like_edge_list_header(const std::string& line, long long& n, long long& m) {
    std::istringstream in(line);
    std::string extra;
    if (!(in >> n >> m) || n < 0 || m < 0) return false;
    if (in >> extra) return false;
    return true;
}

void read_edge_list_blocks(const std::vector<std::string>& lines, InputBatch& batch) {
    std::size_t i = 0;
    const auto skip_filler = [&] {
        while (i < lines.size() && is_comment_or_blank(lines[i])) ++i;
    };
    for (skip_filler(); i < lines.size(); skip_filler()) {
        long long n = 0, m = 0;
        const std::size_t header_line = i + 1;
        if (!looks_like_edge_list_header(lines[i], n, m)) {
            batch.errors.push_back({header_line, "expected an \"n m\" header line"});
            ++i;
            continue;
        }
        ++i;
        std::vector<Edge> edges;
        bool bad = false;
        for (long long e = 0; e < m; ++e) {
            skip_filler();
            if (i >= lines.size()) {
                batch.errors.push_back({header_line, "edge list truncated: expected " +
                                                         std::to_string(m) + " edges"});
                bad = true;
                break;
            }
            std::istringstream es(lines[i]);
            long long u, v;
            std::string extra;
            if (!(es >> u >> v) || (es >> extra)) {
                batch.errors.push_back({i + 1, "expected an edge line \"u v\""});
                bad = true;
                ++i;
                break;
            }
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++i;
        }
        if (bad) continue;
        try {
            Graph g = Graph::from_edge_list(static_cast<int>(n), std::move(edges));
            batch.items.push_back({header_line, to_graph6(g), std::move(g)});
        } catch (const Error& e) {
            batch.errors.push_back({header_line, e.what()});
        }
    }
}

ordered_json profile_json(const PendantProfile& profile) {
    ordered_json out = ordered_json::object();
    for (int k : profile.lengths()) {
        out[std::to_string(k)] = {{"p", profile.p_count(k)}, {"q", profile.q_count(k)}};
    }
    return out;
}

ordered_json spectral_check_json(const SpectralCheckReport& report) {
    ordered_json stats = ordered_json::array();
    for (const auto& s : report.stats)
        stats.push_back({{"name", s.name}, {"distance", s.distance}, {"pass", s.pass}});
    return {{"check", report.check}, {"stats", stats}, {"pass", report.pass}};
}

struct ItemResult {
    std::string out;
    std::string warn;
    bool pass = true;
    bool parse_fail = false;
    BoundReport report; // only filled by the survey path
    bool skipped = false;
};

VerifyOptions verify_options(const RunConfig& config, const Graph& g) {
    VerifyOptions opt;
    opt.tol = config.tol;
    opt.kmax = config.kmax;
    opt.exact = config.exact.value_or(g.vertex_count() + g.edge_count() <= config.exact_cap);
    opt.dense_cap = config.force ? std::numeric_limits<int>::max() : config.dense_cap;
    return opt;
}

std::string csv_escape(const std::string& s) { return s; } // graph6 never needs quoting

const char* bool_str(bool b) { return b ? "true" : "false"; }

// ---- analyze ---------------------------------------------------------------

std::string render_analyze(const InputItem& item, const PendantProfile& profile,
                           const Spectrum& spec_l, const Spectrum& spec_q, Format format) {
    const Graph& g = item.graph;
    switch (format) {
        case Format::json: {
            ordered_json j{{"graph6", item.graph6_text},
                           {"n", g.vertex_count()},
                           {"m", g.edge_count()},
                           {"profile", profile_json(profile)}};
            j["laplacian_spectrum"] = std::vector<double>(spec_l.values.begin(), spec_l.values.end());
            j["signless_spectrum"] = std::vector<double>(spec_q.values.begin(), spec_q.values.end());
            ordered_json cl = ordered_json::array();
            for (const auto& [value, size] : clusters(spec_l, spec_l.tol))
                cl.push_back({{"value", value}, {"size", size}});
            j["laplacian_clusters"] = cl;
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::string out;
            const auto ks = profile.lengths();
            if (ks.empty())
                return csv_escape(item.graph6_text) + "," + std::to_string(g.vertex_count()) + "," +
                       std::to_string(g.edge_count()) + ",,,,\n";
            for (int k : ks) {
                out += csv_escape(item.graph6_text) + "," + std::to_string(g.vertex_count()) + "," +
                       std::to_string(g.edge_count()) + "," + std::to_string(k) + "," +
                       std::to_string(profile.p_count(k)) + "," + std::to_string(profile.q_count(k)) +
                       "," + std::to_string(pendant_bound(profile, k)) + "\n";
            }
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << item.graph6_text << "  n=" << g.vertex_count() << " m=" << g.edge_count();
            if (profile.lengths().empty()) {
                out << "  no pendant paths\n";
            } else {
                out << "\n";
                for (int k : profile.lengths())
                    out << "  k=" << k << "  p=" << profile.p_count(k) << " q=" << profile.q_count(k)
                        << " bound=" << pendant_bound(profile, k) << "\n";
            }
            out << "  spec(L) =";
            for (Eigen::Index i = 0; i < spec_l.values.size(); ++i)
                out << ' ' << fmt_double(spec_l.values(i));
            out << "\n  spec(Q) =";
            for (Eigen::Index i = 0; i < spec_q.values.size(); ++i)
                out << ' ' << fmt_double(spec_q.values(i));
            out << "\n";
            return out.str();
        }
    }
    return {};
}

// ---- verify ----------------------------------------------------------------

std::string render_verify(const InputItem& item, const BoundReport& report,
                          const std::vector<SpectralCheckReport>& checks, Format format) {
    const Graph& g = item.graph;
    switch (format) {
        case Format::json: {
            ordered_json j{{"graph6", item.graph6_text},
                           {"n", g.vertex_count()},
                           {"m", g.edge_count()},
                           {"profile", profile_json(report.profile)}};
            ordered_json rows = ordered_json::array();
            for (const BoundRow& row : report.rows)
                rows.push_back({{"k", row.k},
                                {"i", row.i},
                                {"target", row.target},
                                {"multL", row.mult_l},
                                {"multQ", row.mult_q},
                                {"bound", row.bound},
                                {"pass", row.pass}});
            j["theorem"] = rows;
            ordered_json exact = ordered_json::array();
            for (const AggregateCheck& row : report.exact_rows)
                exact.push_back({{"k", row.k},
                                 {"nullityL", row.nullity_l},
                                 {"nullityQ", row.nullity_q},
                                 {"bound", row.bound},
                                 {"pass", row.pass}});
            j["exact"] = exact;
            if (!report.discrepancies.empty()) j["discrepancies"] = report.discrepancies;
            bool pass = report.pass;
            for (const auto& check : checks) {
                j[check.check] = spectral_check_json(check);
                pass = pass && check.pass;
            }
            j["pass"] = pass;
            return j.dump() + "\n";
        }
        case Format::csv: {
            const std::string prefix = csv_escape(item.graph6_text) + "," +
                                       std::to_string(g.vertex_count()) + "," +
                                       std::to_string(g.edge_count()) + ",";
            bool pass = report.pass;
            for (const auto& check : checks) pass = pass && check.pass;
            if (report.rows.empty()) return prefix + ",,,,,," + bool_str(pass) + "\n";
            std::string out;
            for (const BoundRow& row : report.rows)
                out += prefix + std::to_string(row.k) + "," + std::to_string(row.i) + "," +
                       fmt_double(row.target) + "," + std::to_string(row.mult_l) + "," +
                       std::to_string(row.mult_q) + "," + std::to_string(row.bound) + "," +
                       bool_str(row.pass) + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << item.graph6_text << "  n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
            for (const BoundRow& row : report.rows)
                out << "  k=" << row.k << " i=" << row.i << " target=" << fmt_double(row.target)
                    << "  multL=" << row.mult_l << " multQ=" << row.mult_q
                    << " bound=" << row.bound << "  " << (row.pass ? "ok" : "FAIL") << "\n";
            for (const AggregateCheck& row : report.exact_rows)
                out << "  exact k=" << row.k << "  nullityL=" << row.nullity_l
                    << " nullityQ=" << row.nullity_q << " bound=" << row.bound << "  "
                    << (row.pass ? "ok" : "FAIL") << "\n";
            for (const std::string& d : report.discrepancies) out << "  discrepancy: " << d << "\n";
            bool pass = report.pass;
            for (const auto& check : checks) {
                out << "  " << check.check << ": " << (check.pass ? "ok" : "FAIL");
                double worst = 0;
                for (const auto& s : check.stats) worst = std::max(worst, s.distance);
                out << " (max distance " << fmt_double(worst) << ", " << check.stats.size()
                    << " checks)\n";
                pass = pass && check.pass;
            }
            out << "  " << (pass ? "PASS" : "FAIL") << "\n";
            return out.str();
        }
    }
    return {};
}

} // namespace

InputBatch read_graphs(std::istream& in) {
    InputBatch batch;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    std::size_t first = 0;
    while (first < lines.size() && is_comment_or_blank(lines[first])) ++first;
    if (first == lines.size()) return batch;

    long long n, m;
    if (looks_like_edge_list_header(lines[first], n, m)) {
        read_edge_list_blocks(lines, batch);
        return batch;
    }
    for (std::size_t i = first; i < lines.size(); ++i) {
        if (is_comment_or_blank(lines[i])) continue;
        std::string text = lines[i];
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        std::size_t start = 0;
        while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
        text = text.substr(start);
        try {
            Graph g = parse_graph6(text);
            std::string canonical = to_graph6(g);
            batch.items.push_back({i + 1, std::move(canonical), std::move(g)});
        } catch (const Error& e) {
            batch.errors.push_back({i + 1, e.what()});
        }
    }
    return batch;
}

int run_analyze(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config) {
    InputBatch batch = read_graphs(in);
    auto results = parallel_map<ItemResult>(
        batch.items.size(), config.jobs, [&](std::size_t i) {
            const InputItem& item = batch.items[i];
            ItemResult r;
            const int order = item.graph.vertex_count() + item.graph.edge_count();
            if (!config.force && order > config.dense_cap) {
                r.warn = "line " + std::to_string(item.line_no) + ": skipped (n + m = " +
                         std::to_string(order) + " exceeds dense-solve cap)\n";
                r.skipped = true;
                return r;
            }
            const PendantProfile profile = find_pendant_paths(item.graph);
            const Spectrum spec_l = eigenvalues_symmetric(laplacian(item.graph));
            const Spectrum spec_q = eigenvalues_symmetric(signless_laplacian(item.graph));
            r.out = render_analyze(item, profile, spec_l, spec_q, config.format);
            return r;
        });
    for (const auto& r : results) {
        out << r.out;
        err << r.warn;
    }
    for (const auto& e : batch.errors)
        err << "line " << e.line_no << ": " << e.message << "\n";
    return batch.errors.empty() ? 0 : 2;
}

int run_verify(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config) {
    InputBatch batch = read_graphs(in);
    auto results = parallel_map<ItemResult>(
        batch.items.size(), config.jobs, [&](std::size_t i) {
            const InputItem& item = batch.items[i];
            ItemResult r;
            try {
                const BoundReport report = verify_pendant_bound(item.graph, verify_options(config, item.graph));
                std::vector<SpectralCheckReport> checks;
                if (config.lemmas) {
                    checks.push_back(verify_subdivision_correspondence(
                        item.graph, default_orientation(item.graph), config.tol));
                    checks.push_back(verify_bipartite_signing(item.graph, config.signing_trials,
                                                              config.tol,
                                                              splitmix64(config.seed ^ (i + 1))));
                }
                r.pass = report.pass;
                for (const auto& check : checks) r.pass = r.pass && check.pass;
                r.out = render_verify(item, report, checks, config.format);
            } catch (const SizeLimit& e) {
                r.warn = "line " + std::to_string(item.line_no) + ": skipped (" +
                         std::string(e.what()) + ")\n";
                r.skipped = true;
            }
            return r;
        });
    bool all_pass = true;
    for (const auto& r : results) {
        out << r.out;
        err << r.warn;
        if (!r.skipped) all_pass = all_pass && r.pass;
    }
    for (const auto& e : batch.errors)
        err << "line " << e.line_no << ": " << e.message << "\n";
    if (!batch.errors.empty()) return 2;
    return all_pass ? 0 : 1;
}

std::string render_survey(const TightnessSummary& summary, Format format) {
    switch (format) {
        case Format::json: {
            ordered_json rows = ordered_json::array();
            for (const auto& [key, cell] : summary.cells) {
                const auto& [k, i, matrix] = key;
                ordered_json hist = ordered_json::object();
                for (const auto& [slack, count] : cell.histogram)
                    hist[std::to_string(slack)] = count;
                rows.push_back({{"k", k},
                                {"i", i},
                                {"matrix", std::string(1, matrix)},
                                {"count", cell.count},
                                {"tight", cell.tight},
                                {"tight_fraction",
                                 cell.count == 0 ? 0.0 : static_cast<double>(cell.tight) / cell.count},
                                {"min_slack", cell.min_slack},
                                {"max_slack", cell.max_slack},
                                {"mean_slack",
                                 cell.count == 0 ? 0.0 : static_cast<double>(cell.slack_sum) / cell.count},
                                {"histogram", hist}});
            }
            ordered_json j{{"graphs", summary.graphs}, {"rows", rows}};
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::string out = "k,i,matrix,count,tight,tight_fraction,min_slack,max_slack,mean_slack\n";
            for (const auto& [key, cell] : summary.cells) {
                const auto& [k, i, matrix] = key;
                out += std::to_string(k) + "," + std::to_string(i) + "," + matrix + "," +
                       std::to_string(cell.count) + "," + std::to_string(cell.tight) + "," +
                       fmt_double(cell.count == 0 ? 0.0 : static_cast<double>(cell.tight) / cell.count) +
                       "," + std::to_string(cell.min_slack) + "," + std::to_string(cell.max_slack) +
                       "," +
                       fmt_double(cell.count == 0 ? 0.0 : static_cast<double>(cell.slack_sum) / cell.count) +
                       "\n";
            }
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "graphs: " << summary.graphs << "\n";
            if (summary.cells.empty()) {
                out << "no qualifying pendant configurations\n";
                return out.str();
            }
            for (const auto& [key, cell] : summary.cells) {
                const auto& [k, i, matrix] = key;
                out << "k=" << k << " i=" << i << " " << matrix << "  count=" << cell.count
                    << " tight=" << cell.tight << " slack range [" << cell.min_slack << ", "
                    << cell.max_slack << "] mean "
                    << fmt_double(cell.count == 0 ? 0.0
                                                  : static_cast<double>(cell.slack_sum) / cell.count)
                    << "\n";
            }
            return out.str();
        }
    }
    return {};
}

int run_survey(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config) {
    InputBatch batch = read_graphs(in);
    auto results = parallel_map<ItemResult>(
        batch.items.size(), config.jobs, [&](std::size_t i) {
            const InputItem& item = batch.items[i];
            ItemResult r;
            try {
                VerifyOptions opt = verify_options(config, item.graph);
                opt.exact = false; // slack statistics are a numeric-path survey
                r.report = verify_pendant_bound(item.graph, opt);
            } catch (const SizeLimit& e) {
                r.warn = "line " + std::to_string(item.line_no) + ": skipped (" +
                         std::string(e.what()) + ")\n";
                r.skipped = true;
            }
            return r;
        });
    TightnessSummary summary;
    for (const auto& r : results) {
        err << r.warn;
        if (!r.skipped) accumulate_tightness(summary, r.report);
    }
    out << render_survey(summary, config.format);
    for (const auto& e : batch.errors)
        err << "line " << e.line_no << ": " << e.message << "\n";
    return batch.errors.empty() ? 0 : 2;
}

int run_export(std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& config,
               const std::string& matrix) {
    using M = DenseMatrix<std::int64_t>;
    const auto build = [&](const Graph& g) -> M {
        if (matrix == "adjacency") return adjacency<std::int64_t>(g);
        if (matrix == "laplacian") return laplacian<std::int64_t>(g);
        if (matrix == "signless-laplacian") return signless_laplacian<std::int64_t>(g);
        if (matrix == "incidence") return incidence<std::int64_t>(g);
        if (matrix == "directed-incidence")
            return directed_incidence<std::int64_t>(g, default_orientation(g));
        if (matrix == "subdivision") return subdivision_adjacency<std::int64_t>(g);
        if (matrix == "signed-subdivision")
            return signed_subdivision_adjacency<std::int64_t>(g, default_orientation(g));
        throw ParseError("unknown matrix kind: " + matrix);
    };
    InputBatch batch = read_graphs(in);
    for (const InputItem& item : batch.items) {
        const M m = build(item.graph);
        if (config.format == Format::json) {
            ordered_json entries = ordered_json::array();
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                ordered_json row = ordered_json::array();
                for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
                entries.push_back(row);
            }
            ordered_json j{{"graph6", item.graph6_text},
                           {"matrix", matrix},
                           {"rows", m.rows()},
                           {"cols", m.cols()},
                           {"entries", entries}};
            out << j.dump() << "\n";
        } else {
            out << item.graph6_text << "  " << matrix << "  " << m.rows() << "x" << m.cols() << "\n";
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
                out << "\n";
            }
        }
    }
    for (const auto& e : batch.errors)
        err << "line " << e.line_no << ": " << e.message << "\n";
    return batch.errors.empty() ? 0 : 2;
}

int run_gen(const GeneratorRecipe& recipe, int count, std::ostream& out) {
    GeneratorRecipe r = recipe;
    for (int i = 0; i < count; ++i) {
        out << to_graph6(generate(r)) << "\n";
        ++r.seed; // --count random trees use seed, seed+1, ...
    }
    return 0;
}

} // namespace pps
