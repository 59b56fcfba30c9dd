#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "pps/graph6.hpp"
#include "pps/report.hpp"

using namespace pps;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

template <class Fn>
RunResult run(const std::string& input, Fn driver) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = driver(in, out, err);
    return {code, out.str(), err.str()};
}

std::string spider_corpus(int copies) {
    std::string text;
    const std::string line = to_graph6(spider_graph({2, 2, 2})) + "\n";
    for (int i = 0; i < copies; ++i) text += line;
    return text;
}

} // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("read_graphs detects graph6") {
    std::istringstream in("# comment\nA_\nC?\n");
    const InputBatch batch = read_graphs(in);
    REQUIRE(batch.items.size() == 2);
    CHECK(batch.errors.empty());
    CHECK(batch.items[0].graph.vertex_count() == 2);
    CHECK(batch.items[0].line_no == 2);
    CHECK(batch.items[1].graph.vertex_count() == 4);
}

TEST_CASE("read_graphs detects edge lists") {
    std::istringstream in("# header comment\n3 2\n0 1\n1 2\n\n2 1\n0 1\n");
    const InputBatch batch = read_graphs(in);
    REQUIRE(batch.items.size() == 2);
    CHECK(batch.errors.empty());
    CHECK(batch.items[0].graph == path_graph(2));
    CHECK(batch.items[1].graph == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(batch.items[0].graph6_text == to_graph6(path_graph(2)));
}

TEST_CASE("read_graphs records parse errors with line numbers") {
    std::istringstream g6("A_\n*bad*\nC?\n");
    const InputBatch bad_g6 = read_graphs(g6);
    CHECK(bad_g6.items.size() == 2);
    REQUIRE(bad_g6.errors.size() == 1);
    CHECK(bad_g6.errors[0].line_no == 2);

    std::istringstream el("2 1\n0 0\n3 1\n0 1\n");
    const InputBatch bad_el = read_graphs(el);
    CHECK(bad_el.items.size() == 1);
    REQUIRE(bad_el.errors.size() == 1);
    CHECK(bad_el.errors[0].line_no == 1); // loop edge reported at the block header

    std::istringstream trunc("4 3\n0 1\n");
    const InputBatch bad_trunc = read_graphs(trunc);
    CHECK(bad_trunc.items.empty());
    REQUIRE(bad_trunc.errors.size() == 1);
}

TEST_CASE("verify emits the documented json schema") {
    const auto result = run(spider_corpus(1), [](auto& in, auto& out, auto& err) {
        RunConfig config;
        return run_verify(in, out, err, config);
    });
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["graph6"] == to_graph6(spider_graph({2, 2, 2})));
    CHECK(j["n"] == 7);
    CHECK(j["m"] == 6);
    CHECK(j["profile"]["2"]["p"] == 3);
    CHECK(j["profile"]["2"]["q"] == 1);
    REQUIRE(j["theorem"].size() == 2);
    for (const auto& row : j["theorem"]) {
        CHECK(row["k"] == 2);
        CHECK(row["bound"] == 2);
        CHECK(row["multL"].get<int>() >= 2);
        CHECK(row["multQ"].get<int>() >= 2);
        CHECK(row["pass"] == true);
        CHECK(row.contains("target"));
        CHECK(row.contains("i"));
    }
    REQUIRE(j["exact"].size() == 1);
    CHECK(j["exact"][0]["k"] == 2);
    CHECK(j["exact"][0]["nullityL"] == 4);
    CHECK(j["exact"][0]["nullityQ"] == 4);
    CHECK(j["exact"][0]["bound"] == 4);
    CHECK(j["exact"][0]["pass"] == true);
    CHECK(j["pass"] == true);
}

TEST_CASE("verify exit codes") {
    RunConfig config;
    const auto ok = run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, config);
    });
    CHECK(ok.exit_code == 0);

    const auto parse_fail = run("A_\n*bad*\n", [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, config);
    });
    CHECK(parse_fail.exit_code == 2);
    CHECK(parse_fail.err.find("line 2") != std::string::npos);

    // an absurdly tiny tolerance makes the numeric count miss its targets
    RunConfig tiny;
    tiny.tol = 1e-300;
    tiny.exact = false;
    const auto fail = run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, tiny);
    });
    CHECK(fail.exit_code == 1);

    // a huge tolerance can only merge clusters upward, so the bound still holds
    RunConfig huge;
    huge.tol = 10.0;
    huge.exact = false;
    const auto still_ok = run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, huge);
    });
    CHECK(still_ok.exit_code == 0);
}

TEST_CASE("format flag changes rendering, never verdicts") {
    for (Format format : {Format::json, Format::csv, Format::text}) {
        RunConfig ok_config;
        ok_config.format = format;
        CHECK(run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
                  return run_verify(in, out, err, ok_config);
              }).exit_code == 0);

        RunConfig fail_config = ok_config;
        fail_config.tol = 1e-300;
        fail_config.exact = false;
        CHECK(run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
                  return run_verify(in, out, err, fail_config);
              }).exit_code == 1);
    }
}

TEST_CASE("graphs beyond the dense cap are skipped with a warning") {
    RunConfig config;
    config.dense_cap = 5;
    const auto result = run(spider_corpus(1) + "A_\n", [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, config);
    });
    CHECK(result.exit_code == 0); // skipped graphs do not fail the run
    CHECK(result.err.find("skipped") != std::string::npos);
    CHECK(result.out.find("A_") != std::string::npos); // the small graph still reported

    config.force = true;
    const auto forced = run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, config);
    });
    CHECK(forced.exit_code == 0);
    CHECK(forced.err.empty());
    CHECK(forced.out.find("theorem") != std::string::npos);
}

TEST_CASE("lemma checks are attached with --lemmas") {
    RunConfig config;
    config.lemmas = true;
    const auto result = run(spider_corpus(1), [&](auto& in, auto& out, auto& err) {
        return run_verify(in, out, err, config);
    });
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["subdivision-correspondence"]["pass"] == true);
    CHECK(j["bipartite-signing"]["pass"] == true);
    CHECK(j["bipartite-signing"]["stats"].size() == 32);
}

TEST_CASE("analyze output") {
    const auto result = run("A_\n", [](auto& in, auto& out, auto& err) {
        RunConfig config;
        return run_analyze(in, out, err, config);
    });
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["graph6"] == "A_");
    CHECK(j["profile"].empty());
    REQUIRE(j["laplacian_spectrum"].size() == 2);
    CHECK(j["laplacian_spectrum"][0].get<double>() == doctest::Approx(0.0));
    CHECK(j["laplacian_spectrum"][1].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("reports are byte-identical across job counts") {
    std::string corpus;
    std::mt19937_64 rng(149);
    for (int i = 0; i < 25; ++i)
        corpus += to_graph6(random_tree(4 + static_cast<int>(bounded_random(rng, 9)), rng())) + "\n";

    for (Format format : {Format::json, Format::csv, Format::text}) {
        std::string first;
        for (int jobs : {1, 4}) {
            RunConfig config;
            config.jobs = jobs;
            config.format = format;
            config.lemmas = true;
            const auto result = run(corpus, [&](auto& in, auto& out, auto& err) {
                return run_verify(in, out, err, config);
            });
            CHECK(result.exit_code == 0);
            if (jobs == 1)
                first = result.out;
            else
                CHECK(result.out == first);
        }
    }
}

TEST_CASE("survey") {
    RunConfig config;
    config.format = Format::csv;
    const auto result = run(spider_corpus(3), [&](auto& in, auto& out, auto& err) {
        return run_survey(in, out, err, config);
    });
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("k,i,matrix,count,tight") != std::string::npos);
    CHECK(result.out.find("2,1,L,3,3") != std::string::npos);
    CHECK(result.out.find("2,2,Q,3,3") != std::string::npos);

    const auto empty = run("", [&](auto& in, auto& out, auto& err) {
        return run_survey(in, out, err, config);
    });
    CHECK(empty.exit_code == 0);

    // jobs determinism at the library level
    std::string corpus;
    std::mt19937_64 rng(151);
    for (int i = 0; i < 30; ++i) corpus += to_graph6(random_tree(10, rng())) + "\n";
    std::string first;
    for (int jobs : {1, 4}) {
        RunConfig jc;
        jc.jobs = jobs;
        const auto r = run(corpus, [&](auto& in, auto& out, auto& err) {
            return run_survey(in, out, err, jc);
        });
        CHECK(r.exit_code == 0);
        if (jobs == 1)
            first = r.out;
        else
            CHECK(r.out == first);
    }
}

TEST_CASE("gen") {
    std::ostringstream out;
    run_gen({RecipeKind::spider, {2, 2, 2}, 0}, 1, out);
    CHECK(out.str() == to_graph6(spider_graph({2, 2, 2})) + "\n");

    std::ostringstream a, b;
    run_gen({RecipeKind::random_tree, {12}, 7}, 5, a);
    run_gen({RecipeKind::random_tree, {12}, 7}, 5, b);
    CHECK(a.str() == b.str());

    std::istringstream lines(a.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(parse_graph6(line) == random_tree(12, 7 + static_cast<std::uint64_t>(count)));
        ++count;
    }
    CHECK(count == 5);
}

TEST_CASE("export") {
    RunConfig config;
    config.format = Format::json;
    const auto result = run("A_\n", [&](auto& in, auto& out, auto& err) {
        return run_export(in, out, err, config, "laplacian");
    });
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["matrix"] == "laplacian");
    CHECK(j["rows"] == 2);
    CHECK(j["entries"][0][0] == 1);
    CHECK(j["entries"][0][1] == -1);

    RunConfig text_config;
    text_config.format = Format::text;
    const auto text = run("A_\n", [&](auto& in, auto& out, auto& err) {
        return run_export(in, out, err, text_config, "subdivision");
    });
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("3x3") != std::string::npos);
}

TEST_SUITE_END();
