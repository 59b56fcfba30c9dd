#include <doctest.h>

#include <set>

#include "pps/graph.hpp"
#include "support/oracles.hpp"

using namespace pps;

namespace {

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && connected_components(g).size() == 1;
}

} // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edge_list normalizes and validates") {
    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.degree(0) == 3);
    CHECK(star.degree(1) == 1);
    CHECK(star.degree(2) == 1);
    CHECK(star.degree(3) == 1);

    // (1,0) normalizes to (0,1), so this is a duplicate
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), VertexOutOfRange);

    const Graph g = Graph::from_edge_list(4, {{3, 2}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("adjacency is symmetric and sorted") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(9, 0.4, rng);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
            for (int w : g.neighbors(v)) {
                const auto& back = g.neighbors(w);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
    }
}

TEST_CASE("generators build the documented shapes") {
    const Graph p3 = path_graph(3);
    CHECK(p3.vertex_count() == 4);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 2);
    CHECK(p3.degree(3) == 1);

    const Graph sp = spider_graph({2, 2, 2});
    CHECK(sp.vertex_count() == 7);
    CHECK(sp.degree(0) == 3);
    int deg1 = 0, deg2 = 0;
    for (int v = 1; v < 7; ++v) {
        if (sp.degree(v) == 1) ++deg1;
        if (sp.degree(v) == 2) ++deg2;
    }
    CHECK(deg1 == 3);
    CHECK(deg2 == 3);

    const Graph broom = broom_graph(2, 3);
    CHECK(broom.vertex_count() == 6);
    CHECK(broom.degree(0) == 4);
    CHECK(is_tree(broom));

    const Graph cat = caterpillar_graph(2, 2);
    CHECK(cat.vertex_count() == 9);
    CHECK(is_tree(cat));
    CHECK(cat.degree(1) == 4); // middle spine vertex: two spine edges + two leaves

    CHECK(generate({RecipeKind::random_tree, {2}, 12345}) == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(generate({RecipeKind::random_tree, {2}, 999}) == Graph::from_edge_list(2, {{0, 1}}));

    CHECK_THROWS_AS(spider_graph({2, 2}), RecipeInvalid);
    CHECK_THROWS_AS(generate({RecipeKind::path, {}, 0}), RecipeInvalid);
    CHECK_THROWS_AS(generate({RecipeKind::broom, {0, 3}, 0}), RecipeInvalid);
}

TEST_CASE("generate is deterministic") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
        const GeneratorRecipe recipe{RecipeKind::random_tree, {12}, seed};
        CHECK(generate(recipe) == generate(recipe));
    }
    CHECK(generate({RecipeKind::spider, {3, 1, 4}, 0}) == generate({RecipeKind::spider, {3, 1, 4}, 7}));
}

TEST_CASE("random trees are trees") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 2 + static_cast<int>(seed % 14);
        CHECK(is_tree(random_tree(n, seed)));
    }
}

TEST_CASE("prufer decode matches a known sequence") {
    // sequence (3, 3) on 4 vertices: leaves 0, 1 attach to 3, then 3 joins 3... n=4
    const Graph g = prufer_tree(4, {3, 3});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("labeled tree enumeration hits n^(n-2)") {
    int count4 = 0, count5 = 0;
    for_each_labeled_tree(4, [&](const Graph& t) {
        CHECK(is_tree(t));
        ++count4;
    });
    for_each_labeled_tree(5, [&](const Graph&) { ++count5; });
    CHECK(count4 == 16);
    CHECK(count5 == 125);
}

TEST_CASE("free tree enumeration matches the labeled route") {
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(free_trees(n).size() == expected[static_cast<std::size_t>(n - 1)]);

    // independent route: dedupe all labeled trees by certificate
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> certs;
        for_each_labeled_tree(n, [&](const Graph& t) { certs.insert(tree_certificate(t)); });
        CHECK(certs.size() == free_trees(n).size());
    }
    for (const Graph& t : free_trees(9)) CHECK(is_tree(t));
}

TEST_CASE("subdivision shapes") {
    CHECK(oracle::isomorphic(subdivision(Graph::from_edge_list(2, {{0, 1}})), path_graph(2)));

    const Graph tri = Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}});
    const Graph hexagon = subdivision(tri);
    CHECK(hexagon.vertex_count() == 6);
    CHECK(hexagon.edge_count() == 6);
    CHECK(connected_components(hexagon).size() == 1);
    for (int v = 0; v < 6; ++v) CHECK(hexagon.degree(v) == 2); // connected 2-regular on 6 = C6

    CHECK(tree_certificate(subdivision(star_graph(3))) == tree_certificate(spider_graph({2, 2, 2})));
}

TEST_CASE("subdivision invariants over a corpus") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = trial % 2 == 0 ? oracle::random_graph(8, 0.4, rng)
                                       : random_tree(10, rng());
        const Graph s = subdivision(g);
        CHECK(s.vertex_count() == g.vertex_count() + g.edge_count());
        CHECK(s.edge_count() == 2 * g.edge_count());
        const auto coloring = bipartition(s);
        REQUIRE(coloring.has_value());
        // the parts are exactly {original} and {inserted}
        for (const auto& [u, v] : s.edges()) {
            CHECK((u < g.vertex_count()) != (v < g.vertex_count()));
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph::from_edge_list(2, {{0, 1}})).size() == 1);
    CHECK(connected_components(Graph::from_edge_list(3, {})).size() == 3);
    const auto comps = connected_components(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
}

TEST_CASE("bipartition") {
    CHECK(bipartition(path_graph(5)).has_value());
    CHECK_FALSE(bipartition(Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}})).has_value());
    CHECK(bipartition(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).has_value());
}

TEST_CASE("edge list text") {
    CHECK(to_edge_list_text(Graph::from_edge_list(2, {{0, 1}})) == "2 1\n0 1\n");
    CHECK(to_edge_list_text(Graph::from_edge_list(3, {})) == "3 0\n");
}

TEST_SUITE_END();
