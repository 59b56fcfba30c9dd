#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pps/errors.hpp"

namespace pps {

/// Unordered edge stored as (u, v) with u < v.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept lexicographically sorted and the position of an edge in
/// edges() is its edge index for all matrix constructions. Instances are
/// immutable after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Validating constructor. Normalizes each pair to u < v and sorts the
    /// edge list. Throws InvalidEdge on loops, DuplicateEdge on repeated
    /// pairs, VertexOutOfRange on endpoints >= n.
    static Graph from_edge_list(int n, std::vector<Edge> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Splits any edge (u, v) with edge index j into (u, n+j), (n+j, v).
/// The result has n + m vertices and 2m edges and is bipartite with parts
/// {original vertices} and {inserted vertices}.
Graph subdivision(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Two-coloring if one exists: color[v] in {0, 1} with color 0 containing the
/// smallest vertex of each component. nullopt iff some component has an odd
/// cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

// ---------------------------------------------------------------------------
// Deterministic generators for building test corpora.
// ---------------------------------------------------------------------------

enum class RecipeKind { path, star, spider, broom, caterpillar, random_tree };

/// A reproducible graph recipe: equal recipes (including seed) yield
/// bit-identical edge lists.
struct GeneratorRecipe {
    RecipeKind kind;
    std::vector<int> params;
    std::uint64_t seed = 0;
};

Graph generate(const GeneratorRecipe& recipe);

/// Path with `length` edges on vertices 0..length, edges (i, i+1).
Graph path_graph(int length);

/// Star K_{1,t}: center 0, leaves 1..t.
Graph star_graph(int leaves);

/// t >= 3 pendant paths of the given lengths glued at center 0.
Graph spider_graph(const std::vector<int>& leg_lengths);

/// Path 0..handle plus `leaves` extra pendant vertices attached at vertex 0.
Graph broom_graph(int handle, int leaves);

/// Spine path 0..spine with `leaves` pendant vertices on every spine vertex.
Graph caterpillar_graph(int spine, int leaves);

/// Uniform labeled tree on n vertices from a random Prufer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Decodes a Prufer sequence (length n-2, entries in 0..n-1) into its tree.
Graph prufer_tree(int n, const std::vector<int>& sequence);

/// Unbiased draw from {0, .., n-1}. mt19937_64's output stream is pinned by
/// the standard, so corpora built through this are reproducible everywhere.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n);

// ---------------------------------------------------------------------------
// Exhaustive tree corpora.
// ---------------------------------------------------------------------------

/// All non-isomorphic trees on n vertices (rooted level-sequence enumeration
/// deduplicated by tree_certificate). Counts for n = 1..10:
/// 1 1 1 2 3 6 11 23 47 106.
std::vector<Graph> free_trees(int n);

/// Canonical string for a tree, invariant under relabeling: AHU encoding
/// rooted at the centroid (minimum over both centroids when there are two).
std::string tree_certificate(const Graph& g);

/// Calls fn(tree) for every labeled tree on n vertices, i.e. all n^(n-2)
/// Prufer sequences in lexicographic order. n >= 2.
template <class Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n < 2) throw RecipeInvalid("for_each_labeled_tree requires n >= 2");
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        fn(prufer_tree(n, seq));
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" line, then m lines "u v"; '#' starts a comment.
// ---------------------------------------------------------------------------

std::string to_edge_list_text(const Graph& g);

} // namespace pps
