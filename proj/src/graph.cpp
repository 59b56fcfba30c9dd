#include "pps/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pps {

Graph Graph::from_edge_list(int n, std::vector<Edge> pairs) {
    if (n < 0) throw VertexOutOfRange("vertex count must be non-negative");
    for (auto& [u, v] : pairs) {
        if (u == v) throw InvalidEdge("loop edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw VertexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") out of range for n = " + std::to_string(n));
    }
    std::sort(pairs.begin(), pairs.end());
    if (auto it = std::adjacent_find(pairs.begin(), pairs.end()); it != pairs.end())
        throw DuplicateEdge("duplicate edge (" + std::to_string(it->first) + ", " +
                            std::to_string(it->second) + ")");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(pairs);
    g.adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph subdivision(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    int j = 0;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, n + j);
        edges.emplace_back(v, n + j);
        ++j;
    }
    return Graph::from_edge_list(n + g.edge_count(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// --- generators --------------------------------------------------------------

Graph path_graph(int length) {
    if (length < 0) throw RecipeInvalid("path length must be non-negative");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(length + 1, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw RecipeInvalid("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, std::move(edges));
}

Graph spider_graph(const std::vector<int>& leg_lengths) {
    if (leg_lengths.size() < 3)
        throw RecipeInvalid("spider needs at least 3 legs (center degree >= 3)");
    std::vector<Edge> edges;
    int next = 1;
    for (int len : leg_lengths) {
        if (len < 1) throw RecipeInvalid("spider leg lengths must be positive");
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edge_list(next, std::move(edges));
}

Graph broom_graph(int handle, int leaves) {
    if (handle < 1 || leaves < 1) throw RecipeInvalid("broom parameters must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < handle; ++i) edges.emplace_back(i, i + 1);
    for (int t = 0; t < leaves; ++t) edges.emplace_back(0, handle + 1 + t);
    return Graph::from_edge_list(handle + 1 + leaves, std::move(edges));
}

Graph caterpillar_graph(int spine, int leaves) {
    if (spine < 1 || leaves < 1) throw RecipeInvalid("caterpillar parameters must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < spine; ++i) edges.emplace_back(i, i + 1);
    int next = spine + 1;
    for (int i = 0; i <= spine; ++i)
        for (int t = 0; t < leaves; ++t) edges.emplace_back(i, next++);
    return Graph::from_edge_list(next, std::move(edges));
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
    // rejection sampling keeps the draw unbiased for every n
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

Graph prufer_tree(int n, const std::vector<int>& sequence) {
    if (n < 1) throw RecipeInvalid("tree needs at least one vertex");
    if (n <= 2) {
        if (!sequence.empty()) throw RecipeInvalid("Prufer sequence must be empty for n <= 2");
        if (n == 1) return Graph::from_edge_list(1, {});
        return Graph::from_edge_list(2, {{0, 1}});
    }
    if (static_cast<int>(sequence.size()) != n - 2)
        throw RecipeInvalid("Prufer sequence must have length n - 2");
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int a : sequence) {
        if (a < 0 || a >= n) throw VertexOutOfRange("Prufer entry out of range");
        ++deg[static_cast<std::size_t>(a)];
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int a : sequence) {
        edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
        if (--deg[static_cast<std::size_t>(a)] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edge_list(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw RecipeInvalid("tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<int> seq;
    for (int i = 0; i < n - 2; ++i)
        seq.push_back(static_cast<int>(bounded_random(rng, static_cast<std::uint64_t>(n))));
    return prufer_tree(n, seq);
}

Graph generate(const GeneratorRecipe& recipe) {
    const auto& p = recipe.params;
    auto want = [&](std::size_t k, const char* what) {
        if (p.size() != k)
            throw RecipeInvalid(std::string(what) + ": expected " + std::to_string(k) +
                                " parameter(s), got " + std::to_string(p.size()));
    };
    switch (recipe.kind) {
        case RecipeKind::path:
            want(1, "path");
            return path_graph(p[0]);
        case RecipeKind::star:
            want(1, "star");
            return star_graph(p[0]);
        case RecipeKind::spider:
            return spider_graph(p);
        case RecipeKind::broom:
            want(2, "broom");
            return broom_graph(p[0], p[1]);
        case RecipeKind::caterpillar:
            want(2, "caterpillar");
            return caterpillar_graph(p[0], p[1]);
        case RecipeKind::random_tree:
            want(1, "random-tree");
            return random_tree(p[0], recipe.seed);
    }
    throw RecipeInvalid("unknown recipe kind");
}

// --- exhaustive tree corpora --------------------------------------------------

namespace {

// AHU subtree encoding; children codes sorted so the string only depends on
// the rooted isomorphism type.
std::string ahu_code(const Graph& g, int v, int parent) {
    std::vector<std::string> child;
    for (int w : g.neighbors(v))
        if (w != parent) child.push_back(ahu_code(g, w, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

// One or two centroids of a tree, found by stripping leaves layer by layer.
std::vector<int> tree_centroids(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<int> next;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : g.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

Graph level_sequence_tree(const std::vector<int>& levels) {
    // parent of position i is the nearest earlier position one level up
    std::vector<Edge> edges;
    std::vector<int> stack; // positions of current root-to-node chain
    for (std::size_t i = 0; i < levels.size(); ++i) {
        while (!stack.empty() &&
               levels[static_cast<std::size_t>(stack.back())] != levels[i] - 1)
            stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), static_cast<int>(i));
        stack.push_back(static_cast<int>(i));
    }
    return Graph::from_edge_list(static_cast<int>(levels.size()), std::move(edges));
}

} // namespace

std::string tree_certificate(const Graph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string code = ahu_code(g, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<Graph> free_trees(int n) {
    if (n < 1) throw RecipeInvalid("tree needs at least one vertex");
    if (n == 1) return {Graph::from_edge_list(1, {})};
    std::vector<Graph> out;
    std::map<std::string, std::size_t> seen;
    // canonical rooted level sequences, Beyer-Hedetniemi successor rule
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        Graph t = level_sequence_tree(levels);
        std::string cert = tree_certificate(t);
        if (seen.emplace(std::move(cert), out.size()).second) out.push_back(std::move(t));
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] > 2) { p = i; break; }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] == levels[static_cast<std::size_t>(p)] - 1) { q = i; break; }
        for (int i = p; i < n; ++i)
            levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
    }
    return out;
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pps
