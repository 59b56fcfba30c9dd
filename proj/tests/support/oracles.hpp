#pragma once

// Test-only oracles. Each one re-derives a quantity along a route that is
// independent of the library code it is used to check.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pps/bigint.hpp"
#include "pps/exact.hpp"
#include "pps/graph.hpp"
#include "pps/pendant.hpp"

namespace oracle {

/// Characteristic polynomial coefficients (ascending, monic) of an integer
/// matrix via the Faddeev-LeVerrier recursion in exact arithmetic.
inline std::vector<pps::BigInt> char_poly(const pps::IntMatrix& m) {
    using pps::BigInt;
    const Eigen::Index n = m.rows();
    std::vector<BigInt> coeff(static_cast<std::size_t>(n) + 1, BigInt(0));
    coeff[static_cast<std::size_t>(n)] = BigInt(1);
    pps::IntMatrix work = pps::IntMatrix::Constant(n, n, BigInt(0));
    for (Eigen::Index i = 0; i < n; ++i) work(i, i) = BigInt(1);
    pps::IntMatrix prod = pps::IntMatrix::Constant(n, n, BigInt(0));
    for (Eigen::Index k = 1; k <= n; ++k) {
        // prod = m * work
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                BigInt acc(0);
                for (Eigen::Index l = 0; l < n; ++l) acc += m(i, l) * work(l, j);
                prod(i, j) = acc;
            }
        BigInt trace(0);
        for (Eigen::Index i = 0; i < n; ++i) trace += prod(i, i);
        const BigInt c = -trace / BigInt(k); // exact by the recursion
        coeff[static_cast<std::size_t>(n - k)] = c;
        work = prod;
        for (Eigen::Index i = 0; i < n; ++i) work(i, i) += c;
    }
    return coeff;
}

/// Exact kernel dimension by Gaussian elimination over rational numbers
/// (numerator/denominator BigInt pairs, gcd-reduced) - an algorithm disjoint
/// from the fraction-free route in the library.
inline int rational_nullity(const pps::IntMatrix& m) {
    using pps::BigInt;
    struct Frac {
        BigInt num, den; // den > 0
        void reduce() {
            if (num.is_zero()) {
                den = BigInt(1);
                return;
            }
            BigInt g = pps::gcd(num, den);
            num = num / g;
            den = den / g;
            if (den.sign() < 0) {
                num = -num;
                den = -den;
            }
        }
    };
    const Eigen::Index n = m.rows();
    std::vector<std::vector<Frac>> a(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)].push_back(Frac{m(i, j), BigInt(1)});
    int rank = 0;
    for (Eigen::Index col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (Eigen::Index i = rank; i < n; ++i)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].num.is_zero()) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const Frac& p = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (Eigen::Index i = rank + 1; i < n; ++i) {
            Frac& lead = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (lead.num.is_zero()) continue;
            // factor = lead / p
            Frac factor{lead.num * p.den, lead.den * p.num};
            factor.reduce();
            for (Eigen::Index j = col; j < n; ++j) {
                Frac& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const Frac& y = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                // x -= factor * y
                Frac t{x.num * factor.den * y.den - factor.num * y.num * x.den,
                       x.den * factor.den * y.den};
                t.reduce();
                x = t;
            }
        }
        ++rank;
    }
    return static_cast<int>(n) - rank;
}

/// Pendant profile by exhaustive DFS over all simple paths starting at each
/// degree-1 vertex, filtered by the degree conditions; no walking shortcut.
inline pps::PendantProfile brute_pendant(const pps::Graph& g) {
    pps::PendantProfile profile;
    std::map<int, std::set<int>> anchors;
    for (int leaf = 0; leaf < g.vertex_count(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        std::vector<std::vector<int>> stack{{leaf}};
        while (!stack.empty()) {
            std::vector<int> path = std::move(stack.back());
            stack.pop_back();
            const int last = path.back();
            if (path.size() >= 2 && g.degree(last) >= 3) {
                bool interior_ok = true;
                for (std::size_t t = 1; t + 1 < path.size(); ++t)
                    interior_ok = interior_ok && g.degree(path[t]) == 2;
                if (interior_ok) {
                    pps::PendantPath p;
                    p.leaf = leaf;
                    p.anchor = last;
                    p.length = static_cast<int>(path.size()) - 1;
                    p.interior.assign(path.begin() + 1, path.end() - 1);
                    profile.p[p.length] += 1;
                    anchors[p.length].insert(last);
                    profile.paths.push_back(std::move(p));
                }
                continue; // a pendant path never continues past its anchor
            }
            for (int w : g.neighbors(last)) {
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                auto next = path;
                next.push_back(w);
                stack.push_back(std::move(next));
            }
        }
    }
    for (const auto& [k, s] : anchors) profile.q[k] = static_cast<int>(s.size());
    return profile;
}

/// Brute-force isomorphism test for tiny graphs.
inline bool isomorphic(const pps::Graph& a, const pps::Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (const auto& [u, v] : a.edges())
            if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Closed-form adjacency spectrum of the n-cycle: {2 cos(2 pi j / n)}.
inline std::vector<double> cycle_spectrum(int n) {
    std::vector<double> out;
    for (int j = 0; j < n; ++j) out.push_back(2.0 * std::cos(2.0 * M_PI * j / n));
    std::sort(out.begin(), out.end());
    return out;
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline pps::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<pps::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.emplace_back(u, v);
    return pps::Graph::from_edge_list(n, std::move(edges));
}

inline pps::Graph random_bipartite(int n1, int n2, double p, std::mt19937_64& rng) {
    std::vector<pps::Edge> edges;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (uniform01(rng) < p) edges.emplace_back(u, n1 + v);
    return pps::Graph::from_edge_list(n1 + n2, std::move(edges));
}

/// Vertex deletion at graph level with order-preserving relabeling.
inline pps::Graph delete_vertices_graph(const pps::Graph& g, const std::vector<int>& drop) {
    std::vector<bool> dead(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : drop) dead[static_cast<std::size_t>(v)] = true;
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<pps::Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (!dead[static_cast<std::size_t>(u)] && !dead[static_cast<std::size_t>(v)])
            edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                               relabel[static_cast<std::size_t>(v)]);
    return pps::Graph::from_edge_list(next, std::move(edges));
}

inline pps::Graph relabeled(const pps::Graph& g, const std::vector<int>& perm) {
    std::vector<pps::Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return pps::Graph::from_edge_list(g.vertex_count(), std::move(edges));
}

} // namespace oracle
