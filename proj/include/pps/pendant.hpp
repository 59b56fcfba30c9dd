#pragma once

#include <map>
#include <vector>

#include "pps/graph.hpp"

namespace pps {

/// A path whose `leaf` end has degree 1, whose `anchor` end has degree >= 3,
/// and whose interior vertices (listed from leaf toward anchor) all have
/// degree 2. length = |interior| + 1 edges.
struct PendantPath {
    int leaf;
    int anchor;
    int length;
    std::vector<int> interior;
};

/// All pendant paths of a graph with the per-length tallies
///   p[k] = number of pendant paths of length k,
///   q[k] = number of distinct anchors among them.
/// A length absent from the maps has p = q = 0; present lengths satisfy
/// p[k] >= q[k] >= 1.
struct PendantProfile {
    std::vector<PendantPath> paths;
    std::map<int, int> p;
    std::map<int, int> q;

    int p_count(int k) const {
        auto it = p.find(k);
        return it == p.end() ? 0 : it->second;
    }
    int q_count(int k) const {
        auto it = q.find(k);
        return it == q.end() ? 0 : it->second;
    }
    /// Lengths with at least one pendant path, ascending.
    std::vector<int> lengths() const;
};

/// Walks from every degree-1 vertex through consecutive degree-2 vertices and
/// records a pendant path when the walk ends at a vertex of degree >= 3.
/// Bare path components, cycles and isolated vertices contribute nothing.
PendantProfile find_pendant_paths(const Graph& g);

/// max(p_k - q_k, 0) - the guaranteed eigenvalue multiplicity for length k.
int pendant_bound(const PendantProfile& profile, int k);

} // namespace pps
