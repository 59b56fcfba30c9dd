#include "pps/pendant.hpp"

#include <algorithm>
#include <set>

namespace pps {

std::vector<int> PendantProfile::lengths() const {
    std::vector<int> out;
    out.reserve(p.size());
    for (const auto& [k, count] : p)
        if (count > 0) out.push_back(k);
    return out;
}

PendantProfile find_pendant_paths(const Graph& g) {
    PendantProfile profile;
    std::map<int, std::set<int>> anchors_by_length;
    for (int leaf = 0; leaf < g.vertex_count(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        // the degree-2 continuation is unique, so the walk is forced
        PendantPath path;
        path.leaf = leaf;
        int prev = leaf;
        int cur = g.neighbors(leaf)[0];
        while (g.degree(cur) == 2) {
            path.interior.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        if (g.degree(cur) < 3) continue; // bare path component (other end is a leaf)
        path.anchor = cur;
        path.length = static_cast<int>(path.interior.size()) + 1;
        profile.p[path.length] += 1;
        anchors_by_length[path.length].insert(path.anchor);
        profile.paths.push_back(std::move(path));
    }
    for (const auto& [k, anchors] : anchors_by_length)
        profile.q[k] = static_cast<int>(anchors.size());
    return profile;
}

int pendant_bound(const PendantProfile& profile, int k) {
    return std::max(profile.p_count(k) - profile.q_count(k), 0);
}

} // namespace pps
