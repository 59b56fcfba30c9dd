#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pps/exact.hpp"
#include "pps/graph.hpp"
#include "pps/matrices.hpp"
#include "pps/pendant.hpp"
#include "pps/spectra.hpp"

namespace pps {

struct VerifyOptions {
    /// Base tolerance; each matrix check uses tol * max(1, inf-norm).
    double tol = 1e-8;
    /// Cap on the pendant-path length k (0 = no cap).
    int kmax = 0;
    /// Run the exact big-integer aggregate certificate alongside the
    /// numeric counts.
    bool exact = true;
    /// Reject graphs whose subdivision order n + m exceeds this.
    int dense_cap = 2000;
};

/// One numeric check: the target eigenvalue for (k, i) must appear in both
/// the Laplacian and the signless Laplacian spectrum with multiplicity at
/// least bound = p_k - q_k.
struct BoundRow {
    int k;
    int i;
    double target;
    int mult_l;
    int mult_q;
    int bound;
    bool pass;
};

struct BoundReport {
    PendantProfile profile;
    std::vector<BoundRow> rows;            // per (k, i) with p_k - q_k >= 1
    std::vector<AggregateCheck> exact_rows; // per such k, when exact is on
    /// Exact-vs-numeric mismatches; the exact result is authoritative.
    std::vector<std::string> discrepancies;
    bool pass = true;
};

/// The guaranteed-multiplicity check: for every k with p_k - q_k >= 1 and
/// every i = 1..k, counts the target value in spec(L) and spec(Q) and
/// compares with the bound; optionally adds the exact aggregate certificate.
/// Throws SizeLimit when n + m exceeds options.dense_cap.
BoundReport verify_pendant_bound(const Graph& g, const VerifyOptions& options = {});

struct DistanceStat {
    std::string name;
    double distance;
    bool pass;
};

struct SpectralCheckReport {
    std::string check;
    std::vector<DistanceStat> stats;
    bool pass = true;
};

/// Nonzero eigenvalues of Q match the squares of the positive eigenvalues of
/// the subdivision adjacency; likewise L against the signed subdivision
/// adjacency for the given orientation; nonzero block-matrix eigenvalues come
/// in +/- pairs.
SpectralCheckReport verify_subdivision_correspondence(const Graph& g, const Orientation& o,
                                                      double tol);

/// Bipartite graphs: signed and unsigned subdivision principal submatrices
/// are cospectral - sampled over `trials` random (orientation, deletion set)
/// pairs, the first trial being (default orientation, empty set).
/// Non-bipartite graphs: the full signed and unsigned spectra must differ by
/// more than `separation` in optimal multiset matching distance.
SpectralCheckReport verify_bipartite_signing(const Graph& g, int trials, double tol,
                                             std::uint64_t seed, double separation = 1e-4);

/// Weaker clustered form of the bound: for each k with p_k - q_k >= 1, true
/// iff some eigenvalue cluster of L has size >= p_k - q_k.
std::map<int, bool> verify_cluster_bound(const Graph& g, double tol);

/// Distribution of (numeric multiplicity - bound) per (k, i, L-or-Q) over a
/// corpus, with the fraction of exactly tight cases.
struct TightnessCell {
    long count = 0;
    long tight = 0;
    int min_slack = 0;
    int max_slack = 0;
    long slack_sum = 0;
    std::map<int, long> histogram;
};

struct TightnessSummary {
    long graphs = 0;
    std::map<std::tuple<int, int, char>, TightnessCell> cells; // (k, i, 'L'/'Q')
};

void accumulate_tightness(TightnessSummary& summary, const BoundReport& report);
TightnessSummary tightness_statistics(const std::vector<Graph>& corpus,
                                      const VerifyOptions& options = {});

/// Max absolute difference after sorting, the optimal multiset matching
/// distance on the line; infinity when the sizes differ.
double multiset_distance(std::vector<double> a, std::vector<double> b);

} // namespace pps
