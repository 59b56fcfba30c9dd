#include "pps/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pps {

namespace {

double scaled_tol(double base, const Eigen::MatrixXd& m) {
    const double norm = m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
    return base * std::max(1.0, norm);
}

std::vector<int> qualifying_lengths(const PendantProfile& profile, int kmax) {
    std::vector<int> ks;
    for (int k : profile.lengths()) {
        if (kmax > 0 && k > kmax) continue;
        if (profile.p_count(k) - profile.q_count(k) >= 1) ks.push_back(k);
    }
    return ks;
}

std::vector<double> positive_squares(const Spectrum& s, double tol) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < s.values.size(); ++i)
        if (s.values(i) > tol) out.push_back(s.values(i) * s.values(i));
    return out;
}

std::vector<double> nonzero_values(const Spectrum& s, double tol) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < s.values.size(); ++i)
        if (std::abs(s.values(i)) > tol) out.push_back(s.values(i));
    return out;
}

DistanceStat pm_pairing_stat(const char* name, const Spectrum& s, double tol) {
    std::vector<double> pos, neg;
    for (Eigen::Index i = 0; i < s.values.size(); ++i) {
        if (s.values(i) > tol) pos.push_back(s.values(i));
        if (s.values(i) < -tol) neg.push_back(-s.values(i));
    }
    const double dist = multiset_distance(std::move(pos), std::move(neg));
    return DistanceStat{name, dist, dist <= tol};
}

} // namespace

double multiset_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist = std::max(dist, std::abs(a[i] - b[i]));
    return dist;
}

BoundReport verify_pendant_bound(const Graph& g, const VerifyOptions& options) {
    if (g.vertex_count() + g.edge_count() > options.dense_cap)
        throw SizeLimit("graph order n + m = " +
                        std::to_string(g.vertex_count() + g.edge_count()) +
                        " exceeds the dense-solve cap " + std::to_string(options.dense_cap));
    BoundReport report;
    report.profile = find_pendant_paths(g);
    const std::vector<int> ks = qualifying_lengths(report.profile, options.kmax);
    if (ks.empty()) return report;

    const Eigen::MatrixXd lap = laplacian(g);
    const Eigen::MatrixXd slap = signless_laplacian(g);
    const Spectrum spec_l = eigenvalues_symmetric(lap);
    const Spectrum spec_q = eigenvalues_symmetric(slap);
    const double tol_l = scaled_tol(options.tol, lap);
    const double tol_q = scaled_tol(options.tol, slap);

    for (int k : ks) {
        const int bound = pendant_bound(report.profile, k);
        int numeric_sum_l = 0, numeric_sum_q = 0;
        for (int i = 1; i <= k; ++i) {
            const TargetValue target = target_value(k, i);
            BoundRow row;
            row.k = k;
            row.i = i;
            row.target = target.value;
            row.mult_l = multiplicity_of(spec_l, target.value, tol_l);
            row.mult_q = multiplicity_of(spec_q, target.value, tol_q);
            row.bound = bound;
            row.pass = row.mult_l >= bound && row.mult_q >= bound;
            numeric_sum_l += row.mult_l;
            numeric_sum_q += row.mult_q;
            report.pass = report.pass && row.pass;
            report.rows.push_back(row);
        }
        if (options.exact) {
            const AggregateCheck check = aggregate_multiplicity_check(g, k);
            report.pass = report.pass && check.pass;
            if (check.nullity_l != numeric_sum_l || check.nullity_q != numeric_sum_q) {
                std::ostringstream msg;
                msg << "k = " << k << ": exact nullities (" << check.nullity_l << ", "
                    << check.nullity_q << ") differ from numeric sums (" << numeric_sum_l
                    << ", " << numeric_sum_q << "); the exact result is authoritative";
                report.discrepancies.push_back(msg.str());
            }
            report.exact_rows.push_back(check);
        }
    }
    return report;
}

SpectralCheckReport verify_subdivision_correspondence(const Graph& g, const Orientation& o,
                                                      double tol) {
    SpectralCheckReport report;
    report.check = "subdivision-correspondence";

    const Spectrum spec_q = eigenvalues_symmetric(signless_laplacian(g));
    const Spectrum spec_l = eigenvalues_symmetric(laplacian(g));
    const Spectrum spec_s = eigenvalues_symmetric(subdivision_adjacency(g));
    const Spectrum spec_d = eigenvalues_symmetric(signed_subdivision_adjacency(g, o));

    const double q_dist = multiset_distance(nonzero_values(spec_q, tol),
                                            positive_squares(spec_s, tol));
    report.stats.push_back({"Q-vs-subdivision-squares", q_dist, q_dist <= tol});
    const double l_dist = multiset_distance(nonzero_values(spec_l, tol),
                                            positive_squares(spec_d, tol));
    report.stats.push_back({"L-vs-signed-subdivision-squares", l_dist, l_dist <= tol});
    report.stats.push_back(pm_pairing_stat("subdivision-pm-pairing", spec_s, tol));
    report.stats.push_back(pm_pairing_stat("signed-subdivision-pm-pairing", spec_d, tol));

    for (const auto& stat : report.stats) report.pass = report.pass && stat.pass;
    return report;
}

SpectralCheckReport verify_bipartite_signing(const Graph& g, int trials, double tol,
                                             std::uint64_t seed, double separation) {
    if (trials < 1) throw IndexError("verify_bipartite_signing needs trials >= 1");
    SpectralCheckReport report;
    report.check = "bipartite-signing";
    std::mt19937_64 rng(seed);
    const bool bipartite = bipartition(g).has_value();
    const Eigen::Index order = g.vertex_count() + g.edge_count();

    if (!bipartite) {
        // L and Q are not similar here, so the full spectra must separate
        const Spectrum unsigned_spec = eigenvalues_symmetric(subdivision_adjacency(g));
        const Spectrum signed_spec =
            eigenvalues_symmetric(signed_subdivision_adjacency(g, default_orientation(g)));
        std::vector<double> a(unsigned_spec.values.begin(), unsigned_spec.values.end());
        std::vector<double> b(signed_spec.values.begin(), signed_spec.values.end());
        const double dist = multiset_distance(std::move(a), std::move(b));
        report.stats.push_back({"non-bipartite-separation", dist, dist > separation});
        report.pass = report.stats.back().pass;
        return report;
    }

    const Eigen::MatrixXd unsigned_full = subdivision_adjacency(g);
    for (int t = 0; t < trials; ++t) {
        Orientation o = t == 0 ? default_orientation(g) : random_orientation(g, rng);
        std::vector<int> drop;
        if (t > 0) {
            const std::uint64_t size = order == 0 ? 0 : bounded_random(rng, static_cast<std::uint64_t>(order));
            std::vector<int> all(static_cast<std::size_t>(order));
            for (Eigen::Index i = 0; i < order; ++i) all[static_cast<std::size_t>(i)] = static_cast<int>(i);
            for (std::uint64_t i = 0; i < size; ++i) {
                std::uint64_t pick = i + bounded_random(rng, static_cast<std::uint64_t>(all.size()) - i);
                std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(pick)]);
                drop.push_back(all[static_cast<std::size_t>(i)]);
            }
        }
        const Spectrum signed_spec =
            eigenvalues_symmetric(delete_vertices<double>(signed_subdivision_adjacency(g, o), drop));
        const Spectrum unsigned_spec =
            eigenvalues_symmetric(delete_vertices<double>(unsigned_full, drop));
        std::vector<double> a(signed_spec.values.begin(), signed_spec.values.end());
        std::vector<double> b(unsigned_spec.values.begin(), unsigned_spec.values.end());
        const double dist = multiset_distance(std::move(a), std::move(b));
        report.stats.push_back({"trial-" + std::to_string(t), dist, dist <= tol});
        report.pass = report.pass && report.stats.back().pass;
    }
    return report;
}

std::map<int, bool> verify_cluster_bound(const Graph& g, double tol) {
    const PendantProfile profile = find_pendant_paths(g);
    std::map<int, bool> out;
    const std::vector<int> ks = qualifying_lengths(profile, 0);
    if (ks.empty()) return out;
    const Eigen::MatrixXd lap = laplacian(g);
    const Spectrum spec_l = eigenvalues_symmetric(lap);
    const auto groups = clusters(spec_l, scaled_tol(tol, lap));
    int largest = 0;
    for (const auto& [value, size] : groups) largest = std::max(largest, size);
    for (int k : ks) out[k] = largest >= pendant_bound(profile, k);
    return out;
}

void accumulate_tightness(TightnessSummary& summary, const BoundReport& report) {
    ++summary.graphs;
    for (const BoundRow& row : report.rows) {
        for (char matrix : {'L', 'Q'}) {
            const int slack = (matrix == 'L' ? row.mult_l : row.mult_q) - row.bound;
            TightnessCell& cell = summary.cells[{row.k, row.i, matrix}];
            if (cell.count == 0 || slack < cell.min_slack) cell.min_slack = slack;
            if (cell.count == 0 || slack > cell.max_slack) cell.max_slack = slack;
            ++cell.count;
            if (slack == 0) ++cell.tight;
            cell.slack_sum += slack;
            ++cell.histogram[slack];
        }
    }
}

TightnessSummary tightness_statistics(const std::vector<Graph>& corpus,
                                      const VerifyOptions& options) {
    TightnessSummary summary;
    VerifyOptions numeric_only = options;
    numeric_only.exact = false;
    for (const Graph& g : corpus) accumulate_tightness(summary, verify_pendant_bound(g, numeric_only));
    return summary;
}

} // namespace pps
