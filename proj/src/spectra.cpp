#include "pps/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace pps {

double default_cluster_tol(const Eigen::MatrixXd& m) {
    const double norm = m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
    return 1e-8 * std::max(1.0, norm);
}

Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw MatrixShapeError("eigenvalues_symmetric needs a square matrix");
    if (m != m.transpose())
        throw MatrixShapeError("eigenvalues_symmetric needs an exactly symmetric matrix");
    Spectrum s;
    s.source_dim = m.rows();
    s.tol = default_cluster_tol(m);
    if (m.rows() == 0) {
        s.values.resize(0);
        return s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    s.values = solver.eigenvalues(); // ascending
    return s;
}

TargetValue target_value(int k, int i) {
    if (k < 1) throw IndexError("target_value needs k >= 1");
    if (i < 1 || i > k) throw IndexError("target_value needs 1 <= i <= k");
    const double theta = 2.0 * std::cos(M_PI * i / (2 * k + 1));
    return TargetValue{k, i, theta * theta, theta};
}

int multiplicity_of(const Spectrum& s, double target, double tol) {
    int count = 0;
    for (Eigen::Index i = 0; i < s.values.size(); ++i)
        if (std::abs(s.values(i) - target) <= tol) ++count;
    return count;
}

Spectrum path_adjacency_spectrum(int vertices) {
    if (vertices < 1) throw IndexError("path_adjacency_spectrum needs >= 1 vertex");
    Spectrum s;
    s.source_dim = vertices;
    s.tol = 2e-8; // matches default_cluster_tol of the path adjacency matrix
    s.values.resize(vertices);
    for (int i = 1; i <= vertices; ++i)
        s.values(vertices - i) = 2.0 * std::cos(M_PI * i / (vertices + 1));
    return s;
}

bool check_interlacing(const Spectrum& full, const Spectrum& sub) {
    if (sub.source_dim > full.source_dim) return false;
    const Eigen::Index t = full.source_dim - sub.source_dim;
    const double tol = std::max(full.tol, sub.tol);
    for (Eigen::Index j = 1; j <= sub.source_dim; ++j) {
        if (full.lambda_desc(j) < sub.lambda_desc(j) - tol) return false;
        if (sub.lambda_desc(j) < full.lambda_desc(j + t) - tol) return false;
    }
    return true;
}

std::vector<std::pair<double, int>> clusters(const Spectrum& s, double tol) {
    std::vector<std::pair<double, int>> out;
    for (Eigen::Index i = 0; i < s.values.size(); ++i) {
        if (out.empty() || s.values(i) - s.values(i - 1) > tol)
            out.emplace_back(s.values(i), 0);
        ++out.back().second;
    }
    return out;
}

} // namespace pps
