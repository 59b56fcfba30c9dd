#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pps/errors.hpp"

namespace pps {

/// Eigenvalues of one symmetric matrix, ascending, together with the default
/// clustering tolerance derived from the matrix norm.
struct Spectrum {
    Eigen::VectorXd values;
    Eigen::Index source_dim = 0;
    double tol = 0;

    /// Paper-style descending access: lambda_desc(1) is the largest value.
    double lambda_desc(Eigen::Index j) const { return values(source_dim - j); }
};

/// Default clustering tolerance 1e-8 * max(1, inf-norm of M).
double default_cluster_tol(const Eigen::MatrixXd& m);

/// All eigenvalues of a symmetric matrix by an orthogonal-similarity method.
/// Entries must be exactly symmetric (inputs are integer-valued); otherwise
/// MatrixShapeError. Deterministic: identical input gives identical output.
Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m);

/// The guaranteed eigenvalue 4 cos^2(pi i / (2k+1)) together with its square
/// root theta = 2 cos(pi i / (2k+1)). For fixed k the k values are strictly
/// decreasing in i and lie in (0, 4).
struct TargetValue {
    int k;
    int i;
    double value;
    double theta;
};

TargetValue target_value(int k, int i);

/// Number of eigenvalues within absolute distance tol of target.
int multiplicity_of(const Spectrum& s, double target, double tol);

/// Closed-form spectrum {2 cos(pi i / (v+1)) : i = 1..v} of the path
/// adjacency matrix on v vertices - the analytic oracle for the eigensolver.
Spectrum path_adjacency_spectrum(int vertices);

/// Cauchy interlacing: with t = dim(full) - dim(sub) and descending indexing,
/// checks lambda_j >= eta_j >= lambda_{j+t} for all j, within the spectra's
/// stored tolerances.
bool check_interlacing(const Spectrum& full, const Spectrum& sub);

/// Groups the sorted eigenvalues into clusters: consecutive values belong to
/// one cluster when their gap is <= tol. Returns (first value, size) pairs.
std::vector<std::pair<double, int>> clusters(const Spectrum& s, double tol);

} // namespace pps
