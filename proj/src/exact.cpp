#include "pps/exact.hpp"

#include <utility>

#include "pps/errors.hpp"
#include "pps/matrices.hpp"
#include "pps/pendant.hpp"

namespace pps {

long double IntPolynomial::evaluate(long double x) const {
    long double acc = 0;
    for (std::size_t j = coefficients.size(); j-- > 0;)
        acc = acc * x + static_cast<long double>(coefficients[j].to_double());
    return acc;
}

IntPolynomial chebyshev_monic(int d) {
    if (d < 0) throw IndexError("chebyshev_monic needs d >= 0");
    IntPolynomial prev{{BigInt(1)}};
    if (d == 0) return prev;
    IntPolynomial cur{{BigInt(0), BigInt(1)}};
    for (int step = 2; step <= d; ++step) {
        IntPolynomial next;
        next.coefficients.assign(static_cast<std::size_t>(step) + 1, BigInt(0));
        for (std::size_t j = 0; j < cur.coefficients.size(); ++j)
            next.coefficients[j + 1] = cur.coefficients[j];
        for (std::size_t j = 0; j < prev.coefficients.size(); ++j)
            next.coefficients[j] -= prev.coefficients[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial pendant_polynomial(int k) {
    if (k < 1 || k > 64) throw IndexError("pendant_polynomial supports 1 <= k <= 64");
    IntPolynomial cheb = chebyshev_monic(2 * k);
    IntPolynomial f;
    f.coefficients.reserve(static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < cheb.coefficients.size(); ++j) {
        if (j % 2 == 0) {
            f.coefficients.push_back(cheb.coefficients[j]);
        } else if (!cheb.coefficients[j].is_zero()) {
            throw Error("chebyshev_monic(2k) has a nonzero odd coefficient"); // unreachable
        }
    }
    return f;
}

namespace {

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    const Eigen::Index n = a.rows(), k = a.cols(), m = b.cols();
    IntMatrix out = IntMatrix::Constant(n, m, BigInt(0));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index l = 0; l < k; ++l) {
            if (a(i, l).is_zero()) continue;
            for (Eigen::Index j = 0; j < m; ++j) out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

} // namespace

IntMatrix evaluate_poly_at_matrix(const IntPolynomial& f, const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw MatrixShapeError("evaluate_poly_at_matrix needs a square matrix");
    const Eigen::Index n = m.rows();
    IntMatrix acc = IntMatrix::Constant(n, n, BigInt(0));
    if (f.coefficients.empty()) return acc;
    for (Eigen::Index i = 0; i < n; ++i) acc(i, i) = f.coefficients.back();
    for (std::size_t j = f.coefficients.size() - 1; j-- > 0;) {
        acc = int_multiply(acc, m);
        for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += f.coefficients[j];
    }
    return acc;
}

int exact_nullity(IntMatrix m) {
    if (m.rows() != m.cols()) throw MatrixShapeError("exact_nullity needs a square matrix");
    const Eigen::Index n = m.rows();
    Eigen::Index rank = 0;
    BigInt prev(1);
    for (Eigen::Index step = 0; step < n; ++step) {
        Eigen::Index pr = -1, pc = -1;
        for (Eigen::Index i = step; i < n && pr < 0; ++i)
            for (Eigen::Index j = step; j < n; ++j)
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pr != step) m.row(pr).swap(m.row(step));
        if (pc != step) m.col(pc).swap(m.col(step));
        for (Eigen::Index i = step + 1; i < n; ++i) {
            for (Eigen::Index j = step + 1; j < n; ++j)
                m(i, j) = (m(step, step) * m(i, j) - m(i, step) * m(step, j)) / prev;
            m(i, step) = BigInt(0);
        }
        prev = m(step, step);
        ++rank;
    }
    return static_cast<int>(n - rank);
}

AggregateCheck aggregate_multiplicity_check(const Graph& g, int k) {
    const PendantProfile profile = find_pendant_paths(g);
    const int bound = k * pendant_bound(profile, k);
    const IntPolynomial f = pendant_polynomial(k);
    const int nullity_l = exact_nullity(evaluate_poly_at_matrix(f, laplacian<BigInt>(g)));
    const int nullity_q = exact_nullity(evaluate_poly_at_matrix(f, signless_laplacian<BigInt>(g)));
    return AggregateCheck{k, nullity_l, nullity_q, bound,
                          nullity_l >= bound && nullity_q >= bound};
}

} // namespace pps
