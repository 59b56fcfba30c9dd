#pragma once

#include <vector>

#include <Eigen/Core>

#include "pps/bigint.hpp"
#include "pps/graph.hpp"

namespace Eigen {
template <>
struct NumTraits<pps::BigInt> : GenericNumTraits<pps::BigInt> {
    typedef pps::BigInt Real;
    typedef pps::BigInt NonInteger;
    typedef pps::BigInt Nested;
    typedef pps::BigInt Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 20,
        MulCost = 40
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen

namespace pps {

/// Dense matrix over arbitrary-precision integers.
using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer-coefficient polynomial, coefficients ascending by degree. The
/// leading coefficient is nonzero unless the polynomial is the constant 0.
struct IntPolynomial {
    std::vector<BigInt> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    /// Horner evaluation in long double; adequate for root checks up to the
    /// coefficient sizes of pendant_polynomial(16).
    long double evaluate(long double x) const;
};

/// Monic Chebyshev-flavored recurrence p_0 = 1, p_1 = x,
/// p_d = x p_{d-1} - p_{d-2}: the characteristic polynomial of the path
/// adjacency matrix on d vertices, with roots {2 cos(pi i/(d+1)) : i = 1..d}.
IntPolynomial chebyshev_monic(int d);

/// Degree-k monic integer polynomial whose roots are exactly the k target
/// values 4 cos^2(pi i/(2k+1)), obtained from chebyshev_monic(2k) (even
/// powers only) by substituting x^2 -> y. Supported for 1 <= k <= 64.
IntPolynomial pendant_polynomial(int k);

/// f(M) by Horner's scheme in exact integer arithmetic.
IntMatrix evaluate_poly_at_matrix(const IntPolynomial& f, const IntMatrix& m);

/// Dimension of the rational kernel via fraction-free (Bareiss) elimination.
int exact_nullity(IntMatrix m);

/// Exact aggregate certificate for one path length k: the nullity of f_k(L)
/// equals the summed multiplicity of the k target values in the Laplacian
/// spectrum (f_k is squarefree and L is diagonalizable), and likewise for Q.
/// pass iff both nullities reach k * (p_k - q_k).
struct AggregateCheck {
    int k;
    int nullity_l;
    int nullity_q;
    int bound;
    bool pass;
};

AggregateCheck aggregate_multiplicity_check(const Graph& g, int k);

} // namespace pps
