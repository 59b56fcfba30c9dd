#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "pps/graph.hpp"

namespace pps {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-edge direction flags: forward[j] == true orients edge j = (u, v),
/// u < v, as u -> v.
struct Orientation {
    std::vector<bool> forward;
};

inline Orientation default_orientation(const Graph& g) {
    return Orientation{std::vector<bool>(static_cast<std::size_t>(g.edge_count()), true)};
}

inline Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
    Orientation o;
    o.forward.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int j = 0; j < g.edge_count(); ++j) o.forward.push_back(bounded_random(rng, 2) == 1);
    return o;
}

/// Symmetric 0/1 n x n matrix with zero diagonal.
template <class Scalar = double>
DenseMatrix<Scalar> adjacency(const Graph& g) {
    DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Constant(g.vertex_count(), g.vertex_count(), Scalar(0));
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = Scalar(1);
        a(v, u) = Scalar(1);
    }
    return a;
}

template <class Scalar = double>
DenseMatrix<Scalar> degree_matrix(const Graph& g) {
    DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Constant(g.vertex_count(), g.vertex_count(), Scalar(0));
    for (int v = 0; v < g.vertex_count(); ++v) d(v, v) = Scalar(g.degree(v));
    return d;
}

/// Laplacian  Deg - A  (zero row sums).
template <class Scalar = double>
DenseMatrix<Scalar> laplacian(const Graph& g) {
    DenseMatrix<Scalar> m = degree_matrix<Scalar>(g);
    for (const auto& [u, v] : g.edges()) {
        m(u, v) = Scalar(-1);
        m(v, u) = Scalar(-1);
    }
    return m;
}

/// Signless Laplacian  Deg + A  (row sums = twice the degree).
template <class Scalar = double>
DenseMatrix<Scalar> signless_laplacian(const Graph& g) {
    DenseMatrix<Scalar> m = degree_matrix<Scalar>(g);
    for (const auto& [u, v] : g.edges()) {
        m(u, v) = Scalar(1);
        m(v, u) = Scalar(1);
    }
    return m;
}

/// n x m vertex-edge incidence: column j has ones at both endpoints of edge j.
template <class Scalar = double>
DenseMatrix<Scalar> incidence(const Graph& g) {
    DenseMatrix<Scalar> x = DenseMatrix<Scalar>::Constant(g.vertex_count(), g.edge_count(), Scalar(0));
    int j = 0;
    for (const auto& [u, v] : g.edges()) {
        x(u, j) = Scalar(1);
        x(v, j) = Scalar(1);
        ++j;
    }
    return x;
}

/// n x m directed incidence: +1 at the head of each edge, -1 at the tail.
template <class Scalar = double>
DenseMatrix<Scalar> directed_incidence(const Graph& g, const Orientation& o) {
    DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Constant(g.vertex_count(), g.edge_count(), Scalar(0));
    int j = 0;
    for (const auto& [u, v] : g.edges()) {
        const bool fwd = o.forward[static_cast<std::size_t>(j)];
        d(fwd ? v : u, j) = Scalar(1);
        d(fwd ? u : v, j) = Scalar(-1);
        ++j;
    }
    return d;
}

namespace detail {
template <class Scalar>
DenseMatrix<Scalar> block_antidiagonal(const DenseMatrix<Scalar>& m) {
    const Eigen::Index n = m.rows(), k = m.cols();
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Constant(n + k, n + k, Scalar(0));
    out.block(0, n, n, k) = m;
    out.block(n, 0, k, n) = m.transpose();
    return out;
}
} // namespace detail

/// [[0, X], [X^T, 0]] - the adjacency matrix of subdivision(g) with the
/// vertex inserted on edge j sitting at index n + j.
template <class Scalar = double>
DenseMatrix<Scalar> subdivision_adjacency(const Graph& g) {
    return detail::block_antidiagonal(incidence<Scalar>(g));
}

/// [[0, D], [D^T, 0]] - the signed adjacency matrix of the oriented
/// subdivision. Its spectrum does not depend on the orientation.
template <class Scalar = double>
DenseMatrix<Scalar> signed_subdivision_adjacency(const Graph& g, const Orientation& o) {
    return detail::block_antidiagonal(directed_incidence<Scalar>(g, o));
}

/// Principal submatrix on the complement of `drop` (duplicates ignored).
template <class Scalar>
DenseMatrix<Scalar> delete_vertices(const DenseMatrix<Scalar>& m, const std::vector<int>& drop) {
    if (m.rows() != m.cols()) throw MatrixShapeError("delete_vertices needs a square matrix");
    std::vector<bool> dropped(static_cast<std::size_t>(m.rows()), false);
    for (int v : drop) {
        if (v < 0 || v >= m.rows())
            throw VertexOutOfRange("delete_vertices index " + std::to_string(v) + " out of range");
        dropped[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!dropped[static_cast<std::size_t>(i)]) keep.push_back(i);
    DenseMatrix<Scalar> out(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(keep[r], keep[c]);
    return out;
}

/// True iff D D^T == Deg - A and X X^T == Deg + A hold exactly in integers.
bool gram_identities_check(const Graph& g, const Orientation& o);

} // namespace pps
