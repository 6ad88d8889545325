#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr int kDefaultArcCap = 2000;
inline constexpr double kDefaultNullSpaceTol = 1e-9;

/// Dense matrix of the walk step, built column by column by applying the
/// operator to each arc basis vector. Intended as a brute-force oracle on
/// small graphs; the cap keeps accidental huge materializations out. A
/// random-vector probe verifies that the result is orthogonal.
inline Matrix materialize(const Graph& g, const MarkedSet& m, StepVariant variant,
                          int arc_cap = kDefaultArcCap) {
    const int n = g.arc_count();
    if (n > arc_cap)
        throw std::length_error("arc count " + std::to_string(n) +
                                " exceeds the dense-operator cap " + std::to_string(arc_cap));
    StepOperator op{variant, &m};
    Matrix mat(n, n);
    WalkState basis(g);
    for (Arc j = 0; j < n; ++j) {
        basis[j] = 1.0;
        WalkState col = apply_step(basis, op);
        for (Arc i = 0; i < n; ++i) mat(i, j) = col[i];
        basis[j] = 0.0;
    }

    std::mt19937 rng(0x5eed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int probe = 0; probe < 3; ++probe) {
        std::vector<double> x(n);
        for (double& v : x) v = gauss(rng);
        std::vector<double> mtmx = mat.multiply_transposed(mat.multiply(x));
        for (int i = 0; i < n; ++i)
            if (std::abs(mtmx[i] - x[i]) > 1e-10 * std::max(1.0, std::abs(x[i])))
                throw std::runtime_error("materialized step operator failed the orthogonality probe");
    }
    return mat;
}

/// Orthonormal basis of the eigenvalue-1 subspace of a step operator,
/// extracted as the null space of (M - I) by rank-revealing QR. Singular
/// directions below `singular_tol` count as null; the test fixtures keep the
/// spectral gap around 1 far larger than this threshold.
struct EigenspaceBasis {
    Matrix vectors;  // arc_count x dimension, orthonormal columns
    int dimension() const { return vectors.cols(); }
};

inline EigenspaceBasis one_eigenspace(const Matrix& m,
                                      double singular_tol = kDefaultNullSpaceTol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("step operator matrix must be square");
    Matrix shifted = m;
    for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= 1.0;
    return EigenspaceBasis{null_space(shifted, singular_tol)};
}

struct InitialProjection {
    double norm = 0.0;  // equals the best possible overlap with the uniform state
    WalkState state;    // the (unnormalized) projection of the uniform state
};

/// Project the uniform initial state onto the stationary subspace. When the
/// norm is positive, the normalized projection is the stationary state of
/// maximal overlap with the initial state, and that overlap equals the norm.
inline InitialProjection project_initial(const EigenspaceBasis& basis, const Graph& g) {
    if (basis.vectors.rows() != g.arc_count())
        throw std::invalid_argument("eigenspace basis does not match the graph's arc count");
    WalkState psi0 = initial_state(g);
    std::vector<double> coords =
        basis.vectors.multiply_transposed(psi0.amplitudes());
    std::vector<double> projected = basis.vectors.multiply(coords);
    WalkState state = WalkState::from_amplitudes(g, std::move(projected));
    double norm = state.norm();
    return {norm, std::move(state)};
}

}  // namespace qwalk
