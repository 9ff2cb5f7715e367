#pragma once

#include "subspace/split.hpp"
#include "subspace/types.hpp"

namespace subspace {

/// Eigendecomposition of a Hermitian matrix with a deterministic eigenvector
/// phase: the largest-magnitude component of each column is made real
/// positive, so repeated runs compare matrices, not just subspaces.
struct EigenSystem {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // unitary, columns match eigenvalues
};

/// Self-adjoint unitary J together with its +-1 spectral projections.
struct Involution {
    Matrix J;
    Matrix P_plus;   // (I + J)/2
    Matrix P_minus;  // (I - J)/2

    Eigen::Index dim() const { return J.rows(); }

    /// Validates J = J^H and J^2 = I, then derives the projections.
    static Involution from_matrix(const Matrix& J);
};

/// Partial isometry W and |T| with T = W|T|, W = 0 on the numerical kernel.
struct PolarParts {
    Matrix W;
    Matrix absT;
    int kernel_dim = 0;
};

EigenSystem eigh(const Matrix& H);

/// Sum of q q^H over eigenvalues of H inside the interval. Rejects inputs
/// with an eigenvalue within boundary_tol of an open endpoint.
Matrix spectral_projection(const Matrix& H, const Interval& interval);

/// J = E_A(sigma_plus) - E_A(sigma_minus). Every eigenvalue of A must be
/// classified by the split.
Involution involution_from_split(const Matrix& A, const SpectralSplit& split);

/// J' = E_T((mu, inf)) - E_T((-inf, mu)); the unitary factor in the polar
/// decomposition of T - mu. Requires ker(T - mu) trivial.
Involution sign_involution(const Matrix& T, double mu);

/// Polar decomposition via eigh(T^H T); singular values below
/// rank_tol * sigma_max are treated as exact kernel.
PolarParts polar_decompose(const Matrix& T);

bool anticommutes(const Matrix& V, const Involution& J);
bool commutes(const Matrix& V, const Involution& J);

/// lambda_min of the Hermitian part; >= 0 iff accretive (up to tolerance).
double accretivity_margin(const Matrix& S);

}  // namespace subspace
