#pragma once

#include <array>
#include <vector>

#include "subspace/spectral_core.hpp"

namespace subspace {

/// Support-function sweep of the numerical range boundary. Each point is
/// <x, Tx> for the top eigenvector x of the Hermitian part of e^{-i theta} T.
struct NumRangeBoundary {
    std::vector<Complex> points;
    std::vector<double> angles;  // in [0, 2pi)

    /// True if z lies in the intersection of the supporting half-planes
    /// (a circumscribed polygon of the hull), inflated by tol.
    bool contains(Complex z, double tol) const;
};

NumRangeBoundary numrange_boundary(const Matrix& T, int samples);

/// k(S) = sup |Im z| / Re z over the numerical range of an accretive S,
/// computed exactly as the spectral radius of H^{-1/2} K H^{-1/2}.
struct SectorBound {
    double k = 0.0;  // may be +inf
    Vector witness;  // unit vector achieving (or approaching) the supremum
};

SectorBound sector_bound(const Matrix& S);

/// Numerical range of [[alpha, -conj(gamma)], [gamma, beta]]: an elliptical
/// disc with foci at the eigenvalues; k = |gamma| / sqrt(alpha beta).
struct Ellipse2x2 {
    double k = 0.0;
    std::array<Complex, 2> foci;
    std::array<double, 2> axes;  // major, minor (full lengths)
};

Ellipse2x2 ellipse_2x2(double alpha, double beta, Complex gamma);

/// The 2x2 compression t_mu(e_i, e_j) = <L J e_i, L e_j> - mu <e_i, J e_j>
/// over an orthonormal pair e_minus in Ran P_minus, e_plus in Ran P_plus,
/// in the explicit off-diagonal form the anticommutation of V with J gives:
/// diagonal (mu - ||A e-||^2 - ||V e-||^2, ||A e+||^2 + ||V e+||^2 - mu),
/// off-diagonal +-(<A e+, V e-> + <V e+, A e->) with conjugate sign pattern.
Matrix pair_compression(const Matrix& A, const Matrix& V, const Involution& J,
                        double mu, const Vector& e_minus, const Vector& e_plus);

}  // namespace subspace
