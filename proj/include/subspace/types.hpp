#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace subspace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Central tolerance record. Every operation reads from the active instance;
/// the CLI may override individual fields through SUBSPACE_TOL_* variables.
struct Tolerances {
    double hermitian = 1e-12;  // relative Frobenius asymmetry
    double eig = 1e-10;        // eigendecomposition residuals
    double boundary = 1e-10;   // spectral_projection endpoint guard (relative)
    double classify = 1e-9;    // eigenvalue classification (relative to diameter)
    double kernel = 1e-10;     // numerical-kernel detection
    double rank = 1e-10;       // singular-value cutoff in polar decomposition
    double comm = 1e-10;       // (anti)commutation predicate
    double acute = 1e-10;      // smin(I + J'J) threshold
    double unitary = 1e-8;     // unitarity check for spectral_angle inputs
    double projection = 1e-8;  // idempotent-Hermitian check in projection_gap
    double pd = 1e-10;         // positive-definiteness cut in sector_bound (relative)
    double hull = 1e-8;        // numerical-range hull slack (relative)
};

Tolerances& tols();

struct SubspaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SUBSPACE_DEFINE_ERROR(Name)             \
    struct Name : SubspaceError {               \
        using SubspaceError::SubspaceError;     \
    }

SUBSPACE_DEFINE_ERROR(NonHermitianInput);
SUBSPACE_DEFINE_ERROR(EigenvalueOnBoundary);
SUBSPACE_DEFINE_ERROR(UnclassifiedEigenvalue);
SUBSPACE_DEFINE_ERROR(KernelNotTrivial);
SUBSPACE_DEFINE_ERROR(DimensionMismatch);
SUBSPACE_DEFINE_ERROR(NotAcute);
SUBSPACE_DEFINE_ERROR(NotUnitary);
SUBSPACE_DEFINE_ERROR(NotAProjection);
SUBSPACE_DEFINE_ERROR(NotAccretive);
SUBSPACE_DEFINE_ERROR(NonPositiveDiagonal);
SUBSPACE_DEFINE_ERROR(NotOffDiagonal);
SUBSPACE_DEFINE_ERROR(NotInSubspace);
SUBSPACE_DEFINE_ERROR(WrongDisposition);
SUBSPACE_DEFINE_ERROR(NegativeKappa);
SUBSPACE_DEFINE_ERROR(NonPositiveD);
SUBSPACE_DEFINE_ERROR(ConditionViolated);
SUBSPACE_DEFINE_ERROR(MuOutOfWindow);
SUBSPACE_DEFINE_ERROR(EnclosureViolated);
SUBSPACE_DEFINE_ERROR(InfeasibleSpec);
SUBSPACE_DEFINE_ERROR(ConstructionFailed);
SUBSPACE_DEFINE_ERROR(GridViolatesCutoff);
SUBSPACE_DEFINE_ERROR(ParseError);

#undef SUBSPACE_DEFINE_ERROR

/// Largest singular value.
double spectral_norm(const Matrix& M);

/// Smallest singular value.
double smallest_singular_value(const Matrix& M);

/// (M + M^H)/2
Matrix hermitian_part(const Matrix& M);

/// (M - M^H)/(2i), itself Hermitian.
Matrix skew_part_over_i(const Matrix& M);

bool is_hermitian(const Matrix& M, double rel_tol);

void require_square(const Matrix& M, const std::string& what);

}  // namespace subspace
