#include "subspace/spectral_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace subspace {

namespace {

void fix_phases(Matrix& Q) {
    for (Eigen::Index j = 0; j < Q.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < Q.rows(); ++i) {
            const double a = std::abs(Q(i, j));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        if (best > 0.0) Q.col(j) *= std::conj(Q(imax, j)) / best;
    }
}

void require_hermitian(const Matrix& H, const char* who) {
    require_square(H, who);
    if (!is_hermitian(H, tols().hermitian))
        throw NonHermitianInput(std::string(who) + ": input is not Hermitian within tolerance");
}

}  // namespace

EigenSystem eigh(const Matrix& H) {
    require_hermitian(H, "eigh");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(H));
    if (solver.info() != Eigen::Success)
        throw SubspaceError("eigh: eigendecomposition failed to converge");
    EigenSystem es;
    es.eigenvalues = solver.eigenvalues();
    es.eigenvectors = solver.eigenvectors();
    fix_phases(es.eigenvectors);
    return es;
}

Matrix spectral_projection(const Matrix& H, const Interval& interval) {
    const EigenSystem es = eigh(H);
    const double scale = es.eigenvalues.cwiseAbs().maxCoeff();
    const double guard = tols().boundary * std::max(scale, 1.0);
    for (double endpoint : {interval.lo_open ? interval.lo : -kInf,
                            interval.hi_open ? interval.hi : kInf}) {
        if (!std::isfinite(endpoint)) continue;
        for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
            if (std::abs(es.eigenvalues(i) - endpoint) <= guard)
                throw EigenvalueOnBoundary(
                    "spectral_projection: eigenvalue " +
                    std::to_string(es.eigenvalues(i)) +
                    " within boundary tolerance of open endpoint " +
                    std::to_string(endpoint));
    }
    Matrix P = Matrix::Zero(H.rows(), H.cols());
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
        if (interval.contains(es.eigenvalues(i)))
            P += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    return P;
}

Involution Involution::from_matrix(const Matrix& J) {
    require_square(J, "Involution");
    const double tol = 1e-10 * std::max(1.0, J.norm());
    if ((J - J.adjoint()).norm() > tol)
        throw NonHermitianInput("Involution: J is not self-adjoint");
    if ((J * J - Matrix::Identity(J.rows(), J.cols())).norm() > tol)
        throw SubspaceError("Involution: J^2 != I within tolerance");
    Involution inv;
    inv.J = J;
    const Matrix I = Matrix::Identity(J.rows(), J.cols());
    inv.P_plus = 0.5 * (I + J);
    inv.P_minus = 0.5 * (I - J);
    return inv;
}

Involution involution_from_split(const Matrix& A, const SpectralSplit& split) {
    const EigenSystem es = eigh(A);
    const double diam =
        es.eigenvalues(es.eigenvalues.size() - 1) - es.eigenvalues(0);
    const double tol = tols().classify * std::max(diam, 1.0);
    Matrix J = Matrix::Zero(A.rows(), A.cols());
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
        const double lambda = es.eigenvalues(i);
        const bool minus = split.in_minus(lambda, tol);
        const bool plus = split.in_plus(lambda, tol);
        if (minus == plus)
            throw UnclassifiedEigenvalue(
                "involution_from_split: eigenvalue " + std::to_string(lambda) +
                (minus ? " matches both sides of the split"
                       : " matches neither side of the split"));
        const double sign = plus ? 1.0 : -1.0;
        J += sign * es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
    return Involution::from_matrix(J);
}

Involution sign_involution(const Matrix& T, double mu) {
    const EigenSystem es = eigh(T);
    const double scale = es.eigenvalues.cwiseAbs().maxCoeff();
    const double guard = tols().kernel * std::max(scale, 1.0);
    Matrix J = Matrix::Zero(T.rows(), T.cols());
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
        const double shifted = es.eigenvalues(i) - mu;
        if (std::abs(shifted) <= guard)
            throw KernelNotTrivial("sign_involution: eigenvalue " +
                                   std::to_string(es.eigenvalues(i)) +
                                   " too close to mu = " + std::to_string(mu));
        const double sign = shifted > 0.0 ? 1.0 : -1.0;
        J += sign * es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
    return Involution::from_matrix(J);
}

PolarParts polar_decompose(const Matrix& T) {
    require_square(T, "polar_decompose");
    const Eigen::Index n = T.rows();
    const EigenSystem gram = eigh(Matrix(T.adjoint() * T));
    RealVector s(n);
    for (Eigen::Index i = 0; i < n; ++i)
        s(i) = std::sqrt(std::max(gram.eigenvalues(i), 0.0));
    const double smax = s.maxCoeff();
    const double cutoff = tols().rank * smax;

    PolarParts parts;
    if (smax == 0.0) {
        parts.W = Matrix::Zero(n, n);
        parts.absT = Matrix::Zero(n, n);
        parts.kernel_dim = static_cast<int>(n);
        return parts;
    }
    RealVector inv_s(n);
    int kernel = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s(i) <= cutoff) {
            inv_s(i) = 0.0;
            ++kernel;
        } else {
            inv_s(i) = 1.0 / s(i);
        }
    }
    const Matrix& Q = gram.eigenvectors;
    parts.absT = Q * s.asDiagonal() * Q.adjoint();
    parts.W = T * (Q * inv_s.asDiagonal() * Q.adjoint());
    parts.kernel_dim = kernel;
    return parts;
}

namespace {

bool comm_predicate(const Matrix& V, const Involution& J, double sign) {
    if (V.rows() != J.dim() || V.cols() != J.dim())
        throw DimensionMismatch("commutation predicate: dimension mismatch");
    const Matrix residual = J.J * V + sign * V * J.J;
    return spectral_norm(residual) <= tols().comm * (spectral_norm(V) + 1.0);
}

}  // namespace

bool anticommutes(const Matrix& V, const Involution& J) {
    return comm_predicate(V, J, 1.0);
}

bool commutes(const Matrix& V, const Involution& J) {
    return comm_predicate(V, J, -1.0);
}

double accretivity_margin(const Matrix& S) {
    require_square(S, "accretivity_margin");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(S));
    return solver.eigenvalues()(0);
}

}  // namespace subspace
