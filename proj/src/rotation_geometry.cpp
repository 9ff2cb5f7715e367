#include "subspace/rotation_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace subspace {

AcuteReport acute_case(const Involution& J, const Involution& Jp) {
    if (J.dim() != Jp.dim())
        throw DimensionMismatch("acute_case: involutions of different dimension");
    const Eigen::Index n = J.dim();
    const Matrix JJ = Jp.J * J.J;
    const Matrix T = Matrix::Identity(n, n) + JJ;

    AcuteReport report;
    report.smin_IplusJJ = smallest_singular_value(T);
    report.max_diff_action = spectral_norm(Jp.J - J.J);
    Eigen::SelfAdjointEigenSolver<Matrix> herm(hermitian_part(JJ));
    report.minus_one_margin = 1.0 + herm.eigenvalues()(0);
    report.acute = report.smin_IplusJJ > tols().acute;
    return report;
}

DirectRotation direct_rotation(const Involution& J, const Involution& Jp) {
    const AcuteReport report = acute_case(J, Jp);
    if (!report.acute)
        throw NotAcute("direct_rotation: involutions are not in the acute case "
                       "(smin(I + J'J) = " + std::to_string(report.smin_IplusJJ) + ")");
    const Eigen::Index n = J.dim();
    const Matrix JJ = Jp.J * J.J;
    const Matrix T = Matrix::Identity(n, n) + JJ;

    DirectRotation rot;
    rot.U = polar_decompose(T).W;
    rot.theta = 0.5 * spectral_angle(JJ);

    const EigenSystem re = eigh(hermitian_part(rot.U));
    RealVector angles(n);
    for (Eigen::Index i = 0; i < n; ++i)
        angles(i) = std::acos(std::clamp(re.eigenvalues(i), -1.0, 1.0));
    rot.operator_angle =
        re.eigenvectors * angles.asDiagonal() * re.eigenvectors.adjoint();
    return rot;
}

double spectral_angle(const Matrix& W) {
    require_square(W, "spectral_angle");
    const Eigen::Index n = W.rows();
    if (spectral_norm(Matrix(W.adjoint() * W - Matrix::Identity(n, n))) >
        tols().unitary)
        throw NotUnitary("spectral_angle: input is not unitary within tolerance");
    Eigen::ComplexEigenSolver<Matrix> solver(W);
    if (solver.info() != Eigen::Success)
        throw SubspaceError("spectral_angle: eigensolver failed");
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex z = solver.eigenvalues()(i);
        const double r = std::abs(z);
        if (r > 0.0) z /= r;  // radial normalization onto the unit circle
        worst = std::max(worst, std::abs(std::arg(z)));  // arg in (-pi, pi]
    }
    return worst;
}

double projection_gap(const Matrix& P, const Matrix& Pp) {
    require_square(P, "projection_gap");
    if (P.rows() != Pp.rows() || P.cols() != Pp.cols())
        throw DimensionMismatch("projection_gap: dimension mismatch");
    const double tol = tols().projection;
    for (const Matrix* M : {&P, &Pp}) {
        if ((*M - M->adjoint()).norm() > tol * std::max(1.0, M->norm()) ||
            (*M * *M - *M).norm() > tol * std::max(1.0, M->norm()))
            throw NotAProjection("projection_gap: input is not an orthogonal projection");
    }
    return spectral_norm(Pp - P);
}

}  // namespace subspace
