#include "subspace/numrange.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace subspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

bool NumRangeBoundary::contains(Complex z, double tol) const {
    // Intersection of supporting half-planes: for the boundary point p_j at
    // sweep angle theta_j, Re(e^{-i theta_j} p_j) is the support value.
    for (std::size_t j = 0; j < points.size(); ++j) {
        const Complex phase = std::polar(1.0, -angles[j]);
        if ((phase * z).real() > (phase * points[j]).real() + tol) return false;
    }
    return true;
}

NumRangeBoundary numrange_boundary(const Matrix& T, int samples) {
    require_square(T, "numrange_boundary");
    if (samples < 8)
        throw SubspaceError("numrange_boundary: need at least 8 samples");
    NumRangeBoundary boundary;
    boundary.points.reserve(samples);
    boundary.angles.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double theta = kTwoPi * j / samples;
        const Matrix H = hermitian_part(std::polar(1.0, -theta) * T);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
        const Vector x = solver.eigenvectors().col(T.rows() - 1);
        boundary.angles.push_back(theta);
        boundary.points.push_back(x.dot(T * x));
    }
    return boundary;
}

SectorBound sector_bound(const Matrix& S) {
    require_square(S, "sector_bound");
    const Matrix H = hermitian_part(S);
    const Matrix K = skew_part_over_i(S);
    const EigenSystem hs = eigh(H);
    const Eigen::Index n = S.rows();
    const double hmax = hs.eigenvalues.maxCoeff();
    if (hs.eigenvalues(0) < -tols().comm * std::max(1.0, std::abs(hmax)))
        throw NotAccretive("sector_bound: Hermitian part has a negative eigenvalue");

    const double pd_cut = tols().pd * std::max(hmax, 0.0);

    // Split directions into the numerically positive subspace of H and its
    // near-kernel.
    std::vector<Eigen::Index> pos, ker;
    for (Eigen::Index i = 0; i < n; ++i)
        (hs.eigenvalues(i) > pd_cut ? pos : ker).push_back(i);

    SectorBound result;
    if (!ker.empty()) {
        Matrix Qk(n, static_cast<Eigen::Index>(ker.size()));
        for (std::size_t c = 0; c < ker.size(); ++c)
            Qk.col(static_cast<Eigen::Index>(c)) = hs.eigenvectors.col(ker[c]);
        // Any K-action touching the near-kernel drives the ratio to infinity.
        const double coupling = spectral_norm(Matrix(K * Qk));
        if (coupling > tols().comm * (spectral_norm(K) + 1.0)) {
            result.k = kInf;
            // Witness approaches the supremum along the kernel direction with
            // the strongest K-action.
            Eigen::Index best = 0;
            double best_norm = -1.0;
            for (Eigen::Index c = 0; c < Qk.cols(); ++c) {
                const double a = (K * Qk.col(c)).norm();
                if (a > best_norm) {
                    best_norm = a;
                    best = c;
                }
            }
            result.witness = Qk.col(best);
            return result;
        }
        if (pos.empty()) {  // S numerically zero
            result.k = 0.0;
            result.witness = Vector::Unit(n, 0);
            return result;
        }
    }

    Matrix Qp(n, static_cast<Eigen::Index>(pos.size()));
    RealVector hp(static_cast<Eigen::Index>(pos.size()));
    for (std::size_t c = 0; c < pos.size(); ++c) {
        Qp.col(static_cast<Eigen::Index>(c)) = hs.eigenvectors.col(pos[c]);
        hp(static_cast<Eigen::Index>(c)) = hs.eigenvalues(pos[c]);
    }
    const RealVector inv_sqrt = hp.cwiseSqrt().cwiseInverse();
    const Matrix Kp = Qp.adjoint() * K * Qp;
    const Matrix M = inv_sqrt.asDiagonal() * Kp * inv_sqrt.asDiagonal();
    const EigenSystem ms = eigh(M);

    Eigen::Index extremal = 0;
    double radius = -1.0;
    for (Eigen::Index i = 0; i < ms.eigenvalues.size(); ++i)
        if (std::abs(ms.eigenvalues(i)) > radius) {
            radius = std::abs(ms.eigenvalues(i));
            extremal = i;
        }
    result.k = radius;
    Vector w = Qp * (inv_sqrt.asDiagonal() * ms.eigenvectors.col(extremal));
    result.witness = w / w.norm();
    return result;
}

Ellipse2x2 ellipse_2x2(double alpha, double beta, Complex gamma) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw NonPositiveDiagonal("ellipse_2x2: alpha and beta must be positive");
    Matrix M(2, 2);
    M << alpha, -std::conj(gamma), gamma, beta;

    Ellipse2x2 e;
    e.k = std::abs(gamma) / std::sqrt(alpha * beta);
    // Eigenvalues of [[alpha, -conj(gamma)], [gamma, beta]].
    const Complex half_tr = 0.5 * (alpha + beta);
    const Complex det = Complex(alpha * beta) + std::norm(gamma);
    const Complex disc = std::sqrt(half_tr * half_tr - det);
    e.foci = {half_tr - disc, half_tr + disc};
    // Classical 2x2 field-of-values ellipse: the minor axis length is
    // sqrt(tr(M^H M) - |l1|^2 - |l2|^2), the major follows from the foci.
    const double tr_gram = (M.adjoint() * M).trace().real();
    const double minor = std::sqrt(std::max(
        tr_gram - std::norm(e.foci[0]) - std::norm(e.foci[1]), 0.0));
    const double focal = std::abs(e.foci[1] - e.foci[0]);
    e.axes = {std::sqrt(minor * minor + focal * focal), minor};
    return e;
}

Matrix pair_compression(const Matrix& A, const Matrix& V, const Involution& J,
                        double mu, const Vector& e_minus, const Vector& e_plus) {
    if (A.rows() != J.dim() || V.rows() != J.dim() ||
        e_minus.size() != J.dim() || e_plus.size() != J.dim())
        throw DimensionMismatch("pair_compression: dimension mismatch");
    if (!anticommutes(V, J))
        throw NotOffDiagonal("pair_compression: V does not anticommute with J");
    const double tol = 1e-8;
    if ((J.P_minus * e_minus - e_minus).norm() > tol ||
        std::abs(e_minus.norm() - 1.0) > tol)
        throw NotInSubspace("pair_compression: e_minus is not a unit vector in Ran P_minus");
    if ((J.P_plus * e_plus - e_plus).norm() > tol ||
        std::abs(e_plus.norm() - 1.0) > tol)
        throw NotInSubspace("pair_compression: e_plus is not a unit vector in Ran P_plus");

    const Vector Am = A * e_minus, Ap = A * e_plus;
    const Vector Vm = V * e_minus, Vp = V * e_plus;
    const Complex coupling = Ap.dot(Vm) + Vp.dot(Am);

    Matrix t(2, 2);
    t(0, 0) = mu - Am.squaredNorm() - Vm.squaredNorm();
    t(1, 1) = Ap.squaredNorm() + Vp.squaredNorm() - mu;
    t(1, 0) = coupling;
    t(0, 1) = -std::conj(coupling);
    return t;
}

}  // namespace subspace
