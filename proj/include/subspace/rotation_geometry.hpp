#pragma once

#include "subspace/spectral_core.hpp"

namespace subspace {

/// Numerically graded version of the four equivalent acute-case criteria.
/// The authoritative predicate is smin(I + J'J) > acute_tol; the other two
/// fields report the companion criteria for diagnostics.
struct AcuteReport {
    double smin_IplusJJ = 0.0;
    double max_diff_action = 0.0;   // ||J' - J||, sup of ||(J'-J)x||/||x||
    double minus_one_margin = 0.0;  // 1 + min Re W(J'J)
    bool acute = false;
};

/// Unitary U with J'U = UJ, U^2 = J'J, Re U >= 0.
struct DirectRotation {
    Matrix U;
    double theta = 0.0;     // spectral angle, = (1/2) spectral_angle(J'J)
    Matrix operator_angle;  // Theta = arccos(Re U), Hermitian
};

AcuteReport acute_case(const Involution& J, const Involution& Jp);

/// Unitary polar factor of I + J'J; throws NotAcute outside the acute case.
DirectRotation direct_rotation(const Involution& J, const Involution& Jp);

/// Max |arg z| over the (radially normalized) spectrum of a unitary W,
/// arg in (-pi, pi].
double spectral_angle(const Matrix& W);

/// Spectral norm of Pp - P for two orthogonal projections.
double projection_gap(const Matrix& P, const Matrix& Pp);

}  // namespace subspace
