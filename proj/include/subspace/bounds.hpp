#pragma once

#include <map>
#include <optional>
#include <string>

#include "subspace/rotation_geometry.hpp"

namespace subspace {

/// Everything the analysis of one perturbed pair (A, V, split) produces:
/// condition flags, every applicable bound, the actual projection gap, the
/// rotation angle, and the sharpness ratio against the tightest bound.
struct BoundReport {
    Disposition disposition = Disposition::Subordinated;
    double norm_V = 0.0;
    std::map<std::string, bool> conditions;

    std::optional<double> kappa;    // inf over mu (subordinated); may be +inf
    std::optional<double> mu_star;  // argmin of the kappa minimization

    std::optional<double> bound_estin;
    std::optional<double> bound_dk;
    std::optional<double> bound_apriori;
    std::optional<double> bound_trio;

    std::optional<double> delta_minus;
    std::optional<double> delta_plus;

    std::optional<double> actual_gap;  // ||E_L(sigma'_-) - E_A(sigma_-)||
    std::optional<double> theta_U;
    std::optional<double> sharpness_ratio;
};

/// sup over unit x of |<x, JVx>| / <x, |A - mu| x>, evaluated exactly as the
/// spectral norm of D^{-1/2} (JV) D^{-1/2} with D = |A - mu|. Equals the
/// sector bound of J(L - mu).
double kappa_mu(const Matrix& A, const Matrix& V, const Involution& J, double mu);

struct KappaInf {
    double kappa = 0.0;
    double mu_star = 0.0;
};

/// Minimizes kappa_mu over the subordinated mu window: dense grid followed by
/// golden-section refinement. Any returned value is a valid (possibly
/// suboptimal) kappa, so suboptimality loosens but never invalidates a bound.
KappaInf kappa_inf(const Matrix& A, const Matrix& V, const SpectralSplit& split);

/// sin((1/2) arctan kappa); +inf maps to sqrt(2)/2.
double bound_estin(double kappa);

/// sin((1/2) arctan(2 ||V|| / d)), strictly below sqrt(2)/2.
double bound_dk(double norm_V, double d);

/// ||V|| / sqrt(d^2 + ||V||^2), valid for ||V|| < d.
double bound_apriori_tan(double norm_V, double d);

/// Two-branch kappa(v) for 0 <= v < sqrt(d (gap_len - d)); continuous across
/// the branch threshold v = sqrt((d/2)(gap_len/2 - d)).
double kappa_piecewise(double v, double d, double gap_len);

/// Closed-form varkappa(mu) the annular bound is minimized from, both
/// branches of the case split a (b^2 - mu) > b v^2.
double varkappa_mu(double a, double b, double norm_V, double mu);

struct DeltaEnclosure {
    double delta_minus = 0.0;
    double delta_plus = 0.0;
};

/// delta_- = ||V|| tan((1/2) arctan(2||V|| / (beta - inf sigma_-))) and the
/// mirrored delta_+; both stay inside the gap.
DeltaEnclosure delta_enclosure(double norm_V, const SpectralSplit& split);

/// pi/2 - (1/2) arctan(k) >= pi/4: floor on the rotation angle toward any
/// commuting involution other than the polar one.
double lower_bound_wrong_involution(double kappa_or_k);

/// Full orchestration: builds L = A + V, classifies spec(L) by the
/// theorem-guaranteed enclosures, constructs the direct rotation, and fills
/// every applicable bound and flag.
BoundReport analyze(const Matrix& A, const Matrix& V, const SpectralSplit& split);

}  // namespace subspace
