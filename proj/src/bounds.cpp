#include "subspace/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace subspace {

namespace {

constexpr double kGridInset = 1e-6;   // relative inset of the mu grid endpoints
constexpr int kGridPoints = 256;
constexpr double kGoldenRel = 1e-8;   // relative width target of the refinement

double half_atan_sin(double kappa) {
    if (std::isinf(kappa)) return std::numbers::sqrt2 / 2.0;
    return std::sin(0.5 * std::atan(kappa));
}

/// Golden-section minimization of f on [lo, hi] down to relative width tol.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double rel) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double width_target =
        rel * std::max({std::abs(lo), std::abs(hi), hi - lo});
    for (int it = 0; it < 200 && b - a > width_target; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    const double x = 0.5 * (a + b);
    return {f(x), x};
}

}  // namespace

double kappa_mu(const Matrix& A, const Matrix& V, const Involution& J, double mu) {
    if (A.rows() != J.dim() || V.rows() != J.dim())
        throw DimensionMismatch("kappa_mu: dimension mismatch");
    if (!anticommutes(V, J))
        throw NotOffDiagonal("kappa_mu: V does not anticommute with J");
    if (!commutes(A, J))
        throw NotOffDiagonal("kappa_mu: A does not commute with J");

    const EigenSystem es = eigh(A);
    const Eigen::Index n = A.rows();
    const double scale = es.eigenvalues.cwiseAbs().maxCoeff();
    RealVector inv_sqrt_d(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double dist = std::abs(es.eigenvalues(i) - mu);
        if (dist <= tols().kernel * std::max(scale, 1.0))
            throw KernelNotTrivial("kappa_mu: ker(A - mu) not trivial at mu = " +
                                   std::to_string(mu));
        inv_sqrt_d(i) = 1.0 / std::sqrt(dist);
    }
    // |A - mu|^{-1/2} (JV) |A - mu|^{-1/2}: skew-Hermitian by anticommutation,
    // so its numerical radius equals its spectral norm.
    const Matrix& Q = es.eigenvectors;
    const Matrix half = inv_sqrt_d.asDiagonal() * (Q.adjoint() * (J.J * V) * Q) *
                        inv_sqrt_d.asDiagonal();
    return spectral_norm(half);
}

KappaInf kappa_inf(const Matrix& A, const Matrix& V, const SpectralSplit& split) {
    if (split.disposition != Disposition::Subordinated)
        throw WrongDisposition("kappa_inf: requires a subordinated split");
    const Involution J = involution_from_split(A, split);
    if (!anticommutes(V, J))
        throw NotOffDiagonal("kappa_inf: V does not anticommute with J");
    const auto [lo, hi] = split.mu_window();
    const double inset = kGridInset * (hi - lo);

    // Everything mu-independent is hoisted out of the minimization loop:
    // in the eigenbasis of A only the diagonal scaling depends on mu, and the
    // scaled matrix stays skew-Hermitian, so its norm is an eigenvalue radius.
    const EigenSystem es = eigh(A);
    const Eigen::Index n = A.rows();
    const double scale = std::max(es.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
    const Matrix M0 = es.eigenvectors.adjoint() * (J.J * V) * es.eigenvectors;
    const Matrix K0 = Complex(0, 1) * M0;  // Hermitian
    auto f = [&](double mu) {
        RealVector inv_sqrt_d(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double dist = std::abs(es.eigenvalues(i) - mu);
            if (dist <= tols().kernel * scale) return kInf;
            inv_sqrt_d(i) = 1.0 / std::sqrt(dist);
        }
        const Matrix K =
            inv_sqrt_d.asDiagonal() * K0 * inv_sqrt_d.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Matrix> solver(K,
                                                     Eigen::EigenvaluesOnly);
        return std::max(std::abs(solver.eigenvalues()(0)),
                        std::abs(solver.eigenvalues()(n - 1)));
    };

    double best = kInf, best_mu = 0.5 * (lo + hi);
    const double glo = lo + inset, ghi = hi - inset;
    for (int i = 0; i < kGridPoints; ++i) {
        const double mu = glo + (ghi - glo) * i / (kGridPoints - 1);
        const double value = f(mu);
        if (value < best) {
            best = value;
            best_mu = mu;
        }
    }
    const double step = (ghi - glo) / (kGridPoints - 1);
    const double rlo = std::max(glo, best_mu - step);
    const double rhi = std::min(ghi, best_mu + step);
    auto [value, mu] = golden_min(f, rlo, rhi, kGoldenRel);
    if (value < best) {
        best = value;
        best_mu = mu;
    }
    return {best, best_mu};
}

double bound_estin(double kappa) {
    if (std::isnan(kappa) || kappa < 0.0)
        throw NegativeKappa("bound_estin: kappa must be >= 0 or +inf");
    return half_atan_sin(kappa);
}

double bound_dk(double norm_V, double d) {
    if (!(d > 0.0)) throw NonPositiveD("bound_dk: d must be positive");
    if (norm_V < 0.0) throw NegativeKappa("bound_dk: ||V|| must be >= 0");
    return half_atan_sin(2.0 * norm_V / d);
}

double bound_apriori_tan(double norm_V, double d) {
    if (!(d > 0.0)) throw NonPositiveD("bound_apriori_tan: d must be positive");
    if (!(norm_V >= 0.0 && norm_V < d))
        throw ConditionViolated("bound_apriori_tan: requires 0 <= ||V|| < d");
    return norm_V / std::sqrt(d * d + norm_V * norm_V);
}

double kappa_piecewise(double v, double d, double gap_len) {
    if (!(d > 0.0) || !(gap_len > d))
        throw NonPositiveD("kappa_piecewise: requires 0 < d < gap_len");
    const double limit2 = d * (gap_len - d);
    if (!(v >= 0.0) || v >= std::sqrt(limit2))
        throw ConditionViolated("kappa_piecewise: requires 0 <= v < sqrt(d(|Delta| - d))");
    const double half_gap = 0.5 * gap_len;
    const double threshold2 = 0.5 * d * (half_gap - d);
    if (v * v <= threshold2) return 2.0 * v / d;
    const double shoulder = half_gap - d;
    return (v * half_gap + std::sqrt(limit2 * (shoulder * shoulder + v * v))) /
           (limit2 - v * v);
}

double varkappa_mu(double a, double b, double norm_V, double mu) {
    if (!(a >= 0.0 && a < b))
        throw ConditionViolated("varkappa_mu: requires 0 <= a < b");
    const double lo = a * a + norm_V * norm_V, hi = b * b;
    if (!(mu > lo && mu < hi))
        throw MuOutOfWindow("varkappa_mu: mu outside (a^2 + v^2, b^2)");
    if (norm_V == 0.0) return 0.0;
    const double v2 = norm_V * norm_V;
    if (a * (hi - mu) > b * v2)
        return norm_V * (a + b) / std::sqrt((mu - a * a - v2) * (hi + v2 - mu));
    return std::sqrt(hi * v2 + a * a * (hi - mu)) /
           std::sqrt((mu - a * a - v2) * (hi - mu));
}

DeltaEnclosure delta_enclosure(double norm_V, const SpectralSplit& split) {
    if (split.disposition != Disposition::Annular)
        throw WrongDisposition("delta_enclosure: requires an annular split");
    if (norm_V < 0.0)
        throw NegativeKappa("delta_enclosure: ||V|| must be >= 0");
    DeltaEnclosure d;
    d.delta_minus =
        norm_V * std::tan(0.5 * std::atan(2.0 * norm_V / (split.beta - split.inf_minus)));
    d.delta_plus =
        norm_V * std::tan(0.5 * std::atan(2.0 * norm_V / (split.sup_minus - split.alpha)));
    if (!(d.delta_minus < split.inf_minus - split.alpha) ||
        !(d.delta_plus < split.beta - split.sup_minus))
        throw EnclosureViolated(
            "delta_enclosure: enclosure intervals leave the gap");
    return d;
}

double lower_bound_wrong_involution(double kappa_or_k) {
    if (std::isnan(kappa_or_k) || kappa_or_k < 0.0)
        throw NegativeKappa("lower_bound_wrong_involution: k must be >= 0 or +inf");
    const double at =
        std::isinf(kappa_or_k) ? std::numbers::pi / 2.0 : std::atan(kappa_or_k);
    return std::numbers::pi / 2.0 - 0.5 * at;
}

BoundReport analyze(const Matrix& A, const Matrix& V, const SpectralSplit& split) {
    const Involution J = involution_from_split(A, split);
    if (!anticommutes(V, J))
        throw NotOffDiagonal("analyze: V does not anticommute with J");

    BoundReport report;
    report.disposition = split.disposition;
    report.norm_V = spectral_norm(V);
    const double v = report.norm_V;
    const double d = split.d;

    report.conditions["general_half_d"] = v < 0.5 * d;
    report.conditions["offdiag_sqrt3"] = v < 0.5 * std::sqrt(3.0) * d;
    report.conditions["apriori_tan"] = v < d;
    const bool annular = split.disposition == Disposition::Annular;
    report.conditions["trio"] =
        annular && v * v < d * (split.gap_len - d);

    const Matrix L = A + V;
    const EigenSystem ls = eigh(L);
    const double diam = std::max(
        ls.eigenvalues(ls.eigenvalues.size() - 1) - ls.eigenvalues(0), 1.0);
    const double ctol = tols().classify * diam;

    // Classify spec(L) into sigma'_- / sigma'_+ by the guaranteed enclosures.
    Matrix Jp_mat = Matrix::Zero(L.rows(), L.cols());
    DeltaEnclosure deltas;
    bool have_deltas = false;
    if (annular && v < std::numbers::sqrt2 * d) {
        deltas = delta_enclosure(v, split);
        have_deltas = true;
        report.delta_minus = deltas.delta_minus;
        report.delta_plus = deltas.delta_plus;
    }
    for (Eigen::Index i = 0; i < ls.eigenvalues.size(); ++i) {
        const double lambda = ls.eigenvalues(i);
        double sign;
        if (!annular) {
            const bool lower = lambda <= split.sup_minus + ctol;
            const bool upper = lambda >= split.inf_plus - ctol;
            if (lower == upper)
                throw EnclosureViolated(
                    "analyze: perturbed eigenvalue " + std::to_string(lambda) +
                    " escapes the subordinated enclosure");
            sign = upper ? 1.0 : -1.0;
        } else {
            if (!have_deltas)
                throw EnclosureViolated(
                    "analyze: annular enclosure unavailable for ||V|| >= sqrt(2) d");
            const bool inner = lambda >= split.inf_minus - deltas.delta_minus - ctol &&
                               lambda <= split.sup_minus + deltas.delta_plus + ctol;
            const bool outer = lambda <= split.alpha + ctol || lambda >= split.beta - ctol;
            if (inner == outer)
                throw EnclosureViolated(
                    "analyze: perturbed eigenvalue " + std::to_string(lambda) +
                    " escapes the annular enclosure");
            sign = outer ? 1.0 : -1.0;
        }
        Jp_mat += sign * ls.eigenvectors.col(i) * ls.eigenvectors.col(i).adjoint();
    }
    const Involution Jp = Involution::from_matrix(Jp_mat);

    const DirectRotation rotation = direct_rotation(J, Jp);  // NotAcute propagates
    report.theta_U = rotation.theta;
    report.actual_gap = projection_gap(J.P_minus, Jp.P_minus);

    if (!annular) {
        const KappaInf ki = kappa_inf(A, V, split);
        report.kappa = ki.kappa;
        report.mu_star = ki.mu_star;
        report.bound_estin = bound_estin(ki.kappa);
        report.bound_dk = bound_dk(v, d);
    } else {
        if (report.conditions["apriori_tan"])
            report.bound_apriori = bound_apriori_tan(v, d);
        if (report.conditions["trio"])
            report.bound_trio =
                half_atan_sin(kappa_piecewise(v, d, split.gap_len));
    }

    double tightest = kInf;
    for (const auto& bound :
         {report.bound_estin, report.bound_dk, report.bound_apriori, report.bound_trio})
        if (bound) tightest = std::min(tightest, *bound);
    if (std::isfinite(tightest)) {
        if (tightest > 0.0)
            report.sharpness_ratio = *report.actual_gap / tightest;
        else
            report.sharpness_ratio = *report.actual_gap <= 1e-12 ? 0.0 : kInf;
    }
    return report;
}

}  // namespace subspace
