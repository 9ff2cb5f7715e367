#include "subspace/split.hpp"

#include <algorithm>
#include <cmath>

namespace subspace {

namespace {

double list_min(const std::vector<std::pair<double, double>>& iv) {
    double m = kInf;
    for (auto& [lo, hi] : iv) m = std::min(m, lo);
    return m;
}

double list_max(const std::vector<std::pair<double, double>>& iv) {
    double m = -kInf;
    for (auto& [lo, hi] : iv) m = std::max(m, hi);
    return m;
}

double interval_dist(std::pair<double, double> p, std::pair<double, double> q) {
    if (p.second < q.first) return q.first - p.second;
    if (q.second < p.first) return p.first - q.second;
    return 0.0;  // overlap
}

bool list_contains(const std::vector<std::pair<double, double>>& iv, double x,
                   double tol) {
    return std::any_of(iv.begin(), iv.end(), [&](auto& p) {
        return x >= p.first - tol && x <= p.second + tol;
    });
}

}  // namespace

std::pair<double, double> SpectralSplit::mu_window(double v_norm) const {
    if (disposition == Disposition::Subordinated)
        return {sup_minus, inf_plus};
    return {a * a + v_norm * v_norm, b * b};
}

bool SpectralSplit::in_minus(double lambda, double tol) const {
    return list_contains(sigma_minus, lambda, tol);
}

bool SpectralSplit::in_plus(double lambda, double tol) const {
    return list_contains(sigma_plus, lambda, tol);
}

SpectralSplit make_split(Disposition disposition,
                         std::vector<std::pair<double, double>> sigma_minus,
                         std::vector<std::pair<double, double>> sigma_plus) {
    if (sigma_minus.empty() || sigma_plus.empty())
        throw InfeasibleSpec("make_split: both sigma_minus and sigma_plus must be non-empty");
    for (auto* list : {&sigma_minus, &sigma_plus})
        for (auto& [lo, hi] : *list)
            if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
                throw InfeasibleSpec("make_split: malformed interval in split");

    SpectralSplit s;
    s.disposition = disposition;
    s.sigma_minus = std::move(sigma_minus);
    s.sigma_plus = std::move(sigma_plus);
    s.inf_minus = list_min(s.sigma_minus);
    s.sup_minus = list_max(s.sigma_minus);
    s.inf_plus = list_min(s.sigma_plus);
    s.sup_plus = list_max(s.sigma_plus);

    double d = kInf;
    for (auto& p : s.sigma_minus)
        for (auto& q : s.sigma_plus) d = std::min(d, interval_dist(p, q));
    s.d = d;
    if (!(s.d > 0.0))
        throw InfeasibleSpec("make_split: dist(sigma_minus, sigma_plus) must be positive");

    if (disposition == Disposition::Subordinated) {
        if (!(s.sup_minus < s.inf_plus))
            throw InfeasibleSpec("make_split: subordinated requires sup sigma_minus < inf sigma_plus");
    } else {
        // sigma_minus must sit inside a finite gap of sigma_plus: locate the
        // nearest sigma_plus endpoints on each side of conv(sigma_minus).
        double alpha = -kInf, beta = kInf;
        for (auto& [lo, hi] : s.sigma_plus) {
            if (hi <= s.inf_minus) alpha = std::max(alpha, hi);
            else if (lo >= s.sup_minus) beta = std::min(beta, lo);
            else
                throw InfeasibleSpec("make_split: sigma_plus intersects conv(sigma_minus)");
        }
        if (!std::isfinite(alpha) || !std::isfinite(beta))
            throw InfeasibleSpec("make_split: annular requires sigma_plus on both sides of sigma_minus");
        s.alpha = alpha;
        s.beta = beta;
        s.gap_len = beta - alpha;
        s.center = 0.5 * (alpha + beta);
        s.b = 0.5 * s.gap_len;
        s.a = s.b - s.d;
        if (s.a < -1e-12)
            throw InfeasibleSpec("make_split: d exceeds half the gap length");
        s.a = std::max(s.a, 0.0);
    }
    return s;
}

}  // namespace subspace
