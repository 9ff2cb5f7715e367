#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subspace/types.hpp"

namespace subspace {

/// Real interval with independently open/closed (or infinite) endpoints.
struct Interval {
    double lo = -kInf;
    double hi = kInf;
    bool lo_open = true;
    bool hi_open = true;

    bool contains(double x) const {
        if (lo_open ? !(x > lo) : !(x >= lo)) return false;
        if (hi_open ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }

    static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval below(double hi, bool open = true) { return {-kInf, hi, true, open}; }
    static Interval above(double lo, bool open = true) { return {lo, kInf, open, true}; }
};

enum class Disposition { Subordinated, Annular };

/// Disposition of spec(A) into sigma_minus / sigma_plus with the derived
/// geometry every bound is phrased in: the distance d, and for the annular
/// case the finite gap Delta = (alpha, beta) of sigma_plus containing
/// sigma_minus, internally centered so that alpha = -b, beta = b.
struct SpectralSplit {
    Disposition disposition = Disposition::Subordinated;
    std::vector<std::pair<double, double>> sigma_minus;  // closed intervals
    std::vector<std::pair<double, double>> sigma_plus;

    double d = 0.0;           // dist(sigma_minus, sigma_plus)
    double sup_minus = 0.0;
    double inf_minus = 0.0;
    double sup_plus = 0.0;
    double inf_plus = 0.0;

    // Annular only.
    double alpha = 0.0;       // gap endpoints in user coordinates
    double beta = 0.0;
    double gap_len = 0.0;     // |Delta| = beta - alpha
    double center = 0.0;      // gap midpoint; centered coordinates subtract it
    double a = 0.0;           // |Delta|/2 - d  (centered radius of conv(sigma_minus))
    double b = 0.0;           // |Delta|/2

    /// Admissible mu interval: (sup sigma_minus, inf sigma_plus) when
    /// subordinated; (a^2 + v^2, b^2) in squared centered coordinates when
    /// annular (v = ||V||, supplied by the caller).
    std::pair<double, double> mu_window(double v_norm = 0.0) const;

    bool in_minus(double lambda, double tol) const;
    bool in_plus(double lambda, double tol) const;
};

/// Derives the geometry from raw interval lists and validates the requested
/// disposition (d > 0; subordinated: sup sigma_minus < inf sigma_plus;
/// annular: sigma_minus inside a finite gap of sigma_plus).
SpectralSplit make_split(Disposition disposition,
                         std::vector<std::pair<double, double>> sigma_minus,
                         std::vector<std::pair<double, double>> sigma_plus);

}  // namespace subspace
