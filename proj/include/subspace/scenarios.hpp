#pragma once

#include <cstdint>

#include "subspace/bounds.hpp"

namespace subspace {

/// 4x4 sharpness family: A = diag(-b, -a, a, b), sigma_minus = {-a, a},
/// V the two-parameter anticommuting matrix with ||V|| = v1 + v2.
struct TsharpParams {
    double a = 0.0;
    double b = 1.0;
    double v1 = 0.0;
    double v2 = 0.0;
};

struct TsharpInstance {
    Matrix A;
    Matrix V;
    Involution J;
    SpectralSplit split;
    double theta_closed_form = 0.0;
};

TsharpInstance gen_tsharp(const TsharpParams& p);

/// Max of the closed-form angle over v1 - v2 in [-v_norm, v_norm] on a grid;
/// equals (1/2) arctan kappa(v_norm) up to grid resolution.
double tsharp_max_theta(double a, double b, double v_norm, int grid);

/// Discretized parity-operator family: symmetric grid {+-t_1..+-t_N} outside
/// (-a, a); A = |t| x parity, V = diag(coupling * t), J = parity.
struct KsharpGrid {
    double a = 0.0;
    double coupling = 0.0;
    int N = 1;
    double t_max = 1.0;
};

struct KsharpInstance {
    Matrix A;
    Matrix V;
    Involution J;
    double theta_exact = 0.0;               // (1/2) arctan(coupling)
    std::array<Complex, 2> JJprime_spectrum;  // (1 -+ i k)/sqrt(1 + k^2)
};

KsharpInstance gen_ksharp(const KsharpGrid& g);

/// Seeded random instance with prescribed disposition; A diagonal in a random
/// unitary basis, V block off-diagonal with ||V|| = v_norm exactly, and the
/// distance d achieved by pinned eigenvalues.
struct RandomSpec {
    int n_minus = 2;
    int n_plus = 2;
    Disposition disposition = Disposition::Subordinated;
    double d = 1.0;
    double gap_len = 0.0;  // annular only; must exceed d
    double spectrum_spread = 1.0;
    double v_norm = 0.1;
    std::uint64_t seed = 0;
};

struct RandomInstance {
    Matrix A;
    Matrix V;
    SpectralSplit split;
};

RandomInstance gen_random(const RandomSpec& spec);

/// (G, T) pair with G = e^{i phi} J, T = L - mu, phi = pi/2 - arctan(kappa);
/// both GT and G^H T^H are certified accretive before returning.
struct RelemmaInstance {
    Matrix G;
    Matrix T;
};

RelemmaInstance gen_relemma_instance(int n, std::uint64_t seed);

/// Haar-ish random unitary (QR of a complex Gaussian with phase-fixed R
/// diagonal), deterministic per generator state.
Matrix random_unitary(int n, std::uint64_t seed);

}  // namespace subspace
