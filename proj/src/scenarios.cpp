#include "subspace/scenarios.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <random>

namespace subspace {

namespace {

/// Derived stream so parallel generation stays reproducible: each consumer
/// mixes its own tag into the user seed.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag) {
    std::seed_seq seq{seed, tag, std::uint64_t{0x9e3779b97f4a7c15ULL}};
    return std::mt19937_64(seq);
}

Matrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix G(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            G(i, j) = Complex(re, im);
        }
    return G;
}

Matrix haar_unitary(int n, std::mt19937_64& rng) {
    const Matrix G = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex r = R(j, j);
        const double a = std::abs(r);
        if (a > 0.0) Q.col(j) *= r / a;
    }
    return Q;
}

}  // namespace

Matrix random_unitary(int n, std::uint64_t seed) {
    auto rng = stream(seed, 0x756e6974);
    return haar_unitary(n, rng);
}

TsharpInstance gen_tsharp(const TsharpParams& p) {
    if (!(p.a >= 0.0 && p.b > p.a && p.v1 >= 0.0 && p.v2 >= 0.0))
        throw ConditionViolated("gen_tsharp: requires 0 <= a < b and v1, v2 >= 0");
    const double v = p.v1 + p.v2;
    if (!(v * v < p.b * p.b - p.a * p.a))
        throw ConditionViolated("gen_tsharp: requires (v1 + v2)^2 < b^2 - a^2");

    TsharpInstance inst;
    inst.A = Matrix::Zero(4, 4);
    inst.A.diagonal() << -p.b, -p.a, p.a, p.b;
    inst.V = Matrix::Zero(4, 4);
    inst.V(0, 1) = inst.V(1, 0) = p.v1;
    inst.V(0, 2) = inst.V(2, 0) = p.v2;
    inst.V(1, 3) = inst.V(3, 1) = p.v2;
    inst.V(2, 3) = inst.V(3, 2) = p.v1;

    Matrix J = Matrix::Zero(4, 4);
    J.diagonal() << 1.0, -1.0, -1.0, 1.0;
    inst.J = Involution::from_matrix(J);

    inst.split = make_split(Disposition::Annular, {{-p.a, p.a}},
                            {{-p.b, -p.b}, {p.b, p.b}});

    const double diff = p.v1 - p.v2;
    inst.theta_closed_form =
        0.5 * std::atan2(2.0 * p.a * diff + 2.0 * p.b * v,
                         p.b * p.b - p.a * p.a - v * v + diff * diff);
    return inst;
}

double tsharp_max_theta(double a, double b, double v_norm, int grid) {
    if (!(v_norm >= 0.0 && v_norm * v_norm < b * b - a * a))
        throw ConditionViolated("tsharp_max_theta: requires v^2 < b^2 - a^2");
    if (grid < 2) grid = 2;
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double diff = -v_norm + 2.0 * v_norm * i / (grid - 1);
        TsharpParams p{a, b, 0.5 * (v_norm + diff), 0.5 * (v_norm - diff)};
        best = std::max(best, gen_tsharp(p).theta_closed_form);
    }
    return best;
}

KsharpInstance gen_ksharp(const KsharpGrid& g) {
    if (g.N < 1 || !(g.a >= 0.0) || !(g.t_max > g.a) || g.coupling < 0.0)
        throw GridViolatesCutoff("gen_ksharp: invalid grid parameters");
    const int n = 2 * g.N;

    // Basis ordered as (e_{-t_i}, e_{t_i}) pairs with t_i > a; the operators
    // act pairwise on (t, -t), so the model is exactly block diagonal.
    KsharpInstance inst;
    inst.A = Matrix::Zero(n, n);
    inst.V = Matrix::Zero(n, n);
    Matrix J = Matrix::Zero(n, n);
    for (int i = 0; i < g.N; ++i) {
        const double t = g.a + (g.t_max - g.a) * (i + 1) / g.N;
        if (!(t > g.a)) throw GridViolatesCutoff("gen_ksharp: grid point inside the cutoff");
        const int lo = 2 * i, hi = 2 * i + 1;
        inst.A(lo, hi) = inst.A(hi, lo) = t;  // (Ax)(t) = |t| x(-t)
        inst.V(lo, lo) = -g.coupling * t;     // (Vx)(t) = coupling * t * x(t)
        inst.V(hi, hi) = g.coupling * t;
        J(lo, hi) = J(hi, lo) = 1.0;          // parity
    }
    inst.J = Involution::from_matrix(J);
    inst.theta_exact = 0.5 * std::atan(g.coupling);
    const double norm = std::sqrt(1.0 + g.coupling * g.coupling);
    inst.JJprime_spectrum = {Complex(1.0, -g.coupling) / norm,
                             Complex(1.0, g.coupling) / norm};
    return inst;
}

RandomInstance gen_random(const RandomSpec& spec) {
    if (spec.n_minus < 1 || spec.n_plus < 1)
        throw InfeasibleSpec("gen_random: need at least one eigenvalue on each side");
    if (!(spec.d > 0.0) || spec.v_norm < 0.0 || spec.spectrum_spread < 0.0)
        throw InfeasibleSpec("gen_random: d must be positive and norms non-negative");
    const bool annular = spec.disposition == Disposition::Annular;
    if (annular) {
        if (!(spec.gap_len > spec.d))
            throw InfeasibleSpec("gen_random: annular requires gap_len > d");
        if (spec.n_plus < 2)
            throw InfeasibleSpec("gen_random: annular requires n_plus >= 2 (both gap ends)");
    }
    auto rng = stream(spec.seed, 0x72616e64);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int n = spec.n_minus + spec.n_plus;
    RealVector lambdas(n);
    std::vector<std::pair<double, double>> s_minus, s_plus;

    if (!annular) {
        // sigma_minus in [-spread, 0], sigma_plus in [d, d + spread]; the
        // critical pair (0, d) is pinned so that dist = d exactly.
        lambdas(0) = 0.0;
        for (int i = 1; i < spec.n_minus; ++i)
            lambdas(i) = -spec.spectrum_spread * unit(rng);
        lambdas(spec.n_minus) = spec.d;
        for (int i = 1; i < spec.n_plus; ++i)
            lambdas(spec.n_minus + i) = spec.d + spec.spectrum_spread * unit(rng);
        s_minus = {{-spec.spectrum_spread, 0.0}};
        s_plus = {{spec.d, spec.d + spec.spectrum_spread}};
    } else {
        // Centered gap (-b, b); sigma_minus in [-a, a] with one eigenvalue
        // pinned at a, sigma_plus pinned at both gap ends +-b.
        const double b = 0.5 * spec.gap_len;
        const double a = b - spec.d;
        lambdas(0) = a;
        for (int i = 1; i < spec.n_minus; ++i)
            lambdas(i) = a * (2.0 * unit(rng) - 1.0);
        lambdas(spec.n_minus) = b;
        lambdas(spec.n_minus + 1) = -b;
        for (int i = 2; i < spec.n_plus; ++i) {
            const double t = b + spec.spectrum_spread * unit(rng);
            lambdas(spec.n_minus + i) = unit(rng) < 0.5 ? t : -t;
        }
        s_minus = {{-a, a}};
        s_plus = {{-b - spec.spectrum_spread, -b}, {b, b + spec.spectrum_spread}};
    }

    const Matrix Q = haar_unitary(n, rng);
    Matrix A = Q * lambdas.asDiagonal() * Q.adjoint();
    A = hermitian_part(A);

    Matrix Voff = Matrix::Zero(n, n);
    if (spec.v_norm > 0.0) {
        Matrix B = gaussian_matrix(spec.n_plus, spec.n_minus, rng);
        B *= spec.v_norm / spectral_norm(B);
        Voff.block(spec.n_minus, 0, spec.n_plus, spec.n_minus) = B;
        Voff.block(0, spec.n_minus, spec.n_minus, spec.n_plus) = B.adjoint();
    }
    Matrix V = Q * Voff * Q.adjoint();
    V = hermitian_part(V);

    RandomInstance inst;
    inst.A = std::move(A);
    inst.V = std::move(V);
    inst.split = make_split(spec.disposition, std::move(s_minus), std::move(s_plus));
    return inst;
}

RelemmaInstance gen_relemma_instance(int n, std::uint64_t seed) {
    if (n < 2) throw InfeasibleSpec("gen_relemma_instance: n must be >= 2");
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        RandomSpec spec;
        spec.n_minus = n / 2;
        spec.n_plus = n - n / 2;
        spec.disposition = Disposition::Subordinated;
        spec.d = 1.0;
        spec.spectrum_spread = 1.0;
        spec.v_norm = 0.5;
        spec.seed = seed + 0x1000 * attempt;
        const RandomInstance ri = gen_random(spec);

        const Involution J = involution_from_split(ri.A, ri.split);
        const double mu = 0.5 * (ri.split.sup_minus + ri.split.inf_plus);
        const double kappa = kappa_mu(ri.A, ri.V, J, mu);
        const double phi = std::atan(1.0) * 2.0 - std::atan(kappa);  // pi/2 - arctan k

        RelemmaInstance inst;
        inst.T = ri.A + ri.V - mu * Matrix::Identity(n, n);
        inst.G = std::polar(1.0, phi) * J.J;
        if (accretivity_margin(inst.G * inst.T) >= -1e-10 &&
            accretivity_margin(Matrix(inst.G.adjoint() * inst.T.adjoint())) >= -1e-10)
            return inst;
    }
    throw ConstructionFailed("gen_relemma_instance: accretivity preconditions failed");
}

}  // namespace subspace
