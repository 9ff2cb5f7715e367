#include "subspace/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "subspace/numrange.hpp"

namespace subspace::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag) {
    std::seed_seq seq{seed, tag, std::uint64_t{0x9e3779b97f4a7c15ULL}};
    return std::mt19937_64(seq);
}

int pick_dim(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random involution with at least one eigenvalue of each sign.
Involution random_involution(int n, std::mt19937_64& rng) {
    const Matrix Q = random_unitary(n, rng());
    RealVector signs(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < n; ++i) signs(i) = coin(rng) ? 1.0 : -1.0;
    signs(0) = 1.0;
    signs(n - 1) = -1.0;
    const Matrix J = Q * signs.asDiagonal() * Q.adjoint();
    return Involution::from_matrix(hermitian_part(J));
}

/// Unitary exp(iH) with ||H|| <= max_angle, so conjugating an involution by
/// it keeps the pair in the acute case for max_angle < pi/4.
Matrix small_rotation(int n, double max_angle, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H(i, j) = Complex(normal(rng), normal(rng));
    Matrix Hm = hermitian_part(H);
    Hm *= max_angle / spectral_norm(Hm);
    const EigenSystem es = eigh(Hm);
    Vector phases(n);
    for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, es.eigenvalues(i));
    return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

std::pair<Involution, Involution> random_acute_pair(int n, std::mt19937_64& rng) {
    const Involution J = random_involution(n, rng);
    std::uniform_real_distribution<double> angle(0.05, 0.7);
    const Matrix R = small_rotation(n, angle(rng), rng);
    const Involution Jp = Involution::from_matrix(hermitian_part(R * J.J * R.adjoint()));
    return {J, Jp};
}

Vector random_unit_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = Complex(normal(rng), normal(rng));
    return x / x.norm();
}

RandomSpec random_subordinated_spec(std::mt19937_64& rng, std::uint64_t seed) {
    RandomSpec spec;
    spec.n_minus = pick_dim(rng, 1, 8);
    spec.n_plus = pick_dim(rng, 1, 8);
    spec.disposition = Disposition::Subordinated;
    spec.d = std::uniform_real_distribution<double>(0.3, 2.0)(rng);
    spec.spectrum_spread = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
    spec.v_norm = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    spec.seed = seed;
    return spec;
}

RandomSpec random_annular_spec(std::mt19937_64& rng, std::uint64_t seed,
                               double v_cap_kind) {
    RandomSpec spec;
    spec.n_minus = pick_dim(rng, 1, 6);
    spec.n_plus = pick_dim(rng, 2, 8);
    spec.disposition = Disposition::Annular;
    spec.d = std::uniform_real_distribution<double>(0.3, 1.5)(rng);
    spec.gap_len =
        spec.d + std::uniform_real_distribution<double>(0.3, 3.0)(rng) + spec.d;
    spec.spectrum_spread = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    // v_cap_kind: cap by min(d, sqrt(d(|Delta|-d))) or only by the trio bound.
    const double trio_cap = std::sqrt(spec.d * (spec.gap_len - spec.d));
    const double cap = v_cap_kind < 0.5 ? std::min(spec.d, trio_cap) : trio_cap;
    spec.v_norm = std::uniform_real_distribution<double>(0.0, 0.98 * cap)(rng);
    spec.seed = seed;
    return spec;
}

}  // namespace

void SuiteResult::record(bool ok, double margin, const std::string& what) {
    ++checks;
    worst_margin = std::min(worst_margin, margin);
    if (!ok) {
        ++failures;
        if (notes.size() < 16) notes.push_back(what);
    }
}

SuiteResult run_rotation_suite(const Options& opt) {
    SuiteResult suite{"rotation"};
    auto rng = stream(opt.seed, 0x726f74);
    for (int trial = 0; trial < opt.trials; ++trial) {
        const int n = pick_dim(rng, 2, 16);
        auto [J, Jp] = random_acute_pair(n, rng);
        const Matrix I = Matrix::Identity(n, n);

        const DirectRotation rot = direct_rotation(J, Jp);
        const double r1 = spectral_norm(Matrix(Jp.J * rot.U - rot.U * J.J));
        const double r2 = spectral_norm(Matrix(rot.U * rot.U - Jp.J * J.J));
        const double r3 = accretivity_margin(rot.U);
        suite.record(r1 <= 1e-9, 1e-9 - r1, "intertwining J'U = UJ");
        suite.record(r2 <= 1e-9, 1e-9 - r2, "square relation U^2 = J'J");
        suite.record(r3 >= -1e-9, r3 + 1e-9, "Re U >= 0");

        const double gap = projection_gap(J.P_minus, Jp.P_minus);
        const double gap_err = std::abs(gap - std::sin(rot.theta));
        suite.record(gap_err <= 1e-9, 1e-9 - gap_err, "gap identity ||P'-P|| = sin theta");

        // Uniqueness probe: J'J U^H has the same defining relations, so it
        // must coincide with U.
        const double uniq = spectral_norm(Matrix(Jp.J * J.J * rot.U.adjoint() - rot.U));
        suite.record(uniq <= 1e-9, 1e-9 - uniq, "uniqueness probe U = J'J U^H");

        // Norm identity and subadditivity on random unitaries.
        Matrix W1 = random_unitary(n, rng());
        if (opt.inject_failure && trial == 0) W1 *= 0.9;  // negative control
        const Matrix W2 = random_unitary(n, rng());
        double t1;
        try {
            t1 = spectral_angle(W1);
        } catch (const NotUnitary&) {
            suite.record(false, -1.0, "spectral_angle rejected non-unitary input");
            continue;
        }
        const double norm_id = std::abs(spectral_norm(Matrix(I - W1)) - 2.0 * std::sin(0.5 * t1));
        suite.record(norm_id <= 1e-9, 1e-9 - norm_id, "norm identity ||I-W|| = 2 sin(theta/2)");
        const double t2 = spectral_angle(W2);
        const double t21 = spectral_angle(Matrix(W2 * W1));
        suite.record(t21 <= t1 + t2 + 1e-9, t1 + t2 + 1e-9 - t21,
                     "subadditivity theta(W2W1) <= theta(W1)+theta(W2)");
        suite.record(t21 >= std::abs(t1 - t2) - 1e-9, t21 - std::abs(t1 - t2) + 1e-9,
                     "subadditivity theta(W2W1) >= |theta(W1)-theta(W2)|");

        // Commuting acute pair collapses to equality; flipping one +1
        // eigenvector of J produces a commuting non-acute pair.
        const double same = spectral_norm(Matrix(J.J - J.J));
        suite.record(same <= 1e-9, 1e-9 - same, "commuting acute pair equality");
        const EigenSystem js = eigh(J.J);
        Eigen::Index plus_idx = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            if (js.eigenvalues(i) > 0) plus_idx = i;
        const Vector q = js.eigenvectors.col(plus_idx);
        const Matrix flipped = J.J - 2.0 * (q * q.adjoint());
        const Involution Jf = Involution::from_matrix(hermitian_part(flipped));
        const AcuteReport flipped_report = acute_case(J, Jf);
        suite.record(!flipped_report.acute, tols().acute - flipped_report.smin_IplusJJ,
                     "commuting distinct involutions are non-acute");
    }
    return suite;
}

SuiteResult run_relemma_suite(const Options& opt) {
    SuiteResult suite{"relemma"};
    auto rng = stream(opt.seed, 0x72656c);
    for (int trial = 0; trial < opt.trials; ++trial) {
        const int n = pick_dim(rng, 2, 12);
        RelemmaInstance inst = gen_relemma_instance(n, rng());
        if (opt.inject_failure && trial == 0) inst.G = -inst.G;
        const Matrix W = polar_decompose(inst.T).W;
        const double m1 = accretivity_margin(Matrix(inst.G * W));
        const double m2 = accretivity_margin(Matrix(W * inst.G));
        suite.record(m1 >= -1e-9, m1 + 1e-9, "accretivity of GW");
        suite.record(m2 >= -1e-9, m2 + 1e-9, "accretivity of WG");
    }
    return suite;
}

SuiteResult run_bounds_suite(const Options& opt) {
    SuiteResult suite{"bounds"};
    auto rng = stream(opt.seed, 0x626e64);
    for (int trial = 0; trial < opt.trials; ++trial) {
        // Subordinated dominance chain.
        {
            const RandomSpec spec = random_subordinated_spec(rng, rng());
            const RandomInstance ri = gen_random(spec);
            BoundReport report = analyze(ri.A, ri.V, ri.split);
            if (opt.inject_failure && trial == 0 && report.actual_gap)
                report.actual_gap = *report.actual_gap + 1.0;
            const double gap = report.actual_gap.value();
            const double be = report.bound_estin.value();
            const double bd = report.bound_dk.value();
            suite.record(gap <= be + 1e-9, be + 1e-9 - gap, "gap <= estin bound");
            suite.record(be <= bd + 1e-9, bd + 1e-9 - be, "estin refines DK bound");

            // Wrong-involution floor: the rotation from J to -J' must stay
            // above pi/2 - (1/2) arctan kappa, and theta(J~'J) = pi - theta(J'J).
            const Involution J = involution_from_split(ri.A, ri.split);
            const Matrix L = ri.A + ri.V;
            const Involution Jp =
                sign_involution(L, 0.5 * (ri.split.sup_minus + ri.split.inf_plus));
            const Involution Jtilde = Involution::from_matrix(Matrix(-Jp.J));
            const AcuteReport ar = acute_case(J, Jtilde);
            if (ar.acute) {
                const DirectRotation wrong = direct_rotation(J, Jtilde);
                const double floor = lower_bound_wrong_involution(report.kappa.value());
                suite.record(wrong.theta >= floor - 1e-9, wrong.theta - floor + 1e-9,
                             "wrong-involution angle floor");
                // Negating J' reflects the spectrum of J'J through the origin,
                // so the flipped angle is pi minus the smallest argument and
                // in particular at least pi minus the largest one.
                const double flipped = spectral_angle(Matrix(Jtilde.J * J.J));
                const double floor2 = kPi - spectral_angle(Matrix(Jp.J * J.J));
                suite.record(flipped >= floor2 - 1e-9, flipped - floor2 + 1e-9,
                             "theta(-J'J) >= pi - theta(J'J)");
            }
        }
        // Annular dominance and enclosures.
        {
            const RandomSpec spec = random_annular_spec(rng, rng(), 0.0);
            const RandomInstance ri = gen_random(spec);
            const BoundReport report = analyze(ri.A, ri.V, ri.split);
            const double gap = report.actual_gap.value();
            if (report.bound_apriori)
                suite.record(gap <= *report.bound_apriori + 1e-9,
                             *report.bound_apriori + 1e-9 - gap, "gap <= apriori bound");
            if (report.conditions.at("trio")) {
                const double cap =
                    0.5 * std::atan(kappa_piecewise(report.norm_V, ri.split.d,
                                                    ri.split.gap_len));
                suite.record(report.theta_U.value() <= cap + 1e-9,
                             cap + 1e-9 - report.theta_U.value(),
                             "theta <= (1/2) arctan kappa(||V||)");
            }
            // Enclosure of perturbed spectra.
            const EigenSystem ls = eigh(Matrix(ri.A + ri.V));
            const double dm = report.delta_minus.value();
            const double dp = report.delta_plus.value();
            for (Eigen::Index i = 0; i < ls.eigenvalues.size(); ++i) {
                const double lam = ls.eigenvalues(i);
                const bool inner = lam >= ri.split.inf_minus - dm - 1e-9 &&
                                   lam <= ri.split.sup_minus + dp + 1e-9;
                const bool outer = lam <= ri.split.alpha + 1e-9 ||
                                   lam >= ri.split.beta - 1e-9;
                suite.record(inner || outer, inner || outer ? 0.0 : -1.0,
                             "perturbed eigenvalue enclosure");
            }
        }
        // Minimization identity: grid minimum of varkappa matches the
        // piecewise formula.
        {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const double a = unit(rng);
            const double b = a + 0.2 + unit(rng);
            const double d = b - a;
            const double gap = 2.0 * b;
            const double v = 0.97 * std::sqrt(d * (gap - d)) * unit(rng);
            const double lo = a * a + v * v, hi = b * b;
            double grid_min = kInf;
            const int grid = 10000;
            for (int i = 1; i < grid; ++i) {
                const double mu = lo + (hi - lo) * i / grid;
                grid_min = std::min(grid_min, varkappa_mu(a, b, v, mu));
            }
            const double pw = kappa_piecewise(v, d, gap);
            const double err = std::abs(grid_min - pw) / std::max(1.0, pw);
            suite.record(err <= 1e-6, 1e-6 - err, "grid min of varkappa = kappa(v)");
        }
    }
    return suite;
}

SuiteResult run_numrange_suite(const Options& opt) {
    SuiteResult suite{"numrange"};
    auto rng = stream(opt.seed, 0x6e756d);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < opt.trials; ++trial) {
        const int n = pick_dim(rng, 2, 12);
        Matrix T(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T(i, j) = Complex(normal(rng), normal(rng));
        if (opt.inject_failure && trial == 0) T *= 0.0;  // degenerate control is fine
        const double scale = std::max(spectral_norm(T), 1e-30);
        const NumRangeBoundary boundary = numrange_boundary(T, 720);

        // Hull soundness against random Rayleigh samples.
        double worst = kInf;
        bool sound = true;
        const int probes = std::max(500 / std::max(opt.trials, 1), 20);
        for (int p = 0; p < probes; ++p) {
            const Vector y = random_unit_vector(n, rng);
            const Complex z = y.dot(T * y);
            if (!boundary.contains(z, tols().hull * scale)) sound = false;
        }
        suite.record(sound, sound ? 0.0 : -1.0, "hull soundness");
        (void)worst;

        // Sector-bound consistency for a strictly accretive S.
        Matrix H(n, n), K(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                H(i, j) = Complex(normal(rng), normal(rng));
                K(i, j) = Complex(normal(rng), normal(rng));
            }
        const Matrix Hp = hermitian_part(H) * hermitian_part(H) +
                          0.1 * Matrix::Identity(n, n);
        const Matrix S = Hp + Complex(0, 1) * hermitian_part(K);
        const SectorBound sb = sector_bound(S);
        double max_tan = 0.0;
        for (const Complex z : numrange_boundary(S, 2000).points)
            if (z.real() > 0.0)
                max_tan = std::max(max_tan, std::abs(z.imag()) / z.real());
        const double rel = std::abs(max_tan - sb.k) / std::max(sb.k, 1e-12);
        suite.record(sb.k == 0.0 ? max_tan <= 1e-8 : rel <= 1e-4,
                     1e-4 - rel, "sector bound matches boundary sweep");
        // Witness reproduces k.
        if (std::isfinite(sb.k) && sb.k > 1e-10) {
            const Complex zw = sb.witness.dot(S * sb.witness);
            const double wrel = std::abs(std::abs(zw.imag()) / zw.real() - sb.k) / sb.k;
            suite.record(wrel <= 1e-6, 1e-6 - wrel, "sector witness validity");
        }

        // Compression inclusion: W(t^e) inside the hull of W(J(L^2 - mu)).
        {
            const RandomSpec spec = random_annular_spec(rng, rng(), 0.0);
            const RandomInstance ri = gen_random(spec);
            const Involution J = involution_from_split(ri.A, ri.split);
            const Matrix L = ri.A + ri.V;
            const auto [mu_lo, mu_hi] = ri.split.mu_window(spectral_norm(ri.V));
            if (mu_lo < mu_hi) {
                const double mu = 0.5 * (mu_lo + mu_hi) + ri.split.center * 0.0;
                // Work in centered coordinates so mu_window applies literally.
                const Matrix Lc = L - ri.split.center * Matrix::Identity(L.rows(), L.cols());
                const Matrix Ac = ri.A - ri.split.center * Matrix::Identity(L.rows(), L.cols());
                const Matrix Tmu = J.J * (Lc * Lc - mu * Matrix::Identity(L.rows(), L.cols()));
                const NumRangeBoundary big = numrange_boundary(Tmu, 720);
                const double big_scale = std::max(spectral_norm(Tmu), 1.0);
                bool included = true;
                for (int rep = 0; rep < 4; ++rep) {
                    const Vector em = J.P_minus * random_unit_vector(static_cast<int>(L.rows()), rng);
                    const Vector ep = J.P_plus * random_unit_vector(static_cast<int>(L.rows()), rng);
                    if (em.norm() < 1e-8 || ep.norm() < 1e-8) continue;
                    const Matrix t2 = pair_compression(Ac, ri.V, J, mu,
                                                       Vector(em / em.norm()),
                                                       Vector(ep / ep.norm()));
                    for (int p = 0; p < 64; ++p) {
                        const Vector x = random_unit_vector(2, rng);
                        if (!big.contains(x.dot(t2 * x), 1e-8 * big_scale))
                            included = false;
                    }
                }
                suite.record(included, included ? 0.0 : -1.0,
                             "compression range inside W(J(L^2 - mu))");
            }
        }

        // Acuteness vs distance from -1 to the numerical range of J'J.
        {
            auto [J, Jp] = random_acute_pair(std::max(n, 2), rng);
            const AcuteReport ar = acute_case(J, Jp);
            const Matrix JJ = Jp.J * J.J;
            double dist = kInf;
            for (const Complex z : numrange_boundary(JJ, 360).points)
                dist = std::min(dist, std::abs(z + 1.0));
            const bool hull_says = dist > tols().acute;
            suite.record(ar.acute == hull_says, ar.acute == hull_says ? 0.0 : -1.0,
                         "acute criterion consistent with -1 not in W(J'J)");
        }
    }
    return suite;
}

SuiteResult run_scenarios_suite(const Options& opt) {
    SuiteResult suite{"scenarios"};
    auto rng = stream(opt.seed, 0x736365);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < opt.trials; ++trial) {
        // Example-5.5 family: closed-form angle vs computed direct rotation.
        {
            const double b = 1.0;
            const double a = 0.9 * b * unit(rng);
            const double cap = std::sqrt(b * b - a * a);
            const double v1 = 0.49 * cap * unit(rng);
            const double v2 = 0.49 * cap * unit(rng);
            TsharpParams p{a, b, v1, v2};
            if (opt.inject_failure && trial == 0) p.v1 = 0.0;
            const TsharpInstance inst = gen_tsharp(p);
            const Matrix L = inst.A + inst.V;
            const EigenSystem ls = eigh(L);
            Matrix Jp_mat = Matrix::Zero(4, 4);
            for (Eigen::Index i = 0; i < 4; ++i) {
                const double sign = std::abs(ls.eigenvalues(i)) < b ? -1.0 : 1.0;
                Jp_mat += sign * ls.eigenvectors.col(i) * ls.eigenvectors.col(i).adjoint();
            }
            const Involution Jp = Involution::from_matrix(hermitian_part(Jp_mat));
            const DirectRotation rot = direct_rotation(inst.J, Jp);
            double err = std::abs(rot.theta - inst.theta_closed_form);
            if (opt.inject_failure && trial == 0) err += 1.0;
            suite.record(err <= 1e-10, 1e-10 - err, "closed-form tsharp angle");
        }
        // Parity family: exact spectrum of J'J, exact angle, kappa at mu = 0.
        {
            KsharpGrid g;
            g.a = 0.3 * unit(rng);
            g.coupling = 0.1 + 3.9 * unit(rng);
            g.N = pick_dim(rng, 1, 16);
            g.t_max = g.a + 0.5 + unit(rng);
            const KsharpInstance inst = gen_ksharp(g);
            const Matrix L = inst.A + inst.V;
            const Involution Jp = sign_involution(L, 0.0);
            const Matrix JJ = Jp.J * inst.J.J;

            Eigen::ComplexEigenSolver<Matrix> es(JJ);
            double spec_err = 0.0;
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                const Complex z = es.eigenvalues()(i);
                spec_err = std::max(spec_err,
                                    std::min(std::abs(z - inst.JJprime_spectrum[0]),
                                             std::abs(z - inst.JJprime_spectrum[1])));
            }
            suite.record(spec_err <= 1e-12, 1e-12 - spec_err, "spec(J'J) exactness");

            const DirectRotation rot = direct_rotation(inst.J, Jp);
            const double terr = std::abs(rot.theta - inst.theta_exact);
            suite.record(terr <= 1e-12, 1e-12 - terr, "theta = (1/2) arctan coupling");

            const double k0 = kappa_mu(inst.A, inst.V, inst.J, 0.0);
            const double kerr = std::abs(k0 - g.coupling);
            suite.record(kerr <= 1e-10, 1e-10 - kerr, "kappa at mu=0 equals coupling");

            if (g.a > 1e-3) {
                // The infimum over |mu| < a sits at mu = 0.
                double grid_min = kInf;
                for (int i = -20; i <= 20; ++i)
                    grid_min = std::min(grid_min,
                                        kappa_mu(inst.A, inst.V, inst.J, 0.95 * g.a * i / 20.0));
                suite.record(grid_min >= k0 - 1e-9, grid_min - k0 + 1e-9,
                             "mu-infimum attained at mu = 0");
            }
        }
        // Generators validate their own declared preconditions.
        {
            RandomSpec spec = random_subordinated_spec(rng, rng());
            const RandomInstance r1 = gen_random(spec);
            const RandomInstance r2 = gen_random(spec);
            suite.record(r1.A == r2.A && r1.V == r2.V, 0.0, "generator determinism");
            const Involution J = involution_from_split(r1.A, r1.split);
            suite.record(anticommutes(r1.V, J), 0.0, "generated V anticommutes with J");
            const EigenSystem as = eigh(r1.A);
            double dist = kInf;
            for (Eigen::Index i = 0; i < as.eigenvalues.size(); ++i)
                for (Eigen::Index j = 0; j < as.eigenvalues.size(); ++j) {
                    const double li = as.eigenvalues(i), lj = as.eigenvalues(j);
                    if (r1.split.in_minus(li, 1e-9) && r1.split.in_plus(lj, 1e-9))
                        dist = std::min(dist, std::abs(li - lj));
                }
            const double derr = std::abs(dist - spec.d);
            suite.record(derr <= 1e-10, 1e-10 - derr, "distance d achieved exactly");
            if (spec.v_norm > 0.0) {
                const double verr = std::abs(spectral_norm(r1.V) - spec.v_norm);
                suite.record(verr <= 1e-10 * spec.v_norm, 1e-10 * spec.v_norm - verr,
                             "||V|| realized exactly");
            }
        }
    }
    return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which, const Options& opt) {
    std::vector<SuiteResult> results;
    const bool all = which == "all";
    if (all || which == "rotation") results.push_back(run_rotation_suite(opt));
    if (all || which == "relemma") results.push_back(run_relemma_suite(opt));
    if (all || which == "bounds") results.push_back(run_bounds_suite(opt));
    if (all || which == "numrange") results.push_back(run_numrange_suite(opt));
    if (all || which == "scenarios") results.push_back(run_scenarios_suite(opt));
    if (results.empty())
        throw SubspaceError("unknown verification suite: " + which);
    return results;
}

}  // namespace subspace::verify
