#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "subspace/bounds.hpp"
#include "subspace/numrange.hpp"
#include "subspace/scenarios.hpp"

using namespace subspace;

namespace {

constexpr double kPi = std::numbers::pi;

struct TwoByTwo {
    Matrix A, V;
    Involution J;
    SpectralSplit split;
};

/// A = diag(-1, 1), V = v * antidiagonal, subordinated at 0.
TwoByTwo two_by_two(double v) {
    TwoByTwo t;
    t.A = Matrix::Zero(2, 2);
    t.A(0, 0) = -1.0;
    t.A(1, 1) = 1.0;
    t.V = Matrix::Zero(2, 2);
    t.V(0, 1) = t.V(1, 0) = v;
    t.split = make_split(Disposition::Subordinated, {{-1, -1}}, {{1, 1}});
    t.J = involution_from_split(t.A, t.split);
    return t;
}

SpectralSplit symmetric_annular() {
    return make_split(Disposition::Annular, {{-1, 1}}, {{-3, -2}, {2, 3}});
}

}  // namespace

TEST_CASE("kappa at a point for the 2x2 model") {
    const TwoByTwo t = two_by_two(1.0);
    CHECK(kappa_mu(t.A, t.V, t.J, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kappa_mu(t.A, Matrix(Matrix::Zero(2, 2)), t.J, 0.3) ==
          doctest::Approx(0.0));
    for (double v : {0.3, 0.8})
        for (double mu : {-0.7, 0.0, 0.4}) {
            const TwoByTwo s = two_by_two(v);
            CHECK(kappa_mu(s.A, s.V, s.J, mu) ==
                  doctest::Approx(v / std::sqrt(1.0 - mu * mu)).epsilon(1e-12));
        }
    CHECK_THROWS_AS(kappa_mu(t.A, t.V, t.J, 1.0), KernelNotTrivial);
    CHECK_THROWS_AS(kappa_mu(t.A, t.A, t.J, 0.0), NotOffDiagonal);
}

TEST_CASE("kappa at a point equals the sector bound of J(L - mu)") {
    const TwoByTwo t = two_by_two(0.6);
    for (double mu : {-0.5, 0.2}) {
        const Matrix S =
            t.J.J * (t.A + t.V - mu * Matrix::Identity(2, 2));
        CHECK(kappa_mu(t.A, t.V, t.J, mu) ==
              doctest::Approx(sector_bound(S).k).epsilon(1e-10));
    }
}

TEST_CASE("kappa infimum of the 2x2 model sits at the midpoint") {
    const TwoByTwo t = two_by_two(1.0);
    const KappaInf ki = kappa_inf(t.A, t.V, t.split);
    CHECK(ki.kappa == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ki.mu_star) < 1e-4);

    const TwoByTwo z = two_by_two(0.0);
    CHECK(kappa_inf(z.A, z.V, z.split).kappa == doctest::Approx(0.0));
}

TEST_CASE("kappa infimum dominates no single evaluation point") {
    RandomSpec spec;
    spec.n_minus = 3;
    spec.n_plus = 4;
    spec.d = 0.8;
    spec.v_norm = 0.5;
    spec.seed = 21;
    const RandomInstance ri = gen_random(spec);
    const Involution J = involution_from_split(ri.A, ri.split);
    const KappaInf ki = kappa_inf(ri.A, ri.V, ri.split);
    const double mid = 0.5 * (ri.split.sup_minus + ri.split.inf_plus);
    CHECK(ki.kappa <= kappa_mu(ri.A, ri.V, J, mid) + 1e-12);
}

TEST_CASE("closed form bounds") {
    CHECK(bound_estin(0.0) == doctest::Approx(0.0));
    CHECK(bound_estin(kInf) == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-12));
    CHECK(bound_estin(1.0) == doctest::Approx(std::sin(kPi / 8)).epsilon(1e-12));
    CHECK_THROWS_AS(bound_estin(-0.1), NegativeKappa);

    CHECK(bound_dk(0.0, 2.0) == doctest::Approx(0.0));
    CHECK(bound_dk(1.0, 2.0) == doctest::Approx(std::sin(kPi / 8)).epsilon(1e-12));
    CHECK(bound_dk(1e6, 1.0) < std::numbers::sqrt2 / 2);
    CHECK_THROWS_AS(bound_dk(1.0, 0.0), NonPositiveD);

    CHECK(bound_apriori_tan(0.0, 1.0) == doctest::Approx(0.0));
    CHECK(bound_apriori_tan(0.6, 1.0) ==
          doctest::Approx(0.6 / std::sqrt(1.36)).epsilon(1e-12));
    CHECK_THROWS_AS(bound_apriori_tan(1.0, 1.0), ConditionViolated);
}

TEST_CASE("piecewise kappa and its branch threshold") {
    CHECK(kappa_piecewise(0.0, 1.0, 4.0) == doctest::Approx(0.0));
    // d=1, |Delta|=4: threshold at v^2 = (d/2)(|Delta|/2 - d) = 0.5, where both
    // branches give 2v/d = sqrt(2).
    const double v = std::sqrt(0.5);
    CHECK(kappa_piecewise(v, 1.0, 4.0) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    const double second =
        (v * 2.0 + std::sqrt(3.0 * (1.0 + v * v))) / (3.0 - v * v);
    CHECK(kappa_piecewise(v, 1.0, 4.0) == doctest::Approx(second).epsilon(1e-12));
    CHECK_THROWS_AS(kappa_piecewise(std::sqrt(3.0), 1.0, 4.0), ConditionViolated);
}

TEST_CASE("varkappa closed form") {
    const double b = 1.5, v = 0.4;
    for (double mu : {0.2, 0.9, 2.0}) {
        if (!(mu > v * v && mu < b * b)) continue;
        // a = 0 kills the first branch for every mu.
        CHECK(varkappa_mu(0.0, b, v, mu) ==
              doctest::Approx(b * v / std::sqrt((mu - v * v) * (b * b - mu)))
                  .epsilon(1e-12));
    }
    CHECK(varkappa_mu(0.3, 1.0, 0.0, 0.5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(varkappa_mu(0.3, 1.0, 0.4, 0.2), MuOutOfWindow);
}

TEST_CASE("varkappa grid minimum reproduces the piecewise formula") {
    for (const auto& [a, b, v] : {std::tuple{0.0, 1.0, 0.4},
                                  std::tuple{0.5, 1.5, 0.6},
                                  std::tuple{0.2, 2.0, 1.1}}) {
        const double d = b - a, gap = 2.0 * b;
        REQUIRE(v * v < d * (gap - d));
        const double lo = a * a + v * v, hi = b * b;
        double grid_min = kInf;
        for (int i = 1; i < 10000; ++i)
            grid_min = std::min(grid_min,
                                varkappa_mu(a, b, v, lo + (hi - lo) * i / 10000));
        CHECK(grid_min == doctest::Approx(kappa_piecewise(v, d, gap)).epsilon(1e-6));
    }
}

TEST_CASE("delta enclosure values") {
    const SpectralSplit split = symmetric_annular();
    const DeltaEnclosure zero = delta_enclosure(0.0, split);
    CHECK(zero.delta_minus == doctest::Approx(0.0));
    CHECK(zero.delta_plus == doctest::Approx(0.0));

    const DeltaEnclosure one = delta_enclosure(1.0, split);
    const double expected = std::tan(0.5 * std::atan(2.0 / 3.0));
    CHECK(one.delta_minus == doctest::Approx(expected).epsilon(1e-12));
    CHECK(one.delta_plus == doctest::Approx(expected).epsilon(1e-12));

    const auto sub = make_split(Disposition::Subordinated, {{0, 0}}, {{1, 1}});
    CHECK_THROWS_AS(delta_enclosure(0.5, sub), WrongDisposition);
}

TEST_CASE("perturbed eigenvalues honor the enclosure intervals") {
    RandomSpec spec;
    spec.n_minus = 3;
    spec.n_plus = 4;
    spec.disposition = Disposition::Annular;
    spec.d = 1.0;
    spec.gap_len = 3.0;
    spec.v_norm = 0.9;
    spec.seed = 33;
    const RandomInstance ri = gen_random(spec);
    const DeltaEnclosure de = delta_enclosure(spec.v_norm, ri.split);
    const EigenSystem ls = eigh(Matrix(ri.A + ri.V));
    for (Eigen::Index i = 0; i < ls.eigenvalues.size(); ++i) {
        const double lam = ls.eigenvalues(i);
        const bool inner = lam >= ri.split.inf_minus - de.delta_minus - 1e-9 &&
                           lam <= ri.split.sup_minus + de.delta_plus + 1e-9;
        const bool outer =
            lam <= ri.split.alpha + 1e-9 || lam >= ri.split.beta - 1e-9;
        CHECK((inner || outer));
    }
}

TEST_CASE("wrong involution floor") {
    CHECK(lower_bound_wrong_involution(0.0) == doctest::Approx(kPi / 2));
    CHECK(lower_bound_wrong_involution(kInf) == doctest::Approx(kPi / 4));
    CHECK(lower_bound_wrong_involution(1.0) ==
          doctest::Approx(3.0 * kPi / 8).epsilon(1e-12));
}

TEST_CASE("analyze with zero perturbation") {
    const TwoByTwo t = two_by_two(0.0);
    const BoundReport r = analyze(t.A, t.V, t.split);
    CHECK(*r.actual_gap == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*r.sharpness_ratio == doctest::Approx(0.0));
    CHECK(*r.bound_estin >= 0.0);
    CHECK(*r.bound_dk >= 0.0);
}

TEST_CASE("analyze reproduces the 4x4 sharpness point") {
    const TsharpInstance inst = gen_tsharp({0.0, 1.0, 0.25, 0.25});
    const BoundReport r = analyze(inst.A, inst.V, inst.split);
    CHECK(*r.theta_U == doctest::Approx(std::atan(0.5)).epsilon(1e-11));
    CHECK(*r.actual_gap ==
          doctest::Approx(std::sin(std::atan(0.5))).epsilon(1e-11));
    CHECK(*r.bound_apriori ==
          doctest::Approx(std::sin(std::atan(0.5))).epsilon(1e-11));
    CHECK(std::abs(*r.sharpness_ratio - 1.0) < 1e-9);
}

TEST_CASE("analyze dominance on the 2x2 subordinated model") {
    // v = 1, d = 2: A = diag(0, 2).
    Matrix A = Matrix::Zero(2, 2);
    A(1, 1) = 2.0;
    Matrix V = Matrix::Zero(2, 2);
    V(0, 1) = V(1, 0) = 1.0;
    const auto split = make_split(Disposition::Subordinated, {{0, 0}}, {{2, 2}});
    const BoundReport r = analyze(A, V, split);
    CHECK(*r.bound_dk == doctest::Approx(std::sin(kPi / 8)).epsilon(1e-12));
    CHECK(*r.actual_gap <= *r.bound_dk + 1e-12);
    CHECK(*r.bound_estin <= *r.bound_dk + 1e-12);
}

TEST_CASE("bound report ranges") {
    const TwoByTwo t = two_by_two(0.7);
    const BoundReport r = analyze(t.A, t.V, t.split);
    CHECK(*r.bound_estin <= std::numbers::sqrt2 / 2 + 1e-12);
    CHECK(*r.bound_dk <= std::numbers::sqrt2 / 2 + 1e-12);
    CHECK(r.conditions.at("general_half_d") == (0.7 < 0.5 * t.split.d));
    CHECK(r.conditions.at("apriori_tan"));
}
