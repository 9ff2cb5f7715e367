#include <doctest.h>

#include <cmath>
#include <random>

#include "subspace/numrange.hpp"
#include "subspace/scenarios.hpp"

using namespace subspace;

namespace {

/// Monte-Carlo Rayleigh samples; the independent oracle for boundary sweeps.
std::vector<Complex> rayleigh_samples(const Matrix& T, int count,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> out;
    out.reserve(count);
    const Eigen::Index n = T.rows();
    for (int s = 0; s < count; ++s) {
        Vector x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex(normal(rng), normal(rng));
        x /= x.norm();
        out.push_back(x.dot(T * x));
    }
    return out;
}

}  // namespace

TEST_CASE("numerical range of a real diagonal matrix is its spectral hull") {
    Matrix T = Matrix::Zero(2, 2);
    T(1, 1) = 1.0;
    const NumRangeBoundary boundary = numrange_boundary(T, 64);
    for (const Complex z : boundary.points) {
        CHECK(std::abs(z.imag()) < 1e-12);
        CHECK(z.real() >= -1e-12);
        CHECK(z.real() <= 1.0 + 1e-12);
    }
    for (const Complex z : rayleigh_samples(T, 200, 5))
        CHECK(boundary.contains(z, 1e-8));
}

TEST_CASE("numerical range of the nilpotent Jordan block is a disc") {
    Matrix T = Matrix::Zero(2, 2);
    T(0, 1) = 1.0;
    const NumRangeBoundary boundary = numrange_boundary(T, 720);
    for (const Complex z : boundary.points)
        CHECK(std::abs(std::abs(z) - 0.5) < 1e-9);
    for (const Complex z : rayleigh_samples(T, 500, 6))
        CHECK(boundary.contains(z, 1e-8));
}

TEST_CASE("numerical range of diag(1, i) is the connecting segment") {
    Matrix T = Matrix::Zero(2, 2);
    T(0, 0) = 1.0;
    T(1, 1) = Complex(0.0, 1.0);
    const NumRangeBoundary boundary = numrange_boundary(T, 720);
    // Segment {(1-t) + t i}: distance of each point from the line re+im=1.
    for (const Complex z : boundary.points) {
        CHECK(std::abs(z.real() + z.imag() - 1.0) < 1e-9);
        CHECK(z.real() >= -1e-9);
        CHECK(z.imag() >= -1e-9);
    }
    for (const Complex z : rayleigh_samples(T, 500, 7))
        CHECK(boundary.contains(z, 1e-8));
}

TEST_CASE("sector bound of simple matrices") {
    Matrix D = Matrix::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 3.0;
    CHECK(sector_bound(D).k == doctest::Approx(0.0));

    Matrix S(2, 2);
    S << 1, -1, 1, 1;
    const SectorBound sb = sector_bound(S);
    CHECK(sb.k == doctest::Approx(1.0).epsilon(1e-12));
    const Complex zw = sb.witness.dot(S * sb.witness);
    CHECK(std::abs(zw.imag()) / zw.real() == doctest::Approx(sb.k).epsilon(1e-6));
}

TEST_CASE("sector bound of the 2x2 perturbed sign model") {
    // J (L - mu) with A = diag(-1, 1), V the unit antidiagonal, mu = 0.
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = -1.0;
    A(1, 1) = 1.0;
    Matrix V = Matrix::Zero(2, 2);
    V(0, 1) = V(1, 0) = 1.0;
    Matrix J = Matrix::Zero(2, 2);
    J(0, 0) = -1.0;
    J(1, 1) = 1.0;
    const SectorBound sb = sector_bound(Matrix(J * (A + V)));
    CHECK(sb.k == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sector bound diverges when the Hermitian part has a coupled kernel") {
    Matrix S = Matrix::Zero(2, 2);
    S(1, 1) = 1.0;
    S(0, 1) += Complex(0, 1);
    S(1, 0) += Complex(0, 1);
    const SectorBound sb = sector_bound(S);
    CHECK(std::isinf(sb.k));
    CHECK_THROWS_AS(sector_bound(Matrix(-Matrix::Identity(2, 2))), NotAccretive);
}

TEST_CASE("two by two ellipse parameters") {
    const Ellipse2x2 degenerate = ellipse_2x2(1.0, 3.0, 0.0);
    CHECK(degenerate.k == doctest::Approx(0.0));
    CHECK(degenerate.foci[0].real() == doctest::Approx(1.0));
    CHECK(degenerate.foci[1].real() == doctest::Approx(3.0));
    CHECK(degenerate.axes[1] == doctest::Approx(0.0).epsilon(1e-12));

    const Ellipse2x2 unit = ellipse_2x2(1.0, 1.0, 1.0);
    CHECK(unit.k == doctest::Approx(1.0));
    CHECK(unit.foci[0] == Complex(1.0, -1.0));
    CHECK(unit.foci[1] == Complex(1.0, 1.0));

    const Ellipse2x2 mixed = ellipse_2x2(1.0, 4.0, Complex(0.0, 2.0));
    CHECK(mixed.k == doctest::Approx(1.0));
    CHECK_THROWS_AS(ellipse_2x2(0.0, 1.0, 1.0), NonPositiveDiagonal);
}

TEST_CASE("ellipse sector bound agrees with the boundary sweep") {
    Matrix M(2, 2);
    M << 1.0, Complex(0.0, 2.0), Complex(0.0, 2.0), 4.0;
    double max_tan = 0.0;
    for (const Complex z : numrange_boundary(M, 2000).points)
        if (z.real() > 0)
            max_tan = std::max(max_tan, std::abs(z.imag()) / z.real());
    CHECK(max_tan == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("pair compression with V = 0 is diagonal") {
    const TsharpInstance inst = gen_tsharp({0.3, 1.0, 0.0, 0.0});
    const double mu = 0.5;
    const Vector em = Vector::Unit(4, 1);  // eigenvector at -a, in Ran P_minus
    const Vector ep = Vector::Unit(4, 0);  // eigenvector at -b, in Ran P_plus
    const Matrix t = pair_compression(inst.A, inst.V, inst.J, mu, em, ep);
    CHECK(std::abs(t(0, 1)) < 1e-14);
    CHECK(std::abs(t(1, 0)) < 1e-14);
    CHECK(t(0, 0).real() == doctest::Approx(mu - 0.09).epsilon(1e-12));
    CHECK(t(1, 1).real() == doctest::Approx(1.0 - mu).epsilon(1e-12));
}

TEST_CASE("pair compression matches the sesquilinear form directly") {
    const TsharpInstance inst = gen_tsharp({0.3, 1.0, 0.2, 0.1});
    const Matrix L = inst.A + inst.V;
    const double mu = 0.4;
    const Vector basis[4] = {Vector::Unit(4, 1), Vector::Unit(4, 2),
                             Vector::Unit(4, 0), Vector::Unit(4, 3)};
    for (int m = 0; m < 2; ++m)
        for (int p = 2; p < 4; ++p) {
            const Vector em = basis[m], ep = basis[p];
            const Matrix t = pair_compression(inst.A, inst.V, inst.J, mu, em, ep);
            const Vector e[2] = {em, ep};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const Complex direct = (L * (inst.J.J * e[i])).dot(L * e[j]) -
                                           mu * e[i].dot(inst.J.J * e[j]);
                    CHECK(std::abs(t(i, j) - direct) < 1e-12);
                }
        }
}

TEST_CASE("pair compression validates its vectors") {
    const TsharpInstance inst = gen_tsharp({0.3, 1.0, 0.2, 0.1});
    CHECK_THROWS_AS(pair_compression(inst.A, inst.V, inst.J, 0.4,
                                     Vector::Unit(4, 0), Vector::Unit(4, 1)),
                    NotInSubspace);
}

TEST_CASE("pair compression range sits inside the big numerical range") {
    const TsharpInstance inst = gen_tsharp({0.3, 1.0, 0.2, 0.1});
    const Matrix L = inst.A + inst.V;
    const double mu = 0.5;  // inside (a^2 + ||V||^2, b^2) = (0.18, 1)
    const Matrix Tmu =
        inst.J.J * (L * L - mu * Matrix::Identity(4, 4));
    const NumRangeBoundary big = numrange_boundary(Tmu, 720);
    const double scale = spectral_norm(Tmu);
    const Matrix t = pair_compression(inst.A, inst.V, inst.J, mu,
                                      Vector::Unit(4, 1), Vector::Unit(4, 0));
    for (const Complex z : rayleigh_samples(t, 400, 8))
        CHECK(big.contains(z, 1e-8 * scale));
}
