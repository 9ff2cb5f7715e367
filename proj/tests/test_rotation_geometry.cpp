#include <doctest.h>

#include <cmath>
#include <numbers>

#include "subspace/rotation_geometry.hpp"
#include "subspace/scenarios.hpp"

using namespace subspace;

namespace {

constexpr double kPi = std::numbers::pi;

Involution diag_involution(double s0, double s1) {
    Matrix J = Matrix::Zero(2, 2);
    J(0, 0) = s0;
    J(1, 1) = s1;
    return Involution::from_matrix(J);
}

Matrix plane_rotation(double angle) {
    Matrix R(2, 2);
    R << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return R;
}

/// diag(1,-1) conjugated by a plane rotation of the given angle.
Involution rotated_involution(double angle) {
    const Matrix R = plane_rotation(angle);
    return Involution::from_matrix(
        hermitian_part(R * diag_involution(1, -1).J * R.adjoint()));
}

}  // namespace

TEST_CASE("acute case diagnostics") {
    const Involution J = diag_involution(1, -1);
    const AcuteReport same = acute_case(J, J);
    CHECK(same.acute);
    CHECK(same.smin_IplusJJ == doctest::Approx(2.0).epsilon(1e-12));

    const Involution Jneg = diag_involution(-1, 1);
    const AcuteReport flipped = acute_case(J, Jneg);
    CHECK_FALSE(flipped.acute);
    CHECK(flipped.smin_IplusJJ == doctest::Approx(0.0).epsilon(1e-12));

    const AcuteReport rotated = acute_case(J, rotated_involution(kPi / 8));
    CHECK(rotated.acute);
    CHECK(rotated.smin_IplusJJ ==
          doctest::Approx(2.0 * std::cos(kPi / 8)).epsilon(1e-12));
}

TEST_CASE("direct rotation of an unchanged pair is the identity") {
    const Involution J = diag_involution(1, -1);
    const DirectRotation rot = direct_rotation(J, J);
    CHECK(spectral_norm(Matrix(rot.U - Matrix::Identity(2, 2))) < 1e-12);
    CHECK(rot.theta == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("direct rotation of a plane-rotated pair is that plane rotation") {
    const double angle = kPi / 8;
    const Involution J = diag_involution(1, -1);
    const Involution Jp = rotated_involution(angle);
    const DirectRotation rot = direct_rotation(J, Jp);
    CHECK(rot.theta == doctest::Approx(angle).epsilon(1e-12));
    CHECK(spectral_norm(Matrix(rot.U - plane_rotation(angle))) < 1e-10);
    CHECK(spectral_norm(Matrix(rot.operator_angle -
                               angle * Matrix::Identity(2, 2))) < 1e-10);
}

TEST_CASE("direct rotation rejects the non-acute case") {
    const Involution J = diag_involution(1, -1);
    CHECK_THROWS_AS(direct_rotation(J, diag_involution(-1, 1)), NotAcute);
}

TEST_CASE("parity family at unit coupling rotates by pi/8") {
    const KsharpInstance inst = gen_ksharp({0.2, 1.0, 4, 1.5});
    const Involution Jp = sign_involution(Matrix(inst.A + inst.V), 0.0);
    const DirectRotation rot = direct_rotation(inst.J, Jp);
    CHECK(rot.theta == doctest::Approx(kPi / 8).epsilon(1e-12));
}

TEST_CASE("spectral angle on diagonal unitaries") {
    CHECK(spectral_angle(Matrix::Identity(3, 3)) == doctest::Approx(0.0));
    CHECK(spectral_angle(Matrix(-Matrix::Identity(3, 3))) ==
          doctest::Approx(kPi).epsilon(1e-12));
    Matrix W = Matrix::Zero(2, 2);
    W(0, 0) = std::polar(1.0, kPi / 3);
    W(1, 1) = std::polar(1.0, -kPi / 4);
    CHECK(spectral_angle(W) == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK_THROWS_AS(spectral_angle(Matrix(0.5 * Matrix::Identity(2, 2))),
                    NotUnitary);
}

TEST_CASE("projection gap basics and the rotated pair") {
    const Matrix P = diag_involution(1, -1).P_minus;
    CHECK(projection_gap(P, P) == doctest::Approx(0.0));
    const Matrix Q = Matrix::Identity(2, 2) - P;
    CHECK(projection_gap(P, Q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(projection_gap(P, rotated_involution(kPi / 8).P_minus) ==
          doctest::Approx(std::sin(kPi / 8)).epsilon(1e-12));
    CHECK_THROWS_AS(projection_gap(P, Matrix(2.0 * P)), NotAProjection);
}

TEST_CASE("norm identity on a sampled unitary") {
    const Matrix W = random_unitary(12, 77);
    const double theta = spectral_angle(W);
    CHECK(spectral_norm(Matrix(Matrix::Identity(12, 12) - W)) ==
          doctest::Approx(2.0 * std::sin(0.5 * theta)).epsilon(1e-11));
}
