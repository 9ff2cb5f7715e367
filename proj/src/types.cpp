#include "subspace/types.hpp"

#include <Eigen/SVD>

namespace subspace {

Tolerances& tols() {
    static Tolerances t;
    return t;
}

double spectral_norm(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()(0);
}

double smallest_singular_value(const Matrix& M) {
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

Matrix hermitian_part(const Matrix& M) { return 0.5 * (M + M.adjoint()); }

Matrix skew_part_over_i(const Matrix& M) {
    return (M - M.adjoint()) / Complex(0.0, 2.0);
}

bool is_hermitian(const Matrix& M, double rel_tol) {
    if (M.rows() != M.cols()) return false;
    const double scale = M.norm();
    return (M - M.adjoint()).norm() <= rel_tol * std::max(scale, 1e-300) ||
           M.isZero(0.0);
}

void require_square(const Matrix& M, const std::string& what) {
    if (M.rows() != M.cols() || M.rows() < 1)
        throw DimensionMismatch(what + ": expected a square matrix, got " +
                                std::to_string(M.rows()) + "x" +
                                std::to_string(M.cols()));
}

}  // namespace subspace
