#pragma once

#include <string>

#include "hcent/errors.hpp"

namespace hcent::linalg {

template <class F>
Matrix spectral_apply(const Matrix& m, F&& f) {
    require_dense_dim(m.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) {
        throw DefinitenessError("symmetric eigendecomposition failed");
    }
    const Vector& w = es.eigenvalues();
    if (w.size() > 0 && w.minCoeff() <= kEigenFloor) {
        throw DefinitenessError("matrix is not positive definite (smallest eigenvalue " +
                                std::to_string(w.minCoeff()) + ")");
    }
    const Vector fw = w.unaryExpr(f);
    return es.eigenvectors() * fw.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace hcent::linalg
