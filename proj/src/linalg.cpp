#include "hcent/linalg.hpp"

#include <cmath>
#include <string>

#include "hcent/errors.hpp"

namespace hcent::linalg {

void require_dense_dim(long n) {
    if (n > kMaxDenseDim) {
        throw SizeError("dense dimension " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kMaxDenseDim));
    }
}

void require_symmetric(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw ArgumentError("matrix is not square");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
        throw ArgumentError("matrix is not symmetric");
    }
}

Matrix sym_sqrt(const Matrix& m) {
    return spectral_apply(m, [](double x) { return std::sqrt(x); });
}

Matrix sym_inverse_sqrt(const Matrix& m) {
    return spectral_apply(m, [](double x) { return 1.0 / std::sqrt(x); });
}

Matrix sym_inverse(const Matrix& m) {
    return spectral_apply(m, [](double x) { return 1.0 / x; });
}

Vector sym_eigenvalues(const Matrix& m) {
    require_dense_dim(m.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Matrix submatrix(const Matrix& m, std::span<const int> rows, std::span<const int> cols) {
    Matrix out(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(static_cast<long>(i), static_cast<long>(j)) = m(rows[i], cols[j]);
        }
    }
    return out;
}

}  // namespace hcent::linalg
