#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hcent {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest matrix dimension any dense routine accepts.
inline constexpr int kMaxDenseDim = 4096;

/// Eigenvalues below this floor make a matrix "not positive definite".
inline constexpr double kEigenFloor = 1e-12;

namespace linalg {

/// Throws SizeError when `n` exceeds kMaxDenseDim.
void require_dense_dim(long n);

/// Throws ArgumentError unless `m` is square and symmetric to `tol` (relative to max |entry|).
void require_symmetric(const Matrix& m, double tol = 1e-12);

/// Applies f to the eigenvalues of symmetric PD `m` (floor-checked) and reassembles.
template <class F>
Matrix spectral_apply(const Matrix& m, F&& f);

Matrix sym_sqrt(const Matrix& m);
Matrix sym_inverse_sqrt(const Matrix& m);
Matrix sym_inverse(const Matrix& m);

/// Ascending eigenvalues of a symmetric matrix.
Vector sym_eigenvalues(const Matrix& m);

/// Rows/columns of `m` selected by `rows` and `cols`.
Matrix submatrix(const Matrix& m, std::span<const int> rows, std::span<const int> cols);

}  // namespace linalg
}  // namespace hcent

#include "hcent/linalg_impl.hpp"
