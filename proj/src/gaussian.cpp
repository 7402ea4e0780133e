#include "hcent/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "hcent/errors.hpp"

namespace hcent {

namespace {

double log_base(double x, LogBase base) {
    return base == LogBase::two ? std::log2(x) : std::log(x);
}

// x log x with the 0 log 0 = 0 convention.
double xlogx(double x, LogBase base) { return x > 0.0 ? x * log_base(x, base) : 0.0; }

std::vector<int> validated_subset(int n, std::span<const int> subset) {
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    if (s.empty() || static_cast<int>(s.size()) >= n) {
        throw ArgumentError("subset must be non-empty and proper");
    }
    if (s.front() < 0 || s.back() >= n) throw ArgumentError("subset index out of range");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw ArgumentError("duplicate index in subset");
    }
    return s;
}

}  // namespace

void ModeSpectrum::add(double gamma, std::int64_t degeneracy) {
    gamma = std::abs(gamma);
    modes.push_back({gamma, nu_from_gamma(gamma), degeneracy});
}

std::int64_t ModeSpectrum::mode_count() const {
    return std::accumulate(modes.begin(), modes.end(), std::int64_t{0},
                           [](std::int64_t acc, const Mode& m) { return acc + m.degeneracy; });
}

double ModeSpectrum::total_entropy() const {
    double s = 0.0;
    for (const auto& m : modes) {
        if (m.gamma < kZeroGamma) continue;
        s += static_cast<double>(m.degeneracy) * entropy_from_nu(m.nu, log_base);
    }
    return s;
}

std::vector<double> ModeSpectrum::expanded_gammas() const {
    std::vector<double> out;
    for (const auto& m : modes) out.insert(out.end(), static_cast<std::size_t>(m.degeneracy), m.gamma);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double nu_from_gamma(double gamma) {
    const double a = std::abs(gamma);
    if (!(a <= 1.0 - 1e-12)) {
        throw SingularityError("gamma = " + std::to_string(gamma) +
                               " too close to 1: the cut is not normalizable");
    }
    return 1.0 / std::sqrt(1.0 - a * a);
}

double entropy_from_nu(double nu, LogBase base) {
    if (!(nu >= 1.0 - 1e-10)) {
        throw DomainError("symplectic eigenvalue " + std::to_string(nu) + " below 1");
    }
    if (nu <= 1.0) return 0.0;
    return xlogx((nu + 1.0) / 2.0, base) - xlogx((nu - 1.0) / 2.0, base);
}

double SchmidtSpectrum::total_probability() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

double SchmidtSpectrum::mean_occupation() const {
    double m = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) m += static_cast<double>(n) * probabilities[n];
    return m;
}

SchmidtSpectrum schmidt_spectrum(double nu, int n_max) {
    if (!(nu >= 1.0 - 1e-10)) throw DomainError("schmidt_spectrum: nu below 1");
    if (n_max < 1) throw ArgumentError("schmidt_spectrum: n_max must be positive");
    nu = std::max(nu, 1.0);
    const double ratio = (nu - 1.0) / (nu + 1.0);
    const double p0 = 2.0 / (nu + 1.0);

    SchmidtSpectrum s;
    s.n_max = n_max;
    s.lambdas.reserve(static_cast<std::size_t>(n_max) + 1);
    s.probabilities.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double p = p0 * std::pow(ratio, n);
        s.probabilities.push_back(p);
        s.lambdas.push_back(std::sqrt(p));
    }
    s.tail_mass = std::pow(ratio, n_max + 1);
    return s;
}

Matrix schur_eliminate(const Matrix& v, std::span<const int> block) {
    linalg::require_symmetric(v);
    const int n = static_cast<int>(v.rows());
    const std::vector<int> b = validated_subset(n, block);
    std::vector<int> c;
    for (int i = 0, j = 0; i < n; ++i) {
        if (j < static_cast<int>(b.size()) && b[static_cast<std::size_t>(j)] == i) {
            ++j;
        } else {
            c.push_back(i);
        }
    }

    const Matrix vbb = linalg::submatrix(v, b, b);
    const Matrix vcb = linalg::submatrix(v, c, b);
    const Matrix vcc = linalg::submatrix(v, c, c);
    Eigen::FullPivLU<Matrix> lu(vbb);
    if (!lu.isInvertible()) throw EliminationError("eliminated block is singular");
    const Matrix reduced = vcc - vcb * lu.solve(vcb.transpose());

    Matrix out = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            out(c[i], c[j]) = reduced(static_cast<long>(i), static_cast<long>(j));
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out(b[i], b[j]) = vbb(static_cast<long>(i), static_cast<long>(j));
        }
    }
    return out;
}

ModeSpectrum gamma_spectrum(const Matrix& v, const Bipartition& cut, LogBase base) {
    linalg::require_symmetric(v);
    if (cut.vertex_count() != v.rows()) {
        throw ArgumentError("bipartition covers " + std::to_string(cut.vertex_count()) +
                            " vertices, matrix has " + std::to_string(v.rows()));
    }
    const Matrix whiten_a = linalg::sym_inverse_sqrt(linalg::submatrix(v, cut.side_a(), cut.side_a()));
    const Matrix whiten_b = linalg::sym_inverse_sqrt(linalg::submatrix(v, cut.side_b(), cut.side_b()));
    const Matrix coupling = whiten_a * linalg::submatrix(v, cut.side_a(), cut.side_b()) * whiten_b;
    Eigen::BDCSVD<Matrix> svd(coupling);
    const Vector sigma = svd.singularValues();

    ModeSpectrum spectrum;
    spectrum.log_base = base;
    for (double s : sigma) {
        if (s >= 1.0 - 1e-12) {
            throw DefinitenessError("whitened coupling singular value " + std::to_string(s) +
                                    " >= 1: matrix is not positive definite");
        }
        spectrum.add(s);
    }
    return spectrum;
}

double entropy_of_bipartition(const Matrix& v, const Bipartition& cut, LogBase base) {
    return gamma_spectrum(v, cut, base).total_entropy();
}

GaussianGroundState::GaussianGroundState(const Matrix& kernel) : kernel_(kernel) {
    linalg::require_symmetric(kernel_);
    inverse_ = linalg::sym_inverse(kernel_);
}

Vector GaussianGroundState::symplectic_eigenvalues(std::span<const int> subset) const {
    const std::vector<int> s = validated_subset(dim(), subset);
    // 4 X_A P_A = (K^{-1})_AA K_AA; with K_AA = L L^T it is similar to L^T (K^{-1})_AA L.
    const Matrix p = linalg::submatrix(kernel_, s, s);
    const Matrix x = linalg::submatrix(inverse_, s, s);
    Eigen::LLT<Matrix> llt(p);
    if (llt.info() != Eigen::Success) throw DefinitenessError("kernel sub-block not positive definite");
    const Matrix l = llt.matrixL();
    const Matrix sym = l.transpose() * x * l;
    Vector w = linalg::sym_eigenvalues(0.5 * (sym + sym.transpose()));
    for (auto& e : w) {
        const double nu = std::sqrt(std::max(e, 0.0));
        if (nu < 1.0 - 1e-10) {
            throw NumericalConsistencyError("symplectic eigenvalue " + std::to_string(nu) +
                                            " below 1");
        }
        e = std::max(nu, 1.0);
    }
    return w;
}

double GaussianGroundState::entropy(std::span<const int> subset, LogBase base) const {
    double s = 0.0;
    for (double nu : symplectic_eigenvalues(subset)) s += entropy_from_nu(nu, base);
    return s;
}

double entropy_oracle_symplectic(const Matrix& v, std::span<const int> subset, LogBase base) {
    return GaussianGroundState(v).entropy(subset, base);
}

Matrix hamiltonian_kernel(const Matrix& v) { return linalg::sym_sqrt(v); }

}  // namespace hcent
