#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcent/graph.hpp"
#include "hcent/linalg.hpp"

namespace hcent {

enum class LogBase { two, e };

/// Modes with gamma below this carry exactly zero entropy.
inline constexpr double kZeroGamma = 1e-12;

/// One entangled mode pair of a Gaussian bipartition.
struct Mode {
    double gamma = 0.0;  // whitened coupling, in [0, 1)
    double nu = 1.0;     // symplectic eigenvalue (1 - gamma^2)^(-1/2)
    std::int64_t degeneracy = 1;
};

struct ModeSpectrum {
    std::vector<Mode> modes;
    LogBase log_base = LogBase::two;

    /// Appends a mode; nu is derived from gamma.
    void add(double gamma, std::int64_t degeneracy = 1);
    /// Sum of degeneracies.
    std::int64_t mode_count() const;
    /// Degeneracy-weighted sum of per-mode entropies.
    double total_entropy() const;
    /// Gammas expanded by degeneracy, sorted descending.
    std::vector<double> expanded_gammas() const;
};

/// nu = (1 - gamma^2)^(-1/2). Throws SingularityError when |gamma| > 1 - 1e-12.
double nu_from_gamma(double gamma);

/// S(nu) = ((nu+1)/2) log((nu+1)/2) - ((nu-1)/2) log((nu-1)/2), S(1) = 0.
/// nu within 1e-10 below 1 is clamped; further below throws DomainError.
double entropy_from_nu(double nu, LogBase base = LogBase::two);

/// Schmidt coefficients lambda_n and weights p_n = lambda_n^2 of a single mode.
struct SchmidtSpectrum {
    std::vector<double> lambdas;        // n = 0..n_max, descending
    std::vector<double> probabilities;  // p_n
    int n_max = 0;
    double tail_mass = 0.0;             // 1 - sum p_n, from the closed-form geometric tail

    double total_probability() const;
    double mean_occupation() const;     // sum n p_n
};

SchmidtSpectrum schmidt_spectrum(double nu, int n_max);

/// Decouples `block` from the rest of symmetric `v`: the complement becomes
/// V_cc - V_cb V_bb^{-1} V_bc, the block keeps V_bb, and the couplings are zeroed.
/// Entropies are unchanged when `block` couples only to vertices on its own side.
Matrix schur_eliminate(const Matrix& v, std::span<const int> block);

/// Singular values of V_AA^{-1/2} V_AB V_BB^{-1/2}, min(|A|, |B|) modes.
ModeSpectrum gamma_spectrum(const Matrix& v, const Bipartition& cut, LogBase base = LogBase::two);

double entropy_of_bipartition(const Matrix& v, const Bipartition& cut, LogBase base = LogBase::two);

/// Reduced states of the Gaussian wavefunction psi(x) ~ exp(-x^T K x / 2).
///
/// Position and momentum covariances are X = K^{-1}/2 and P = K/2; the
/// symplectic eigenvalues of a subset A are the square roots of the
/// eigenvalues of 4 X_A P_A. K is the potential matrix V for the ground
/// state used throughout this library; pass hamiltonian_kernel(V) for the
/// exact ground state of H = (p^T p + x^T V x)/2.
class GaussianGroundState {
public:
    explicit GaussianGroundState(const Matrix& kernel);

    int dim() const noexcept { return static_cast<int>(kernel_.rows()); }
    const Matrix& kernel() const noexcept { return kernel_; }

    /// Ascending symplectic eigenvalues (clamped to >= 1) of the subset.
    Vector symplectic_eigenvalues(std::span<const int> subset) const;
    double entropy(std::span<const int> subset, LogBase base = LogBase::two) const;

private:
    Matrix kernel_;
    Matrix inverse_;
};

double entropy_oracle_symplectic(const Matrix& v, std::span<const int> subset,
                                 LogBase base = LogBase::two);

/// V^{1/2}: the exponent matrix of the ground state of H = (p^T p + x^T V x)/2.
Matrix hamiltonian_kernel(const Matrix& v);

}  // namespace hcent
