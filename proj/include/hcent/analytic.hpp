#pragma once

#include <cstdint>
#include <vector>

#include "hcent/gaussian.hpp"
#include "hcent/graph.hpp"

namespace hcent {

/// Monic polynomials Q_0 = 1, Q_1 = x, Q_n = x Q_{n-1} - omega_{n-1} Q_{n-2}
/// with omega_i = i (d_block - i + 1).
class QPolynomialSequence {
public:
    QPolynomialSequence(int d_block, int max_degree);

    int d_block() const noexcept { return d_block_; }
    int max_degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    std::int64_t omega(int i) const;
    /// Ascending-power integer coefficients of Q_n.
    const std::vector<std::int64_t>& coefficients(int n) const;
    double evaluate(int n, double x) const;

private:
    int d_block_;
    std::vector<std::vector<std::int64_t>> coefficients_;
};

/// Q_n(x) by the three-term recursion.
double q_polynomial(int n, double x, int d_block);

/// First half of the strata against the second half, d odd.
/// One mode per stratification block: gamma = ((d_J+1)/2) Q_{n-1}(x) / Q_n(x),
/// n = (d_J+1)/2, x = d + 1/(2g).
ModeSpectrum gamma_half_strata(int d, double g, LogBase base = LogBase::two);

/// Coordinate cut: two H(d-1,2) halves joined by a perfect matching.
/// gamma_i = 2g / (1 + 2g(d - lambda_i)), lambda_i = (d-1) - 2i, multiplicity C(d-1, i).
ModeSpectrum gamma_identity_cut(int d, double g, LogBase base = LogBase::two);

/// Even strata against odd strata. Each block contributes
/// (2g / (1 + 2gd)) * singular values of its even-to-odd coupling, padded with
/// zero modes up to the block's even-stratum count.
ModeSpectrum gamma_parity_cut(int d, double g, LogBase base = LogBase::two);

/// Singular values (descending) of the even/odd stratum coupling of spin_x_block(dim)
/// when the block starts on stratum `first_stratum`.
std::vector<double> parity_block_singular_values(int dim, int first_stratum);

enum class AnalyticScheme { half_strata, identity_cut, parity_cut };

/// Closed-form modes for a scheme; validates scheme/d compatibility.
ModeSpectrum analytic_modes(AnalyticScheme scheme, int d, double g, LogBase base = LogBase::two);

/// Total entropy of the scheme's cut; g = 0 gives 0.
double analytic_entropy(AnalyticScheme scheme, int d, double g, LogBase base = LogBase::two);

/// The vertex-basis bipartition each scheme describes (identity_cut uses axis 0).
NamedCut named_cut_for(AnalyticScheme scheme);

}  // namespace hcent
